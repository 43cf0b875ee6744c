#include "matroid_xf/factorization.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "matroid_xf/errors.hpp"
#include "matroid_xf/lp.hpp"

namespace matroid_xf {

namespace {

// Keeps the columns of left that are not identically zero, with the
// matching rows of right.
template <typename Message>
void prune_zero_columns(NonnegFactorization<Message>& fac) {
    std::vector<Eigen::Index> keep;
    for (Eigen::Index t = 0; t < fac.left.cols(); ++t) {
        bool nonzero = false;
        for (Eigen::Index i = 0; i < fac.left.rows() && !nonzero; ++i) nonzero = fac.left(i, t) != 0;
        if (nonzero) keep.push_back(t);
    }
    if (static_cast<Eigen::Index>(keep.size()) == fac.left.cols()) return;
    MatrixXq left(fac.left.rows(), static_cast<Eigen::Index>(keep.size()));
    MatrixXq right(static_cast<Eigen::Index>(keep.size()), fac.right.cols());
    std::vector<Message> transcripts;
    for (std::size_t k = 0; k < keep.size(); ++k) {
        left.col(static_cast<Eigen::Index>(k)) = fac.left.col(keep[k]);
        right.row(static_cast<Eigen::Index>(k)) = fac.right.row(keep[k]);
        transcripts.push_back(fac.transcripts[static_cast<std::size_t>(keep[k])]);
    }
    fac.left = std::move(left);
    fac.right = std::move(right);
    fac.transcripts = std::move(transcripts);
}

template <typename Message>
void require_identity(const NonnegFactorization<Message>& fac) {
    if (!reproduces_slack(fac)) throw InternalConsistency("nonnegative factorization does not reproduce the slack matrix");
}

}  // namespace

ProtocolFactorization factorize_from_transcripts(const Matroid& m, const HittingFamily& family,
                                                 const SlackMatrix& slack) {
    ProtocolFactorization fac;
    fac.slack = slack;
    fac.transcripts = enumerate_transcripts(m, family, slack.rows, slack.cols);
    const auto rows = static_cast<Eigen::Index>(slack.rows.size());
    const auto cols = static_cast<Eigen::Index>(slack.cols.size());
    const auto inner = static_cast<Eigen::Index>(fac.transcripts.size());
    const int r = m.rank();
    fac.left = MatrixXq::Zero(rows, inner);
    fac.right = MatrixXq::Zero(inner, cols);
    if (inner == 0) {
        require_identity(fac);
        return fac;
    }

    std::map<Transcript, Eigen::Index> column_of;
    for (Eigen::Index t = 0; t < inner; ++t) column_of.emplace(fac.transcripts[static_cast<std::size_t>(t)], t);

    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& f = slack.rows[static_cast<std::size_t>(i)];
        const int k = alice_choice(family, f);
        for (Eigen::Index t = 0; t < inner; ++t) {
            const auto& tr = fac.transcripts[static_cast<std::size_t>(t)];
            if (tr.family_index != k) continue;
            fac.left(i, t) = alice_output(f, family.bases[static_cast<std::size_t>(k)], tr.position, tr.element);
        }
    }
    const Rational weight = Rational(1) / r;
    for (std::size_t k = 0; k < family.size(); ++k) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            const auto bij = exchange_bijection(m, family.bases[k], slack.cols[static_cast<std::size_t>(j)]);
            for (int i = 0; i < r; ++i) {
                const auto it = column_of.find({static_cast<int>(k), i + 1, bij.image(i)});
                if (it != column_of.end()) fac.right(it->second, j) = weight;
            }
        }
    }
    prune_zero_columns(fac);
    require_identity(fac);
    return fac;
}

ProtocolFactorization factorize_from_transcripts(const Matroid& m, const HittingFamily& family,
                                                 const EnumerationCaps& caps) {
    return factorize_from_transcripts(m, family, slack_matrix(m, caps));
}

StarFactorization factorize_star_protocol(const Graph& g, const EnumerationCaps& caps) {
    const Matroid m = Matroid::graphic(g);
    StarFactorization fac;
    fac.slack = slack_matrix(m, caps);
    const auto stars = make_hitting_family(fac.slack.rows, star_bases(g));
    fac.transcripts = spanning_tree_transcripts(g, stars, fac.slack.rows, fac.slack.cols);
    const auto rows = static_cast<Eigen::Index>(fac.slack.rows.size());
    const auto cols = static_cast<Eigen::Index>(fac.slack.cols.size());
    const auto inner = static_cast<Eigen::Index>(fac.transcripts.size());
    const int r = m.rank();
    fac.left = MatrixXq::Zero(rows, inner);
    fac.right = MatrixXq::Zero(inner, cols);

    std::map<StarTranscript, Eigen::Index> column_of;
    for (Eigen::Index t = 0; t < inner; ++t) column_of.emplace(fac.transcripts[static_cast<std::size_t>(t)], t);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& f = fac.slack.rows[static_cast<std::size_t>(i)];
        const int center = alice_choice(stars, f);
        for (Eigen::Index t = 0; t < inner; ++t) {
            const auto& tr = fac.transcripts[static_cast<std::size_t>(t)];
            if (tr.center == center) fac.left(i, t) = star_alice_output(g, f, center, tr.edge, tr.head, r);
        }
    }
    const Rational weight = Rational(1) / r;
    for (std::size_t center = 0; center < stars.size(); ++center) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            const Basis& tree = fac.slack.cols[static_cast<std::size_t>(j)];
            const auto head = orient_away(g, tree, static_cast<int>(center));
            for (int pos = 0; pos < tree.size(); ++pos) {
                const auto it = column_of.find({static_cast<int>(center), tree[pos], head[static_cast<std::size_t>(pos)]});
                if (it != column_of.end()) fac.right(it->second, j) = weight;
            }
        }
    }
    prune_zero_columns(fac);
    require_identity(fac);
    return fac;
}

template <typename Message>
ExtendedFormulation build_extended_formulation(const Matroid& m, const NonnegFactorization<Message>& fac,
                                               const EnumerationCaps& caps) {
    ExtendedFormulation ef;
    ef.num_x = m.size();
    ef.num_y = static_cast<int>(fac.inner_dimension());
    const auto components = connected_components(m, caps);
    const auto& rows = fac.slack.rows;
    const auto total = static_cast<Eigen::Index>(components.size() + rows.size());
    ef.equalities = MatrixXq::Zero(total, ef.num_x + ef.num_y);
    ef.rhs = VectorXq::Zero(total);
    Eigen::Index row = 0;
    for (Subset c : components) {
        for (int e : c.elements()) ef.equalities(row, e) = 1;
        ef.rhs(row) = m.rank(c);
        ef.row_labels.push_back("component " + to_label(c));
        ++row;
    }
    for (std::size_t i = 0; i < rows.size(); ++i, ++row) {
        for (int e : rows[i].flat.elements()) ef.equalities(row, e) = 1;
        ef.equalities.row(row).tail(ef.num_y) = fac.left.row(static_cast<Eigen::Index>(i));
        ef.rhs(row) = rows[i].rhs;
        ef.row_labels.push_back("flacet " + to_label(rows[i].flat));
    }
    return ef;
}

template <typename Message>
LiftingCheck verify_vertex_lifting(const ExtendedFormulation& ef, const NonnegFactorization<Message>& fac) {
    const auto& bases = fac.slack.cols;
    for (std::size_t j = 0; j < bases.size(); ++j) {
        VectorXq point = VectorXq::Zero(ef.num_x + ef.num_y);
        for (int e : bases[j].elements()) point(e) = 1;
        point.tail(ef.num_y) = fac.right.col(static_cast<Eigen::Index>(j));
        for (Eigen::Index t = 0; t < ef.num_y; ++t) {
            if (point(ef.num_x + t) < 0) return {false, j, "y" + std::to_string(t) + " >= 0"};
        }
        const VectorXq lhs = ef.equalities * point;
        for (Eigen::Index i = 0; i < lhs.size(); ++i) {
            if (lhs(i) != ef.rhs(i)) return {false, j, ef.row_labels[static_cast<std::size_t>(i)]};
        }
    }
    return {};
}

OptimizationCheck verify_optimization_equivalence(const Matroid& m, const ExtendedFormulation& ef,
                                                  const std::vector<VectorX<long long>>& objectives,
                                                  const EnumerationCaps& caps) {
    const auto bases = enumerate_bases(m, caps);
    const MatrixXl vertices = incidence_matrix(m.size(), bases);
    const Eigen::Index vars = ef.num_x + ef.num_y;

    auto lp = LinearProgram<Rational>::nonnegative(
        ef.equalities, ef.rhs, std::vector<RowKind>(static_cast<std::size_t>(ef.equalities.rows()), RowKind::equal));
    for (int e = 0; e < ef.num_x; ++e) lp.upper[static_cast<std::size_t>(e)] = Rational(1);
    const ExactSimplex<Rational> solver(lp);
    if (!solver.feasible()) throw InternalConsistency("extended formulation is infeasible");

    OptimizationCheck out;
    for (const auto& c : objectives) {
        if (c.size() != m.size()) throw InvalidInput("objective length differs from ground set size");
        VectorXq objective = VectorXq::Zero(vars);
        objective.head(ef.num_x) = c.cast<Rational>();
        const auto result = solver.maximize(objective);
        if (result.status != LpStatus::optimal)
            throw InternalConsistency("extended formulation LP is unbounded");
        ObjectiveCheck check;
        check.objective = c;
        check.formulation_max = result.value;
        check.vertex_max = Rational((c.transpose() * vertices).maxCoeff());
        check.pivots = result.pivots;
        const VectorXq x = result.x.head(ef.num_x);
        check.optimum_in_polytope = membership(m, x, caps).member;
        out.ok = out.ok && check.ok();
        out.objectives.push_back(std::move(check));
    }
    return out;
}

std::vector<VectorX<long long>> random_objectives(int n, int count, std::uint64_t seed, int lo, int hi) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(lo, hi);
    std::vector<VectorX<long long>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        VectorX<long long> c(n);
        for (int e = 0; e < n; ++e) c(e) = dist(rng);
        out.push_back(std::move(c));
    }
    return out;
}

std::string formulation_text(const ExtendedFormulation& ef) {
    std::ostringstream out;
    out << "num_x " << ef.num_x << '\n'
        << "num_y " << ef.num_y << '\n'
        << "size " << ef.size() << '\n'
        << "equalities " << ef.equalities.rows() << '\n';
    auto name = [&](Eigen::Index v) {
        return v < ef.num_x ? "x" + std::to_string(v) : "y" + std::to_string(v - ef.num_x);
    };
    for (Eigen::Index i = 0; i < ef.equalities.rows(); ++i) {
        bool first = true;
        for (Eigen::Index v = 0; v < ef.equalities.cols(); ++v) {
            if (ef.equalities(i, v) == 0) continue;
            if (!first) out << " + ";
            out << to_fraction_string(ef.equalities(i, v)) << ' ' << name(v);
            first = false;
        }
        if (first) out << "0/1";
        out << " = " << to_fraction_string(ef.rhs(i)) << '\n';
    }
    for (int e = 0; e < ef.num_x; ++e) out << "1/1 x" << e << " >= 0/1\n";
    for (int e = 0; e < ef.num_x; ++e) out << "1/1 x" << e << " <= 1/1\n";
    for (int t = 0; t < ef.num_y; ++t) out << "1/1 y" << t << " >= 0/1\n";
    return out.str();
}

template ExtendedFormulation build_extended_formulation(const Matroid&, const ProtocolFactorization&,
                                                        const EnumerationCaps&);
template ExtendedFormulation build_extended_formulation(const Matroid&, const StarFactorization&,
                                                        const EnumerationCaps&);
template LiftingCheck verify_vertex_lifting(const ExtendedFormulation&, const ProtocolFactorization&);
template LiftingCheck verify_vertex_lifting(const ExtendedFormulation&, const StarFactorization&);

}  // namespace matroid_xf
