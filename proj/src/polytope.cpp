#include "matroid_xf/polytope.hpp"

#include <iostream>
#include <sstream>

#include "matroid_xf/errors.hpp"

namespace matroid_xf {

namespace {

// Affine dimension of the columns of `points`; -1 for an empty set.
int affine_dimension(const MatrixXl& points) {
    if (points.cols() == 0) return -1;
    MatrixXl diffs = points.rightCols(points.cols() - 1).colwise() - points.col(0);
    return static_cast<int>(exact_rank(diffs));
}

Rational sum_over(const VectorXq& x, Subset s) {
    Rational total = 0;
    for (int e : s.elements()) total += x(e);
    return total;
}

}  // namespace

MatrixXl incidence_matrix(int n, const std::vector<Basis>& bases) {
    MatrixXl out = MatrixXl::Zero(n, static_cast<Eigen::Index>(bases.size()));
    for (std::size_t j = 0; j < bases.size(); ++j)
        for (int e : bases[j].elements()) out(e, static_cast<Eigen::Index>(j)) = 1;
    return out;
}

int polytope_dimension(const Matroid& m, const EnumerationCaps& caps) {
    return affine_dimension(incidence_matrix(m.size(), enumerate_bases(m, caps)));
}

bool connectivity_criterion(const Matroid& m, Subset flat, const EnumerationCaps& caps) {
    const auto parts = [&](const Matroid& x) { return connected_components(x, caps).size(); };
    return parts(restriction(m, flat).matroid) + parts(contraction(m, flat).matroid) == parts(m) + 1;
}

bool facet_oracle(const Matroid& m, Subset flat, const std::vector<Basis>& bases, int dimension) {
    const int rhs = m.rank(flat);
    std::vector<Basis> tight;
    for (const Basis& b : bases) {
        if ((b.set() & flat).size() == rhs) tight.push_back(b);
    }
    return affine_dimension(incidence_matrix(m.size(), tight)) == dimension - 1;
}

FlacetAnalysis analyze_flacets(const Matroid& m, const EnumerationCaps& caps) {
    const auto bases = enumerate_bases(m, caps);
    FlacetAnalysis out;
    out.dimension = affine_dimension(incidence_matrix(m.size(), bases));
    const Subset trivial_low = closure(m, Subset{});
    for (Subset f : enumerate_flats(m, caps)) {
        if (f == trivial_low || f == m.ground()) continue;
        const bool fast = connectivity_criterion(m, f, caps);
        const bool oracle = facet_oracle(m, f, bases, out.dimension);
        if (fast != oracle) out.disagreements.push_back({f, fast, oracle});
        FlatInequality row{f, m.rank(f), oracle};
        out.candidates.push_back(row);
        if (oracle) out.flacets.push_back(row);
    }
    return out;
}

std::vector<FlatInequality> flacets(const Matroid& m, const EnumerationCaps& caps) {
    auto analysis = analyze_flacets(m, caps);
    for (const auto& d : analysis.disagreements) {
        std::clog << "flacets: connectivity criterion says " << (d.fast_path ? "facet" : "non-facet")
                  << " for flat {" << to_label(d.flat, ',') << "}, oracle says "
                  << (d.oracle ? "facet" : "non-facet") << "\n";
    }
    return std::move(analysis.flacets);
}

SlackMatrix slack_matrix(std::vector<FlatInequality> rows, std::vector<Basis> cols) {
    SlackMatrix s{std::move(rows), std::move(cols), {}};
    s.entries.resize(static_cast<Eigen::Index>(s.rows.size()), static_cast<Eigen::Index>(s.cols.size()));
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        for (std::size_t j = 0; j < s.cols.size(); ++j) {
            s.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                s.rows[i].rhs - (s.cols[j].set() & s.rows[i].flat).size();
        }
    }
    return s;
}

SlackMatrix slack_matrix(const Matroid& m, const EnumerationCaps& caps) {
    return slack_matrix(flacets(m, caps), enumerate_bases(m, caps));
}

std::string MembershipViolation::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::lower_bound:
            out << "x" << element << " >= 0 violated: x" << element << " = " << lhs;
            break;
        case Kind::upper_bound:
            out << "x" << element << " <= 1 violated: x" << element << " = " << lhs;
            break;
        case Kind::rank_equality:
            out << "x(E) = " << rhs << " violated: x(E) = " << lhs;
            break;
        case Kind::flat:
            out << "x({" << to_label(flat, ',') << "}) <= " << rhs << " violated: lhs = " << lhs;
            break;
    }
    return out.str();
}

MembershipResult membership(const Matroid& m, const VectorXq& x, const EnumerationCaps& caps) {
    if (x.size() != m.size()) {
        throw InvalidInput("point has " + std::to_string(x.size()) + " coordinates, expected " +
                           std::to_string(m.size()));
    }
    using Kind = MembershipViolation::Kind;
    for (int e = 0; e < m.size(); ++e) {
        if (x(e) < 0) return {false, MembershipViolation{Kind::lower_bound, e, {}, x(e), 0}};
        if (x(e) > 1) return {false, MembershipViolation{Kind::upper_bound, e, {}, x(e), 1}};
    }
    const Rational total = sum_over(x, m.ground());
    if (total != m.rank()) {
        return {false, MembershipViolation{Kind::rank_equality, -1, m.ground(), total, m.rank()}};
    }
    for (Subset f : enumerate_flats(m, caps)) {
        const Rational lhs = sum_over(x, f);
        const int rhs = m.rank(f);
        if (lhs > rhs) return {false, MembershipViolation{Kind::flat, -1, f, lhs, rhs}};
    }
    return {true, std::nullopt};
}

std::string slack_matrix_csv(const SlackMatrix& s) {
    std::ostringstream out;
    out << "flacet";
    for (const Basis& b : s.cols) out << ',' << to_label(b.set());
    out << '\n';
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        out << to_label(s.rows[i].flat);
        for (Eigen::Index j = 0; j < s.entries.cols(); ++j)
            out << ',' << s.entries(static_cast<Eigen::Index>(i), j);
        out << '\n';
    }
    return out.str();
}

}  // namespace matroid_xf
