#include "matroid_xf/hitting.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "matroid_xf/errors.hpp"

namespace matroid_xf {

namespace {

using Bits = boost::dynamic_bitset<>;

bool fully_intersects(const Basis& b, const FlatInequality& f) {
    return (b.set() & f.flat).size() == f.rhs;
}

// cover[j] = rows of the slack matrix with a zero in column j.
std::vector<Bits> column_covers(const SlackMatrix& slack) {
    const auto rows = static_cast<std::size_t>(slack.entries.rows());
    std::vector<Bits> cover(slack.cols.size(), Bits(rows));
    for (std::size_t j = 0; j < slack.cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i)
            if (slack.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) == 0) cover[j].set(i);
    return cover;
}

// Lexicographically first basis: scan elements upward, keep independent ones.
Basis first_basis(const Matroid& m) {
    Subset b;
    for (int e = 0; e < m.size(); ++e) {
        if (m.rank(b.with(e)) == b.size() + 1) b.insert(e);
    }
    return Basis(b);
}

std::vector<int> greedy_columns(const std::vector<Bits>& cover, std::size_t rows) {
    Bits uncovered(rows);
    uncovered.set();
    std::vector<int> picked;
    while (uncovered.any()) {
        std::size_t best_gain = 0;
        int best = -1;
        for (std::size_t j = 0; j < cover.size(); ++j) {
            const std::size_t gain = (cover[j] & uncovered).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<int>(j);
            }
        }
        if (best < 0) throw InternalConsistency("a flacet is tight at no basis");
        picked.push_back(best);
        uncovered -= cover[static_cast<std::size_t>(best)];
    }
    return picked;
}

HittingFamily family_from_columns(const SlackMatrix& slack, std::vector<int> columns) {
    std::vector<Basis> bases;
    bases.reserve(columns.size());
    for (int j : columns) bases.push_back(slack.cols[static_cast<std::size_t>(j)]);
    return make_hitting_family(slack.rows, std::move(bases));
}

}  // namespace

HittingCheck is_hitting_family(const std::vector<FlatInequality>& flacets,
                               const std::vector<Basis>& family) {
    for (const auto& f : flacets) {
        const bool covered = std::any_of(family.begin(), family.end(),
                                         [&](const Basis& b) { return fully_intersects(b, f); });
        if (!covered) return {false, f};
    }
    return {true, std::nullopt};
}

HittingCheck is_hitting_family(const Matroid& m, const std::vector<Basis>& family,
                               const EnumerationCaps& caps) {
    for (const Basis& b : family) {
        if (b.size() != m.rank() || b.set().span() > m.size() || m.rank(b.set()) != m.rank())
            throw InvalidInput("family member {" + to_label(b.set(), ',') + "} is not a basis");
    }
    return is_hitting_family(flacets(m, caps), family);
}

HittingFamily make_hitting_family(const std::vector<FlatInequality>& flacets, std::vector<Basis> bases) {
    HittingFamily out{std::move(bases), {}};
    out.coverage.reserve(flacets.size());
    for (const auto& f : flacets) {
        const auto it = std::find_if(out.bases.begin(), out.bases.end(),
                                     [&](const Basis& b) { return fully_intersects(b, f); });
        if (it == out.bases.end())
            throw NotAHittingFamily("flacet {" + to_label(f.flat, ',') + "} is not covered");
        out.coverage.push_back(static_cast<int>(it - out.bases.begin()));
    }
    return out;
}

HittingFamily greedy_hitting_family(const SlackMatrix& slack) {
    const auto cover = column_covers(slack);
    return family_from_columns(slack, greedy_columns(cover, slack.rows.size()));
}

HittingFamily greedy_hitting_family(const Matroid& m, const EnumerationCaps& caps) {
    return greedy_hitting_family(slack_matrix(m, caps));
}

HittingFamily minimum_hitting_family(const SlackMatrix& slack, const EnumerationCaps& caps) {
    if (slack.cols.size() > caps.max_cover_columns) {
        throw ResourceLimit("minimum_hitting_family: " + std::to_string(slack.cols.size()) +
                            " bases exceed the exact-cover cap " + std::to_string(caps.max_cover_columns));
    }
    const std::size_t rows = slack.rows.size();
    const auto cover = column_covers(slack);

    // Drop columns whose cover is contained in an earlier-kept or strictly
    // larger cover; the optimum value is unchanged.
    std::vector<int> useful;
    for (std::size_t j = 0; j < cover.size(); ++j) {
        bool dominated = false;
        for (std::size_t k = 0; k < cover.size() && !dominated; ++k) {
            if (k == j || !cover[j].is_subset_of(cover[k])) continue;
            dominated = cover[j] != cover[k] || k < j;
        }
        if (!dominated) useful.push_back(static_cast<int>(j));
    }

    std::vector<int> best = greedy_columns(cover, rows);
    std::vector<std::vector<int>> covering(rows);
    for (int j : useful)
        for (std::size_t i = 0; i < rows; ++i)
            if (cover[static_cast<std::size_t>(j)].test(i)) covering[i].push_back(j);

    std::vector<int> chosen;
    std::function<void(const Bits&)> search = [&](const Bits& uncovered) {
        if (uncovered.none()) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        if (chosen.size() + 1 >= best.size()) return;
        std::size_t max_gain = 0;
        for (int j : useful) max_gain = std::max(max_gain, (cover[static_cast<std::size_t>(j)] & uncovered).count());
        const std::size_t need = (uncovered.count() + max_gain - 1) / max_gain;
        if (chosen.size() + need >= best.size()) return;

        // Branch on the uncovered flacet with the fewest covering bases.
        std::size_t pivot = rows;
        for (std::size_t i = uncovered.find_first(); i != Bits::npos; i = uncovered.find_next(i)) {
            if (pivot == rows || covering[i].size() < covering[pivot].size()) pivot = i;
        }
        for (int j : covering[pivot]) {
            chosen.push_back(j);
            search(uncovered - cover[static_cast<std::size_t>(j)]);
            chosen.pop_back();
        }
    };
    Bits all(rows);
    all.set();
    search(all);

    std::sort(best.begin(), best.end());
    return family_from_columns(slack, std::move(best));
}

HittingFamily minimum_hitting_family(const Matroid& m, const EnumerationCaps& caps) {
    return minimum_hitting_family(slack_matrix(m, caps), caps);
}

std::vector<Basis> star_bases(const Graph& g) {
    if (g.vertices < 3 || !g.is_complete())
        throw InvalidInput("star family needs a complete graph on at least 3 vertices");
    std::vector<Basis> stars;
    for (int v = 0; v + 1 < g.vertices; ++v) {
        Subset star;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (g.edges[i].first == v || g.edges[i].second == v) star.insert(static_cast<int>(i));
        }
        stars.emplace_back(star);
    }
    return stars;
}

HittingFamily star_hitting_family(const Graph& g, const EnumerationCaps& caps) {
    auto stars = star_bases(g);
    return make_hitting_family(flacets(Matroid::graphic(g), caps), std::move(stars));
}

HittingFamily direct_sum_family(const Matroid& m1, const HittingFamily& f1, const Matroid& m2,
                                const HittingFamily& f2, const EnumerationCaps& caps) {
    if (m1.size() == 0 || m2.size() == 0) throw InvalidInput("direct_sum_family: empty ground set");
    const Matroid sum = direct_sum(m1, m2);
    const auto sum_flacets = flacets(sum, caps);
    if (f1.empty() && f2.empty()) return make_hitting_family(sum_flacets, {});

    const std::size_t count = std::max(f1.size(), f2.size());
    const Basis pad1 = f1.empty() ? first_basis(m1) : Basis{};
    const Basis pad2 = f2.empty() ? first_basis(m2) : Basis{};
    std::vector<Basis> members;
    for (std::size_t i = 0; i < count; ++i) {
        const Basis& b1 = f1.empty() ? pad1 : f1.bases[std::min(i, f1.size() - 1)];
        const Basis& b2 = f2.empty() ? pad2 : f2.bases[std::min(i, f2.size() - 1)];
        Subset joined = b1.set();
        for (int e : b2.elements()) joined.insert(e + m1.size());
        members.emplace_back(joined);
    }
    return make_hitting_family(sum_flacets, std::move(members));
}

std::string family_text(const HittingFamily& family) {
    std::ostringstream out;
    for (const Basis& b : family.bases) out << to_label(b.set(), ' ') << '\n';
    return out.str();
}

}  // namespace matroid_xf
