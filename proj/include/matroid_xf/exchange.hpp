#pragma once

#include <vector>

#include "matroid_xf/matroid.hpp"
#include "matroid_xf/polytope.hpp"

namespace matroid_xf {

/// A bijection sigma from source to target such that source - b_i + map[i]
/// is a basis for every position i. Positions follow source's sorted order.
struct ExchangeBijection {
    Basis source;
    Basis target;
    std::vector<int> map;

    /// sigma(b_i); `position` is 0-based.
    int image(int position) const { return map[static_cast<std::size_t>(position)]; }
};

/// Maximum matching in a bipartite graph by augmenting paths.
/// adjacency[u] lists right vertices joined to left vertex u; returns
/// match[u] (right vertex or -1) for every left vertex.
std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adjacency,
                                        int right_count);

/// Canonical bijection: identity on source & target, then the
/// lexicographically smallest perfect matching of source - target into
/// target - source (smallest image for b_1, then b_2, ...).
/// Throws InvalidInput for non-bases and InternalConsistency if no perfect
/// matching exists.
ExchangeBijection exchange_bijection(const Matroid& m, const Basis& source, const Basis& target);

/// Every bijection source -> target with the exchange property, including
/// those that are not the identity on the intersection.
std::vector<ExchangeBijection> all_exchange_bijections(const Matroid& m, const Basis& source,
                                                       const Basis& target);

/// Bijectivity plus the exchange property at every position.
bool is_valid_exchange(const Matroid& m, const ExchangeBijection& bij);

/// |{i : map[i] not in F, b_i in F}|, which equals rk(F) - |target & F|
/// whenever |source & F| = rk(F). Throws FullIntersectionRequired otherwise.
int slack_by_ordering(const FlatInequality& f, const ExchangeBijection& bij);

}  // namespace matroid_xf
