#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matroid_xf/matroid.hpp"
#include "matroid_xf/polytope.hpp"

namespace matroid_xf {

/// Bases such that every flacet is tight at some member.
struct HittingFamily {
    std::vector<Basis> bases;
    /// coverage[i]: first member with full intersection with flacet i.
    std::vector<int> coverage;

    std::size_t size() const { return bases.size(); }
    bool empty() const { return bases.empty(); }
};

struct HittingCheck {
    bool hitting = false;
    /// First flacet (in flacet order) that no member covers.
    std::optional<FlatInequality> uncovered;
};

/// Throws InvalidInput if a member is not a basis of m.
HittingCheck is_hitting_family(const Matroid& m, const std::vector<Basis>& family,
                               const EnumerationCaps& caps = {});
HittingCheck is_hitting_family(const std::vector<FlatInequality>& flacets,
                               const std::vector<Basis>& family);

/// Attaches coverage indices; throws NotAHittingFamily if a flacet is uncovered.
HittingFamily make_hitting_family(const std::vector<FlatInequality>& flacets, std::vector<Basis> bases);

/// Greedy set cover over the slack matrix columns; ties go to the
/// lexicographically smaller basis.
HittingFamily greedy_hitting_family(const SlackMatrix& slack);
HittingFamily greedy_hitting_family(const Matroid& m, const EnumerationCaps& caps = {});

/// Exact minimum by branch and bound, seeded with the greedy family.
/// Members are returned in lexicographic order. Throws ResourceLimit when
/// the basis count exceeds caps.max_cover_columns.
HittingFamily minimum_hitting_family(const SlackMatrix& slack, const EnumerationCaps& caps = {});
HittingFamily minimum_hitting_family(const Matroid& m, const EnumerationCaps& caps = {});

/// Stars delta(v) of K_n for v = 0..n-2. Requires a complete graph with n >= 3.
HittingFamily star_hitting_family(const Graph& g, const EnumerationCaps& caps = {});
/// The stars as bases, without computing coverage.
std::vector<Basis> star_bases(const Graph& g);

/// Family for direct_sum(m1, m2): member i is f1[min(i, |f1|-1)] together with
/// f2[min(i, |f2|-1)] shifted; an empty side contributes its first basis.
HittingFamily direct_sum_family(const Matroid& m1, const HittingFamily& f1, const Matroid& m2,
                                const HittingFamily& f2, const EnumerationCaps& caps = {});

/// One basis per line, elements separated by spaces.
std::string family_text(const HittingFamily& family);

}  // namespace matroid_xf
