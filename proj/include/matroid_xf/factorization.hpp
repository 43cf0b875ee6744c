#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroid_xf/hitting.hpp"
#include "matroid_xf/polytope.hpp"
#include "matroid_xf/protocol.hpp"
#include "matroid_xf/rational.hpp"

namespace matroid_xf {

/// slack.entries = left * right with both factors entrywise nonnegative.
/// Inner indices are protocol transcripts; left holds Alice's outputs,
/// right holds Bob's transcript probabilities.
template <typename Message>
struct NonnegFactorization {
    SlackMatrix slack;
    std::vector<Message> transcripts;
    MatrixXq left;   ///< flacets x transcripts, entries in {0, r}
    MatrixXq right;  ///< transcripts x bases, entries in {0, 1/r}

    std::size_t inner_dimension() const { return transcripts.size(); }
};

using ProtocolFactorization = NonnegFactorization<Transcript>;
using StarFactorization = NonnegFactorization<StarTranscript>;

/// Exact entrywise comparison of left * right with the slack matrix.
template <typename Message>
bool reproduces_slack(const NonnegFactorization<Message>& fac) {
    if (fac.left.rows() != fac.slack.entries.rows() || fac.right.cols() != fac.slack.entries.cols())
        return false;
    const MatrixXq product = fac.left * fac.right;
    return product == fac.slack.entries.template cast<Rational>();
}

/// Factorization read off the generic protocol: left(F, t) = r when F is
/// routed to t.family_index, b_{t.position} is in F and t.element is not;
/// right(t, B') = 1/r when the canonical bijection from the family member to
/// B' sends b_{t.position} to t.element. All-zero columns of left are
/// pruned. Throws InternalConsistency unless left * right = S exactly.
ProtocolFactorization factorize_from_transcripts(const Matroid& m, const HittingFamily& family,
                                                 const EnumerationCaps& caps = {});
ProtocolFactorization factorize_from_transcripts(const Matroid& m, const HittingFamily& family,
                                                 const SlackMatrix& slack);

/// Same construction for the one-bit spanning-tree protocol on K_n.
StarFactorization factorize_star_protocol(const Graph& g, const EnumerationCaps& caps = {});

/// Q = {(x, y) : 0 <= x <= 1, y >= 0, x(E_i) = rk(E_i) per connected
/// component, x(F) + sum_t left(F,t) y_t = rk(F) per flacet}. Variables are
/// ordered x_0..x_{n-1}, y_0..y_{k-1}.
struct ExtendedFormulation {
    int num_x = 0;
    int num_y = 0;
    MatrixXq equalities;  ///< rows x (num_x + num_y)
    VectorXq rhs;
    std::vector<std::string> row_labels;

    /// Inequality count: 2 num_x box bounds plus num_y nonnegativities.
    int size() const { return 2 * num_x + num_y; }
};

template <typename Message>
ExtendedFormulation build_extended_formulation(const Matroid& m, const NonnegFactorization<Message>& fac,
                                               const EnumerationCaps& caps = {});

struct LiftingCheck {
    bool ok = true;
    /// First failure: column of the basis and the violated row label.
    std::optional<std::size_t> basis;
    std::string row;
};

/// Every (chi^B, right(:, B)) satisfies every constraint of ef exactly.
template <typename Message>
LiftingCheck verify_vertex_lifting(const ExtendedFormulation& ef, const NonnegFactorization<Message>& fac);

struct ObjectiveCheck {
    VectorX<long long> objective;
    Rational formulation_max;
    Rational vertex_max;
    bool optimum_in_polytope = false;
    std::size_t pivots = 0;

    bool ok() const { return formulation_max == vertex_max && optimum_in_polytope; }
};

struct OptimizationCheck {
    bool ok = true;
    std::vector<ObjectiveCheck> objectives;
};

/// For each objective c over x: max c.x over ef by exact simplex equals the
/// maximum of c.chi^B over all bases, and the simplex optimum's x-part lies
/// in B(M). Throws InternalConsistency if the LP is infeasible or unbounded.
OptimizationCheck verify_optimization_equivalence(const Matroid& m, const ExtendedFormulation& ef,
                                                  const std::vector<VectorX<long long>>& objectives,
                                                  const EnumerationCaps& caps = {});

/// `count` objectives with entries uniform in [lo, hi], from a seeded mt19937_64.
std::vector<VectorX<long long>> random_objectives(int n, int count, std::uint64_t seed, int lo = -5,
                                                  int hi = 5);

/// Text export: header lines "num_x", "num_y", "size", "equalities", then
/// one constraint per line with coefficients written as p/q.
std::string formulation_text(const ExtendedFormulation& ef);

}  // namespace matroid_xf
