#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matroid_xf/matroid.hpp"
#include "matroid_xf/rational.hpp"

namespace matroid_xf {

/// The inequality x(flat) <= rhs with rhs = rk(flat).
struct FlatInequality {
    Subset flat;
    int rhs = 0;
    bool facet_inducing = false;

    friend bool operator==(const FlatInequality&, const FlatInequality&) = default;
};

/// Slack of every flacet inequality at every vertex of B(M).
/// entries(i, j) = rows[i].rhs - |cols[j] & rows[i].flat|.
struct SlackMatrix {
    std::vector<FlatInequality> rows;
    std::vector<Basis> cols;
    MatrixXl entries;
};

/// Affine dimension of conv{chi^B}: rank over Q of the vertex differences.
int polytope_dimension(const Matroid& m, const EnumerationCaps& caps = {});

/// Incidence vectors of `bases` as the columns of an n x |bases| matrix.
MatrixXl incidence_matrix(int n, const std::vector<Basis>& bases);

/// c(M|F) + c(M/F) = c(M) + 1, counting connected components. For
/// connected M: restriction to F and contraction of F are both connected.
bool connectivity_criterion(const Matroid& m, Subset flat, const EnumerationCaps& caps = {});

/// Brute-force facet test: the bases tight at x(F) <= rk(F) span affine
/// dimension `dimension - 1`.
bool facet_oracle(const Matroid& m, Subset flat, const std::vector<Basis>& bases, int dimension);

struct FlacetDisagreement {
    Subset flat;
    bool fast_path = false;
    bool oracle = false;
};

struct FlacetAnalysis {
    /// Every flat other than the empty closure and E, with its facet flag.
    std::vector<FlatInequality> candidates;
    std::vector<FlatInequality> flacets;
    std::vector<FlacetDisagreement> disagreements;
    int dimension = 0;
};

/// Runs both facet tests over every nontrivial flat. The oracle decides.
FlacetAnalysis analyze_flacets(const Matroid& m, const EnumerationCaps& caps = {});

/// Facet-inducing flat inequalities in enumerate_flats order. Writes one
/// diagnostic line to std::clog per fast-path/oracle disagreement.
std::vector<FlatInequality> flacets(const Matroid& m, const EnumerationCaps& caps = {});

SlackMatrix slack_matrix(const Matroid& m, const EnumerationCaps& caps = {});
/// Slack matrix over precomputed rows and columns.
SlackMatrix slack_matrix(std::vector<FlatInequality> rows, std::vector<Basis> cols);

/// A constraint of the base-polytope description violated by a point.
struct MembershipViolation {
    enum class Kind { lower_bound, upper_bound, rank_equality, flat };
    Kind kind;
    int element = -1;  ///< for bound violations
    Subset flat;       ///< for flat violations
    Rational lhs;
    Rational rhs;

    std::string describe() const;
};

struct MembershipResult {
    bool member = false;
    std::optional<MembershipViolation> certificate;
};

/// Checks 0 <= x <= 1, x(E) = r and x(F) <= rk(F) over all flats, in that order.
MembershipResult membership(const Matroid& m, const VectorXq& x, const EnumerationCaps& caps = {});

/// Header "flacet,<basis labels>", then one row per flacet; labels are
/// sorted element lists joined by '-'.
std::string slack_matrix_csv(const SlackMatrix& s);

}  // namespace matroid_xf
