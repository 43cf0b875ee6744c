#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matroid_xf/errors.hpp"
#include "matroid_xf/rational.hpp"

namespace matroid_xf {

enum class RowKind { less_equal, equal, greater_equal };

/// max objective.x subject to rows(A x ? b) and lower <= x <= upper.
/// A missing upper bound means +infinity.
template <typename Scalar>
struct LinearProgram {
    MatrixX<Scalar> A;
    VectorX<Scalar> b;
    std::vector<RowKind> kinds;
    VectorX<Scalar> lower;
    std::vector<std::optional<Scalar>> upper;
    VectorX<Scalar> objective;

    Eigen::Index variables() const { return A.cols(); }

    /// Zero lower bounds, no upper bounds, zero objective.
    static LinearProgram nonnegative(MatrixX<Scalar> A, VectorX<Scalar> b, std::vector<RowKind> kinds) {
        LinearProgram lp;
        const Eigen::Index n = A.cols();
        lp.A = std::move(A);
        lp.b = std::move(b);
        lp.kinds = std::move(kinds);
        lp.lower = VectorX<Scalar>::Zero(n);
        lp.upper.assign(static_cast<std::size_t>(n), std::nullopt);
        lp.objective = VectorX<Scalar>::Zero(n);
        return lp;
    }
};

enum class LpStatus { optimal, infeasible, unbounded };

template <typename Scalar>
struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Scalar value{};
    VectorX<Scalar> x;
    std::size_t pivots = 0;
};

/// Dense two-phase tableau simplex with Bland's rule. Phase one runs once
/// in the constructor; each maximize() call starts phase two from that
/// feasible basis, so many objectives over one polyhedron are cheap.
template <typename Scalar>
class ExactSimplex {
  public:
    explicit ExactSimplex(const LinearProgram<Scalar>& lp, std::size_t pivot_cap = 1'000'000)
        : pivot_cap_(pivot_cap), lower_(lp.lower), n_(lp.variables()) {
        validate(lp);
        build_phase_one(lp);
        run_phase_one();
    }

    bool feasible() const { return feasible_; }
    std::size_t phase_one_pivots() const { return phase_one_pivots_; }

    LpResult<Scalar> maximize(const VectorX<Scalar>& objective) const {
        if (objective.size() != n_) throw InvalidInput("objective has the wrong length");
        LpResult<Scalar> result;
        if (!feasible_) return result;
        Tableau t = phase_two_;
        // Cost row: reduced costs of the shifted variables, priced against the basis.
        t.cost = VectorX<Scalar>::Zero(t.body.cols());
        for (Eigen::Index j = 0; j < n_; ++j) t.cost(j) = objective(j);
        for (Eigen::Index i = 0; i < t.body.rows(); ++i) {
            const Scalar cb = t.cost(t.basis[static_cast<std::size_t>(i)]);
            if (cb != 0) t.cost -= cb * t.body.row(i).transpose();
        }
        const auto status = iterate(t, result.pivots);
        if (!status) {
            result.status = LpStatus::unbounded;
            return result;
        }
        result.status = LpStatus::optimal;
        result.x = lower_;
        for (Eigen::Index i = 0; i < t.body.rows(); ++i) {
            const int var = t.basis[static_cast<std::size_t>(i)];
            if (var < n_) result.x(var) += t.body(i, t.body.cols() - 1);
        }
        result.value = objective.dot(result.x);
        return result;
    }

  private:
    // body: rows x (columns + 1), last column is the right-hand side.
    // cost: reduced costs over the same columns; the last entry is -z.
    struct Tableau {
        MatrixX<Scalar> body;
        VectorX<Scalar> cost;
        std::vector<int> basis;
        std::vector<char> allowed;
    };

    static void validate(const LinearProgram<Scalar>& lp) {
        const auto n = lp.A.cols();
        if (lp.b.size() != lp.A.rows() || static_cast<Eigen::Index>(lp.kinds.size()) != lp.A.rows() ||
            lp.lower.size() != n || static_cast<Eigen::Index>(lp.upper.size()) != n ||
            lp.objective.size() != n) {
            throw InvalidInput("linear program dimensions are inconsistent");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto& up = lp.upper[static_cast<std::size_t>(j)];
            if (up && *up < lp.lower(j)) throw InvalidInput("variable " + std::to_string(j) + " has lower > upper");
        }
    }

    // Substitutes x = lower + x', turns upper bounds into rows, flips rows
    // to a nonnegative rhs, and adds slack/surplus and artificial columns.
    void build_phase_one(const LinearProgram<Scalar>& lp) {
        struct Row {
            VectorX<Scalar> coeffs;
            Scalar rhs;
            RowKind kind;
        };
        std::vector<Row> rows;
        for (Eigen::Index i = 0; i < lp.A.rows(); ++i) {
            VectorX<Scalar> a = lp.A.row(i).transpose();
            rows.push_back({a, lp.b(i) - a.dot(lp.lower), lp.kinds[static_cast<std::size_t>(i)]});
        }
        for (Eigen::Index j = 0; j < n_; ++j) {
            const auto& up = lp.upper[static_cast<std::size_t>(j)];
            if (!up) continue;
            VectorX<Scalar> a = VectorX<Scalar>::Zero(n_);
            a(j) = 1;
            rows.push_back({a, *up - lp.lower(j), RowKind::less_equal});
        }
        for (auto& row : rows) {
            if (row.rhs < 0) {
                row.coeffs = -row.coeffs;
                row.rhs = -row.rhs;
                if (row.kind == RowKind::less_equal) row.kind = RowKind::greater_equal;
                else if (row.kind == RowKind::greater_equal) row.kind = RowKind::less_equal;
            }
        }
        Eigen::Index slacks = 0;
        Eigen::Index artificials = 0;
        for (const auto& row : rows) {
            if (row.kind != RowKind::equal) ++slacks;
            if (row.kind != RowKind::less_equal) ++artificials;
        }
        const auto m = static_cast<Eigen::Index>(rows.size());
        first_artificial_ = static_cast<int>(n_ + slacks);
        const Eigen::Index cols = n_ + slacks + artificials;
        Tableau& t = phase_one_;
        t.body = MatrixX<Scalar>::Zero(m, cols + 1);
        t.basis.assign(static_cast<std::size_t>(m), -1);
        t.allowed.assign(static_cast<std::size_t>(cols), 1);
        Eigen::Index slack = n_;
        Eigen::Index artificial = first_artificial_;
        for (Eigen::Index i = 0; i < m; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            t.body.row(i).head(n_) = row.coeffs.transpose();
            t.body(i, cols) = row.rhs;
            if (row.kind == RowKind::less_equal) {
                t.body(i, slack) = 1;
                t.basis[static_cast<std::size_t>(i)] = static_cast<int>(slack++);
            } else {
                if (row.kind == RowKind::greater_equal) t.body(i, slack++) = -1;
                t.body(i, artificial) = 1;
                t.basis[static_cast<std::size_t>(i)] = static_cast<int>(artificial++);
            }
        }
        // Maximize minus the sum of artificials.
        t.cost = VectorX<Scalar>::Zero(cols + 1);
        for (Eigen::Index i = 0; i < m; ++i) {
            if (t.basis[static_cast<std::size_t>(i)] >= first_artificial_) t.cost += t.body.row(i).transpose();
        }
        for (Eigen::Index j = first_artificial_; j < cols; ++j) t.cost(j) = 0;
    }

    void run_phase_one() {
        Tableau& t = phase_one_;
        if (!iterate(t, phase_one_pivots_)) throw InternalConsistency("phase one reported unbounded");
        const Eigen::Index rhs_col = t.body.cols() - 1;
        feasible_ = t.cost(rhs_col) == 0;
        if (!feasible_) return;

        // Drive zero-level artificials out of the basis; drop redundant rows.
        std::vector<Eigen::Index> keep;
        for (Eigen::Index i = 0; i < t.body.rows(); ++i) {
            if (t.basis[static_cast<std::size_t>(i)] < first_artificial_) {
                keep.push_back(i);
                continue;
            }
            Eigen::Index col = -1;
            for (Eigen::Index j = 0; j < first_artificial_; ++j) {
                if (t.body(i, j) != 0) {
                    col = j;
                    break;
                }
            }
            if (col < 0) continue;
            pivot(t, i, col);
            keep.push_back(i);
        }
        Tableau& p = phase_two_;
        p.body.resize(static_cast<Eigen::Index>(keep.size()), t.body.cols());
        p.basis.clear();
        for (std::size_t k = 0; k < keep.size(); ++k) {
            p.body.row(static_cast<Eigen::Index>(k)) = t.body.row(keep[k]);
            p.basis.push_back(t.basis[static_cast<std::size_t>(keep[k])]);
        }
        p.allowed = t.allowed;
        for (std::size_t j = static_cast<std::size_t>(first_artificial_); j < p.allowed.size(); ++j) p.allowed[j] = 0;
    }

    static void pivot(Tableau& t, Eigen::Index row, Eigen::Index col) {
        const Eigen::Index width = t.body.cols();
        const Scalar inv = Scalar(1) / t.body(row, col);
        for (Eigen::Index j = 0; j < width; ++j)
            if (t.body(row, j) != 0) t.body(row, j) *= inv;
        for (Eigen::Index i = 0; i < t.body.rows(); ++i) {
            if (i == row) continue;
            const Scalar factor = t.body(i, col);
            if (factor == 0) continue;
            for (Eigen::Index j = 0; j < width; ++j)
                if (t.body(row, j) != 0) t.body(i, j) -= factor * t.body(row, j);
        }
        const Scalar factor = t.cost(col);
        if (factor != 0) {
            for (Eigen::Index j = 0; j < width; ++j)
                if (t.body(row, j) != 0) t.cost(j) -= factor * t.body(row, j);
        }
        t.basis[static_cast<std::size_t>(row)] = static_cast<int>(col);
    }

    // Bland's rule: lowest-index improving column, then lowest-index basic
    // variable among the minimum-ratio rows. False means unbounded.
    bool iterate(Tableau& t, std::size_t& pivots) const {
        const Eigen::Index rhs_col = t.body.cols() - 1;
        while (true) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < rhs_col; ++j) {
                if (t.allowed[static_cast<std::size_t>(j)] && t.cost(j) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;
            Eigen::Index leave = -1;
            Scalar best_ratio{};
            for (Eigen::Index i = 0; i < t.body.rows(); ++i) {
                if (t.body(i, enter) <= 0) continue;
                const Scalar ratio = t.body(i, rhs_col) / t.body(i, enter);
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && t.basis[static_cast<std::size_t>(i)] < t.basis[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            if (++pivots > pivot_cap_)
                throw InternalConsistency("simplex exceeded " + std::to_string(pivot_cap_) + " pivots");
            pivot(t, leave, enter);
        }
    }

    std::size_t pivot_cap_;
    VectorX<Scalar> lower_;
    Eigen::Index n_;
    int first_artificial_ = 0;
    Tableau phase_one_;
    Tableau phase_two_;
    bool feasible_ = false;
    std::size_t phase_one_pivots_ = 0;
};

/// One-shot solve of lp.objective.
template <typename Scalar>
LpResult<Scalar> maximize(const LinearProgram<Scalar>& lp, std::size_t pivot_cap = 1'000'000) {
    ExactSimplex<Scalar> solver(lp, pivot_cap);
    auto result = solver.maximize(lp.objective);
    result.pivots += solver.phase_one_pivots();
    return result;
}

}  // namespace matroid_xf
