#pragma once

#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace matroid_xf {

/// Exact rational scalar. Expression templates are disabled so the type
/// behaves like a plain value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXq = MatrixX<Rational>;
using VectorXq = VectorX<Rational>;
using MatrixXl = MatrixX<long long>;

/// Formats as "p/q" even for integers.
inline std::string to_fraction_string(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

/// Rank over the field of fractions of the scalar, by Gaussian elimination
/// with exact arithmetic. Pivots on the first nonzero entry only; no
/// magnitude threshold is involved.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
    MatrixX<Rational> a = input.template cast<Rational>();
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < rows; ++r) {
            if (a(r, c) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        a.row(rank).swap(a.row(pivot));
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            if (a(r, c) == 0) continue;
            const Rational factor = a(r, c) / a(rank, c);
            for (Eigen::Index k = c; k < cols; ++k) a(r, k) -= factor * a(rank, k);
        }
        ++rank;
    }
    return rank;
}

}  // namespace matroid_xf
