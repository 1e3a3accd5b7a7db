#pragma once

// Dense substrate shared by every pursuit: Eigen aliases plus the handful of
// free functions the algorithms need. Everything is templated on the scalar
// so float builds remain possible, but the library itself runs in double.

#include <Eigen/Core>
#include <Eigen/QR>

#include <cmath>
#include <string>
#include <utility>

#include "emp/error.hpp"

namespace emp {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = Vector<double>;
using Mat = Matrix<double>;
using Index = Eigen::Index;

template <typename Derived>
bool all_finite(const Eigen::DenseBase<Derived>& x) {
  return x.allFinite();
}

/// Throws NonFinite when `x` holds a NaN or an infinity.
template <typename Derived>
void require_finite(const Eigen::DenseBase<Derived>& x, const char* what) {
  if (!x.allFinite()) throw Error(ErrorCode::NonFinite, std::string(what) + " has NaN/Inf entries");
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar inner(const Eigen::MatrixBase<DerivedA>& u,
                                const Eigen::MatrixBase<DerivedB>& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "inner product of sizes " + std::to_string(u.size()) + " and " +
                    std::to_string(v.size()));
  }
  return u.dot(v);
}

template <typename Scalar>
struct Normalized {
  Vector<Scalar> unit;
  Scalar norm;
};

template <typename Derived>
Normalized<typename Derived::Scalar> normalize_l2(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const Scalar n = v.norm();
  if (!(n > Scalar(0))) throw Error(ErrorCode::ZeroVector, "cannot normalize a zero vector");
  return {v / n, n};
}

template <typename Scalar>
struct ColumnNormalized {
  Matrix<Scalar> matrix;
  Vector<Scalar> scales;
};

/// Scales every column to unit l2 norm; `scales[j]` is the removed norm so
/// that `matrix.col(j) * scales[j]` gives back the input column.
template <typename Derived>
ColumnNormalized<typename Derived::Scalar> column_normalize(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  ColumnNormalized<Scalar> out{a, a.colwise().norm().transpose()};
  for (Index j = 0; j < a.cols(); ++j) {
    if (!(out.scales[j] > Scalar(0))) {
      throw Error(ErrorCode::ZeroColumn, "column " + std::to_string(j) + " has zero norm", j);
    }
    out.matrix.col(j) /= out.scales[j];
  }
  return out;
}

/// Least-squares solve through column-pivoted Householder QR. Columns whose
/// pivot falls below 1e-10 of the leading diagonal count as dependent.
template <typename DerivedA, typename DerivedY>
Vector<typename DerivedA::Scalar> least_squares(const Eigen::MatrixBase<DerivedA>& a,
                                                const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedA::Scalar;
  if (a.rows() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "least_squares: " + std::to_string(a.rows()) + " rows vs rhs of size " +
                    std::to_string(y.size()));
  }
  if (a.cols() == 0) return Vector<Scalar>();
  if (a.cols() > a.rows()) {
    throw Error(ErrorCode::RankDeficient, "more columns than rows in least-squares subproblem");
  }
  Eigen::ColPivHouseholderQR<Matrix<Scalar>> qr(a);
  qr.setThreshold(Scalar(1e-10));
  if (qr.rank() < a.cols()) {
    throw Error(ErrorCode::RankDeficient,
                "selected atoms are linearly dependent (rank " + std::to_string(qr.rank()) +
                    " < " + std::to_string(a.cols()) + ")");
  }
  return qr.solve(y.eval());
}

}  // namespace emp
