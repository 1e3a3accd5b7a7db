#pragma once

// Representation entropy: squared entries of a unit-norm vector are read as
// the probabilities of picking each basis function, H = sum x_i^2 log(1/x_i^2).

#include <cmath>
#include <numbers>

#include "emp/linalg.hpp"

namespace emp {

inline constexpr double kZeroResidual = 1e-12;

struct EntropyValue {
  double value = 0.0;
  double base = std::numbers::e;
};

namespace detail {

// p log(1/p) with the 0 log(1/0) = 0 convention, natural log.
template <typename Scalar>
inline Scalar plogp_inv(Scalar p) {
  return p > Scalar(0) ? -p * std::log(p) : Scalar(0);
}

inline void check_base(double base) {
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw Error(ErrorCode::BadParameter, "logarithm base must be finite and > 1");
  }
}

}  // namespace detail

/// Sum of x_i^2 ln(1/x_i^2) on the entries as given, no renormalization.
/// Meaningful when ||x|| <= 1, e.g. the residual of a unit-norm measurement.
template <typename Derived>
typename Derived::Scalar energy_entropy(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  Scalar h(0);
  for (Index i = 0; i < x.size(); ++i) h += detail::plogp_inv(x[i] * x[i]);
  return h;
}

template <typename Derived>
EntropyValue rep_entropy(const Eigen::MatrixBase<Derived>& x, double base = std::numbers::e) {
  detail::check_base(base);
  const double energy = x.squaredNorm();
  if (!(energy > 0.0)) throw Error(ErrorCode::ZeroVector, "entropy of a zero vector");
  double h = 0.0;
  for (Index i = 0; i < x.size(); ++i) h += detail::plogp_inv(double(x[i]) * double(x[i]) / energy);
  // Rounding can push a one-hot vector a hair below zero.
  return {std::max(h, 0.0) / std::log(base), base};
}

/// Weighted conditional entropy of a candidate update:
///   w1 * H(e) + w2 * H(chat_aug)
/// Both terms are energy entropies on the entries as given: everything lives
/// in the domain of the unit-norm measurement, so squared entries already
/// act as probabilities. `chat_aug` is the coefficient list the candidate
/// would produce (the current coefficients plus the trial coefficient as an
/// extra entry). A residual with norm <= 1e-12 contributes 0.
template <typename DerivedE, typename DerivedC>
double weighted_conditional_entropy(const Eigen::MatrixBase<DerivedE>& e,
                                    const Eigen::MatrixBase<DerivedC>& chat_aug, double w1,
                                    double w2, double base = std::numbers::e) {
  detail::check_base(base);
  if (w1 < 0.0 || w2 < 0.0) throw Error(ErrorCode::NegativeWeight, "entropy weights must be >= 0");
  const double he = e.norm() <= kZeroResidual ? 0.0 : double(energy_entropy(e));
  const double hc = double(energy_entropy(chat_aug));
  return (w1 * he + w2 * hc) / std::log(base);
}

/// Variance of the Gaussian whose entropy log_b sqrt(2 pi e sigma^2) equals h.
inline double information_power(const EntropyValue& h) {
  detail::check_base(h.base);
  if (h.value < 0.0) throw Error(ErrorCode::BadParameter, "entropy must be non-negative");
  return std::exp2(2.0 * h.value * std::log2(h.base)) / (2.0 * std::numbers::pi * std::numbers::e);
}

/// Ratio of successive conditional entropies used by the noisy gate.
inline double delta_h(double h_curr, double h_prev) {
  if (h_prev <= kZeroResidual) {
    throw Error(ErrorCode::DegenerateHistory, "previous conditional entropy is zero");
  }
  return h_curr / h_prev;
}

}  // namespace emp
