#include "emp/bench/metrics.hpp"

#include <cmath>
#include <string>

#include "emp/entropy.hpp"

namespace emp::bench {

double srer(const Vec& s, const Vec& shat) {
  if (s.size() != shat.size()) {
    throw Error(ErrorCode::DimensionMismatch, "srer: signal of size " + std::to_string(s.size()) +
                                                  " vs reconstruction of size " +
                                                  std::to_string(shat.size()));
  }
  const double signal = s.squaredNorm();
  if (!(signal > 0.0)) throw Error(ErrorCode::ZeroVector, "srer: reference signal is zero");
  const double error = (s - shat).squaredNorm();
  if (error < 1e-30 * signal) return kDbCap;
  return std::min(kDbCap, 10.0 * std::log10(signal / error));
}

double snr_out(const Vec& s_clean, const Vec& shat_from_noisy) {
  return srer(s_clean, shat_from_noisy);
}

bool recovery_flag(const Vec& c_true, const Vec& chat) {
  if (c_true.size() != chat.size()) {
    throw Error(ErrorCode::DimensionMismatch, "recovery_flag: coefficient sizes differ");
  }
  const double ref = c_true.norm();
  if (!(ref > 0.0)) throw Error(ErrorCode::ZeroVector, "recovery_flag: true coefficients are zero");
  return (c_true - chat).norm() <= kRecoveryTolerance * ref;
}

double reconstruction_ip(const Vec& shat) {
  return information_power(rep_entropy(shat, 2.0));
}

}  // namespace emp::bench
