#pragma once

#include "emp/linalg.hpp"

namespace emp::bench {

/// Reports never exceed this many dB; an error energy below 1e-30 of the
/// signal energy is reported at the cap.
inline constexpr double kDbCap = 300.0;

/// 10 log10(||s||^2 / ||s - shat||^2), capped at kDbCap.
double srer(const Vec& s, const Vec& shat);

/// Same ratio referenced to the clean signal the noise was added to.
double snr_out(const Vec& s_clean, const Vec& shat_from_noisy);

/// ||c_true - chat|| <= 1e-4 ||c_true||.
bool recovery_flag(const Vec& c_true, const Vec& chat);

inline constexpr double kRecoveryTolerance = 1e-4;

/// Information power (base 2) of the normalized reconstruction.
double reconstruction_ip(const Vec& shat);

}  // namespace emp::bench
