#pragma once

// Entropy-minimization matching pursuit.
//
// Each iteration scans every atom A_j, forms the MP-style trial update
// c = <r, A_j>, and scores it by the weighted conditional entropy
//   w1 * H(r - c A_j) + w2 * H([chat, c]),
// where the trial coefficient enters the coefficient entropy as an extra
// term c^2 ln(1/c^2) and both entropies are taken on the entries as given.
// The admissible atom (one that actually shrinks the residual) with the
// lowest score is committed. Noiseless mode keeps w1 = N/(N+1),
// w2 = 1/(N+1) and runs until ||r|| < epsilon. Noisy mode recomputes
// w1 = (M - |chat|_0)/M, w2 = |chat|_0/M every iteration and refuses any
// update whose entropy ratio against the previous commit reaches gamma.
//
// All work happens on y / ||y|| and the column-normalized A; the returned
// chat is scaled back by ||y|| (pass the result through to_signal_domain to
// undo the column normalization as well). residual_trace holds ||r|| in the
// normalized domain, entropy_trace the committed scores.

#include <optional>

#include "emp/recovery.hpp"

namespace emp {

struct EmpConfig {
  double epsilon = 1e-6;
  std::optional<double> gamma;  // absent: noiseless mode
  Index max_iter = 1000;
  double correlation_floor = 1e-12;

  bool noisy() const { return gamma.has_value(); }
  void validate() const;
};

struct EmpWeights {
  double w1;
  double w2;

  static EmpWeights noiseless(Index n);
  static EmpWeights noisy(Index m, Index nonzeros);
};

struct EmpCandidate {
  Index index;
  double coefficient;
  double score;  // weighted conditional entropy, nats
};

/// Best admissible atom for residual r = y - yhat given the current
/// coefficients, or nullopt when no atom clears the correlation floor and
/// reduces ||r||. Ties go to the lowest index.
std::optional<EmpCandidate> emp_candidate_scan(const Mat& a, const Vec& r, const Vec& chat,
                                               const EmpWeights& weights, double floor);

RecoveryResult emp_recover_noiseless(const Mat& a, const Vec& y, const EmpConfig& cfg);
RecoveryResult emp_recover_noisy(const Mat& a, const Vec& y, const EmpConfig& cfg);

/// Dispatches on cfg.gamma.
RecoveryResult emp_recover(const Mat& a, const Vec& y, const EmpConfig& cfg);

/// (m + n + 5 * snr_db) / m; throws NonPositiveGamma when that is <= 0.
double gamma_default(Index m, Index n, double input_snr_db);

}  // namespace emp
