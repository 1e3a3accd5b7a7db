#pragma once

// Reference greedy pursuits: MP, OMP, CoSaMP and ROMP, all on a
// column-normalized A. Correlation ties go to the lowest column index.

#include <optional>

#include "emp/recovery.hpp"

namespace emp {

struct StopRule {
  enum class Mode { KnownSparsity, ResidualThreshold, Both };

  Mode mode = Mode::ResidualThreshold;
  Index k = 0;           // used by KnownSparsity / Both
  double epsilon = 0.0;  // absolute bound on ||y - A chat||; used by ResidualThreshold / Both
  Index max_iter = 1;

  static StopRule known_sparsity(Index k, Index max_iter);
  static StopRule residual(double epsilon, Index max_iter);
  static StopRule both(Index k, double epsilon, Index max_iter);

  bool uses_sparsity() const { return mode != Mode::ResidualThreshold; }
  bool uses_epsilon() const { return mode != Mode::KnownSparsity; }

  /// Throws BadParameter when the invariants (k >= 1, epsilon > 0, max_iter >= 1) fail.
  void validate() const;
};

/// max_iter used when callers have no better bound: 10 * M.
inline Index default_max_iter(Index m) { return 10 * m; }

/// round(m / (2 ln n)), at least 1.
Index estimate_sparsity(Index m, Index n);

/// Plain matching pursuit. KnownSparsity counts iterations.
RecoveryResult mp_recover(const Mat& a, const Vec& y, const StopRule& stop);

/// Orthogonal matching pursuit. KnownSparsity bounds the support size.
RecoveryResult omp_recover(const Mat& a, const Vec& y, const StopRule& stop);

/// CoSaMP with target sparsity k. Halts on the stop rule's epsilon, on a
/// residual that stops shrinking, or at max_iter.
RecoveryResult cosamp_recover(const Mat& a, const Vec& y, Index k, const StopRule& stop);

/// Regularized OMP with block size k; grows the support until it reaches
/// 2k atoms, the residual drops below epsilon, or max_iter.
RecoveryResult romp_recover(const Mat& a, const Vec& y, Index k, const StopRule& stop);

/// ROMP's regularization step: given candidate magnitudes sorted in
/// decreasing order, the contiguous run [first, last) of comparable values
/// (max <= 2 * min) with the largest energy. Ties go to the earliest run.
struct ComparableGroup {
  Index first;
  Index last;
};
ComparableGroup romp_regularize(const Vec& sorted_magnitudes);

}  // namespace emp
