#pragma once

#include <string_view>
#include <vector>

#include "emp/linalg.hpp"

namespace emp {

struct SparseProblem;

enum class Termination {
  ResidualBelowEpsilon,
  SparsityReached,
  EntropyGate,
  IterationCap,
  NoAdmissibleAtom,
};

std::string_view to_string(Termination t) noexcept;

/// One committed pursuit step: which atom and the coefficient added to it.
/// Block methods (CoSaMP, ROMP) record the atoms merged in that iteration
/// with their least-squares value.
struct Step {
  Index index;
  double coefficient;
};

/// Output of every recovery routine. The pursuit functions fill `chat` in the
/// coordinates of the column-normalized A they were given and leave `shat`
/// empty; `to_signal_domain` maps both back through a_scales and psi.
struct RecoveryResult {
  Vec chat;
  Vec shat;
  Index iterations = 0;
  std::vector<double> residual_trace;
  std::vector<double> entropy_trace;
  std::vector<Index> support;  // distinct atoms in order of first selection
  std::vector<Step> steps;
  Termination termination = Termination::IterationCap;
};

/// Undo the column normalization of A and synthesize shat = psi * chat.
void to_signal_domain(RecoveryResult& result, const SparseProblem& problem);

/// Index of the largest |v_i|, lowest index on ties. Returns -1 for an empty vector.
template <typename Derived>
Index argmax_abs(const Eigen::MatrixBase<Derived>& v) {
  Index best = -1;
  double best_value = -1.0;
  for (Index i = 0; i < v.size(); ++i) {
    const double x = std::abs(double(v[i]));
    if (x > best_value) {
      best_value = x;
      best = i;
    }
  }
  return best;
}

/// Number of nonzero entries.
template <typename Derived>
Index l0_norm(const Eigen::MatrixBase<Derived>& v) {
  return (v.array() != 0).count();
}

}  // namespace emp
