#include "emp/pursuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "emp/problem.hpp"

namespace emp {
namespace {

// Correlations below this are treated as zero.
constexpr double kCorrelationFloor = 1e-12;
// A residual this far below ||y|| counts as an exact fit in every stop mode.
constexpr double kRelativeResidualFloor = 1e-12;

void check_inputs(const Mat& a, const Vec& y, const StopRule& stop) {
  if (a.rows() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch, "A has " + std::to_string(a.rows()) +
                                                  " rows but y has " + std::to_string(y.size()) +
                                                  " entries");
  }
  require_finite(a, "A");
  require_finite(y, "y");
  stop.validate();
}

bool below_epsilon(const StopRule& stop, double residual_norm, double y_norm) {
  if (residual_norm <= kRelativeResidualFloor * y_norm) return true;
  return stop.uses_epsilon() && residual_norm < stop.epsilon;
}

Mat gather_columns(const Mat& a, const std::vector<Index>& cols) {
  Mat out(a.rows(), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) out.col(Index(i)) = a.col(cols[i]);
  return out;
}

// Indices of the `count` largest |v_i| (excluding `skip`, ignoring values at
// or below the correlation floor) in decreasing magnitude, lowest index first on ties.
std::vector<Index> top_magnitudes(const Vec& v, Index count, const std::vector<bool>& skip) {
  std::vector<Index> idx;
  for (Index i = 0; i < v.size(); ++i)
    if (!skip[std::size_t(i)] && std::abs(v[i]) > kCorrelationFloor) idx.push_back(i);
  const auto keep = std::min<std::size_t>(idx.size(), std::size_t(std::max<Index>(count, 0)));
  std::partial_sort(idx.begin(), idx.begin() + std::ptrdiff_t(keep), idx.end(),
                    [&](Index l, Index r) {
                      const double al = std::abs(v[l]), ar = std::abs(v[r]);
                      return al > ar || (al == ar && l < r);
                    });
  idx.resize(keep);
  return idx;
}

void note_support(RecoveryResult& out, std::vector<bool>& seen, Index j) {
  if (!seen[std::size_t(j)]) {
    seen[std::size_t(j)] = true;
    out.support.push_back(j);
  }
}

}  // namespace

StopRule StopRule::known_sparsity(Index k, Index max_iter) {
  return {Mode::KnownSparsity, k, 0.0, max_iter};
}

StopRule StopRule::residual(double epsilon, Index max_iter) {
  return {Mode::ResidualThreshold, 0, epsilon, max_iter};
}

StopRule StopRule::both(Index k, double epsilon, Index max_iter) {
  return {Mode::Both, k, epsilon, max_iter};
}

void StopRule::validate() const {
  if (max_iter < 1) throw Error(ErrorCode::BadParameter, "max_iter must be >= 1");
  if (uses_sparsity() && k < 1) throw Error(ErrorCode::BadParameter, "sparsity K must be >= 1");
  if (uses_epsilon() && !(epsilon > 0.0)) {
    throw Error(ErrorCode::BadParameter, "residual threshold must be > 0");
  }
}

Index estimate_sparsity(Index m, Index n) {
  if (m < 1 || n < 2) {
    throw Error(ErrorCode::BadDimension, "estimate_sparsity needs m >= 1 and n >= 2");
  }
  const auto k = std::llround(double(m) / (2.0 * std::log(double(n))));
  return std::max<Index>(1, Index(k));
}

RecoveryResult mp_recover(const Mat& a, const Vec& y, const StopRule& stop) {
  check_inputs(a, y, stop);
  const double y_norm = y.norm();
  RecoveryResult out;
  out.chat = Vec::Zero(a.cols());
  std::vector<bool> seen(std::size_t(a.cols()), false);
  Vec r = y;
  double r_norm = y_norm;

  out.termination = Termination::IterationCap;
  for (;;) {
    if (below_epsilon(stop, r_norm, y_norm)) {
      out.termination = Termination::ResidualBelowEpsilon;
      break;
    }
    if (stop.uses_sparsity() && out.iterations >= stop.k) {
      out.termination = Termination::SparsityReached;
      break;
    }
    if (out.iterations >= stop.max_iter) break;

    const Vec corr = a.transpose() * r;
    const Index j = argmax_abs(corr);
    if (j < 0 || std::abs(corr[j]) < kCorrelationFloor) {
      out.termination = Termination::NoAdmissibleAtom;
      break;
    }
    const double c = corr[j];
    r -= c * a.col(j);
    out.chat[j] += c;
    r_norm = r.norm();
    ++out.iterations;
    out.residual_trace.push_back(r_norm);
    out.steps.push_back({j, c});
    note_support(out, seen, j);
  }
  return out;
}

RecoveryResult omp_recover(const Mat& a, const Vec& y, const StopRule& stop) {
  check_inputs(a, y, stop);
  const double y_norm = y.norm();
  RecoveryResult out;
  out.chat = Vec::Zero(a.cols());
  std::vector<bool> in_support(std::size_t(a.cols()), false);
  Vec r = y;
  double r_norm = y_norm;
  Vec x;

  out.termination = Termination::IterationCap;
  for (;;) {
    if (below_epsilon(stop, r_norm, y_norm)) {
      out.termination = Termination::ResidualBelowEpsilon;
      break;
    }
    const auto size = Index(out.support.size());
    if (stop.uses_sparsity() && size >= stop.k) {
      out.termination = Termination::SparsityReached;
      break;
    }
    if (size >= a.rows()) {
      out.termination = Termination::NoAdmissibleAtom;
      break;
    }
    if (out.iterations >= stop.max_iter) break;

    Vec corr = a.transpose() * r;
    for (Index j : out.support) corr[j] = 0.0;
    const Index j = argmax_abs(corr);
    if (j < 0 || std::abs(corr[j]) < kCorrelationFloor) {
      out.termination = Termination::NoAdmissibleAtom;
      break;
    }
    out.support.push_back(j);
    in_support[std::size_t(j)] = true;
    const Mat sub = gather_columns(a, out.support);
    x = least_squares(sub, y);
    r = y - sub * x;
    r_norm = r.norm();
    ++out.iterations;
    out.residual_trace.push_back(r_norm);
    out.steps.push_back({j, x[x.size() - 1]});
  }
  for (std::size_t i = 0; i < out.support.size(); ++i) out.chat[out.support[i]] = x[Index(i)];
  return out;
}

RecoveryResult cosamp_recover(const Mat& a, const Vec& y, Index k, const StopRule& stop) {
  check_inputs(a, y, stop);
  if (k < 1) throw Error(ErrorCode::BadParameter, "CoSaMP sparsity k must be >= 1");
  const double y_norm = y.norm();
  const Index m = a.rows();
  RecoveryResult out;
  out.chat = Vec::Zero(a.cols());
  std::vector<Index> support;
  Vec r = y;
  double r_norm = y_norm;

  out.termination = Termination::IterationCap;
  for (;;) {
    if (below_epsilon(stop, r_norm, y_norm)) {
      out.termination = Termination::ResidualBelowEpsilon;
      break;
    }
    if (out.iterations >= stop.max_iter) break;

    // Identify: 2k strongest proxy entries outside the current support,
    // limited so the merged least-squares problem stays overdetermined.
    const Vec proxy = a.transpose() * r;
    std::vector<bool> skip(std::size_t(a.cols()), false);
    for (Index j : support) skip[std::size_t(j)] = true;
    const Index budget = std::min<Index>(2 * k, m - Index(support.size()));
    const auto omega = top_magnitudes(proxy, budget, skip);
    if (omega.empty()) {
      out.termination = Termination::NoAdmissibleAtom;
      break;
    }
    std::vector<Index> merged = support;
    merged.insert(merged.end(), omega.begin(), omega.end());
    std::sort(merged.begin(), merged.end());

    // Estimate on the merged support, then prune to the k largest.
    const Vec b = least_squares(gather_columns(a, merged), y);
    Vec b_full = Vec::Zero(a.cols());
    for (std::size_t i = 0; i < merged.size(); ++i) b_full[merged[i]] = b[Index(i)];
    std::vector<bool> none(std::size_t(a.cols()), false);
    auto pruned = top_magnitudes(b_full, k, none);
    std::sort(pruned.begin(), pruned.end());

    Vec x = Vec::Zero(a.cols());
    for (Index j : pruned) x[j] = b_full[j];
    const Vec r_new = y - a * x;
    const double r_new_norm = r_new.norm();
    if (!(r_new_norm < r_norm)) {
      // Residual stopped shrinking: keep the previous estimate.
      out.termination = Termination::NoAdmissibleAtom;
      break;
    }
    support = std::move(pruned);
    out.chat = std::move(x);
    r = r_new;
    r_norm = r_new_norm;
    ++out.iterations;
    out.residual_trace.push_back(r_norm);
    for (Index j : support) out.steps.push_back({j, out.chat[j]});
  }
  out.support = support;
  return out;
}

ComparableGroup romp_regularize(const Vec& sorted_magnitudes) {
  const Index n = sorted_magnitudes.size();
  ComparableGroup best{0, 0};
  double best_energy = -1.0;
  for (Index first = 0; first < n; ++first) {
    double energy = 0.0;
    Index last = first;
    while (last < n && sorted_magnitudes[first] <= 2.0 * sorted_magnitudes[last]) {
      energy += sorted_magnitudes[last] * sorted_magnitudes[last];
      ++last;
    }
    if (energy > best_energy) {
      best_energy = energy;
      best = {first, last};
    }
  }
  return best;
}

RecoveryResult romp_recover(const Mat& a, const Vec& y, Index k, const StopRule& stop) {
  check_inputs(a, y, stop);
  if (k < 1) throw Error(ErrorCode::BadParameter, "ROMP block size k must be >= 1");
  const double y_norm = y.norm();
  const Index m = a.rows();
  RecoveryResult out;
  out.chat = Vec::Zero(a.cols());
  std::vector<bool> in_support(std::size_t(a.cols()), false);
  Vec r = y;
  double r_norm = y_norm;
  Vec x;

  out.termination = Termination::IterationCap;
  for (;;) {
    if (below_epsilon(stop, r_norm, y_norm)) {
      out.termination = Termination::ResidualBelowEpsilon;
      break;
    }
    const auto size = Index(out.support.size());
    if (size >= 2 * k) {
      out.termination = Termination::SparsityReached;
      break;
    }
    if (size >= m) {
      out.termination = Termination::NoAdmissibleAtom;
      break;
    }
    if (out.iterations >= stop.max_iter) break;

    const Vec corr = a.transpose() * r;
    const auto candidates = top_magnitudes(corr, k, in_support);
    if (candidates.empty()) {
      out.termination = Termination::NoAdmissibleAtom;
      break;
    }
    Vec mags(Index(candidates.size()));
    for (std::size_t i = 0; i < candidates.size(); ++i) mags[Index(i)] = std::abs(corr[candidates[i]]);
    const auto group = romp_regularize(mags);
    const Index last = std::min(group.last, group.first + (m - size));
    for (Index i = group.first; i < last; ++i) {
      out.support.push_back(candidates[std::size_t(i)]);
      in_support[std::size_t(candidates[std::size_t(i)])] = true;
    }
    const Mat sub = gather_columns(a, out.support);
    x = least_squares(sub, y);
    r = y - sub * x;
    r_norm = r.norm();
    ++out.iterations;
    out.residual_trace.push_back(r_norm);
    for (Index i = size; i < Index(out.support.size()); ++i) out.steps.push_back({out.support[std::size_t(i)], x[i]});
  }
  for (std::size_t i = 0; i < out.support.size(); ++i) out.chat[out.support[i]] = x[Index(i)];
  return out;
}

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::ResidualBelowEpsilon: return "ResidualBelowEpsilon";
    case Termination::SparsityReached: return "SparsityReached";
    case Termination::EntropyGate: return "EntropyGate";
    case Termination::IterationCap: return "IterationCap";
    case Termination::NoAdmissibleAtom: return "NoAdmissibleAtom";
  }
  return "Unknown";
}

void to_signal_domain(RecoveryResult& result, const SparseProblem& problem) {
  if (result.chat.size() != problem.a_scales.size()) {
    throw Error(ErrorCode::DimensionMismatch, "coefficient vector does not match the problem");
  }
  result.chat = result.chat.cwiseQuotient(problem.a_scales);
  result.shat = problem.psi * result.chat;
}

}  // namespace emp
