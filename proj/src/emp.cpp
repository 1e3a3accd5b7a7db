#include "emp/emp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "emp/entropy.hpp"

namespace emp {
namespace {

void check_inputs(const Mat& a, const Vec& y, const EmpConfig& cfg) {
  if (a.rows() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch, "A has " + std::to_string(a.rows()) +
                                                  " rows but y has " + std::to_string(y.size()) +
                                                  " entries");
  }
  require_finite(a, "A");
  require_finite(y, "y");
  cfg.validate();
}

class EmpRun {
 public:
  EmpRun(const Mat& a, const Vec& y, const EmpConfig& cfg) : a_(a), cfg_(cfg) {
    auto normalized = normalize_l2(y);
    y_norm_ = normalized.norm;
    r_ = std::move(normalized.unit);
    r_norm_ = 1.0;
    out_.chat = Vec::Zero(a.cols());
    seen_.assign(std::size_t(a.cols()), false);
  }

  const Vec& residual() const { return r_; }
  double residual_norm() const { return r_norm_; }
  const RecoveryResult& result() const { return out_; }
  Index nonzeros() const { return Index(out_.support.size()); }

  bool converged() const { return r_norm_ < cfg_.epsilon; }

  std::optional<EmpCandidate> scan(const EmpWeights& w) const {
    return emp_candidate_scan(a_, r_, out_.chat, w, cfg_.correlation_floor);
  }

  // Commits the candidate; false when the residual failed to shrink.
  bool commit(const EmpCandidate& cand) {
    const Index j = cand.index;
    const double c = r_.dot(a_.col(j));
    Vec next = r_ - c * a_.col(j);
    const double next_norm = next.norm();
    if (!(next_norm < r_norm_)) return false;
    r_ = std::move(next);
    r_norm_ = next_norm;
    out_.chat[j] += c;
    ++out_.iterations;
    out_.residual_trace.push_back(r_norm_);
    out_.entropy_trace.push_back(cand.score);
    out_.steps.push_back({j, c});
    if (!seen_[std::size_t(j)]) {
      seen_[std::size_t(j)] = true;
      out_.support.push_back(j);
    }
    return true;
  }

  RecoveryResult finish(Termination why) {
    out_.termination = why;
    out_.chat *= y_norm_;
    return std::move(out_);
  }

 private:
  const Mat& a_;
  const EmpConfig& cfg_;
  double y_norm_ = 0.0;
  Vec r_;
  double r_norm_ = 0.0;
  RecoveryResult out_;
  std::vector<bool> seen_;
};

}  // namespace

void EmpConfig::validate() const {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::BadParameter, "epsilon must be > 0");
  if (gamma && !(*gamma > 0.0)) throw Error(ErrorCode::NonPositiveGamma, "gamma must be > 0");
  if (max_iter < 1) throw Error(ErrorCode::BadParameter, "max_iter must be >= 1");
  if (!(correlation_floor >= 0.0)) {
    throw Error(ErrorCode::BadParameter, "correlation floor must be >= 0");
  }
}

EmpWeights EmpWeights::noiseless(Index n) {
  const double nn = double(n);
  return {nn / (nn + 1.0), 1.0 / (nn + 1.0)};
}

EmpWeights EmpWeights::noisy(Index m, Index nonzeros) {
  const double mm = double(m);
  return {double(m - nonzeros) / mm, double(nonzeros) / mm};
}

std::optional<EmpCandidate> emp_candidate_scan(const Mat& a, const Vec& r, const Vec& chat,
                                               const EmpWeights& weights, double floor) {
  if (a.rows() != r.size() || a.cols() != chat.size()) {
    throw Error(ErrorCode::DimensionMismatch, "candidate scan: A, r and chat disagree in size");
  }
  if (weights.w1 < 0.0 || weights.w2 < 0.0) {
    throw Error(ErrorCode::NegativeWeight, "entropy weights must be >= 0");
  }
  const double r_energy = r.squaredNorm();
  // H(chat_aug) = H(chat) + c^2 ln(1/c^2): the trial coefficient enters as a new term.
  const double h_chat = energy_entropy(chat);
  const Vec corr = a.transpose() * r;

  std::optional<EmpCandidate> best;
  Vec e(r.size());
  for (Index j = 0; j < a.cols(); ++j) {
    const double c = corr[j];
    if (!(std::abs(c) > floor)) continue;
    e.noalias() = r - c * a.col(j);
    const double e_energy = e.squaredNorm();
    if (!(e_energy < r_energy)) continue;
    const double he = std::sqrt(e_energy) <= kZeroResidual ? 0.0 : energy_entropy(e);
    const double hc = h_chat + detail::plogp_inv(c * c);
    const double score = weights.w1 * he + weights.w2 * hc;
    if (!best || score < best->score) best = EmpCandidate{j, c, score};
  }
  return best;
}

RecoveryResult emp_recover_noiseless(const Mat& a, const Vec& y, const EmpConfig& cfg) {
  check_inputs(a, y, cfg);
  if (cfg.gamma) throw Error(ErrorCode::BadParameter, "noiseless EMP takes no gamma");
  EmpRun run(a, y, cfg);
  const auto weights = EmpWeights::noiseless(a.cols());
  while (!run.converged()) {
    if (run.result().iterations >= cfg.max_iter) return run.finish(Termination::IterationCap);
    const auto cand = run.scan(weights);
    if (!cand || !run.commit(*cand)) return run.finish(Termination::NoAdmissibleAtom);
  }
  return run.finish(Termination::ResidualBelowEpsilon);
}

RecoveryResult emp_recover_noisy(const Mat& a, const Vec& y, const EmpConfig& cfg) {
  check_inputs(a, y, cfg);
  if (!cfg.gamma) throw Error(ErrorCode::BadParameter, "noisy EMP needs gamma");
  const double gamma = *cfg.gamma;
  const Index m = a.rows();
  EmpRun run(a, y, cfg);
  // Empty chat: w1 = 1 and the residual is the unit-norm y itself.
  double h_prev = energy_entropy(run.residual());
  while (!run.converged()) {
    if (run.result().iterations >= cfg.max_iter) return run.finish(Termination::IterationCap);
    // With |chat|_0 = M the residual term would carry zero weight.
    if (run.nonzeros() >= m) return run.finish(Termination::SparsityReached);
    const auto cand = run.scan(EmpWeights::noisy(m, run.nonzeros()));
    if (!cand) return run.finish(Termination::NoAdmissibleAtom);
    if (h_prev <= kZeroResidual || delta_h(cand->score, h_prev) >= gamma) {
      return run.finish(Termination::EntropyGate);
    }
    if (!run.commit(*cand)) return run.finish(Termination::NoAdmissibleAtom);
    h_prev = cand->score;
  }
  return run.finish(Termination::ResidualBelowEpsilon);
}

RecoveryResult emp_recover(const Mat& a, const Vec& y, const EmpConfig& cfg) {
  return cfg.noisy() ? emp_recover_noisy(a, y, cfg) : emp_recover_noiseless(a, y, cfg);
}

double gamma_default(Index m, Index n, double input_snr_db) {
  if (m < 1) throw Error(ErrorCode::BadDimension, "gamma_default needs m >= 1");
  const double gamma = (double(m) + double(n) + 5.0 * input_snr_db) / double(m);
  if (!(gamma > 0.0)) {
    throw Error(ErrorCode::NonPositiveGamma,
                "(M + N + 5 SNR) / M = " + std::to_string(gamma) + "; supply gamma explicitly");
  }
  return gamma;
}

}  // namespace emp
