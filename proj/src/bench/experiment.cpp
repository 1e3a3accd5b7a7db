#include "emp/bench/experiment.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include "emp/bench/metrics.hpp"
#include "emp/emp.hpp"
#include "emp/pursuit.hpp"
#include "emp/random.hpp"

namespace emp::bench {
namespace {

// Sub-streams of a trial seed.
enum Stream : std::uint64_t { kBasis = 1, kMeasurement = 2, kSignal = 3, kNoise = 4 };

ReportRow evaluate(const ExperimentConfig& cfg, Algorithm algo, const Trial& trial) {
  ReportRow row;
  row.algorithm = std::string(to_string(algo));
  row.m = trial.problem.m();
  const Vec& reference = trial.signal.observed();
  const bool noisy = is_noisy(cfg.experiment);

  Vec shat = Vec::Zero(reference.size());
  Vec chat = Vec::Zero(reference.size());
  try {
    RecoveryResult result = run_algorithm(cfg, algo, trial);
    row.iterations = result.iterations;
    row.termination = std::string(to_string(result.termination));
    shat = std::move(result.shat);
    chat = std::move(result.chat);
  } catch (const Error& e) {
    row.termination = to_string(e.code());
  }

  row.srer_db = srer(reference, shat);
  if (noisy) {
    row.snr_db = snr_out(trial.signal.clean, shat);
    if (shat.squaredNorm() > 0.0) row.ip = reconstruction_ip(shat);
  }
  if (cfg.experiment == Experiment::NoiselessKnownK) {
    row.recovered = recovery_flag(trial.signal.coeffs, chat);
  }
  return row;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, Index m, Index t) {
  return derive_seed(seed, {std::uint64_t(m), std::uint64_t(t)});
}

Trial make_trial(const ExperimentConfig& cfg, Index m, Index t) {
  const auto seed = trial_seed(cfg.seed, m, t);
  Mat psi = cfg.basis == Basis::Fourier ? fourier_basis(cfg.n)
                                        : random_frame(cfg.n, derive_seed(seed, {kBasis}));
  SignalInstance signal =
      is_sparse(cfg.experiment)
          ? gen_sparse_signal(psi, *cfg.k, derive_seed(seed, {kSignal}))
          : gen_compressible_signal(psi, cfg.power_law->p, cfg.power_law->r, derive_seed(seed, {kSignal}));
  if (is_noisy(cfg.experiment)) add_noise(signal, *cfg.input_snr_db, derive_seed(seed, {kNoise}));
  Mat phi = gaussian_measurement(m, cfg.n, derive_seed(seed, {kMeasurement}));
  SparseProblem problem = make_problem(std::move(psi), std::move(phi), signal.observed());
  return {std::move(problem), std::move(signal)};
}

RecoveryResult run_algorithm(const ExperimentConfig& cfg, Algorithm algo, const Trial& trial) {
  const SparseProblem& p = trial.problem;
  const Index m = p.m();
  const Index max_iter = default_max_iter(m);
  // Baselines: known K only in NoiselessKnownK, otherwise estimated from M.
  const Index k = cfg.experiment == Experiment::NoiselessKnownK ? *cfg.k : estimate_sparsity(m, p.n());
  // Residual thresholds are relative to ||y|| so every algorithm shares EMP's scale.
  const double eps = cfg.epsilon * p.y.norm();
  const auto residual_rule = StopRule::residual(eps, max_iter);

  RecoveryResult result;
  switch (algo) {
    case Algorithm::MP:
      result = mp_recover(p.a, p.y, residual_rule);
      break;
    case Algorithm::OMP:
      result = omp_recover(p.a, p.y,
                           cfg.experiment == Experiment::NoisyCompressible
                               ? residual_rule
                               : StopRule::both(k, eps, max_iter));
      break;
    case Algorithm::CoSaMP:
      result = cosamp_recover(p.a, p.y, k, residual_rule);
      break;
    case Algorithm::ROMP:
      result = romp_recover(p.a, p.y, k, residual_rule);
      break;
    case Algorithm::EMP: {
      EmpConfig emp_cfg;
      emp_cfg.epsilon = cfg.epsilon;
      emp_cfg.max_iter = max_iter;
      if (is_noisy(cfg.experiment)) {
        emp_cfg.gamma = cfg.gamma_override ? *cfg.gamma_override
                                           : gamma_default(m, p.n(), *cfg.input_snr_db);
      }
      result = emp_recover(p.a, p.y, emp_cfg);
      break;
    }
  }
  to_signal_domain(result, p);
  return result;
}

std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Task {
    Index m;
    Index t;
  };
  std::vector<Task> tasks;
  for (Index m : cfg.m_grid)
    for (Index t = 0; t < cfg.trials; ++t) tasks.push_back({m, t});

  std::vector<std::vector<ReportRow>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        const Trial trial = make_trial(cfg, tasks[i].m, tasks[i].t);
        auto& rows = slots[i];
        for (Algorithm algo : cfg.algorithms) {
          rows.push_back(evaluate(cfg, algo, trial));
          rows.back().trial = tasks[i].t;
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned n_threads = std::max(1u, std::min<unsigned>(cfg.threads, unsigned(tasks.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ReportRow> rows;
  rows.reserve(tasks.size() * cfg.algorithms.size());
  for (auto& slot : slots)
    for (auto& row : slot) rows.push_back(std::move(row));
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ReportRow>& rows) {
  struct Acc {
    std::vector<const ReportRow*> rows;
  };
  std::vector<std::pair<std::string, Index>> order;
  std::map<std::pair<std::string, Index>, Acc> groups;
  for (const auto& row : rows) {
    const auto key = std::make_pair(row.algorithm, row.m);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.rows.push_back(&row);
  }

  std::vector<SummaryRow> out;
  for (const auto& key : order) {
    auto group = groups[key].rows;
    std::stable_sort(group.begin(), group.end(),
                     [](const ReportRow* l, const ReportRow* r) { return l->trial < r->trial; });
    SummaryRow s;
    s.algorithm = key.first;
    s.m = key.second;
    s.trials = Index(group.size());
    double srer_sum = 0.0, snr_sum = 0.0, ip_sum = 0.0, hits = 0.0;
    Index snr_count = 0, ip_count = 0, flag_count = 0;
    for (const ReportRow* r : group) {
      srer_sum += r->srer_db;
      if (r->snr_db) snr_sum += *r->snr_db, ++snr_count;
      if (r->ip) ip_sum += *r->ip, ++ip_count;
      if (r->recovered) hits += *r->recovered ? 1.0 : 0.0, ++flag_count;
    }
    s.mean_srer_db = srer_sum / double(s.trials);
    if (snr_count) s.mean_snr_db = snr_sum / double(snr_count);
    if (ip_count) s.mean_ip = ip_sum / double(ip_count);
    if (flag_count) s.recovery_rate = hits / double(flag_count);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace emp::bench
