#pragma once

#include <optional>
#include <string>
#include <vector>

#include "emp/bench/config.hpp"
#include "emp/problem.hpp"
#include "emp/recovery.hpp"

namespace emp::bench {

struct ReportRow {
  std::string algorithm;
  Index m = 0;
  Index trial = 0;
  double srer_db = 0.0;
  std::optional<double> snr_db;  // noisy experiments only
  std::optional<double> ip;      // noisy experiments only
  std::optional<bool> recovered;  // NoiselessKnownK only
  Index iterations = 0;
  std::string termination;  // Termination name, or the error code of a failed run
};

/// One generated trial: the problem (with y measured from the observed
/// signal) and the signal it came from.
struct Trial {
  SparseProblem problem;
  SignalInstance signal;
};

/// Seed of trial `t` at measurement count `m`; depends on nothing else.
std::uint64_t trial_seed(std::uint64_t seed, Index m, Index t);

Trial make_trial(const ExperimentConfig& cfg, Index m, Index t);

/// Runs one algorithm on a trial with the stop rule the experiment calls for.
/// The result is mapped back to the signal domain.
RecoveryResult run_algorithm(const ExperimentConfig& cfg, Algorithm algo, const Trial& trial);

/// Full sweep. Rows come out ordered by (m in grid order, trial, algorithm in
/// config order) whatever cfg.threads is.
std::vector<ReportRow> run_experiment(const ExperimentConfig& cfg);

struct SummaryRow {
  std::string algorithm;
  Index m = 0;
  Index trials = 0;
  double mean_srer_db = 0.0;
  std::optional<double> mean_snr_db;
  std::optional<double> mean_ip;
  std::optional<double> recovery_rate;  // fraction in [0, 1]
};

/// Per-(algorithm, m) means, accumulated in ascending trial order.
std::vector<SummaryRow> summarize(const std::vector<ReportRow>& rows);

}  // namespace emp::bench
