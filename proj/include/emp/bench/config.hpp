#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emp/linalg.hpp"

namespace emp::bench {

enum class Experiment { NoiselessKnownK, NoiselessUnknownK, NoisySparse, NoisyCompressible };
enum class Basis { Fourier, RandomFrame };
enum class Algorithm { MP, OMP, CoSaMP, ROMP, EMP };

std::string_view to_string(Experiment e) noexcept;
std::string_view to_string(Basis b) noexcept;
std::string_view to_string(Algorithm a) noexcept;

// Parsing is case-insensitive and ignores '-' and '_' ("noisy-sparse" works).
Experiment parse_experiment(std::string_view s);
Basis parse_basis(std::string_view s);
Algorithm parse_algorithm(std::string_view s);

bool is_noisy(Experiment e) noexcept;
bool is_sparse(Experiment e) noexcept;

struct PowerLaw {
  double p = 1.0;
  double r = 1.5;
};

struct ExperimentConfig {
  Experiment experiment = Experiment::NoiselessKnownK;
  Index n = 200;
  std::optional<Index> k;
  Basis basis = Basis::Fourier;
  std::vector<Index> m_grid;
  std::optional<double> input_snr_db;
  Index trials = 10;
  std::uint64_t seed = 1;
  double epsilon = 1e-6;
  std::optional<double> gamma_override;
  std::vector<Algorithm> algorithms{Algorithm::MP, Algorithm::OMP, Algorithm::CoSaMP,
                                    Algorithm::ROMP, Algorithm::EMP};
  std::optional<PowerLaw> power_law;
  // Execution only; never changes the report.
  unsigned threads = 1;

  /// Throws Error(Config) naming the first violated invariant.
  void validate() const;
};

/// Flat `key = value` assignments, one per line; '#' starts a comment.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(std::istream& in, const std::string& origin);
KeyValues read_key_values(const std::string& path);

/// Applies each recognised key onto `cfg`. Unknown keys are a config error.
/// Keys: experiment, n, k, basis, m_grid, input_snr_db, trials, seed, epsilon,
/// gamma_override, algorithms, power_law (as "p,r"), threads.
void apply(ExperimentConfig& cfg, const KeyValues& values);

std::vector<Index> parse_index_list(std::string_view csv);
std::vector<Algorithm> parse_algorithm_list(std::string_view csv);
PowerLaw parse_power_law(std::string_view csv);

}  // namespace emp::bench
