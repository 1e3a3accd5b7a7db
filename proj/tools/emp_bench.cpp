// emp_bench: seeded recovery sweeps and (Phi, Psi) diagnostics.
//
// Exit codes: 0 success, 1 config error, 2 I/O error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "emp/bench/config.hpp"
#include "emp/bench/experiment.hpp"
#include "emp/bench/report.hpp"
#include "emp/error.hpp"
#include "emp/problem.hpp"
#include "emp/random.hpp"

namespace {

using namespace emp;
using namespace emp::bench;

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

void print_summary(const ExperimentConfig& cfg, const std::vector<ReportRow>& rows) {
  std::fprintf(stderr, "# %s n=%ld basis=%s trials=%ld seed=%llu epsilon=%g",
               std::string(to_string(cfg.experiment)).c_str(), long(cfg.n),
               std::string(to_string(cfg.basis)).c_str(), long(cfg.trials),
               static_cast<unsigned long long>(cfg.seed), cfg.epsilon);
  if (cfg.k) std::fprintf(stderr, " k=%ld", long(*cfg.k));
  if (cfg.input_snr_db) std::fprintf(stderr, " snr_db=%g", *cfg.input_snr_db);
  if (cfg.power_law) std::fprintf(stderr, " power_law=%g,%g", cfg.power_law->p, cfg.power_law->r);
  std::fprintf(stderr, "\n%-8s %5s %12s %12s %10s %9s\n", "algo", "m", "srer_db", "snr_db", "ip", "recovery");
  for (const auto& s : summarize(rows)) {
    std::fprintf(stderr, "%-8s %5ld %12.4f", s.algorithm.c_str(), long(s.m), s.mean_srer_db);
    if (s.mean_snr_db) std::fprintf(stderr, " %12.4f", *s.mean_snr_db);
    else std::fprintf(stderr, " %12s", "-");
    if (s.mean_ip) std::fprintf(stderr, " %10.4f", *s.mean_ip);
    else std::fprintf(stderr, " %10s", "-");
    if (s.recovery_rate) std::fprintf(stderr, " %8.1f%%", 100.0 * *s.recovery_rate);
    else std::fprintf(stderr, " %9s", "-");
    std::fprintf(stderr, "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-guided matching pursuit benchmark"};
  app.require_subcommand(1);

  // run: every flag maps onto a config-file key and wins over the file.
  auto* run = app.add_subcommand("run", "Run a recovery sweep and write a CSV/JSON report");
  std::string config_path, format = "csv", out_path;
  KeyValues flags;
  struct Flag {
    const char* name;
    const char* key;
    const char* help;
  };
  const Flag flag_table[] = {
      {"--experiment", "experiment", "NoiselessKnownK | NoiselessUnknownK | NoisySparse | NoisyCompressible"},
      {"--n", "n", "Signal length N"},
      {"--k", "k", "Sparsity K"},
      {"--basis", "basis", "Fourier | RandomFrame"},
      {"--m-grid", "m_grid", "Comma-separated measurement counts"},
      {"--snr-db", "input_snr_db", "Input SNR in dB"},
      {"--trials", "trials", "Trials per measurement count"},
      {"--seed", "seed", "Master seed"},
      {"--epsilon", "epsilon", "Residual threshold, relative to ||y||"},
      {"--gamma", "gamma_override", "EMP entropy gate, overrides the default"},
      {"--algorithms", "algorithms", "Comma-separated subset of MP,OMP,CoSaMP,ROMP,EMP"},
      {"--power-law", "power_law", "Compressible decay as 'p,r'"},
      {"--threads", "threads", "Worker threads (does not change the report)"},
  };
  std::map<std::string, std::string> flag_values;
  run->add_option("--config", config_path, "Key-value config file");
  for (const auto& f : flag_table) run->add_option(f.name, flag_values[f.key], f.help);
  run->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--out", out_path, "Report path (stdout when omitted)");

  auto* diagnose = app.add_subcommand("diagnose", "Print coherence / RIP estimates of a generated pair");
  bool want_coherence = false, want_rip = false;
  emp::Index n = 200, m = 60, k = 4, trials = 100;
  std::uint64_t seed = 1;
  std::string basis_name = "Fourier";
  diagnose->add_flag("--coherence", want_coherence, "Mutual coherence sqrt(N) max |<phi_i, psi_j>|");
  diagnose->add_flag("--rip", want_rip, "Empirical RIP constant over random K-subsets");
  diagnose->add_option("--n", n, "Signal length N");
  diagnose->add_option("--m", m, "Measurement count M");
  diagnose->add_option("--k", k, "Subset size for --rip");
  diagnose->add_option("--trials", trials, "Random subsets for --rip");
  diagnose->add_option("--seed", seed, "Seed");
  diagnose->add_option("--basis", basis_name, "Fourier | RandomFrame");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*run) {
      ExperimentConfig cfg;
      if (!config_path.empty()) emp::bench::apply(cfg, read_key_values(config_path));
      for (const auto& f : flag_table) {
        if (run->count(f.name) > 0) flags[f.key] = flag_values[f.key];
      }
      emp::bench::apply(cfg, flags);
      const auto fmt = parse_format(format);
      const auto rows = run_experiment(cfg);
      if (out_path.empty()) write_report(std::cout, rows, fmt);
      else emit_report(rows, fmt, out_path);
      print_summary(cfg, rows);
      return 0;
    }

    if (!want_coherence && !want_rip) want_coherence = want_rip = true;
    const Basis basis = parse_basis(basis_name);
    const Mat psi = basis == Basis::Fourier ? fourier_basis(n) : random_frame(n, derive_seed(seed, {1}));
    const Mat phi = gaussian_measurement(m, n, derive_seed(seed, {2}));
    if (want_coherence) std::printf("coherence %.6f\n", mutual_coherence(phi, psi));
    if (want_rip) {
      std::printf("rip_delta %.6f\n", rip_estimate(phi, k, trials, derive_seed(seed, {3})));
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "emp_bench: " << e.what() << '\n';
    return e.code() == ErrorCode::Io ? kExitIo : kExitConfig;
  }
}
