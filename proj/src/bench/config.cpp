#include "emp/bench/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "emp/emp.hpp"

namespace emp::bench {
namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::Config, msg); }

std::string squash(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '-' || c == '_' || std::isspace(static_cast<unsigned char>(c))) continue;
    out.push_back(char(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view s) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto comma = s.find(',');
    const auto part = trim(s.substr(0, comma));
    if (!part.empty()) parts.push_back(part);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view s, const char* what) {
  s = trim(s);
  T value{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) {
    config_error(std::string("cannot parse ") + what + " from '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(Experiment e) noexcept {
  switch (e) {
    case Experiment::NoiselessKnownK: return "NoiselessKnownK";
    case Experiment::NoiselessUnknownK: return "NoiselessUnknownK";
    case Experiment::NoisySparse: return "NoisySparse";
    case Experiment::NoisyCompressible: return "NoisyCompressible";
  }
  return "Unknown";
}

std::string_view to_string(Basis b) noexcept {
  return b == Basis::Fourier ? "Fourier" : "RandomFrame";
}

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::MP: return "MP";
    case Algorithm::OMP: return "OMP";
    case Algorithm::CoSaMP: return "CoSaMP";
    case Algorithm::ROMP: return "ROMP";
    case Algorithm::EMP: return "EMP";
  }
  return "Unknown";
}

Experiment parse_experiment(std::string_view s) {
  for (auto e : {Experiment::NoiselessKnownK, Experiment::NoiselessUnknownK,
                 Experiment::NoisySparse, Experiment::NoisyCompressible}) {
    if (squash(s) == squash(to_string(e))) return e;
  }
  config_error("unknown experiment '" + std::string(s) + "'");
}

Basis parse_basis(std::string_view s) {
  const auto key = squash(s);
  if (key == "fourier") return Basis::Fourier;
  if (key == "randomframe" || key == "random" || key == "frame") return Basis::RandomFrame;
  config_error("unknown basis '" + std::string(s) + "'");
}

Algorithm parse_algorithm(std::string_view s) {
  for (auto a : {Algorithm::MP, Algorithm::OMP, Algorithm::CoSaMP, Algorithm::ROMP, Algorithm::EMP}) {
    if (squash(s) == squash(to_string(a))) return a;
  }
  config_error("unknown algorithm '" + std::string(s) + "'");
}

bool is_noisy(Experiment e) noexcept {
  return e == Experiment::NoisySparse || e == Experiment::NoisyCompressible;
}

bool is_sparse(Experiment e) noexcept { return e != Experiment::NoisyCompressible; }

std::vector<Index> parse_index_list(std::string_view csv) {
  std::vector<Index> out;
  for (auto part : split_csv(csv)) out.push_back(parse_number<Index>(part, "integer"));
  return out;
}

std::vector<Algorithm> parse_algorithm_list(std::string_view csv) {
  std::vector<Algorithm> out;
  for (auto part : split_csv(csv)) out.push_back(parse_algorithm(part));
  return out;
}

PowerLaw parse_power_law(std::string_view csv) {
  const auto parts = split_csv(csv);
  if (parts.size() != 2) config_error("power_law expects 'p,r'");
  return {parse_number<double>(parts[0], "power-law p"), parse_number<double>(parts[1], "power-law r")};
}

void ExperimentConfig::validate() const {
  if (n < 2) config_error("n must be >= 2");
  if (basis == Basis::Fourier && n % 2 != 0) config_error("Fourier basis needs an even n");
  if (m_grid.empty()) config_error("m_grid is empty");
  for (Index m : m_grid) {
    if (m < 1 || m > n) config_error("m_grid entry " + std::to_string(m) + " is outside [1, n]");
  }
  if (trials < 1) config_error("trials must be >= 1");
  if (!(epsilon > 0.0)) config_error("epsilon must be > 0");
  if (algorithms.empty()) config_error("no algorithms selected");
  if (threads < 1) config_error("threads must be >= 1");
  if (is_sparse(experiment)) {
    if (!k) config_error(std::string(to_string(experiment)) + " needs the signal sparsity k");
    if (*k < 1 || *k > n) config_error("k must lie in [1, n]");
  }
  if (is_noisy(experiment) && !input_snr_db) {
    config_error(std::string(to_string(experiment)) + " needs input_snr_db");
  }
  if (experiment == Experiment::NoisyCompressible) {
    if (!power_law) config_error("NoisyCompressible needs power_law");
    if (!(power_law->p > 0.0) || !(power_law->r > 1.0)) config_error("power_law needs p > 0, r > 1");
  }
  if (gamma_override && !(*gamma_override > 0.0)) config_error("gamma must be > 0");
  const bool runs_emp = std::find(algorithms.begin(), algorithms.end(), Algorithm::EMP) != algorithms.end();
  if (runs_emp && is_noisy(experiment) && !gamma_override) {
    for (Index m : m_grid) {
      try {
        gamma_default(m, n, *input_snr_db);
      } catch (const Error&) {
        config_error("(M + N + 5 SNR) / M <= 0 at m=" + std::to_string(m) + "; pass gamma explicitly");
      }
    }
  }
}

KeyValues parse_key_values(std::istream& in, const std::string& origin) {
  KeyValues out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    view = trim(view.substr(0, view.find('#')));
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      config_error(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    out[std::string(trim(view.substr(0, eq)))] = std::string(trim(view.substr(eq + 1)));
  }
  return out;
}

KeyValues read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open config file '" + path + "'");
  return parse_key_values(in, path);
}

void apply(ExperimentConfig& cfg, const KeyValues& values) {
  for (const auto& [key, value] : values) {
    if (key == "experiment") cfg.experiment = parse_experiment(value);
    else if (key == "n") cfg.n = parse_number<Index>(value, "n");
    else if (key == "k") cfg.k = parse_number<Index>(value, "k");
    else if (key == "basis") cfg.basis = parse_basis(value);
    else if (key == "m_grid") cfg.m_grid = parse_index_list(value);
    else if (key == "input_snr_db") cfg.input_snr_db = parse_number<double>(value, "input_snr_db");
    else if (key == "trials") cfg.trials = parse_number<Index>(value, "trials");
    else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(value, "seed");
    else if (key == "epsilon") cfg.epsilon = parse_number<double>(value, "epsilon");
    else if (key == "gamma_override") cfg.gamma_override = parse_number<double>(value, "gamma_override");
    else if (key == "algorithms") cfg.algorithms = parse_algorithm_list(value);
    else if (key == "power_law") cfg.power_law = parse_power_law(value);
    else if (key == "threads") cfg.threads = parse_number<unsigned>(value, "threads");
    else config_error("unknown config key '" + key + "'");
  }
}

}  // namespace emp::bench
