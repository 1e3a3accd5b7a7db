#include "emp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "emp/random.hpp"

namespace emp {
namespace {

void require(bool ok, ErrorCode code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

// First k entries of a uniformly random permutation of 0..n-1.
std::vector<Index> sample_without_replacement(Rng& rng, Index n, Index k) {
  std::vector<Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), Index{0});
  for (Index i = 0; i < k; ++i) {
    std::uniform_int_distribution<Index> pick(i, n - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  idx.resize(static_cast<std::size_t>(k));
  return idx;
}

Vec gaussian_vector(Rng& rng, Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec v(n);
  for (Index i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

SignalInstance synthesize(const Mat& psi, Vec coeffs) {
  SignalInstance s;
  s.clean = psi * coeffs;
  s.coeffs = std::move(coeffs);
  return s;
}

}  // namespace

Mat fourier_basis(Index n) {
  require(n >= 2 && n % 2 == 0, ErrorCode::BadDimension,
          "fourier_basis needs an even n >= 2, got " + std::to_string(n));
  Mat psi(n, n);
  const double dc = 1.0 / std::sqrt(double(n));
  const double ac = std::sqrt(2.0 / double(n));
  for (Index t = 0; t < n; ++t) {
    psi(t, 0) = dc;
    for (Index k = 1; k < n / 2; ++k) {
      const double phase = 2.0 * std::numbers::pi * double(k) * double(t) / double(n);
      psi(t, 2 * k - 1) = ac * std::cos(phase);
      psi(t, 2 * k) = ac * std::sin(phase);
    }
    psi(t, n - 1) = (t % 2 == 0 ? dc : -dc);
  }
  return psi;
}

Mat random_frame(Index n, std::uint64_t seed) {
  require(n >= 2, ErrorCode::BadDimension, "random_frame needs n >= 2");
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat psi(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) psi(i, j) = normal(rng);
  return column_normalize(psi).matrix;
}

Mat gaussian_measurement(Index m, Index n, std::uint64_t seed) {
  require(m >= 1 && m <= n, ErrorCode::BadDimension,
          "gaussian_measurement needs 1 <= m <= n, got m=" + std::to_string(m) +
              " n=" + std::to_string(n));
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(double(m)));
  Mat phi(m, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < m; ++i) phi(i, j) = normal(rng);
  return phi;
}

double mutual_coherence(const Mat& phi, const Mat& psi) {
  if (phi.cols() != psi.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "mutual_coherence: phi has " +
                                                  std::to_string(phi.cols()) +
                                                  " columns, psi has " +
                                                  std::to_string(psi.rows()) + " rows");
  }
  const Mat rows = column_normalize(phi.transpose()).matrix;
  const Mat cols = column_normalize(psi).matrix;
  const double n = double(psi.rows());
  return std::sqrt(n) * (rows.transpose() * cols).cwiseAbs().maxCoeff();
}

double rip_estimate(const Mat& phi, Index k, Index trials, std::uint64_t seed) {
  require(k >= 1 && k <= phi.cols(), ErrorCode::BadDimension,
          "rip_estimate needs 1 <= k <= cols(phi)");
  require(trials >= 1, ErrorCode::BadDimension, "rip_estimate needs trials >= 1");
  Rng rng(seed);
  double delta = 0.0;
  for (Index t = 0; t < trials; ++t) {
    const auto support = sample_without_replacement(rng, phi.cols(), k);
    Vec values = gaussian_vector(rng, k);
    values.normalize();
    Vec y = Vec::Zero(phi.rows());
    for (Index i = 0; i < k; ++i) y += values[i] * phi.col(support[i]);
    delta = std::max(delta, std::abs(y.squaredNorm() - 1.0));
  }
  return delta;
}

SignalInstance gen_sparse_signal(const Mat& psi, Index k, std::uint64_t seed) {
  const Index n = psi.cols();
  require(k >= 1 && k <= n, ErrorCode::BadDimension,
          "gen_sparse_signal needs 1 <= k <= n, got k=" + std::to_string(k));
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec coeffs = Vec::Zero(n);
  for (Index j : sample_without_replacement(rng, n, k)) {
    double v = normal(rng);
    while (std::abs(v) < 0.1) v = normal(rng);
    coeffs[j] = v;
  }
  return synthesize(psi, std::move(coeffs));
}

SignalInstance gen_compressible_signal(const Mat& psi, double p, double r, std::uint64_t seed) {
  require(p > 0.0 && std::isfinite(p), ErrorCode::BadParameter, "power-law scale p must be > 0");
  require(r > 1.0 && std::isfinite(r), ErrorCode::BadParameter,
          "power-law exponent r must be > 1, got " + std::to_string(r));
  const Index n = psi.cols();
  Rng rng(seed);
  const auto positions = sample_without_replacement(rng, n, n);
  std::bernoulli_distribution sign(0.5);
  Vec coeffs(n);
  for (Index i = 0; i < n; ++i) {
    const double magnitude = p * std::pow(double(i + 1), -r);
    coeffs[positions[i]] = sign(rng) ? magnitude : -magnitude;
  }
  return synthesize(psi, std::move(coeffs));
}

NoisyVector add_awgn(const Vec& clean, double snr_db, std::uint64_t seed) {
  require(std::isfinite(snr_db), ErrorCode::BadParameter, "snr_db must be finite");
  const double signal_energy = clean.squaredNorm();
  require(signal_energy > 0.0, ErrorCode::ZeroVector, "cannot set an SNR against a zero signal");
  Rng rng(seed);
  Vec noise = gaussian_vector(rng, clean.size());
  const double target = signal_energy / std::pow(10.0, snr_db / 10.0);
  noise *= std::sqrt(target / noise.squaredNorm());
  NoisyVector out{clean + noise, 0.0};
  out.achieved_snr_db = 10.0 * std::log10(signal_energy / (out.noisy - clean).squaredNorm());
  return out;
}

void add_noise(SignalInstance& signal, double snr_db, std::uint64_t seed) {
  auto noisy = add_awgn(signal.clean, snr_db, seed);
  signal.noisy = std::move(noisy.noisy);
  signal.input_snr_db = noisy.achieved_snr_db;
}

Vec measure(const Mat& phi, const Vec& s) {
  if (phi.cols() != s.size()) {
    throw Error(ErrorCode::DimensionMismatch, "measure: phi has " + std::to_string(phi.cols()) +
                                                  " columns, signal has " +
                                                  std::to_string(s.size()) + " entries");
  }
  return phi * s;
}

SparseProblem make_problem(Mat psi, Mat phi) {
  if (phi.cols() != psi.rows() || psi.rows() != psi.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "make_problem: need phi M x N and psi N x N");
  }
  require(phi.rows() <= phi.cols(), ErrorCode::BadDimension, "make_problem: need M <= N");
  auto normalized = column_normalize(phi * psi);
  SparseProblem p;
  p.psi = std::move(psi);
  p.phi = std::move(phi);
  p.a = std::move(normalized.matrix);
  p.a_scales = std::move(normalized.scales);
  return p;
}

SparseProblem make_problem(Mat psi, Mat phi, const Vec& s) {
  SparseProblem p = make_problem(std::move(psi), std::move(phi));
  p.y = measure(p.phi, s);
  return p;
}

}  // namespace emp
