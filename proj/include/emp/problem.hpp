#pragma once

// Synthetic compressed-sensing instances: representation bases, measurement
// ensembles, sparse/compressible coefficient draws, noise at an exact SNR and
// a couple of diagnostics on the (Phi, Psi) pair. Every generator is a pure
// function of its arguments; randomness comes only from the explicit seed.

#include <cstdint>
#include <optional>

#include "emp/linalg.hpp"

namespace emp {

/// psi (N x N), phi (M x N), a = column-normalized phi*psi with the removed
/// norms in a_scales, and the measurements y (empty until measured).
struct SparseProblem {
  Mat psi;
  Mat phi;
  Mat a;
  Vec a_scales;
  Vec y;

  Index m() const { return phi.rows(); }
  Index n() const { return phi.cols(); }
};

struct SignalInstance {
  Vec coeffs;
  Vec clean;
  std::optional<Vec> noisy;
  std::optional<double> input_snr_db;

  /// The vector that is actually measured: noisy when present, else clean.
  const Vec& observed() const { return noisy ? *noisy : clean; }
};

struct NoisyVector {
  Vec noisy;
  double achieved_snr_db;
};

/// Real orthonormal Fourier basis: DC, (cos, sin) per frequency, Nyquist.
Mat fourier_basis(Index n);

/// n x n frame of unit-norm Gaussian columns.
Mat random_frame(Index n, std::uint64_t seed);

/// m x n matrix with i.i.d. N(0, 1/m) entries.
Mat gaussian_measurement(Index m, Index n, std::uint64_t seed);

/// sqrt(N) * max |<phi_i, psi_j>| after normalizing rows of phi and columns of psi.
double mutual_coherence(const Mat& phi, const Mat& psi);

/// Empirical lower bound on the RIP constant of order k: the worst
/// |  ||phi x||^2 - 1  | over `trials` random unit-norm k-sparse vectors.
double rip_estimate(const Mat& phi, Index k, Index trials, std::uint64_t seed);

SignalInstance gen_sparse_signal(const Mat& psi, Index k, std::uint64_t seed);

/// Coefficients with sorted magnitudes exactly p * i^-r (i = 1..N), random
/// signs, random positions.
SignalInstance gen_compressible_signal(const Mat& psi, double p, double r, std::uint64_t seed);

/// White Gaussian noise rescaled so the realized SNR equals snr_db.
NoisyVector add_awgn(const Vec& clean, double snr_db, std::uint64_t seed);

/// Attaches noise to `signal` in place; records the achieved input SNR.
void add_noise(SignalInstance& signal, double snr_db, std::uint64_t seed);

Vec measure(const Mat& phi, const Vec& s);

/// Builds A = column_normalize(phi * psi). Leaves y empty.
SparseProblem make_problem(Mat psi, Mat phi);

/// make_problem followed by y = phi * s.
SparseProblem make_problem(Mat psi, Mat phi, const Vec& s);

}  // namespace emp
