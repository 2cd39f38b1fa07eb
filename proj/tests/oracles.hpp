#pragma once

// Test-only reference computations. Nothing here calls into the library's
// eigen-solver or state builders, so agreement is a genuine cross-check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline Eigen::MatrixXd omega(int modes) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int i = 0; i < modes; ++i) {
    w(2 * i, 2 * i + 1) = 1.0;
    w(2 * i + 1, 2 * i) = -1.0;
  }
  return w;
}

// |eigenvalues| of Omega * gamma from a general complex decomposition; each
// +-i nu pair reported once, descending.
inline std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& gamma) {
  const int modes = static_cast<int>(gamma.rows() / 2);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(
      (omega(modes) * gamma).cast<std::complex<double>>());
  std::vector<double> mags;
  for (const auto& z : solver.eigenvalues()) mags.push_back(std::abs(z));
  std::sort(mags.begin(), mags.end(), std::greater<>());
  std::vector<double> out;
  for (int i = 0; i < modes; ++i) out.push_back(mags[static_cast<std::size_t>(2 * i)]);
  return out;
}

inline double g_bits(double x) {
  return x <= 0.0 ? 0.0 : (x + 1.0) * std::log2(x + 1.0) - x * std::log2(x);
}

// Entropy of a single-mode state: nu = sqrt(det).
inline double single_mode_entropy(const Eigen::Matrix2d& gamma) {
  return g_bits((std::sqrt(gamma.determinant()) - 1.0) / 2.0);
}

// Explicit beamsplitter symplectic matrix with the library's sign convention.
inline Eigen::MatrixXd beamsplitter(int modes, int a, int b, double t) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
  const double ct = std::sqrt(t);
  const double st = std::sqrt(1.0 - t);
  for (int q = 0; q < 2; ++q) {
    s(2 * a + q, 2 * a + q) = ct;
    s(2 * a + q, 2 * b + q) = st;
    s(2 * b + q, 2 * a + q) = st;
    s(2 * b + q, 2 * b + q) = -ct;
  }
  return s;
}

inline Eigen::MatrixXd squeezer(int modes, int a, double r) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
  s(2 * a, 2 * a) = std::exp(-r);
  s(2 * a + 1, 2 * a + 1) = std::exp(r);
  return s;
}

inline Eigen::MatrixXd rotation(int modes, int a, double phi) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
  s(2 * a, 2 * a) = std::cos(phi);
  s(2 * a, 2 * a + 1) = std::sin(phi);
  s(2 * a + 1, 2 * a) = -std::sin(phi);
  s(2 * a + 1, 2 * a + 1) = std::cos(phi);
  return s;
}

// Random physical state: thermal modes with eigenvalues `nus` dressed by a
// random symplectic built from squeezers, rotations and beamsplitters.
inline Eigen::MatrixXd random_state(std::mt19937_64& rng, const std::vector<double>& nus) {
  const int modes = static_cast<int>(nus.size());
  std::uniform_real_distribution<double> squeeze(-0.8, 0.8);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> trans(0.05, 0.95);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
  for (int layer = 0; layer < 3; ++layer) {
    for (int a = 0; a < modes; ++a) {
      s = squeezer(modes, a, squeeze(rng)) * rotation(modes, a, angle(rng)) * s;
    }
    for (int a = 0; a + 1 < modes; ++a) s = beamsplitter(modes, a, a + 1, trans(rng)) * s;
  }
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int i = 0; i < modes; ++i) {
    d(2 * i, 2 * i) = nus[static_cast<std::size_t>(i)];
    d(2 * i + 1, 2 * i + 1) = nus[static_cast<std::size_t>(i)];
  }
  Eigen::MatrixXd g = s * d * s.transpose();
  return 0.5 * (g + g.transpose());
}

// Schur complement after an x- or p-homodyne on matrix index `k`.
inline Eigen::MatrixXd homodyne(const Eigen::MatrixXd& g, int k) {
  std::vector<int> keep;
  for (int i = 0; i < g.rows(); ++i) {
    if (i / 2 != k / 2) keep.push_back(i);
  }
  Eigen::MatrixXd out(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          g(keep[i], keep[j]) - g(keep[i], k) * g(k, keep[j]) / g(k, k);
    }
  }
  return out;
}

}  // namespace oracle
