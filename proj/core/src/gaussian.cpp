#include "cvqkd/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "cvqkd/error.hpp"

namespace cvqkd {

namespace {

Eigen::Index index_of(std::size_t mode, Quadrature q) {
  return static_cast<Eigen::Index>(2 * mode + (q == Quadrature::x ? 0 : 1));
}

void check_mode(const CovMatrix& gamma, std::size_t mode, const char* what) {
  if (mode >= gamma.modes()) {
    throw DomainError(std::string(what) + ": mode index " + std::to_string(mode) +
                      " out of range for " + std::to_string(gamma.modes()) + "-mode state");
  }
}

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }

// Spectrum via the real antisymmetric matrix K = R Omega R with R = gamma^{1/2}.
// K^T K is symmetric with eigenvalues nu_k^2, each appearing twice. Carried out
// in extended precision: forming K cancels terms of order |gamma|.
std::vector<double> spectrum_via_square_root(const Eigen::MatrixXd& gamma, std::size_t modes,
                                             bool& ok) {
  using MatrixL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const MatrixL g = gamma.cast<long double>();
  Eigen::SelfAdjointEigenSolver<MatrixL> gamma_eig(g);
  ok = gamma_eig.info() == Eigen::Success && gamma_eig.eigenvalues().minCoeff() > 0.0L;
  if (!ok) return {};
  const MatrixL root = gamma_eig.operatorSqrt();
  const MatrixL k = root * symplectic_form(modes).cast<long double>() * root;
  const MatrixL ktk = k.transpose() * k;
  Eigen::SelfAdjointEigenSolver<MatrixL> k_eig(0.5L * (ktk + ktk.transpose()),
                                               Eigen::EigenvaluesOnly);
  std::vector<long double> squares(k_eig.eigenvalues().data(),
                                   k_eig.eigenvalues().data() + k_eig.eigenvalues().size());
  std::sort(squares.begin(), squares.end(), std::greater<>());
  std::vector<double> values;
  values.reserve(modes);
  for (std::size_t i = 0; i < modes; ++i) {
    // average the degenerate pair
    values.push_back(static_cast<double>(
        std::sqrt(std::max(0.0L, 0.5L * (squares[2 * i] + squares[2 * i + 1])))));
  }
  return values;
}

std::vector<double> spectrum_via_general_solver(const Eigen::MatrixXd& gamma, std::size_t modes) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(symplectic_form(modes) * gamma, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symplectic_eigenvalues: eigen-decomposition did not converge");
  }
  std::vector<double> magnitudes;
  for (const auto& z : solver.eigenvalues()) magnitudes.push_back(std::abs(z));
  std::sort(magnitudes.begin(), magnitudes.end(), std::greater<>());
  std::vector<double> values;
  for (std::size_t i = 0; i < modes; ++i) values.push_back(magnitudes[2 * i]);
  return values;
}

// Local squeezing S = diag(s, 1/s) on each mode equalizes its x and p
// variances. It is symplectic, so the spectrum is unchanged, and it keeps the
// norm small for strongly squeezed modes.
Eigen::MatrixXd balanced(const Eigen::MatrixXd& gamma) {
  Eigen::VectorXd scale(gamma.rows());
  for (Eigen::Index k = 0; k + 1 < gamma.rows(); k += 2) {
    const double s = std::pow(gamma(k + 1, k + 1) / gamma(k, k), 0.25);
    scale(k) = std::isfinite(s) && s > 0.0 ? s : 1.0;
    scale(k + 1) = 1.0 / scale(k);
  }
  return scale.asDiagonal() * gamma * scale.asDiagonal();
}

}  // namespace

CovMatrix::CovMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols() || entries_.rows() % 2 != 0) {
    throw ShapeError("CovMatrix: expected a non-empty square matrix of even dimension, got " +
                     std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols()));
  }
  if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance) {
    throw ShapeError("CovMatrix: matrix is not symmetric");
  }
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    if (!(entries_(i, i) > 0.0)) {
      throw DomainError("CovMatrix: diagonal entry " + std::to_string(i) + " is not positive");
    }
  }
}

CovMatrix CovMatrix::identity(std::size_t modes) {
  const auto dim = static_cast<Eigen::Index>(2 * modes);
  return CovMatrix(Eigen::MatrixXd::Identity(dim, dim));
}

CovMatrix CovMatrix::product(std::initializer_list<std::pair<double, double>> modes) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(2 * modes.size()),
                                            static_cast<Eigen::Index>(2 * modes.size()));
  Eigen::Index i = 0;
  for (const auto& [vx, vp] : modes) {
    m(i, i) = vx;
    m(i + 1, i + 1) = vp;
    i += 2;
  }
  return CovMatrix(std::move(m));
}

double CovMatrix::variance(std::size_t mode, Quadrature q) const {
  check_mode(*this, mode, "CovMatrix::variance");
  const auto i = index_of(mode, q);
  return entries_(i, i);
}

CovMatrix CovMatrix::reduced(std::span<const std::size_t> keep) const {
  std::vector<Eigen::Index> rows;
  for (std::size_t mode : keep) {
    check_mode(*this, mode, "CovMatrix::reduced");
    rows.push_back(index_of(mode, Quadrature::x));
    rows.push_back(index_of(mode, Quadrature::p));
  }
  return CovMatrix(entries_(rows, rows));
}

CovMatrix CovMatrix::reduced(std::initializer_list<std::size_t> keep) const {
  return reduced(std::span<const std::size_t>(keep.begin(), keep.size()));
}

Eigen::MatrixXd symplectic_form(std::size_t modes) {
  const auto dim = static_cast<Eigen::Index>(2 * modes);
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; i += 2) {
    omega(i, i + 1) = 1.0;
    omega(i + 1, i) = -1.0;
  }
  return omega;
}

double g_function(double x) {
  if (std::isnan(x) || x < 0.0) {
    throw DomainError("g_function: argument must be nonnegative, got " + std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  return (x + 1.0) * std::log2(x + 1.0) - x * std::log2(x);
}

SymplecticSpectrum symplectic_eigenvalues(const CovMatrix& gamma) {
  const Eigen::MatrixXd m = balanced(gamma.matrix());
  bool ok = false;
  auto values = spectrum_via_square_root(m, gamma.modes(), ok);
  if (!ok) values = spectrum_via_general_solver(m, gamma.modes());
  return SymplecticSpectrum{std::move(values)};
}

bool is_physical(const CovMatrix& gamma) {
  const auto spectrum = symplectic_eigenvalues(gamma);
  return spectrum.values.back() >= 1.0 - kPhysicalityTolerance;
}

double von_neumann_entropy(const CovMatrix& gamma) {
  double entropy = 0.0;
  for (double nu : symplectic_eigenvalues(gamma).values) {
    if (nu < 1.0 - kPhysicalityTolerance) {
      throw PhysicalityError("von_neumann_entropy: symplectic eigenvalue " + std::to_string(nu) +
                             " below 1");
    }
    entropy += g_function((std::max(nu, 1.0) - 1.0) / 2.0);
  }
  return entropy;
}

CovMatrix condition_on_homodyne(const CovMatrix& gamma, std::size_t measured_mode,
                                Quadrature quadrature) {
  if (gamma.modes() < 2) {
    throw ShapeError("condition_on_homodyne: need at least two modes");
  }
  check_mode(gamma, measured_mode, "condition_on_homodyne");

  const Eigen::Index measured = index_of(measured_mode, quadrature);
  const double variance = gamma(measured, measured);
  if (!(variance > 0.0)) {
    throw DegenerateMeasurementError("condition_on_homodyne: measured quadrature variance is " +
                                     std::to_string(variance));
  }

  std::vector<Eigen::Index> kept;
  for (std::size_t mode = 0; mode < gamma.modes(); ++mode) {
    if (mode == measured_mode) continue;
    kept.push_back(index_of(mode, Quadrature::x));
    kept.push_back(index_of(mode, Quadrature::p));
  }
  const Eigen::VectorXd coupling = gamma.matrix()(kept, measured);
  Eigen::MatrixXd result = gamma.matrix()(kept, kept);
  result.noalias() -= coupling * coupling.transpose() / variance;
  return CovMatrix(symmetrized(result));
}

CovMatrix apply_beamsplitter(const CovMatrix& gamma, std::size_t mode_a, std::size_t mode_b,
                             double transmittance) {
  if (!(transmittance >= 0.0 && transmittance <= 1.0)) {
    throw DomainError("apply_beamsplitter: transmittance must lie in [0, 1], got " +
                      std::to_string(transmittance));
  }
  check_mode(gamma, mode_a, "apply_beamsplitter");
  check_mode(gamma, mode_b, "apply_beamsplitter");
  if (mode_a == mode_b) {
    throw DomainError("apply_beamsplitter: modes must be distinct");
  }

  const double t = std::sqrt(transmittance);
  const double r = std::sqrt(1.0 - transmittance);
  const auto dim = gamma.matrix().rows();
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(dim, dim);
  for (Quadrature q : {Quadrature::x, Quadrature::p}) {
    const auto a = index_of(mode_a, q);
    const auto b = index_of(mode_b, q);
    s(a, a) = t;
    s(a, b) = r;
    s(b, a) = r;
    s(b, b) = -t;
  }
  return CovMatrix(symmetrized(s * gamma.matrix() * s.transpose()));
}

}  // namespace cvqkd
