#pragma once

// Gaussian-state linear algebra in shot-noise units.
//
// Covariance matrices use the quadrature ordering (x1, p1, x2, p2, ...) and the
// symplectic form Omega = diag([[0, 1], [-1, 0]], ...). A vacuum mode has
// covariance matrix I, so every physical state has symplectic eigenvalues >= 1.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cvqkd {

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kPhysicalityTolerance = 1e-9;

enum class Quadrature { x, p };

// Even-dimensional real symmetric covariance matrix with a positive diagonal.
class CovMatrix {
 public:
  // Throws ShapeError for odd, empty or non-symmetric input and DomainError
  // for a nonpositive diagonal entry.
  explicit CovMatrix(Eigen::MatrixXd entries);

  static CovMatrix identity(std::size_t modes);

  // Product state of uncorrelated modes, each given as (V_x, V_p).
  static CovMatrix product(std::initializer_list<std::pair<double, double>> modes);

  std::size_t modes() const { return static_cast<std::size_t>(entries_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const { return entries_; }
  double operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

  double variance(std::size_t mode, Quadrature q) const;

  // Reduced state of the listed modes, in the order given.
  CovMatrix reduced(std::span<const std::size_t> keep) const;
  CovMatrix reduced(std::initializer_list<std::size_t> keep) const;

 private:
  Eigen::MatrixXd entries_;
};

// Symplectic eigenvalues, one per mode, sorted in descending order.
struct SymplecticSpectrum {
  std::vector<double> values;
};

Eigen::MatrixXd symplectic_form(std::size_t modes);

// (x + 1) log2(x + 1) - x log2(x), the entropy in bits of a thermal mode with
// mean photon number x. Throws DomainError for negative x.
double g_function(double x);

SymplecticSpectrum symplectic_eigenvalues(const CovMatrix& gamma);

// True when every symplectic eigenvalue is >= 1 - kPhysicalityTolerance.
bool is_physical(const CovMatrix& gamma);

// Von Neumann entropy in bits. Eigenvalues inside the tolerance band below 1
// are clamped to 1; anything lower throws PhysicalityError.
double von_neumann_entropy(const CovMatrix& gamma);

// State of the remaining modes after an ideal homodyne measurement of one
// quadrature of `measured_mode`:
//   gamma_kept - sigma (X gamma_meas X)^MP sigma^T.
// X gamma_meas X has rank one, so its pseudoinverse is 1 / V_measured on the
// measured entry. Mode order of the kept modes is preserved.
CovMatrix condition_on_homodyne(const CovMatrix& gamma, std::size_t measured_mode,
                                Quadrature quadrature);

// Passive beamsplitter on modes (a, b):
//   a' = sqrt(T) a + sqrt(1 - T) b,   b' = sqrt(1 - T) a - sqrt(T) b,
// applied to both quadratures as gamma -> S gamma S^T.
CovMatrix apply_beamsplitter(const CovMatrix& gamma, std::size_t mode_a, std::size_t mode_b,
                             double transmittance);

}  // namespace cvqkd
