#pragma once

// Optimization over the displacement variance, noise-tolerance and
// squeezing-requirement searches, security regions and distance curves.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cvqkd/info_rates.hpp"

namespace cvqkd {

enum class SigmaMode { symmetric, independent };

struct OptimizerSettings {
  double sigma_min = 1e-4;
  double sigma_max = 100.0;
  int coarse_points = 60;       // log-spaced scan before refinement
  double relative_tol = 1e-6;   // golden-section stop, relative in sigma
  int max_sweeps = 20;          // independent mode only
  double sweep_tol = 1e-8;      // independent mode only, on the rate
};

struct DisplacementOptimum {
  double sigma_x = 0.0;
  double sigma_p = 0.0;
  double rate = 0.0;
  bool secure = false;  // rate > 0 strictly
  int evaluations = 0;
};

// Maximizes the key rate over sigma in [sigma_min, sigma_max]. Symmetric mode
// applies one sigma to both quadratures; independent mode refines (sigma_x,
// sigma_p) by coordinate descent starting from the symmetric optimum.
DisplacementOptimum optimize_displacement(double v, const Channel& ch, double beta,
                                          Direction direction,
                                          SigmaMode mode = SigmaMode::symmetric,
                                          const OptimizerSettings& settings = {});

struct NoiseToleranceResult {
  double v = 0.0;
  double beta = 0.0;
  double eta = 0.0;
  Direction direction = Direction::reverse;
  double epsilon_max = 0.0;
  double sigma_opt = 0.0;  // optimal symmetric sigma at the last secure epsilon
  int iterations = 0;
  bool converged = false;
  bool secure = false;
};

inline constexpr double kEpsilonSearchMax = 2.0;

// Largest excess noise with a positive optimized key rate, by bisection on
// [0, 2] with the displacement re-optimized at every step.
NoiseToleranceResult max_tolerable_noise(double v, double eta, double beta, Direction direction,
                                         double tolerance = 1e-5);

struct SqueezingLimit {
  double v_max = 0.0;
  bool secure = false;
  int iterations = 0;
};

// Largest signal variance V in (1e-3, 1] giving a positive optimized DR key
// rate over a pure-loss channel. Requires eta in (0.5, 1].
SqueezingLimit max_squeezed_variance_dr(double eta, double beta, double tolerance = 1e-4);

// 1/eta - 1, the individual-attack efficiency threshold for coherent states
// under direct reconciliation. Requires eta in (0.5, 1).
double dr_coherent_beta_threshold(double eta);

struct SigmaInterval {
  double lo = 1.0;
  double hi = 1.0;  // +infinity at beta = 1
};

// (1 / (1 + sqrt(beta)), 1 / (1 - sqrt(beta))): the window of displacement
// variances with a positive RR rate for V -> 0 on a strongly attenuating channel.
SigmaInterval sigma_limits_high_squeezing(double beta);

enum class Spacing { linear, log };

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 2;
  Spacing spacing = Spacing::linear;

  void validate() const;
  std::vector<double> values() const;
};

// Grid over (V, sigma) at fixed channel, beta and direction.
struct SweepGrid {
  Axis v_axis{"v", 0.1, 1.0, 10, Spacing::linear};
  Axis sigma_axis{"sigma", 1e-2, 10.0, 10, Spacing::log};
  Channel ch;
  double beta = 1.0;
  Direction direction = Direction::reverse;
};

struct BoundaryPoint {
  double v = 0.0;
  double sigma = 0.0;
  bool entering = false;  // rate turns positive as sigma increases
};

struct SecurityRegion {
  std::vector<double> v_values;
  std::vector<double> sigma_values;
  std::vector<double> rate;         // row-major [v index][sigma index]
  std::vector<unsigned char> secure;  // same layout
  std::vector<BoundaryPoint> boundary;

  std::size_t index(std::size_t iv, std::size_t is) const { return iv * sigma_values.size() + is; }
  bool is_secure(std::size_t iv, std::size_t is) const { return secure[index(iv, is)] != 0; }
};

inline constexpr double kBoundaryTolerance = 1e-4;

SecurityRegion security_region(const SweepGrid& grid, unsigned threads = 1);

inline constexpr double kFiberAttenuationDbPerKm = 0.2;

// eta = 10^(-0.2 d / 10).
double distance_to_transmittance(double distance_km);

struct CurvePoint {
  double distance_km = 0.0;
  double eta = 1.0;
  double sigma_opt = 0.0;
  double rate = 0.0;
};

std::vector<CurvePoint> rate_vs_distance_curve(double v, double epsilon, double beta,
                                               Direction direction,
                                               std::span<const double> distances_km,
                                               unsigned threads = 1);

// Largest distance on the curve with a positive rate, or a negative value if
// no point is secure.
double max_secure_distance(std::span<const CurvePoint> curve);

}  // namespace cvqkd
