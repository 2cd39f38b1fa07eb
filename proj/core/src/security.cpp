#include "cvqkd/security.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cvqkd/error.hpp"
#include "cvqkd/parallel.hpp"

namespace cvqkd {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

struct LineMax {
  double arg = 0.0;
  double value = -std::numeric_limits<double>::infinity();
  int evaluations = 0;
};

// Maximizes f over sigma in [lo, hi]: log-spaced scan, then golden section in
// log(sigma) on the bracket around the best scan node.
template <class F>
LineMax maximize_on_log_axis(F&& f, const OptimizerSettings& s) {
  const double log_lo = std::log(s.sigma_min);
  const double log_hi = std::log(s.sigma_max);
  const int n = std::max(s.coarse_points, 3);
  // exp(log(x)) can land one ulp outside the interval
  auto sigma = [&](double log_sigma) {
    return std::clamp(std::exp(log_sigma), s.sigma_min, s.sigma_max);
  };

  LineMax best;
  std::vector<double> nodes(static_cast<std::size_t>(n));
  int best_index = 0;
  for (int i = 0; i < n; ++i) {
    nodes[static_cast<std::size_t>(i)] = log_lo + (log_hi - log_lo) * i / (n - 1);
    const double value = f(sigma(nodes[static_cast<std::size_t>(i)]));
    ++best.evaluations;
    if (value > best.value) {
      best.value = value;
      best_index = i;
    }
  }
  best.arg = sigma(nodes[static_cast<std::size_t>(best_index)]);

  double a = nodes[static_cast<std::size_t>(std::max(best_index - 1, 0))];
  double b = nodes[static_cast<std::size_t>(std::min(best_index + 1, n - 1))];
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(sigma(c));
  double fd = f(sigma(d));
  best.evaluations += 2;
  while (b - a > s.relative_tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(sigma(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(sigma(d));
    }
    ++best.evaluations;
  }
  const double arg = fc > fd ? c : d;
  const double value = std::max(fc, fd);
  if (value > best.value) {
    best.value = value;
    best.arg = sigma(arg);
  }
  return best;
}

double rate_at(double v, double sigma_x, double sigma_p, const Channel& ch, double beta,
               Direction direction) {
  ProtocolConfig cfg;
  cfg.prep = Preparation{.v = v, .sigma_x = sigma_x, .sigma_p = sigma_p};
  cfg.ch = ch;
  cfg.beta = beta;
  cfg.direction = direction;
  return secret_key_rate(cfg);
}

void check_settings(const OptimizerSettings& s) {
  if (!(s.sigma_min > 0.0 && s.sigma_min < s.sigma_max)) {
    throw DomainError("optimizer: need 0 < sigma_min < sigma_max");
  }
}

}  // namespace

DisplacementOptimum optimize_displacement(double v, const Channel& ch, double beta,
                                          Direction direction, SigmaMode mode,
                                          const OptimizerSettings& settings) {
  check_settings(settings);
  validate(ProtocolConfig{.prep = {v, 1.0, 1.0}, .ch = ch, .beta = beta});

  const auto symmetric = maximize_on_log_axis(
      [&](double sigma) { return rate_at(v, sigma, sigma, ch, beta, direction); }, settings);

  DisplacementOptimum out{.sigma_x = symmetric.arg,
                          .sigma_p = symmetric.arg,
                          .rate = symmetric.value,
                          .evaluations = symmetric.evaluations};

  if (mode == SigmaMode::independent) {
    for (int sweep = 0; sweep < settings.max_sweeps; ++sweep) {
      const double previous = out.rate;
      const auto along_x = maximize_on_log_axis(
          [&](double sx) { return rate_at(v, sx, out.sigma_p, ch, beta, direction); }, settings);
      if (along_x.value > out.rate) {
        out.sigma_x = along_x.arg;
        out.rate = along_x.value;
      }
      const auto along_p = maximize_on_log_axis(
          [&](double sp) { return rate_at(v, out.sigma_x, sp, ch, beta, direction); }, settings);
      if (along_p.value > out.rate) {
        out.sigma_p = along_p.arg;
        out.rate = along_p.value;
      }
      out.evaluations += along_x.evaluations + along_p.evaluations;
      if (out.rate - previous < settings.sweep_tol) break;
    }
  }
  out.secure = out.rate > 0.0;
  return out;
}

NoiseToleranceResult max_tolerable_noise(double v, double eta, double beta, Direction direction,
                                         double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("max_tolerable_noise: tolerance must be positive");

  NoiseToleranceResult result{.v = v, .beta = beta, .eta = eta, .direction = direction};
  const auto at = [&](double eps) {
    return optimize_displacement(v, Channel{.eta = eta, .epsilon = eps}, beta, direction);
  };

  const auto clean = at(0.0);
  result.sigma_opt = clean.sigma_x;
  if (!clean.secure) {
    result.converged = true;
    return result;
  }
  result.secure = true;

  const auto noisiest = at(kEpsilonSearchMax);
  if (noisiest.secure) {
    result.epsilon_max = kEpsilonSearchMax;
    result.sigma_opt = noisiest.sigma_x;
    return result;
  }

  double lo = 0.0;
  double hi = kEpsilonSearchMax;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const auto opt = at(mid);
    ++result.iterations;
    if (opt.secure) {
      lo = mid;
      result.sigma_opt = opt.sigma_x;
    } else {
      hi = mid;
    }
  }
  result.epsilon_max = 0.5 * (lo + hi);
  result.converged = true;
  return result;
}

SqueezingLimit max_squeezed_variance_dr(double eta, double beta, double tolerance) {
  if (!(eta > 0.5 && eta <= 1.0)) {
    throw DomainError("max_squeezed_variance_dr: eta must lie in (0.5, 1], got " +
                      std::to_string(eta));
  }
  if (!(tolerance > 0.0)) throw DomainError("max_squeezed_variance_dr: tolerance must be positive");

  constexpr double kVMin = 1e-3;
  const Channel ch{.eta = eta, .epsilon = 0.0};
  const auto secure_at = [&](double v) {
    return optimize_displacement(v, ch, beta, Direction::direct).secure;
  };

  SqueezingLimit out;
  if (secure_at(1.0)) {
    out.v_max = 1.0;
    out.secure = true;
    return out;
  }
  if (!secure_at(kVMin)) return out;

  double lo = kVMin;
  double hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    ++out.iterations;
    (secure_at(mid) ? lo : hi) = mid;
  }
  out.v_max = 0.5 * (lo + hi);
  out.secure = true;
  return out;
}

double dr_coherent_beta_threshold(double eta) {
  if (!(eta > 0.5 && eta < 1.0)) {
    throw DomainError("dr_coherent_beta_threshold: eta must lie in (0.5, 1), got " +
                      std::to_string(eta));
  }
  return 1.0 / eta - 1.0;
}

SigmaInterval sigma_limits_high_squeezing(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw DomainError("sigma_limits_high_squeezing: beta must lie in [0, 1]");
  }
  const double root = std::sqrt(beta);
  return SigmaInterval{
      .lo = 1.0 / (1.0 + root),
      .hi = beta == 1.0 ? std::numeric_limits<double>::infinity() : 1.0 / (1.0 - root),
  };
}

void Axis::validate() const {
  if (count < 2) throw DomainError("axis " + name + ": count must be >= 2");
  if (!(min < max)) throw DomainError("axis " + name + ": min must be < max");
  if (spacing == Spacing::log && !(min > 0.0)) {
    throw DomainError("axis " + name + ": log spacing needs positive bounds");
  }
}

std::vector<double> Axis::values() const {
  validate();
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    out[i] = spacing == Spacing::linear
                 ? min + (max - min) * t
                 : std::exp(std::log(min) + (std::log(max) - std::log(min)) * t);
  }
  out.back() = max;
  return out;
}

SecurityRegion security_region(const SweepGrid& grid, unsigned threads) {
  validate(grid.ch);
  SecurityRegion region;
  region.v_values = grid.v_axis.values();
  region.sigma_values = grid.sigma_axis.values();
  const std::size_t nv = region.v_values.size();
  const std::size_t ns = region.sigma_values.size();
  region.rate.assign(nv * ns, 0.0);
  region.secure.assign(nv * ns, 0);

  const auto rate = [&](double v, double sigma) {
    return rate_at(v, sigma, sigma, grid.ch, grid.beta, grid.direction);
  };

  parallel_for(nv * ns, threads, [&](std::size_t k) {
    const double r = rate(region.v_values[k / ns], region.sigma_values[k % ns]);
    region.rate[k] = r;
    region.secure[k] = r > 0.0 ? 1 : 0;
  });

  std::vector<std::vector<BoundaryPoint>> per_column(nv);
  parallel_for(nv, threads, [&](std::size_t iv) {
    const double v = region.v_values[iv];
    for (std::size_t is = 0; is + 1 < ns; ++is) {
      const bool left = region.is_secure(iv, is);
      if (left == region.is_secure(iv, is + 1)) continue;
      double lo = region.sigma_values[is];
      double hi = region.sigma_values[is + 1];
      while (hi - lo > kBoundaryTolerance) {
        const double mid = 0.5 * (lo + hi);
        ((rate(v, mid) > 0.0) == left ? lo : hi) = mid;
      }
      per_column[iv].push_back({.v = v, .sigma = 0.5 * (lo + hi), .entering = !left});
    }
  });
  for (auto& column : per_column) {
    region.boundary.insert(region.boundary.end(), column.begin(), column.end());
  }
  return region;
}

double distance_to_transmittance(double distance_km) {
  if (!(distance_km >= 0.0) || !std::isfinite(distance_km)) {
    throw DomainError("distance must be nonnegative, got " + std::to_string(distance_km));
  }
  return std::pow(10.0, -kFiberAttenuationDbPerKm * distance_km / 10.0);
}

std::vector<CurvePoint> rate_vs_distance_curve(double v, double epsilon, double beta,
                                               Direction direction,
                                               std::span<const double> distances_km,
                                               unsigned threads) {
  std::vector<CurvePoint> curve(distances_km.size());
  parallel_for(distances_km.size(), threads, [&](std::size_t i) {
    const double eta = distance_to_transmittance(distances_km[i]);
    const auto opt =
        optimize_displacement(v, Channel{.eta = eta, .epsilon = epsilon}, beta, direction);
    curve[i] = CurvePoint{
        .distance_km = distances_km[i], .eta = eta, .sigma_opt = opt.sigma_x, .rate = opt.rate};
  });
  return curve;
}

double max_secure_distance(std::span<const CurvePoint> curve) {
  double best = -1.0;
  for (const auto& point : curve) {
    if (point.rate > 0.0) best = std::max(best, point.distance_km);
  }
  return best;
}

}  // namespace cvqkd
