#include "cvqkd/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cvqkd/error.hpp"

namespace cvqkd {

namespace {

constexpr double kTwoToMinus53 = 1.0 / 9007199254740992.0;

void validate_for_sampling(const Preparation& prep, const Channel& ch) {
  if (!(prep.v > 0.0)) throw DomainError("simulate_pm: v must be positive");
  if (!(prep.sigma_x >= 0.0 && prep.sigma_p >= 0.0)) {
    throw DomainError("simulate_pm: displacement variances must be nonnegative");
  }
  validate(ch);
}

// Running second moments of a pair (Welford / co-moment update).
struct PairMoments {
  std::size_t n = 0;
  double mean_a = 0.0;
  double mean_b = 0.0;
  double m2_a = 0.0;
  double m2_b = 0.0;
  double c_ab = 0.0;

  void push(double a, double b) {
    ++n;
    const double da = a - mean_a;
    mean_a += da / static_cast<double>(n);
    const double db = b - mean_b;
    mean_b += db / static_cast<double>(n);
    m2_a += da * (a - mean_a);
    m2_b += db * (b - mean_b);
    c_ab += da * (b - mean_b);
  }

  double denom() const { return n > 1 ? static_cast<double>(n - 1) : 1.0; }
  double var_a() const { return m2_a / denom(); }
  double var_b() const { return m2_b / denom(); }
  double cov() const { return c_ab / denom(); }
};

double half_log2_ratio(double var_b, double cond) {
  return cond > 0.0 ? 0.5 * std::log2(var_b / cond) : 0.0;
}

}  // namespace

double GaussianSampler::standard_normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * kTwoToMinus53;  // (0, 1]
  const double u2 = static_cast<double>(engine_() >> 11) * kTwoToMinus53;        // [0, 1)
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

double GaussianSampler::normal(double mean, double variance) {
  return mean + std::sqrt(variance) * standard_normal();
}

RunStats simulate_pm(const Preparation& prep, const Channel& ch, std::size_t n,
                     std::uint64_t seed) {
  if (n == 0) throw DomainError("simulate_pm: sample count must be >= 1");
  validate_for_sampling(prep, ch);

  const double root_eta = std::sqrt(ch.eta);
  const double noise_x = ch.eta * (prep.v + ch.epsilon - 1.0) + 1.0;
  const double noise_p = ch.eta * (1.0 / prep.v + ch.epsilon - 1.0) + 1.0;

  GaussianSampler rng(seed);
  PairMoments x;
  PairMoments p;
  for (std::size_t i = 0; i < n; ++i) {
    const double ax = rng.normal(0.0, prep.sigma_x);
    const double ap = rng.normal(0.0, prep.sigma_p);
    const double bx = rng.normal(root_eta * ax, noise_x);
    const double bp = rng.normal(root_eta * ap, noise_p);
    x.push(ax, bx);
    p.push(ap, bp);
  }

  RunStats s;
  s.n_samples = n;
  s.seed = seed;
  s.var_alice_x = x.var_a();
  s.var_alice_p = p.var_a();
  s.var_bob_x = x.var_b();
  s.var_bob_p = p.var_b();
  s.cov_ab_x = x.cov();
  s.cov_ab_p = p.cov();
  s.cond_var_bob_x =
      s.var_alice_x > 0.0 ? s.var_bob_x - s.cov_ab_x * s.cov_ab_x / s.var_alice_x : s.var_bob_x;
  s.mutual_information_x = half_log2_ratio(s.var_bob_x, s.cond_var_bob_x);

  const double dn = x.denom();
  const double var_factor = std::sqrt(2.0 / dn);
  s.se_var_alice_x = s.var_alice_x * var_factor;
  s.se_var_alice_p = s.var_alice_p * var_factor;
  s.se_var_bob_x = s.var_bob_x * var_factor;
  s.se_var_bob_p = s.var_bob_p * var_factor;
  s.se_cov_ab_x = std::sqrt((s.var_alice_x * s.var_bob_x + s.cov_ab_x * s.cov_ab_x) / dn);
  s.se_cov_ab_p = std::sqrt((s.var_alice_p * s.var_bob_p + s.cov_ab_p * s.cov_ab_p) / dn);
  const double denom = s.var_alice_x * s.var_bob_x;
  const double rho = denom > 0.0 ? std::abs(s.cov_ab_x) / std::sqrt(denom) : 0.0;
  s.se_mutual_information_x = rho / (std::numbers::ln2 * std::sqrt(dn));
  return s;
}

PmMoments predicted_moments(const Preparation& prep, const Channel& ch) {
  validate_for_sampling(prep, ch);
  PmMoments m;
  m.var_alice_x = prep.sigma_x;
  m.var_alice_p = prep.sigma_p;
  m.var_bob_x = ch.eta * (prep.v + prep.sigma_x + ch.epsilon - 1.0) + 1.0;
  m.var_bob_p = ch.eta * (1.0 / prep.v + prep.sigma_p + ch.epsilon - 1.0) + 1.0;
  m.cov_ab_x = std::sqrt(ch.eta) * prep.sigma_x;
  m.cov_ab_p = std::sqrt(ch.eta) * prep.sigma_p;
  m.mutual_information_x =
      half_log2_ratio(m.var_bob_x, ch.eta * (prep.v + ch.epsilon - 1.0) + 1.0);
  return m;
}

}  // namespace cvqkd
