#pragma once

// Monte-Carlo simulation of the prepare-and-measure scheme at the level of the
// trusted parties' classical data. Used to check second moments and the mutual
// information against the closed-form expressions.
//
// Random numbers: std::mt19937_64 seeded with `seed`, 53-bit uniforms
// ((word >> 11) * 2^-53), and the Box-Muller transform producing normals in
// pairs (cos branch first). std::normal_distribution is avoided because its
// algorithm is implementation-defined.

#include <cstddef>
#include <cstdint>
#include <random>

#include "cvqkd/protocol.hpp"

namespace cvqkd {

class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  double standard_normal();
  double normal(double mean, double variance);

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Empirical moments of Alice's displacement (a_x, a_p) and Bob's outcomes
// (b_x, b_p), with standard errors from the Gaussian large-sample formulas.
struct RunStats {
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;

  double var_alice_x = 0.0;
  double var_alice_p = 0.0;
  double var_bob_x = 0.0;
  double var_bob_p = 0.0;
  double cov_ab_x = 0.0;
  double cov_ab_p = 0.0;
  double cond_var_bob_x = 0.0;        // var_bob_x - cov_ab_x^2 / var_alice_x
  double mutual_information_x = 0.0;  // 1/2 log2(var_bob_x / cond_var_bob_x)

  double se_var_alice_x = 0.0;
  double se_var_alice_p = 0.0;
  double se_var_bob_x = 0.0;
  double se_var_bob_p = 0.0;
  double se_cov_ab_x = 0.0;
  double se_cov_ab_p = 0.0;
  double se_mutual_information_x = 0.0;

  bool operator==(const RunStats&) const = default;
};

// Per sample: a_q ~ N(0, sigma_q); Bob's q-outcome ~ N(sqrt(eta) a_q,
// eta (V_q + epsilon - 1) + 1) with V_x = V, V_p = 1/V. Zero displacement
// variances are allowed. Throws DomainError for n = 0.
RunStats simulate_pm(const Preparation& prep, const Channel& ch, std::size_t n,
                     std::uint64_t seed);

// Closed-form values the simulation estimates.
struct PmMoments {
  double var_alice_x = 0.0;
  double var_alice_p = 0.0;
  double var_bob_x = 0.0;
  double var_bob_p = 0.0;
  double cov_ab_x = 0.0;
  double cov_ab_p = 0.0;
  double mutual_information_x = 0.0;
};

PmMoments predicted_moments(const Preparation& prep, const Channel& ch);

}  // namespace cvqkd
