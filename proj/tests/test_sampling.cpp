#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "cvqkd/error.hpp"
#include "cvqkd/info_rates.hpp"
#include "cvqkd/sampling.hpp"

using namespace cvqkd;

namespace {

bool within(double estimate, double truth, double se, double k = 4.0) {
  return std::abs(estimate - truth) <= k * se;
}

}  // namespace

TEST_SUITE("GaussianSampler") {
  TEST_CASE("engine is the standard 64-bit Mersenne twister") {
    std::mt19937_64 engine(5489u);
    engine.discard(9999);
    CHECK(engine() == 9981545732273789042ULL);
  }

  TEST_CASE("Box-Muller pairs from 53-bit uniforms") {
    std::mt19937_64 engine(42);
    GaussianSampler sampler(42);
    for (int i = 0; i < 100; ++i) {
      const double u1 = static_cast<double>((engine() >> 11) + 1) / 9007199254740992.0;
      const double u2 = static_cast<double>(engine() >> 11) / 9007199254740992.0;
      const double r = std::sqrt(-2.0 * std::log(u1));
      CHECK(sampler.standard_normal() == r * std::cos(2.0 * std::numbers::pi * u2));
      CHECK(sampler.standard_normal() == r * std::sin(2.0 * std::numbers::pi * u2));
    }
  }

  TEST_CASE("first two moments") {
    GaussianSampler sampler(7);
    const int n = 200000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double z = sampler.normal(1.5, 4.0);
      sum += z;
      sum2 += z * z;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(within(mean, 1.5, 2.0 / std::sqrt(n)));
    CHECK(within(var, 4.0, 4.0 * std::sqrt(2.0 / n)));
  }
}

TEST_SUITE("simulate_pm") {
  TEST_CASE("errors") {
    CHECK_THROWS_AS(simulate_pm({1.0, 1.0, 1.0}, {0.5, 0.0}, 0, 1), DomainError);
    CHECK_THROWS_AS(simulate_pm({0.0, 1.0, 1.0}, {0.5, 0.0}, 10, 1), DomainError);
    CHECK_THROWS_AS(simulate_pm({1.0, -1.0, 1.0}, {0.5, 0.0}, 10, 1), DomainError);
    CHECK_THROWS_AS(simulate_pm({1.0, 1.0, 1.0}, {1.5, 0.0}, 10, 1), DomainError);
  }

  TEST_CASE("seed determinism") {
    const Preparation prep{0.5, 1.0, 1.0};
    const Channel ch{0.1, 0.1};
    const auto a = simulate_pm(prep, ch, 10000, 123);
    const auto b = simulate_pm(prep, ch, 10000, 123);
    const auto c = simulate_pm(prep, ch, 10000, 124);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK(a.n_samples == 10000);
    CHECK(a.seed == 123);
  }

  TEST_CASE("no modulation") {
    const Preparation prep{0.5, 1e-6, 1e-6};
    const Channel ch{0.3, 0.05};
    const auto s = simulate_pm(prep, ch, 1000000, 3);
    CHECK(within(s.var_bob_x, ch.eta * (prep.v + ch.epsilon - 1.0) + 1.0, s.se_var_bob_x));
    CHECK(within(s.var_bob_p, ch.eta * (1.0 / prep.v + ch.epsilon - 1.0) + 1.0, s.se_var_bob_p));
  }

  TEST_CASE("exactly zero modulation is allowed") {
    const auto s = simulate_pm({1.0, 0.0, 0.0}, {0.5, 0.0}, 1000, 3);
    CHECK(s.var_alice_x == 0.0);
    CHECK(s.mutual_information_x == 0.0);
  }

  TEST_CASE("coherent state through an ideal channel") {
    const auto s = simulate_pm({1.0, 3.0, 3.0}, {1.0, 0.0}, 1000000, 11);
    CHECK(within(s.var_bob_x, 4.0, s.se_var_bob_x));
    CHECK(within(s.cov_ab_x, 3.0, s.se_cov_ab_x));
  }

  TEST_CASE("mutual information estimate") {
    ProtocolConfig cfg;
    cfg.prep = {0.5, 1.0, 1.0};
    cfg.ch = {0.1, 0.1};
    const auto s = simulate_pm(cfg.prep, cfg.ch, 1000000, 17);
    CHECK(within(s.mutual_information_x, mutual_information(cfg), s.se_mutual_information_x));
    const auto m = predicted_moments(cfg.prep, cfg.ch);
    CHECK(m.mutual_information_x == doctest::Approx(mutual_information(cfg)).epsilon(1e-12));
  }

  TEST_CASE("predicted moments") {
    const auto m = predicted_moments({0.5, 1.0, 2.0}, {0.1, 0.1});
    CHECK(m.var_alice_x == 1.0);
    CHECK(m.var_alice_p == 2.0);
    CHECK(m.var_bob_x == doctest::Approx(0.1 * (0.5 + 1.0 + 0.1 - 1.0) + 1.0));
    CHECK(m.var_bob_p == doctest::Approx(0.1 * (2.0 + 2.0 + 0.1 - 1.0) + 1.0));
    CHECK(m.cov_ab_x == doctest::Approx(std::sqrt(0.1)));
    CHECK(m.cov_ab_p == doctest::Approx(2.0 * std::sqrt(0.1)));
  }

  TEST_CASE("standard errors shrink as 1/sqrt(n)") {
    const Preparation prep{0.5, 1.0, 1.0};
    const Channel ch{0.5, 0.05};
    const auto small = simulate_pm(prep, ch, 10000, 5);
    const auto large = simulate_pm(prep, ch, 1000000, 5);
    for (auto [a, b] : {std::pair{small.se_var_bob_x, large.se_var_bob_x},
                        std::pair{small.se_cov_ab_x, large.se_cov_ab_x},
                        std::pair{small.se_mutual_information_x, large.se_mutual_information_x}}) {
      CHECK(a / b >= 5.0);
      CHECK(a / b <= 20.0);
    }
  }

  TEST_CASE("coverage over repeated runs") {
    const Preparation prep{0.5, 1.0, 1.0};
    const Channel ch{0.1, 0.1};
    const auto m = predicted_moments(prep, ch);
    int hits = 0;
    const int runs = 40;
    for (int seed = 1; seed <= runs; ++seed) {
      const auto s = simulate_pm(prep, ch, 100000, static_cast<std::uint64_t>(seed));
      hits += within(s.var_bob_x, m.var_bob_x, s.se_var_bob_x) &&
              within(s.var_bob_p, m.var_bob_p, s.se_var_bob_p) &&
              within(s.cov_ab_x, m.cov_ab_x, s.se_cov_ab_x) &&
              within(s.cov_ab_p, m.cov_ab_p, s.se_cov_ab_p) &&
              within(s.mutual_information_x, m.mutual_information_x, s.se_mutual_information_x);
    }
    CHECK(hits >= 37);
  }
}
