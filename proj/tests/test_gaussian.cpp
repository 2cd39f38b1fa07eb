#include <cmath>
#include <random>

#include <doctest.h>

#include "cvqkd/error.hpp"
#include "cvqkd/gaussian.hpp"
#include "oracles.hpp"

using namespace cvqkd;

namespace {

CovMatrix pure_two_mode_squeezed() {
  const double c = std::sqrt(3.0);
  Eigen::Matrix4d m;
  m << 2, 0, c, 0,  //
      0, 2, 0, -c,  //
      c, 0, 2, 0,   //
      0, -c, 0, 2;
  return CovMatrix(m);
}

}  // namespace

TEST_SUITE("g_function") {
  TEST_CASE("reference values") {
    CHECK(g_function(0.0) == 0.0);
    CHECK(g_function(1.0) == doctest::Approx(2.0).epsilon(1e-15));
    // (1.5 log2 1.5 + 0.5), evaluated in 30-digit arithmetic
    CHECK(g_function(0.5) == doctest::Approx(1.37744375108173427).epsilon(1e-14));
  }

  TEST_CASE("negative argument is a domain error") {
    CHECK_THROWS_AS(g_function(-1e-12), DomainError);
    CHECK_THROWS_AS(g_function(std::nan("")), DomainError);
  }

  TEST_CASE("monotone and concave on (0, 20]") {
    const double h = 1e-3;
    double previous = g_function(0.0);
    for (double x = 0.01; x <= 20.0; x += 0.01) {
      const double value = g_function(x);
      CHECK(value > previous);
      previous = value;
      if (x > h) {
        const double second = g_function(x + h) - 2.0 * value + g_function(x - h);
        CHECK(second <= 1e-12);
      }
    }
  }
}

TEST_SUITE("CovMatrix") {
  TEST_CASE("shape and symmetry validation") {
    CHECK_THROWS_AS(CovMatrix(Eigen::MatrixXd::Identity(3, 3)), ShapeError);
    CHECK_THROWS_AS(CovMatrix(Eigen::MatrixXd::Identity(2, 4)), ShapeError);
    Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(4, 4);
    asym(0, 2) = 0.1;
    CHECK_THROWS_AS(CovMatrix{asym}, ShapeError);
    Eigen::MatrixXd neg = Eigen::MatrixXd::Identity(2, 2);
    neg(1, 1) = 0.0;
    CHECK_THROWS_AS(CovMatrix{neg}, DomainError);
  }

  TEST_CASE("reduced state picks the listed modes") {
    const auto g = CovMatrix::product({{1.0, 1.0}, {2.0, 0.5}, {3.0, 1.0 / 3.0}});
    const auto r = g.reduced({2, 0});
    CHECK(r.modes() == 2);
    CHECK(r(0, 0) == 3.0);
    CHECK(r(2, 2) == 1.0);
    CHECK(g.variance(1, Quadrature::p) == 0.5);
  }
}

TEST_SUITE("symplectic_eigenvalues") {
  TEST_CASE("vacuum, squeezed and two-mode squeezed states are pure") {
    const auto vac = symplectic_eigenvalues(CovMatrix::identity(2)).values;
    REQUIRE(vac.size() == 2);
    CHECK(vac[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(vac[1] == doctest::Approx(1.0).epsilon(1e-14));

    const auto sq = symplectic_eigenvalues(CovMatrix::product({{0.25, 4.0}})).values;
    CHECK(sq[0] == doctest::Approx(1.0).epsilon(1e-12));

    const auto tms = symplectic_eigenvalues(pure_two_mode_squeezed()).values;
    const auto ref = oracle::symplectic_spectrum(pure_two_mode_squeezed().matrix());
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(ref[i] == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(tms[i] == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  TEST_CASE("thermal spectrum is sorted descending") {
    const auto s = symplectic_eigenvalues(CovMatrix::product({{2.0, 2.0}, {5.0, 5.0}, {1.0, 1.0}}));
    REQUIRE(s.values.size() == 3);
    CHECK(s.values[0] == doctest::Approx(5.0));
    CHECK(s.values[1] == doctest::Approx(2.0));
    CHECK(s.values[2] == doctest::Approx(1.0));
  }

  TEST_CASE("agrees with complex eigen-decomposition on random physical states") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> nu(1.0, 6.0);
    for (int trial = 0; trial < 200; ++trial) {
      const int modes = 2 + trial % 2;
      std::vector<double> nus;
      for (int i = 0; i < modes; ++i) nus.push_back(nu(rng));
      const Eigen::MatrixXd g = oracle::random_state(rng, nus);
      const auto got = symplectic_eigenvalues(CovMatrix(g)).values;
      const auto ref = oracle::symplectic_spectrum(g);
      REQUIRE(got.size() == ref.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(std::abs(got[i] - ref[i]) <= 1e-10 * ref[i]);
      }
    }
  }
}

TEST_SUITE("von_neumann_entropy") {
  TEST_CASE("reference states") {
    CHECK(von_neumann_entropy(CovMatrix::identity(2)) == doctest::Approx(0.0));
    CHECK(von_neumann_entropy(CovMatrix::product({{3.0, 3.0}})) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(von_neumann_entropy(pure_two_mode_squeezed())) < 1e-9);
  }

  TEST_CASE("unphysical state throws, tolerance band is clamped") {
    CHECK_THROWS_AS(von_neumann_entropy(CovMatrix::product({{0.5, 0.5}})), PhysicalityError);
    const double inside = 1.0 - 1e-10;
    CHECK(von_neumann_entropy(CovMatrix::product({{inside, 1.0}})) == 0.0);
    CHECK(is_physical(CovMatrix::product({{inside, 1.0}})));
    CHECK_FALSE(is_physical(CovMatrix::product({{0.9, 1.0}})));
  }
}

TEST_SUITE("condition_on_homodyne") {
  TEST_CASE("product state leaves the other block unchanged") {
    const auto g = CovMatrix::product({{2.0, 3.0}, {4.0, 5.0}});
    const auto r = condition_on_homodyne(g, 1, Quadrature::x);
    CHECK(r.modes() == 1);
    CHECK(r(0, 0) == 2.0);
    CHECK(r(1, 1) == 3.0);
  }

  TEST_CASE("x-correlated two-mode state") {
    // V_A = 2.5 both quadratures, V_B = 4, C_x^2 = 7.5
    const double c = std::sqrt(7.5);
    Eigen::Matrix4d m;
    m << 2.5, 0, c, 0,  //
        0, 2.5, 0, -c,  //
        c, 0, 4, 0,     //
        0, -c, 0, 4;
    const auto r = condition_on_homodyne(CovMatrix(m), 1, Quadrature::x);
    CHECK(r(0, 0) == doctest::Approx(2.5 - 7.5 / 4.0).epsilon(1e-15));
    CHECK(r(1, 1) == doctest::Approx(2.5).epsilon(1e-15));
    const auto rp = condition_on_homodyne(CovMatrix(m), 1, Quadrature::p);
    CHECK(rp(0, 0) == doctest::Approx(2.5));
    CHECK(rp(1, 1) == doctest::Approx(2.5 - 7.5 / 4.0));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(condition_on_homodyne(CovMatrix::identity(1), 0, Quadrature::x), ShapeError);
    CHECK_THROWS_AS(condition_on_homodyne(CovMatrix::identity(2), 2, Quadrature::x),
                    DomainError);
  }

  TEST_CASE("random states: symmetric, physical, variances never grow") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> nu(1.0, 4.0);
    for (int trial = 0; trial < 100; ++trial) {
      const int modes = 2 + trial % 2;
      std::vector<double> nus;
      for (int i = 0; i < modes; ++i) nus.push_back(nu(rng));
      const CovMatrix g(oracle::random_state(rng, nus));
      const auto measured = static_cast<std::size_t>(trial % modes);
      const auto q = trial % 3 == 0 ? Quadrature::p : Quadrature::x;
      const auto r = condition_on_homodyne(g, measured, q);
      CHECK(r.modes() == g.modes() - 1);
      CHECK((r.matrix() - r.matrix().transpose()).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(is_physical(r));
      std::size_t out_mode = 0;
      for (std::size_t mode = 0; mode < g.modes(); ++mode) {
        if (mode == measured) continue;
        for (auto qq : {Quadrature::x, Quadrature::p}) {
          CHECK(r.variance(out_mode, qq) <= g.variance(mode, qq) + 1e-12);
        }
        ++out_mode;
      }
      const Eigen::Index k = static_cast<Eigen::Index>(2 * measured + (q == Quadrature::p));
      CHECK((r.matrix() - oracle::homodyne(g.matrix(), static_cast<int>(k))).cwiseAbs().maxCoeff() <=
            1e-12);
    }
  }
}

TEST_SUITE("apply_beamsplitter") {
  TEST_CASE("unit transmittance leaves a product state unchanged") {
    const auto g = CovMatrix::product({{0.25, 4.0}, {4.0, 0.25}});
    const auto r = apply_beamsplitter(g, 0, 1, 1.0);
    CHECK((r.matrix() - g.matrix()).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("balanced splitter averages x-variances") {
    const auto g = CovMatrix::product({{0.25, 4.0}, {4.0, 0.25}});
    const auto r = apply_beamsplitter(g, 0, 1, 0.5);
    CHECK(r(0, 0) == doctest::Approx(2.125));
    CHECK(r(2, 2) == doctest::Approx(2.125));
    CHECK((r.matrix() - oracle::beamsplitter(2, 0, 1, 0.5) * g.matrix() *
                            oracle::beamsplitter(2, 0, 1, 0.5).transpose())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
    for (double nu : symplectic_eigenvalues(r).values) CHECK(nu == doctest::Approx(1.0));
  }

  TEST_CASE("domain errors") {
    const auto g = CovMatrix::identity(2);
    CHECK_THROWS_AS(apply_beamsplitter(g, 0, 1, 1.1), DomainError);
    CHECK_THROWS_AS(apply_beamsplitter(g, 0, 1, -0.1), DomainError);
    CHECK_THROWS_AS(apply_beamsplitter(g, 0, 0, 0.5), DomainError);
    CHECK_THROWS_AS(apply_beamsplitter(g, 0, 2, 0.5), DomainError);
  }

  TEST_CASE("pure inputs stay pure and entropy is invariant") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> var(0.05, 20.0);
    std::uniform_real_distribution<double> t(0.0, 1.0);
    std::uniform_real_distribution<double> nu(1.0, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
      const double a = var(rng), b = var(rng), c = var(rng);
      auto g = CovMatrix::product({{a, 1.0 / a}, {b, 1.0 / b}, {c, 1.0 / c}});
      g = apply_beamsplitter(g, 0, 1, t(rng));
      g = apply_beamsplitter(g, 1, 2, t(rng));
      g = apply_beamsplitter(g, 2, 0, t(rng));
      for (double v : symplectic_eigenvalues(g).values) CHECK(std::abs(v - 1.0) <= 1e-9);

      const CovMatrix mixed(oracle::random_state(rng, {nu(rng), nu(rng)}));
      const double before = von_neumann_entropy(mixed);
      const double after = von_neumann_entropy(apply_beamsplitter(mixed, 0, 1, t(rng)));
      CHECK(after == doctest::Approx(before).epsilon(1e-10));
    }
  }
}
