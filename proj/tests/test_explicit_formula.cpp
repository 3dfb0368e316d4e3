#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "support.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/explicit_formula.hpp"
#include "zetalab/report_io.hpp"

using namespace zetalab;

TEST_CASE("von Mangoldt table agrees with trial division") {
  const VonMangoldtTable table(5000);
  for (long n = 1; n <= 5000; ++n) CHECK(table(n) == doctest::Approx(oracle::mangoldt(n)).epsilon(1e-15));
  CHECK(table.factor(243).p == 3);
  CHECK(table.factor(243).k == 5);
  CHECK(table.factor(12).p == 0);
}

TEST_CASE("lambda_x branches") {
  CHECK(lambda_x(2, 10.0) == std::log(2.0));
  CHECK(lambda_x(25, 10.0) == doctest::Approx(std::log(5.0) * std::log(100.0 / 25.0) / std::log(10.0)).epsilon(1e-15));
  CHECK(lambda_x(101, 10.0) == 0.0);
  CHECK(lambda_x(12, 10.0) == 0.0);
  CHECK_THROWS_AS(lambda_x(0, 10.0), DomainError);
  CHECK_THROWS_AS(lambda_x(5, 2.0), DomainError);
}

TEST_CASE("lambda_x properties") {
  for (double x : {3.0, 7.5, 10.0, 31.6, 100.0}) {
    for (long n = 1; n <= static_cast<long>(x * x) + 5; ++n) {
      const double l = lambda_x(n, x);
      const double lam = oracle::mangoldt(n);
      CHECK(l >= 0.0);
      CHECK(l <= lam + 1e-15);
      if (n <= x) CHECK(l == lam);
    }
  }
  // x^2 a prime power: the weight vanishes at the right end.
  CHECK(lambda_x(49, 7.0) == doctest::Approx(0.0));
  CHECK(lambda_x(1024, 32.0) == doctest::Approx(0.0));
  SUBCASE("continuous across the seams x = n and x = sqrt(n)") {
    for (long n : {4L, 5L, 7L, 9L, 16L, 27L, 49L}) {
      const double x = static_cast<double>(n);
      if (x >= 3.0) {
        CHECK(std::abs(lambda_x(n, x * (1 + 1e-12)) - lambda_x(n, x * (1 - 1e-12))) < 1e-9);
      }
      const double r = std::sqrt(x);
      if (r * (1 - 1e-9) >= 3.0) {
        CHECK(std::abs(lambda_x(n, r * (1 + 1e-9)) - lambda_x(n, r * (1 - 1e-9))) < 1e-6);
      }
    }
  }
}

TEST_CASE("dirichlet_sum equals the naive loop") {
  for (double x : {3.0, 10.0, 57.0}) {
    for (Complex s : {Complex(2.0, 0.0), Complex(0.5, 100.0), Complex(1.3, -42.0)}) {
      for (bool over : {false, true}) {
        const Complex a =
            dirichlet_sum(s, x, over ? DirichletWeight::over_log_n : DirichletWeight::plain);
        const Complex b = oracle::dirichlet(s, x, over);
        CHECK(std::abs(a - b) < 1e-14 * std::max(1.0, std::abs(b)) * x);
      }
    }
  }
  SUBCASE("x = 3, s = 2 by hand") {
    const double l3 = std::log(3.0);
    const double hand = std::log(2.0) / 4.0 + std::log(3.0) / 9.0 +
                        std::log(2.0) * std::log(9.0 / 4.0) / l3 / 16.0 +
                        std::log(2.0) * std::log(9.0 / 8.0) / l3 / 64.0 +
                        std::log(3.0) * std::log(1.0) / l3 / 81.0 +
                        std::log(5.0) * std::log(9.0 / 5.0) / l3 / 25.0 +
                        std::log(7.0) * std::log(9.0 / 7.0) / l3 / 49.0;
    CHECK(std::abs(dirichlet_sum(2.0, 3.0, DirichletWeight::plain) - hand) < 1e-14);
  }
  SUBCASE("conjugation") {
    const Complex s(0.7, 33.0);
    CHECK(std::abs(dirichlet_sum(std::conj(s), 20.0, DirichletWeight::plain) -
                   std::conj(dirichlet_sum(s, 20.0, DirichletWeight::plain))) < 1e-13);
  }
}

TEST_CASE("smoothing parameters") {
  const SmoothingParams p = SmoothingParams::make(10.0, 0.3);
  CHECK(p.delta_x * std::log(10.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.sigma_1 == doctest::Approx(0.5 + 0.3 + p.delta_x).epsilon(1e-15));
  CHECK(SmoothingParams::natural(10.0).a == p.delta_x);
  CHECK_THROWS_AS(SmoothingParams::make(2.0, 0.3), DomainError);
  CHECK_THROWS_AS(SmoothingParams::make(10.0, 0.0), DomainError);
  CHECK_THROWS_AS(SmoothingParams::make(10.0, 1.5), DomainError);
}

TEST_CASE("build_neighborhood") {
  const ZeroCatalog& cat = support::catalog();
  SUBCASE("on-line zeros: radius 1/sqrt(log x)") {
    const double x = std::exp(1.0);
    for (double t : {100.0, 400.0, 1234.0}) {
      // x = e falls below the smoothing floor of 3; use the formula directly.
      CHECK(neighborhood_radius(0.5, x, t) == doctest::Approx(1.0));
    }
    for (double t : {100.0, 400.0, 1234.0}) {
      const ZeroNeighborhood n = build_neighborhood(cat, 10.0, t);
      const auto ref = oracle::neighborhood(cat, 10.0, t);
      CHECK(n.members == ref);
      for (const auto& z : n.members) CHECK(std::abs(t - z.gamma) <= 1.0 / std::sqrt(std::log(10.0)));
      if (!n.members.empty()) {
        CHECK(n.sigma_A == 0.5);
        CHECK(n.L == doctest::Approx(1.0 / std::sqrt(std::log(10.0))));
      }
      CHECK(n.L <= t / 2);
    }
  }
  SUBCASE("synthetic zero (0.8, 1000.2)") {
    const ZeroCatalog s = support::with_zero(0.8, 1000.2);
    const ZeroNeighborhood n = build_neighborhood(s, 100.0, 1000.0);
    const double r = std::pow(100.0, 0.9) / std::sqrt(std::log(100.0));
    CHECK(r == doctest::Approx(29.402).epsilon(1e-4));
    CHECK(n.sigma_A == 0.8);
    CHECK(n.L == doctest::Approx(r));
    bool found = false;
    for (const auto& z : n.members) found = found || (z.gamma == 1000.2 && z.beta == 0.8);
    CHECK(found);
    CHECK(n.members == oracle::neighborhood(s, 100.0, 1000.0));
  }
  SUBCASE("empty neighborhood uses the sentinel") {
    // Largest gap below 1500 exceeds 2/sqrt(log 3); pick its midpoint.
    double best = 0.0, mid = 0.0;
    const auto& z = cat.zeros();
    for (std::size_t i = 1; i < z.size(); ++i) {
      if (z[i].gamma - z[i - 1].gamma > best) {
        best = z[i].gamma - z[i - 1].gamma;
        mid = 0.5 * (z[i].gamma + z[i - 1].gamma);
      }
    }
    const double x = 3.0;
    REQUIRE(best / 2 > 1.0 / std::sqrt(std::log(x)));
    const ZeroNeighborhood n = build_neighborhood(cat, x, mid);
    CHECK(n.members.empty());
    CHECK(n.empty_sentinel);
    CHECK(n.sigma_A == 0.5);
    CHECK(n.L == doctest::Approx(1.0 / std::log(x)));
  }
  SUBCASE("membership grows with x for off-line zeros") {
    const ZeroCatalog s = inject_synthetic(
        cat, random_offline_zeros(5, 40, 200.0, 1200.0, 0.55, 0.95));
    for (double t : {300.0, 700.0, 1100.0}) {
      std::vector<NontrivialZero> prev;
      for (double x = 8.0; x <= 1000.0; x *= 1.7) {
        const ZeroNeighborhood n = build_neighborhood(s, x, t);
        for (const auto& z : prev) {
          if (z.beta <= 0.5) continue;
          bool kept = false;
          for (const auto& m : n.members) kept = kept || m == z;
          CHECK(kept);
        }
        prev = n.members;
      }
    }
  }
  SUBCASE("uncovered region") {
    CHECK_THROWS_AS(build_neighborhood(cat, 10.0, 1495.0), UncertifiedRangeError);
  }
}

TEST_CASE("bound_quantities") {
  const ZeroCatalog& cat = support::catalog();
  const SizdcParams params;  // l = v = 1, Phi = 3, Psi = 10

  SUBCASE("a above sigma_A switches the zero terms off") {
    const double t = 500.0, x = 10.0;
    const ZeroNeighborhood n = build_neighborhood(cat, x, t);
    const auto sp = SmoothingParams::make(x, 0.6);
    const BoundQuantities q = bound_quantities(n, sp, params, 1.5, t);
    CHECK(q.tau == 0);
    CHECK(q.G_a == 0.0);
    const double first = std::pow(x, 0.5 + 0.6 - 1.5) / std::log(x) *
                         (std::abs(oracle::dirichlet({sp.sigma_1, t}, x, false)) + std::log(t));
    CHECK(q.Y_a == doctest::Approx(first).epsilon(1e-12));
  }
  SUBCASE("sigma_A = a leaves the single k = 0 term") {
    const ZeroCatalog s = support::with_zero(0.6, 700.05);
    const double t = 700.0, x = 10.0, a = 0.6;
    const ZeroNeighborhood n = build_neighborhood(s, x, t);
    REQUIRE(n.sigma_A == 0.6);
    const BoundQuantities q = bound_quantities(n, SmoothingParams::make(x, a), params, 1.0, t);
    CHECK(q.tau == 1);
    CHECK(q.f_upper_index == 0);
    const double phi = 3.0;
    CHECK(q.F_a == doctest::Approx(std::pow(x / phi, a) * std::pow(x * x / phi, 1.0 / std::log(phi)))
                       .epsilon(1e-13));
  }
  SUBCASE("synthetic case x = 100, t = 1000, Phi = (log t)^0.1") {
    const ZeroCatalog s = support::with_zero(0.8, 1000.2);
    const SizdcParams p{FunctionSpec::one(), FunctionSpec::one(), FunctionSpec::power_log(0.1),
                        FunctionSpec::constant(10.0)};
    const double t = 1000.0, x = 100.0, a = 0.1;
    const ZeroNeighborhood n = build_neighborhood(s, x, t);
    const BoundQuantities q = bound_quantities(n, SmoothingParams::make(x, a), p, 1.0, t);
    const double phi = std::pow(std::log(500.0), 0.1);
    CHECK(q.phi_half_t == doctest::Approx(phi).epsilon(1e-15));
    CHECK(q.tau == 1);
    CHECK(std::abs(q.F_a - oracle::f_a(x, phi, a, 0.8)) < 1e-12 * std::max(1.0, q.F_a));
  }
  SUBCASE("nonnegative, components add up, Y decreasing in sigma") {
    const ZeroCatalog s = inject_synthetic(
        cat, random_offline_zeros(9, 30, 100.0, 1200.0, 0.55, 0.95));
    for (double t : {150.0, 480.0, 900.0}) {
      for (double x : {5.0, 20.0, 150.0}) {
        const ZeroNeighborhood n = build_neighborhood(s, x, t);
        for (double a : {0.1, 0.3, 0.7}) {
          const auto sp = SmoothingParams::make(x, a);
          double prev_y = INFINITY;
          for (double sigma = 0.5; sigma <= 2.0; sigma += 0.1) {
            const BoundQuantities q = bound_quantities(n, sp, params, sigma, t);
            CHECK(q.F_a >= 0.0);
            CHECK(q.G_a >= 0.0);
            CHECK(q.Y_a >= 0.0);
            CHECK(q.E_a >= 0.0);
            CHECK((q.tau == 0 || q.tau == 1));
            if (q.tau == 0) CHECK(q.G_a == 0.0);
            double ys = 0.0, es = 0.0;
            for (const auto& [k, v] : q.y_terms) ys += v;
            for (const auto& [k, v] : q.e_terms) es += v;
            CHECK(ys == q.Y_a);
            CHECK(es == q.E_a);
            CHECK(q.Y_a < prev_y);
            prev_y = q.Y_a;
          }
        }
      }
    }
  }
  SUBCASE("preconditions") {
    const ZeroNeighborhood n = build_neighborhood(cat, 10.0, 500.0);
    CHECK_THROWS_AS(bound_quantities(n, SmoothingParams::make(10.0, 0.05), params, 1.0, 500.0),
                    DomainError);
    CHECK_THROWS_AS(bound_quantities(n, SmoothingParams::make(10.0, 0.5), params, 0.4, 500.0),
                    DomainError);
    const SizdcParams flat{FunctionSpec::one(), FunctionSpec::one(), FunctionSpec::constant(1.0),
                           FunctionSpec::constant(10.0)};
    CHECK_THROWS_AS(bound_quantities(n, SmoothingParams::make(10.0, 0.5), flat, 1.0, 500.0),
                    HypothesisError);
  }
}

TEST_CASE("lemma1 identity") {
  const ZeroCatalog& cat = support::catalog();
  SUBCASE("s = 2 + 50i, x = 10, cutoff 500") {
    const Lemma1Check c = check_lemma1({2.0, 50.0}, 10.0, cat, 500.0);
    CHECK(std::abs(c.lhs - oracle::dirichlet({2.0, 50.0}, 10.0, false)) < 1e-13);
    CHECK(c.residual < c.rhs.tail_bound + 1e-6);
    CHECK(c.within_bound);
    CHECK(c.rhs.zeros_used == n_of_t(cat, 500.0));
  }
  SUBCASE("residual shrinks as the cutoff grows") {
    const Lemma1Check a = check_lemma1({1.2, 100.0}, 5.0, cat, 300.0);
    const Lemma1Check b = check_lemma1({1.2, 100.0}, 5.0, cat, 1400.0);
    CHECK(a.within_bound);
    CHECK(b.within_bound);
    CHECK(b.rhs.tail_bound < a.rhs.tail_bound);
  }
  SUBCASE("trivial-zero terms at s = 2 are bounded and decreasing") {
    const double x = 10.0, lx = std::log(x);
    double prev = INFINITY;
    for (int k = 1; k < 60; ++k) {
      const Complex u = 2.0 * k + 2.0;
      const double term = std::abs((std::pow(x, -2.0 * u) - std::pow(x, -u)) / (u * u * lx));
      CHECK(term <= std::pow(x, -4.0) / ((2.0 * k + 2) * (2.0 * k + 2) * lx));
      CHECK(term < prev);
      prev = term;
    }
    const Lemma1Result r = lemma1_rhs(2.0 + Complex(0.0, 20.0), x, cat, 600.0);
    CHECK(std::abs(r.trivial_sum) <= std::pow(x, -4.0) / lx);
  }
  SUBCASE("conjugation symmetry") {
    const Lemma1Result a = lemma1_rhs({0.8, 300.0}, 10.0, cat, 1000.0);
    const Lemma1Result b = lemma1_rhs({0.8, -300.0}, 10.0, cat, 1000.0);
    CHECK(std::abs(b.rhs - std::conj(a.rhs)) < 1e-10);
    CHECK(b.tail_bound == doctest::Approx(a.tail_bound));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(lemma1_rhs({2.0, 50.0}, 10.0, cat, 40.0), DomainError);
    CHECK_THROWS_AS(lemma1_rhs({2.0, 50.0}, 10.0, cat, 1600.0), UncertifiedRangeError);
    CHECK_THROWS_AS(lemma1_rhs({0.5, cat.zeros()[2].gamma}, 10.0, cat, 500.0), NearZeroError);
  }
}

TEST_CASE("N(u) upper bound dominates the catalog count") {
  const ZeroCatalog& cat = support::catalog();
  for (double u = 15.0; u < 1500.0; u += 13.7) CHECK(n_of_t(cat, u) <= n_upper_bound(u));
}
