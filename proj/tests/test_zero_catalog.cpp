#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "support.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/zero_catalog.hpp"
#include "zetalab/zeta_core.hpp"

using namespace zetalab;

TEST_CASE("scan on [14, 50] finds ten zeros located by bisection") {
  const ScanResult r = scan_zeros_detailed(14.0, 50.0);
  const auto& z = r.catalog.zeros();
  REQUIRE(z.size() == 10);
  CHECK(std::abs(z[0].gamma - 14.134725141) < 1e-9);
  // Independent bracket per zero from a fine sign-change grid of the oracle Z.
  std::vector<double> roots;
  double prev_t = 14.0, prev_z = oracle::hardy_z(14.0);
  for (int i = 1; i <= 3600; ++i) {
    const double t = 14.0 + 0.01 * i;
    const double v = oracle::hardy_z(t);
    if ((v > 0) != (prev_z > 0)) roots.push_back(oracle::bisect_zero(prev_t, t));
    prev_t = t;
    prev_z = v;
  }
  REQUIRE(roots.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(std::abs(z[i].gamma - roots[i]) < 1e-9);
    CHECK(z[i].beta == 0.5);
    CHECK(z[i].multiplicity == 1);
    CHECK(z[i].provenance == Provenance::computed);
  }
  // Riemann-von Mangoldt main term agrees with the count.
  CHECK(std::abs(10.0 - (oracle::theta(50.0) / std::numbers::pi + 1.0)) < 1.0);
  CHECK(r.diagnostics.upper_end.count == 10);
  REQUIRE(r.catalog.certified_range());
  CHECK(r.catalog.certified_range()->lo == 14.0);
  CHECK(r.catalog.certified_range()->hi == 50.0);
}

TEST_CASE("scan on [14, 100] gives 29 certified zeros") {
  const ZeroCatalog c = scan_zeros(14.0, 100.0);
  CHECK(c.size() == 29);
  CHECK(c.mode() == CatalogMode::certified);
  CHECK(c.covers(14.0, 100.0));
}

TEST_CASE("an empty window is certified with no zeros") {
  const ZeroCatalog c = scan_zeros(15.0, 15.5);
  CHECK(c.empty());
  CHECK(c.covers(15.0, 15.5));
}

TEST_CASE("scan preconditions") {
  CHECK_THROWS_AS(scan_zeros(13.0, 20.0), DomainError);
  CHECK_THROWS_AS(scan_zeros(50.0, 14.0), DomainError);
  CHECK_THROWS_AS(scan_zeros(20.0, 2.0e6), DomainError);
}

TEST_CASE("every catalogued zero is a root of Z") {
  for (const auto& z : support::catalog().zeros()) {
    CHECK(std::abs(riemann_siegel_Z(z.gamma).value.real()) < 1e-6);
  }
}

TEST_CASE("catalog agrees with the Riemann-von Mangoldt main term") {
  const ZeroCatalog& c = support::catalog();
  for (int i = 0; i < 50; ++i) {
    const double T = 14.5 + (1500.0 - 14.5) * i / 49.0;
    CHECK(std::abs(n_of_t(c, T) - (theta_rs(T) / std::numbers::pi + 1.0)) < 2.0);
  }
  // Spot checks against the classical values N(1000) = 649.
  CHECK(n_of_t(c, 1000.0) == 649);
}

TEST_CASE("scan endpoints use the Turing method above its validity height") {
  const ScanResult r = scan_zeros_detailed(600.0, 1000.0);
  CHECK(r.diagnostics.upper_end.method == CountMethod::turing);
  CHECK(r.diagnostics.lower_end.method == CountMethod::turing);
  CHECK(r.diagnostics.upper_end.count == 649);
  CHECK(r.catalog.size() == static_cast<std::size_t>(649 - n_of_t(support::catalog(), 600.0)));
}

TEST_CASE("count_short_interval") {
  const ZeroCatalog& c = support::catalog();
  CHECK(count_short_interval(c, {0.6, 100.0, 1.0}) == 0);
  CHECK(count_short_interval(c, {0.5, 14.0, 36.0}) == 10);
  const ZeroCatalog s = support::with_zero(0.75, 100.5);
  CHECK(count_short_interval(s, {0.7, 100.0, 1.0}) == 1);
  CHECK(count_short_interval(s, {0.8, 100.0, 1.0}) == 0);
  CHECK_THROWS_AS(count_short_interval(c, {0.5, 1490.0, 20.0}), UncertifiedRangeError);
  CHECK_THROWS_AS(count_short_interval(c, {0.4, 100.0, 1.0}), DomainError);
  CHECK_THROWS_AS(count_short_interval(c, {0.5, 100.0, 0.0}), DomainError);

  SUBCASE("weakly decreasing in sigma and additive over windows") {
    const ZeroCatalog m = support::with_zero(0.7, 300.25, 2);
    for (double T = 20.0; T < 1400.0; T += 37.0) {
      long prev = count_short_interval(m, {0.5, T, 10.0});
      for (double sigma = 0.55; sigma < 1.0; sigma += 0.05) {
        const long n = count_short_interval(m, {sigma, T, 10.0});
        CHECK(n <= prev);
        prev = n;
      }
      const long whole = count_short_interval(m, {0.5, T, 10.0});
      const long left = count_short_interval(m, {0.5, T, 4.0});
      const long right = count_short_interval(m, {0.5, std::nextafter(T + 4.0, 1e9), 6.0 - 1e-12});
      CHECK(whole == left + right);
    }
  }
  SUBCASE("no computed zero lies right of the critical line") {
    for (double sigma : {0.5000001, 0.51, 0.75, 0.99}) {
      CHECK(count_short_interval(c, {sigma, 14.0, 1486.0}) == 0);
    }
  }
}

TEST_CASE("n_of_t") {
  const ZeroCatalog& c = support::catalog();
  const double g1 = c.zeros().front().gamma;
  CHECK(n_of_t(c, 100.0) == 29);
  CHECK(n_of_t(c, 14.0) == 0);
  CHECK(n_of_t(c, g1 + 1e-6) == 1);
  CHECK(n_of_t(c, g1 - 1e-6) == 0);
  CHECK_THROWS_AS(n_of_t(c, 1600.0), UncertifiedRangeError);
  CHECK_THROWS_AS(n_of_t(scan_zeros(200.0, 210.0), 205.0), UncertifiedRangeError);
}

TEST_CASE("inject_synthetic") {
  const ZeroCatalog& c = support::catalog();
  SUBCASE("empty list is the identity") {
    const ZeroCatalog same = inject_synthetic(c, {});
    CHECK(same == c);
    CHECK(same.mode() == CatalogMode::certified);
  }
  SUBCASE("off-line zero puts the catalog in hypothesis mode") {
    const ZeroCatalog s = support::with_zero(0.8, 1000.2);
    CHECK(s.mode() == CatalogMode::hypothesis);
    CHECK(s.size() == c.size() + 1);
    const auto w = s.in_window(1000.2, 1000.2);
    REQUIRE(w.size() == 1);
    CHECK(w[0].beta == 0.8);
    CHECK(w[0].provenance == Provenance::synthetic);
  }
  SUBCASE("ordering is preserved") {
    const std::vector<NontrivialZero> two = {{0.7, 50.2, 1, Provenance::synthetic},
                                             {0.6, 50.1, 1, Provenance::synthetic}};
    const ZeroCatalog s = inject_synthetic(c, two);
    const auto w = s.in_window(50.0, 50.3);
    REQUIRE(w.size() == 2);
    CHECK(w[0].gamma == 50.1);
    CHECK(w[1].gamma == 50.2);
  }
  SUBCASE("coincident ordinates") {
    const double g = c.zeros()[3].gamma;
    const NontrivialZero same{0.5, g, 1, Provenance::synthetic};
    const ZeroCatalog s = inject_synthetic(c, std::span(&same, 1));
    CHECK(s.in_window(g, g)[0].multiplicity == 2);
    const NontrivialZero clash{0.7, g, 1, Provenance::synthetic};
    CHECK_THROWS_AS(inject_synthetic(c, std::span(&clash, 1)), OrderingError);
  }
  SUBCASE("invalid zeros") {
    const NontrivialZero bad{1.0, 40.0, 1, Provenance::synthetic};
    CHECK_THROWS_AS(inject_synthetic(c, std::span(&bad, 1)), DomainError);
  }
  SUBCASE("random ensembles are deterministic") {
    const auto a = random_offline_zeros(11, 20, 100.0, 200.0, 0.6, 0.9);
    const auto b = random_offline_zeros(11, 20, 100.0, 200.0, 0.6, 0.9);
    CHECK(a == b);
    REQUIRE(a.size() == 20);
    for (const auto& z : a) {
      CHECK(z.beta >= 0.6);
      CHECK(z.beta <= 0.9);
      CHECK(z.gamma >= 100.0);
      CHECK(z.gamma <= 200.0);
    }
  }
}

TEST_CASE("catalog construction validates ordering and values") {
  CHECK_THROWS_AS(ZeroCatalog({{0.5, 30.0}, {0.5, 20.0}}, std::nullopt), OrderingError);
  CHECK_THROWS_AS(ZeroCatalog({{0.5, 30.0}, {0.5, 30.0}}, std::nullopt), OrderingError);
  CHECK_THROWS_AS(ZeroCatalog({{0.7, 30.0}}, std::nullopt), DomainError);
  CHECK_THROWS_AS(ZeroCatalog({{0.5, -3.0}}, std::nullopt), DomainError);
}

TEST_CASE("cache file round trip and parse errors") {
  const ZeroCatalog c = scan_zeros(14.0, 100.0);
  const auto dir = support::scratch_dir("catalog");
  save_catalog(c, dir / "z.txt");
  const ZeroCatalog back = load_catalog(dir / "z.txt");
  CHECK(back == c);
  CHECK(back.id() == c.id());
  save_catalog(back, dir / "z2.txt");
  CHECK(support::read_file(dir / "z.txt") == support::read_file(dir / "z2.txt"));

  const std::string text = format_catalog(c);
  CHECK(text.rfind("zetalab-zeros v1; certified=14.000000000000:100.000000000000; count=29\n", 0) == 0);
  CHECK(text.find("14.134725141") != std::string::npos);

  SUBCASE("beta outside (0, 1)") {
    const std::string bad = "zetalab-zeros v1; certified=none; count=1; mode=hypothesis\n"
                            "20.000000000000 1.200000000000 1 synthetic\n";
    try {
      parse_catalog(bad);
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("unknown header field is named") {
    const std::string bad = "zetalab-zeros v1; certified=none; count=0; colour=blue\n";
    try {
      parse_catalog(bad);
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(std::string(e.what()).find("colour") != std::string::npos);
    }
  }
  SUBCASE("count mismatch and garbage") {
    CHECK_THROWS_AS(parse_catalog("zetalab-zeros v1; certified=none; count=2\n"), FormatError);
    CHECK_THROWS_AS(parse_catalog("not a header\n"), FormatError);
    CHECK_THROWS_AS(load_catalog(dir / "missing.txt"), FormatError);
  }
  SUBCASE("synthetic zeros round trip in hypothesis mode") {
    const ZeroCatalog s = support::with_zero(0.75, 500.3, 2);
    const ZeroCatalog b = parse_catalog(format_catalog(s));
    CHECK(b == s);
    CHECK(b.mode() == CatalogMode::hypothesis);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("gram points") {
  for (long n : {-1L, 0L, 1L, 10L, 100L}) {
    CHECK(std::abs(theta_rs(gram_point(n)) - n * std::numbers::pi) < 1e-9);
    if (n >= 0) CHECK(std::abs(oracle::theta(gram_point(n)) - n * std::numbers::pi) < 1e-9);
  }
}
