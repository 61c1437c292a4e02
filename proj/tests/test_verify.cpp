#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zmeasure/verify.hpp"

#include <json.hpp>

#include <cmath>

using namespace zm;

TEST_CASE("adaptive truncation levels") {
  MixingLaw nb = MixingLaw::negative_binomial(Rational(3, 10), Rational(1, 4));
  int n1 = adaptive_truncation(nb, 1e-4);
  int n2 = adaptive_truncation(nb, 1e-8);
  CHECK(n1 < n2);
  CHECK(mixing_tail(nb, n1) <= 1e-4);
  CHECK(mixing_tail(nb, n2) <= 1e-8);
  CHECK_THROWS(adaptive_truncation(nb, 1e-60, 20));
}

TEST_CASE("tail bound is monotone in the level") {
  MixingLaw po = MixingLaw::poisson(Rational(2));
  double prev = 1.0;
  for (int n = 0; n <= 30; ++n) {
    double t = mixing_tail(po, n);
    CHECK(t <= prev + 1e-15);
    prev = t;
  }
}

TEST_CASE("brute force with empty configuration recovers total mass") {
  MeasureSpec spec = MeasureSpec::mixed_z(
      ZParams::rational(Rational(1, 2), Rational(1, 2)), Rational(3, 10));
  PointConfiguration empty;
  for (int trunc : {8, 16, 24, 40}) {
    CorrelationEstimate est = brute_force_correlation(spec, empty, trunc);
    CHECK(est.value ==
          doctest::Approx(1.0 - est.tail.bound).epsilon(1e-11));
  }
}

TEST_CASE("parallel and serial brute force agree") {
  MeasureSpec spec = MeasureSpec::poissonized_plancherel(Rational(2));
  PointConfiguration pts = PointConfiguration::from_halves({1, -1});
  auto p = brute_force_correlation(spec, pts, 24);
  auto s = brute_force_correlation_serial(spec, pts, 24);
  CHECK(p.value == doctest::Approx(s.value).epsilon(1e-13));
  // deterministic across repeated runs
  auto p2 = brute_force_correlation(spec, pts, 24);
  CHECK(p.value == p2.value);
}

TEST_CASE("brute-force examples") {
  SUBCASE("plancherel rho_1 at 1/2 equals the kernel diagonal") {
    MeasureSpec spec = MeasureSpec::poissonized_plancherel(Rational(1));
    PointConfiguration pts = PointConfiguration::from_halves({1});
    int trunc = adaptive_truncation(spec.mixing, 1e-10);
    CorrelationEstimate est = brute_force_correlation(spec, pts, trunc);
    Kernel k = plancherel_kernel(1.0);
    CHECK(std::fabs(k(0.5, 0.5) - est.value) <= 1e-8);
    // the negative side must agree as well (transpose symmetry)
    PointConfiguration neg = PointConfiguration::from_halves({-1});
    CorrelationEstimate est2 = brute_force_correlation(spec, neg, trunc);
    CHECK(std::fabs(k(-0.5, -0.5) - est2.value) <= 1e-8);
    CHECK(est.value == doctest::Approx(est2.value).epsilon(1e-10));
  }
  SUBCASE("two-point plancherel correlation against the determinant") {
    MeasureSpec spec = MeasureSpec::poissonized_plancherel(Rational(1));
    PointConfiguration pts = PointConfiguration::from_halves({1, -1});
    int trunc = adaptive_truncation(spec.mixing, 1e-10);
    CorrelationEstimate est = brute_force_correlation(spec, pts, trunc);
    Kernel k = plancherel_kernel(1.0);
    double det = correlation_det(k, {0.5, -0.5});
    CHECK(std::fabs(det - est.value) <= 1e-8);
  }
  SUBCASE("z-measure point probability is positive and below the mass") {
    MeasureSpec spec = MeasureSpec::mixed_z(
        ZParams::rational(Rational(1, 2), Rational(1, 2)), Rational(3, 10));
    PointConfiguration pts = PointConfiguration::from_halves({5});
    CorrelationEstimate est = brute_force_correlation(spec, pts, 30);
    CHECK(est.value > 0);
    CHECK(est.value < 1);
  }
}

TEST_CASE("determinantal correlations match enumeration") {
  ZParams zp = ZParams::rational(Rational(1, 2), Rational(1, 2));
  std::vector<PointConfiguration> configs = {
      PointConfiguration::from_halves({1}),
      PointConfiguration::from_halves({1, 3}),
      PointConfiguration::from_halves({1, -1, -3}),
  };
  TheoremCheckReport rep =
      check_theorem_determinantal(zp, Rational(3, 10), configs, 1e-6);
  CHECK(rep.pass);
  CHECK(rep.worst_certified <= 1e-6);
  for (const auto& row : rep.rows) {
    CHECK(row.gap <= 1e-7);
    CHECK(row.brute_force >= 0);
  }
  SUBCASE("single-point grid") {
    std::vector<PointConfiguration> grid;
    for (int v : {1, -1, 3, -3, 5, -5})
      grid.push_back(PointConfiguration::from_halves({v}));
    TheoremCheckReport r2 =
        check_theorem_determinantal(zp, Rational(3, 10), grid, 1e-6);
    CHECK(r2.pass);
  }
  CHECK_THROWS(check_theorem_determinantal(
      zp, Rational(3, 10), {PointConfiguration::from_halves({1, 3, 5, 7})},
      1e-6));
}

TEST_CASE("limit transition reports") {
  const Transition& t = find_transition("hyp->meixner");
  ConvergenceReport rep = run_transition(t);
  CHECK(rep.pass);
  CHECK(rep.monotone);
  CHECK(rep.final_error <= rep.tolerance);
  SUBCASE("json schema") {
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j.contains("name"));
    CHECK(j.contains("steps"));
    CHECK(j["steps"].is_array());
    CHECK(j["steps"][0].contains("s"));
    CHECK(j["steps"][0].contains("max_err"));
    CHECK(j.contains("monotone"));
    CHECK(j.contains("final_error"));
    CHECK(j.contains("tolerance"));
    CHECK(j.contains("pass"));
  }
  SUBCASE("unicode arrow alias") {
    CHECK(find_transition("hyp→meixner").name == "hyp->meixner");
    CHECK_THROWS(find_transition("nosuch"));
  }
  SUBCASE("all ten are registered") {
    CHECK(builtin_transitions().size() == 10);
  }
}

TEST_CASE("depoissonization of the first-row law") {
  DepoissonizationReport rep = check_depoissonization({5, 10, 20});
  REQUIRE(rep.rows.size() == 3);
  for (const auto& row : rep.rows) {
    CHECK(row.tv_distance > 0);
    CHECK(row.tv_distance < 1);
    CHECK(row.truncation_slack < 1e-4);
  }
  CHECK(rep.decreasing);
  CHECK(rep.rows[0].tv_distance > rep.rows[2].tv_distance);
}

TEST_CASE("simplex density moments (two-row measures)") {
  SUBCASE("a = 0") {
    SimplexDensityReport rep = check_simplex_density(0, {50, 100, 200}, 2);
    // limit density 6 (2u-1)^2 on [1/2, 1]: E[u] = 7/8, E[u^2] = 31/40
    CHECK(rep.limit_moments[0] == doctest::Approx(7.0 / 8.0).epsilon(1e-10));
    CHECK(rep.limit_moments[1] == doctest::Approx(31.0 / 40.0).epsilon(1e-10));
    CHECK(rep.errors_decreasing);
    CHECK(rep.final_worst_rel_error < 0.05);
  }
  SUBCASE("a = 1") {
    SimplexDensityReport rep = check_simplex_density(1, {50, 100, 200}, 2);
    CHECK(rep.errors_decreasing);
    CHECK(rep.final_worst_rel_error < 0.05);
  }
  SUBCASE("first moment lives in the admissible band") {
    for (int n : {10, 25}) {
      SimplexDensityReport rep = check_simplex_density(0, {n}, 1);
      double e1 = rep.rows[0].moments[0];
      CHECK(e1 > 0.5);  // x1 is the larger row, rows sum to 1
      CHECK(e1 <= 1.0);
    }
  }
}

TEST_CASE("gamma scaling of the mixture size (heuristic)") {
  GammaScalingReport rep = check_gamma_scaling(
      Rational(1, 4), {Rational(1, 2), Rational(3, 4), Rational(7, 8)}, 2);
  CHECK(rep.heuristic);
  CHECK(rep.decreasing);
  CHECK(rep.rows.back().rel_errors[0] < 0.2);
}
