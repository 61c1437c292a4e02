#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zmeasure/kernels.hpp"
#include "zmeasure/specfun.hpp"

#include <cmath>
#include <random>

using namespace zm;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Hypergeometric-kernel building blocks evaluated through an independent
// route: Gamma ratios via log-gamma (valid for 0 < z, z' < 1) at real u,
// enabling a Richardson finite-difference check of the analytic diagonal.
struct IndependentHyp {
  double z, zp, xi, w, t;

  double psi_plus(double u) const {
    return std::sqrt(t) * std::pow(xi, u + 0.5) *
           std::exp((z + zp) * std::log1p(-xi) + log_gamma_real(u + 1 + z) +
                    log_gamma_real(u + 1 + zp) - log_gamma_real(1 + z) -
                    log_gamma_real(1 + zp) - 2.0 * log_gamma_real(u + 1));
  }
  double P(double u) const {
    return std::sqrt(psi_plus(u)) *
           gauss_2f1({-z, 0}, {-zp, 0}, {u + 1, 0}, w).real();
  }
  double Q(double u) const {
    return std::sqrt(t * xi) / (1 - xi) * std::sqrt(psi_plus(u)) *
           gauss_2f1({1 - z, 0}, {1 - zp, 0}, {u + 2, 0}, w).real() / (u + 1);
  }
  double diag(double u) const {
    auto d = [&](auto&& f, double h) { return (f(u + h) - f(u - h)) / (2 * h); };
    auto rich = [&](auto&& f) {
      double h = 1e-2;
      double d1 = d(f, h), d2 = d(f, h / 2);
      return (4 * d2 - d1) / 3;
    };
    double dp = rich([&](double v) { return P(v); });
    double dq = rich([&](double v) { return Q(v); });
    return Q(u) * dp - P(u) * dq;
  }
};

}  // namespace

TEST_CASE("airy kernel values") {
  Kernel k = airy_kernel();
  // K(0,0) = Ai'(0)^2 = 3^{-2/3} / Gamma(1/3)^2
  double expect = std::pow(3.0, -2.0 / 3.0) /
                  std::pow(std::exp(log_gamma_real(1.0 / 3.0)), 2);
  CHECK(k(0.0, 0.0) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(k(1.0, -1.0) == doctest::Approx(k(-1.0, 1.0)).epsilon(1e-12));
  SUBCASE("diagonal continuity") {
    double base = k(0.5, 0.5);
    for (double eps : {1e-2, 1e-4, 1e-6})
      CHECK(std::fabs(k(0.5, 0.5 + eps) - base) < 10 * eps + 1e-12);
  }
}

TEST_CASE("sine kernels") {
  Kernel d = sine_kernel_discrete(1.0);
  CHECK(d(0.0, 0.0) == doctest::Approx(1.0 / kPi));
  CHECK(d(3.0, 7.0) == doctest::Approx(std::sin(-4.0) / (-4.0 * kPi)));
  CHECK_THROWS(d(0.5, 1.0));  // off-lattice
  Kernel c = sine_kernel_continuous();
  CHECK(c(0.3, 0.3) == 1.0);
  CHECK(c(0.0, 0.5) == doctest::Approx(std::sin(kPi * 0.5) / (kPi * 0.5)));
  CHECK_THROWS(sine_kernel_discrete(3.5));
}

TEST_CASE("hypergeometric kernel: symmetry, diagonal, positivity") {
  ZParams zp = ZParams::rational(Rational(1, 2), Rational(1, 2));
  Kernel k = hypergeometric_kernel(zp, 0.3);
  SUBCASE("sign symmetry relation") {
    CHECK(k(0.5, -1.5) == doctest::Approx(-k(-1.5, 0.5)).epsilon(1e-10));
    std::mt19937 gen(42);
    std::uniform_int_distribution<int> pick(-6, 5);
    for (int trial = 0; trial < 25; ++trial) {
      double x = pick(gen) + 0.5, y = pick(gen) + 0.5;
      if (x == y) continue;
      double sgn = (x > 0 ? 1 : -1) * (y > 0 ? 1 : -1);
      double lhs = k(x, y), rhs = sgn * k(y, x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
  SUBCASE("diagonal finite and positive") {
    double v = k(0.5, 0.5);
    CHECK(std::isfinite(v));
    CHECK(v > 0);
    CHECK(v < 1);
  }
  SUBCASE("diagonal matches the independent Richardson route") {
    IndependentHyp ih{0.5, 0.5, 0.3, 0.3 / (0.3 - 1.0), 0.25};
    for (double x : {0.5, 1.5, 2.5, 3.5})
      CHECK(k(x, x) == doctest::Approx(ih.diag(x - 0.5)).epsilon(1e-7));
  }
  SUBCASE("off-diagonal matches the independent continuation route") {
    IndependentHyp ih{0.5, 0.5, 0.3, 0.3 / (0.3 - 1.0), 0.25};
    Kernel kp = positive_part(k);
    for (double x : {0.5, 1.5, 3.5})
      for (double y : {2.5, 4.5}) {
        if (x == y) continue;
        double u = x - 0.5, v = y - 0.5;
        double expect = (ih.P(u) * ih.Q(v) - ih.P(v) * ih.Q(u)) / (x - y);
        CHECK(kp(x, y) == doctest::Approx(expect).epsilon(1e-10));
      }
  }
  SUBCASE("phase space validation") {
    CHECK_THROWS(k(0.4, 0.5));
    CHECK_THROWS(k(1.0, 0.5));
  }
  SUBCASE("conjugate mode produces a real sign-symmetric kernel") {
    Kernel kc = hypergeometric_kernel(ZParams::conjugate({0.4, 0.8}), 0.3);
    CHECK(std::isfinite(kc(0.5, 0.5)));
    CHECK(kc(1.5, -0.5) == doctest::Approx(-kc(-0.5, 1.5)).epsilon(1e-10));
    CHECK(kc(0.5, 0.5) > 0);
  }
  CHECK_THROWS(hypergeometric_kernel(zp, 0.97));
  CHECK_THROWS(hypergeometric_kernel(zp, 0.0));
}

TEST_CASE("positive part") {
  ZParams zp = ZParams::rational(Rational(1, 2), Rational(1, 2));
  Kernel k = hypergeometric_kernel(zp, 0.3);
  Kernel kp = positive_part(k);
  CHECK(kp.symmetry() == KernelSymmetry::symmetric);
  for (double x : {0.5, 1.5, 2.5})
    for (double y : {0.5, 3.5}) {
      CHECK(kp(x, y) == doctest::Approx(k(x, y)).epsilon(1e-14));
      CHECK(kp(x, y) == doctest::Approx(kp(y, x)).epsilon(1e-10));
    }
  CHECK_THROWS(kp(-0.5, 0.5));
  CHECK_THROWS(positive_part(airy_kernel()));  // not sign-symmetric
}

TEST_CASE("christoffel-darboux kernels") {
  SUBCASE("order 1 is the rank-one projection") {
    auto fam = OrthoPolyFamily::charlier(1.0);
    Kernel k = cd_kernel(fam, 1);
    for (double x : {0, 1, 3})
      for (double y : {0, 2}) {
        double expect = std::sqrt(fam.weight(x) * fam.weight(y)) *
                        fam.eval(0, x) * fam.eval(0, y) / fam.norm(0);
        CHECK(k(x, y) == doctest::Approx(expect).epsilon(1e-12));
      }
  }
  SUBCASE("pair form equals the projection form off the diagonal") {
    std::vector<OrthoPolyFamily> fams = {
        OrthoPolyFamily::laguerre(2.0), OrthoPolyFamily::hermite(),
        OrthoPolyFamily::charlier(1.0), OrthoPolyFamily::meixner(2.0, 0.4)};
    for (const auto& fam : fams)
      for (int k = 1; k <= 5; ++k) {
        Kernel kk = cd_kernel(fam, k);
        std::vector<double> xs =
            fam.discrete() ? std::vector<double>{0, 1, 4, 7}
                           : std::vector<double>{0.4, 1.3, 2.9, 5.1};
        for (double x : xs)
          for (double y : xs) {
            if (x == y) continue;
            CHECK(kk(x, y) ==
                  doctest::Approx(cd_kernel_pair_form(fam, k, x, y))
                      .epsilon(1e-9));
          }
      }
  }
  SUBCASE("charlier trace equals the order") {
    Kernel k = cd_kernel(OrthoPolyFamily::charlier(1.0), 3);
    double tr = 0;
    for (int x = 0; x <= 100; ++x) tr += k(x, x);
    CHECK(tr == doctest::Approx(3.0).epsilon(1e-8));
  }
  SUBCASE("hermite k=2 integrated density") {
    Kernel k = cd_kernel(OrthoPolyFamily::hermite(), 2);
    double v = adaptive_gauss_legendre([&](double x) { return k(x, x); },
                                       -12.0, 12.0, 1e-10);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-8));
  }
  SUBCASE("discrete projection property") {
    for (auto fam : {OrthoPolyFamily::charlier(1.0),
                     OrthoPolyFamily::meixner(2.0, 0.4)}) {
      Kernel k = cd_kernel(fam, 3);
      for (double x : {0.0, 1.0, 2.0})
        for (double zpt : {0.0, 3.0}) {
          double s = 0;
          for (int y = 0; y <= 200; ++y) s += k(x, y) * k(y, zpt);
          CHECK(std::fabs(s - k(x, zpt)) <= 1e-7);
        }
    }
  }
  SUBCASE("continuous projection property (k <= 5)") {
    Kernel k = cd_kernel(OrthoPolyFamily::laguerre(1.0), 5);
    for (double x : {0.7, 2.5})
      for (double zpt : {1.4, 6.0}) {
        double s = adaptive_gauss_legendre(
            [&](double y) { return k(x, y) * k(y, zpt); }, 0.0, 120.0, 1e-9);
        CHECK(std::fabs(s - k(x, zpt)) <= 1e-6);
      }
  }
}

TEST_CASE("plancherel kernel") {
  PrecisionPolicy pol;
  Kernel k = plancherel_kernel(1.0, pol);
  SUBCASE("sign symmetry") {
    CHECK(k(0.5, -0.5) == doctest::Approx(-k(-0.5, 0.5)).epsilon(1e-10));
    CHECK(k(1.5, 2.5) == doctest::Approx(k(2.5, 1.5)).epsilon(1e-10));
  }
  SUBCASE("diagonal equals the projection series, off-diagonal telescopes") {
    double arg = 2.0;
    for (double x : {0.5, 1.5})
      for (double y : {2.5, 3.5}) {
        int u = static_cast<int>(x - 0.5), v = static_cast<int>(y - 0.5);
        double series = 0;
        for (int s = 1; s <= 60; ++s)
          series += bessel_j(u + s, arg, pol) * bessel_j(v + s, arg, pol);
        CHECK(k(x, y) == doctest::Approx(series).epsilon(1e-11));
      }
  }
  SUBCASE("far tail decay") { CHECK(k(20.5, 20.5) <= 1e-10); }
  SUBCASE("density bounds") {
    for (double x : {0.5, 1.5, 2.5, -0.5, -3.5}) {
      double v = k(x, x);
      CHECK(v >= 0);
      CHECK(v <= 1);
    }
  }
  CHECK_THROWS(plancherel_kernel(0.0));
  CHECK_THROWS(plancherel_kernel(2e4));
}

TEST_CASE("whittaker kernel") {
  ZParams zp = ZParams::rational(Rational(1, 3), Rational(2, 3));
  Kernel k = whittaker_kernel(zp);
  SUBCASE("sign symmetry at (0.5, -0.7)") {
    CHECK(k(0.5, -0.7) == doctest::Approx(-k(-0.7, 0.5)).epsilon(1e-9));
    CHECK(k(1.3, 0.4) == doctest::Approx(k(0.4, 1.3)).epsilon(1e-9));
  }
  SUBCASE("diagonal finite") {
    CHECK(std::isfinite(k(0.5, 0.5)));
    CHECK(std::isfinite(k(-0.9, -0.9)));
  }
  SUBCASE("diagonal continuity") {
    double base = k(0.8, 0.8);
    for (double eps : {1e-3, 1e-5})
      CHECK(std::fabs(k(0.8, 0.8 + eps) - base) < 50 * eps + 1e-7);
  }
  CHECK_THROWS(k(0.0, 0.5));
  SUBCASE("integer z degenerates to the laguerre kernel") {
    for (int kk = 1; kk <= 3; ++kk) {
      Kernel w = positive_part(whittaker_kernel(ZParams::degenerate(kk, kk + 2)));
      Kernel lag = cd_kernel(OrthoPolyFamily::laguerre(2.0), kk);
      for (double x : {0.4, 1.1, 2.3, 3.7, 5.2})
        for (double y : {0.4, 1.1, 2.3, 3.7, 5.2})
          CHECK(w(x, y) == doctest::Approx(lag(x, y)).epsilon(1e-6));
    }
  }
}

TEST_CASE("hypergeometric positive part equals the shifted meixner kernel") {
  const int kpar = 3, lpar = 5;
  const double xi = 0.4;
  Kernel hyp = positive_part(
      hypergeometric_kernel(ZParams::degenerate(kpar, lpar), xi));
  Kernel mx = cd_kernel(OrthoPolyFamily::meixner(lpar - kpar, xi), kpar);
  double worst = 0;
  for (int p = 0; p < 10; ++p)
    for (int q = 0; q < 10; ++q) {
      double lhs = hyp(p + 0.5, q + 0.5);
      double rhs = mx(p + kpar, q + kpar);
      worst = std::max(worst, std::fabs(lhs - rhs));
    }
  CHECK(worst <= 1e-9);
}

TEST_CASE("correlation determinants") {
  Kernel k = sine_kernel_continuous();
  CHECK(correlation_det(k, {0.3}) == doctest::Approx(k(0.3, 0.3)));
  double a = k(0.1, 0.1), b = k(0.1, 0.7), c = k(0.7, 0.1), d = k(0.7, 0.7);
  CHECK(correlation_det(k, {0.1, 0.7}) == doctest::Approx(a * d - b * c));
  CHECK_THROWS(correlation_det(k, {0.1, 0.1}));
  CHECK_THROWS(correlation_det(k, std::vector<double>(13, 0.0)));
  SUBCASE("determinantal repulsion on the positive half") {
    ZParams zp = ZParams::rational(Rational(1, 2), Rational(1, 2));
    Kernel kp = positive_part(hypergeometric_kernel(zp, 0.3));
    for (double x : {0.5, 1.5})
      for (double y : {2.5, 3.5}) {
        double r2 = correlation_det(kp, {x, y});
        double r1a = kp(x, x), r1b = kp(y, y);
        CHECK(r2 >= 0);
        CHECK(r2 <= r1a * r1b + 1e-14);
      }
  }
  SUBCASE("single-point correlations are probabilities") {
    Kernel kp = plancherel_kernel(2.0);
    for (double x : {0.5, 1.5, -0.5, 4.5}) {
      double r = correlation_det(kp, {x});
      CHECK(r >= 0);
      CHECK(r <= 1);
    }
  }
}
