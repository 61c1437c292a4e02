#include "zmeasure/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace zm {

namespace {

bool is_half_integer(double x) {
  double d = 2.0 * x;
  return std::fabs(d - std::llround(d)) < 1e-9 && (std::llround(d) % 2 != 0);
}

bool is_integer(double x) {
  return std::fabs(x - std::llround(x)) < 1e-9;
}

}  // namespace

Kernel::Kernel(std::string name, PhaseSpace space, KernelSymmetry sym,
               std::function<double(double, double)> off_diagonal,
               std::function<double(double)> diagonal)
    : name_(std::move(name)),
      space_(space),
      symmetry_(sym),
      off_(std::move(off_diagonal)),
      diag_(std::move(diagonal)) {}

void Kernel::check_point(double x) const {
  switch (space_) {
    case PhaseSpace::Zprime:
      if (!is_half_integer(x))
        throw std::invalid_argument(name_ + ": point must be a half-integer");
      return;
    case PhaseSpace::ZprimePlus:
      if (!is_half_integer(x) || x < 0)
        throw std::invalid_argument(name_ +
                                    ": point must be a positive half-integer");
      return;
    case PhaseSpace::Zplus:
      if (!is_integer(x) || x < -0.5)
        throw std::invalid_argument(name_ + ": point must be in Z+");
      return;
    case PhaseSpace::Zall:
      if (!is_integer(x))
        throw std::invalid_argument(name_ + ": point must be an integer");
      return;
    case PhaseSpace::Real:
      return;
    case PhaseSpace::RealPlus:
      if (!(x > 0))
        throw std::invalid_argument(name_ + ": point must be positive");
      return;
    case PhaseSpace::RealStar:
      if (x == 0)
        throw std::invalid_argument(name_ + ": point must be nonzero");
      return;
  }
}

double Kernel::operator()(double x, double y) const {
  check_point(x);
  check_point(y);
  if (x == y) return diag_(x);
  return off_(x, y);
}

// ---------------------------------------------------------------------------
// hypergeometric kernel

namespace {

// Evaluates P_pm(u), Q_pm(u) and their index derivatives for integer u >= 0.
//
//   psi_pm(u) = sqrt(t) xi^{u+1/2} (1-xi)^{pm(z+z')}
//               prod_{j=1..u} (j pm z)(j pm z') / j^2
//   P_pm(u) = sqrt(psi_pm(u)) F(∓z, ∓z'; u+1; w),     w = xi/(xi-1)
//   Q_pm(u) = sqrt(t xi)/(1-xi) sqrt(psi_pm(u)) F(1∓z, 1∓z'; u+2; w)/(u+1)
//
// The Gamma-ratio in psi is computed as an interleaved finite product, so
// degenerate integer parameters need no continuation and overflow cannot
// occur.  Index derivatives use digamma plus the d/dc series of 2F1.
struct HypParts {
  bool conjugate = false;
  bool integer_mode = false;
  double z = 0.0, zpr = 0.0;
  Complex zc{0.0, 0.0};
  double t = 0.0, xi = 0.0, w = 0.0;
  PrecisionPolicy pol;

  struct PQ {
    double p, q, dp, dq;
  };

  mutable std::mutex mu;
  mutable std::unordered_map<long long, PQ> cache;

  double factor(int sign, int j) const {
    if (conjugate) {
      Complex base(static_cast<double>(j), 0.0);
      Complex v = sign > 0 ? base + zc : base - zc;
      return std::norm(v) / (static_cast<double>(j) * j);
    }
    double s = sign;
    return (j + s * z) * (j + s * zpr) / (static_cast<double>(j) * j);
  }

  double psi(int sign, int u) const {
    double zsum = conjugate ? 2.0 * zc.real() : z + zpr;
    double v = std::sqrt(t) * std::sqrt(xi) *
               std::exp(sign * zsum * std::log1p(-xi));
    for (int j = 1; j <= u; ++j) v *= xi * factor(sign, j);
    return v;
  }

  double dlnpsi(int sign, int u) const {
    double lx = std::log(xi);
    if (conjugate) {
      double du = static_cast<double>(u);
      return lx + 2.0 * digamma(Complex(du + 1.0, 0.0) + double(sign) * zc).real() -
             2.0 * digamma_real(du + 1.0);
    }
    if (integer_mode && sign < 0) {
      // prod (j-k)(j-l) = Gamma(k)Gamma(l) / (Gamma(k-u)Gamma(l-u)), u < min(k,l)
      return lx + digamma_real(z - u) + digamma_real(zpr - u) -
             2.0 * digamma_real(u + 1.0);
    }
    return lx + digamma_real(u + 1.0 + sign * z) +
           digamma_real(u + 1.0 + sign * zpr) - 2.0 * digamma_real(u + 1.0);
  }

  static double checked_real(Complex v) {
    if (std::fabs(v.imag()) > 1e-9 * std::max(std::fabs(v.real()), 1e-30))
      throw std::runtime_error("hypergeometric kernel: nonreal intermediate");
    return v.real();
  }

  PQ eval(int sign, int u) const {
    long long key = static_cast<long long>(u) * 2 + (sign > 0 ? 1 : 0);
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
    }
    double ps = psi(sign, u);
    PQ r{};
    if (ps < 0)
      throw std::domain_error(
          "hypergeometric kernel: psi negative (inadmissible parameters)");
    if (ps == 0.0) {
      std::lock_guard<std::mutex> lock(mu);
      cache.emplace(key, r);
      return r;
    }
    double sq = std::sqrt(ps);
    Complex a, b;
    if (conjugate) {
      a = -double(sign) * zc;
      b = -double(sign) * std::conj(zc);
    } else {
      a = Complex(-sign * z, 0.0);
      b = Complex(-sign * zpr, 0.0);
    }
    auto fp = gauss_2f1_with_dc(a, b, Complex(u + 1.0, 0.0), w, pol);
    auto fq = gauss_2f1_with_dc(a + 1.0, b + 1.0, Complex(u + 2.0, 0.0), w, pol);
    double c_q = std::sqrt(t * xi) / (1.0 - xi);
    double u1 = u + 1.0;
    double dln = dlnpsi(sign, u);
    double fpv = checked_real(fp.value), fpd = checked_real(fp.dc);
    double fqv = checked_real(fq.value), fqd = checked_real(fq.dc);
    r.p = sq * fpv;
    r.q = c_q * sq * fqv / u1;
    r.dp = 0.5 * dln * r.p + sq * fpd;
    r.dq = 0.5 * dln * r.q + c_q * sq * (fqd / u1 - fqv / (u1 * u1));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, r);
    return r;
  }
};

struct FourFunctions {
  double f1, f2, g1, g2;
};

// The (1.3)-type case split shared by the hypergeometric, Plancherel and
// Whittaker kernels: plus/minus building blocks keyed by the point sign.
template <class PlusMinus>
FourFunctions assemble(const PlusMinus& pm, double x) {
  FourFunctions r{};
  if (x > 0) {
    auto [p, q] = pm.plus(x);
    r.f1 = -q;
    r.f2 = p;
    r.g1 = p;
    r.g2 = q;
  } else {
    auto [p, q] = pm.minus(-x);
    r.f1 = p;
    r.f2 = q;
    r.g1 = -q;
    r.g2 = p;
  }
  return r;
}

}  // namespace

Kernel hypergeometric_kernel(const ZParams& zp, double xi,
                             const PrecisionPolicy& pol) {
  if (!(xi > 0 && xi <= 0.95))
    throw std::invalid_argument(
        "hypergeometric kernel: xi must lie in (0, 0.95]");
  auto parts = std::make_shared<HypParts>();
  parts->pol = pol;
  parts->xi = xi;
  parts->w = xi / (xi - 1.0);
  parts->t = zp.t();
  switch (zp.mode) {
    case ZParams::Mode::conjugate_pair:
      parts->conjugate = true;
      parts->zc = zp.zc;
      break;
    case ZParams::Mode::degenerate_integer:
      parts->integer_mode = true;
      parts->z = zp.z_real();
      parts->zpr = zp.zp_real();
      break;
    case ZParams::Mode::rational_pair:
      parts->z = zp.z_real();
      parts->zpr = zp.zp_real();
      break;
  }

  struct PM {
    std::shared_ptr<HypParts> h;
    std::pair<double, double> plus(double x) const {
      auto r = h->eval(+1, static_cast<int>(std::llround(x - 0.5)));
      return {r.p, r.q};
    }
    std::pair<double, double> minus(double xabs) const {
      auto r = h->eval(-1, static_cast<int>(std::llround(xabs - 0.5)));
      return {r.p, r.q};
    }
  } pm{parts};

  auto off = [pm](double x, double y) {
    FourFunctions fx = assemble(pm, x), fy = assemble(pm, y);
    return (fx.f1 * fy.g1 + fx.f2 * fy.g2) / (x - y);
  };
  auto diag = [parts](double x) {
    int sign = x > 0 ? +1 : -1;
    int u = static_cast<int>(std::llround(std::fabs(x) - 0.5));
    auto r = parts->eval(sign, u);
    return r.q * r.dp - r.p * r.dq;
  };
  return Kernel("hypergeometric", PhaseSpace::Zprime,
                KernelSymmetry::sign_symmetric, off, diag);
}

// ---------------------------------------------------------------------------
// positive part

Kernel positive_part(const Kernel& k) {
  if (k.symmetry() != KernelSymmetry::sign_symmetric)
    throw std::invalid_argument("positive_part needs a sign-symmetric kernel");
  PhaseSpace target;
  switch (k.space()) {
    case PhaseSpace::Zprime:
      target = PhaseSpace::ZprimePlus;
      break;
    case PhaseSpace::RealStar:
      target = PhaseSpace::RealPlus;
      break;
    default:
      throw std::invalid_argument("positive_part: kernel must live on Z' or R*");
  }
  Kernel base = k;
  return Kernel(k.name() + "+", target, KernelSymmetry::symmetric,
                [base](double x, double y) { return base(x, y); },
                [base](double x) { return base(x, x); });
}

// ---------------------------------------------------------------------------
// Christoffel-Darboux kernels

namespace {

PhaseSpace cd_space(const OrthoPolyFamily& fam) {
  switch (fam.family()) {
    case OrthoFamily::laguerre:
      return PhaseSpace::RealPlus;
    case OrthoFamily::hermite:
      return PhaseSpace::Real;
    default:
      return PhaseSpace::Zplus;
  }
}

}  // namespace

Kernel cd_kernel(const OrthoPolyFamily& fam, int k) {
  if (k < 1 || k > 200)
    throw std::invalid_argument("cd_kernel: order must be in 1..200");
  auto family = std::make_shared<OrthoPolyFamily>(fam);
  auto sum_form = [family, k](double x, double y) {
    std::vector<double> px = family->phi(k, x);
    std::vector<double> py = family->phi(k, y);
    double s = 0.0;
    for (int n = 0; n < k; ++n) s += px[n] * py[n];
    return s;
  };
  return Kernel("cd-" + fam.name(), cd_space(fam), KernelSymmetry::symmetric,
                sum_form, [sum_form](double x) { return sum_form(x, x); });
}

double cd_kernel_pair_form(const OrthoPolyFamily& fam, int k, double x,
                           double y) {
  if (x == y) throw std::invalid_argument("pair form is off-diagonal only");
  double pref = fam.leading(k - 1).value() /
                (fam.leading(k).value() * fam.norm(k - 1));
  double num = fam.eval(k, x) * fam.eval(k - 1, y) -
               fam.eval(k - 1, x) * fam.eval(k, y);
  return pref * num / (x - y) * std::sqrt(fam.weight(x) * fam.weight(y));
}

// ---------------------------------------------------------------------------
// Plancherel kernel

Kernel plancherel_kernel(double theta, const PrecisionPolicy& pol) {
  if (!(theta > 0) || theta > 1e4)
    throw std::invalid_argument("plancherel kernel: theta must be in (0, 1e4]");
  double arg = 2.0 * std::sqrt(theta);
  double pref = std::pow(theta, 0.25);
  auto j = [pol, arg](int m) { return bessel_j(m, arg, pol); };

  struct PM {
    double pref;
    std::function<double(int)> j;
    std::pair<double, double> at(double xabs) const {
      int u = static_cast<int>(std::llround(xabs - 0.5));
      return {pref * j(u), pref * j(u + 1)};
    }
    std::pair<double, double> plus(double x) const { return at(x); }
    std::pair<double, double> minus(double xabs) const { return at(xabs); }
  } pm{pref, j};

  auto off = [pm](double x, double y) {
    FourFunctions fx = assemble(pm, x), fy = assemble(pm, y);
    return (fx.f1 * fy.g1 + fx.f2 * fy.g2) / (x - y);
  };
  // Diagonal through the projection series sum_{s>=1} J_{u+s}^2 (telescoped
  // Christoffel-Darboux limit); the negative side matches by the transpose
  // symmetry of the poissonized Plancherel measure.
  auto diag = [j, arg](double x) {
    int u = static_cast<int>(std::llround(std::fabs(x) - 0.5));
    double sum = 0.0;
    int max_order = std::max(u + 1, static_cast<int>(std::ceil(arg))) + 80;
    for (int m = u + 1; m <= max_order; ++m) {
      double t = j(m);
      sum += t * t;
      if (m > arg && t * t < 1e-30 * std::max(sum, 1e-280)) break;
    }
    return sum;
  };
  return Kernel("plancherel", PhaseSpace::Zprime, KernelSymmetry::sign_symmetric,
                off, diag);
}

// ---------------------------------------------------------------------------
// Whittaker kernel

namespace {

struct WhittakerParts {
  double z, zpr, t;
  double gplus, gminus;  // 1/(Gamma(1 pm z) Gamma(1 pm z')), may be 0
  PrecisionPolicy pol;

  std::pair<double, double> side(int sign, double x) const {
    double g = sign > 0 ? gplus : gminus;
    if (g == 0.0) return {0.0, 0.0};
    double kap_p = (sign * (z + zpr) + 1.0) / 2.0;
    double kap_q = (sign * (z + zpr) - 1.0) / 2.0;
    double mu = (z - zpr) / 2.0;
    double root = std::sqrt(g / x);
    double p = std::pow(t, 0.25) * root * whittaker_w_ext(kap_p, mu, x, pol);
    double q = std::pow(t, 0.75) * root * whittaker_w_ext(kap_q, mu, x, pol);
    return {p, q};
  }
  std::pair<double, double> plus(double x) const { return side(+1, x); }
  std::pair<double, double> minus(double xabs) const { return side(-1, xabs); }
};

}  // namespace

Kernel whittaker_kernel(const ZParams& zp, const PrecisionPolicy& pol) {
  if (zp.mode == ZParams::Mode::conjugate_pair)
    throw std::invalid_argument("whittaker kernel: real parameter modes only");
  auto parts = std::make_shared<WhittakerParts>();
  parts->z = zp.z_real();
  parts->zpr = zp.zp_real();
  parts->t = zp.t();
  parts->pol = pol;
  for (int sign : {+1, -1}) {
    SignedLogGamma g1 = signed_log_gamma(1.0 + sign * parts->z);
    SignedLogGamma g2 = signed_log_gamma(1.0 + sign * parts->zpr);
    double g;
    if (g1.sign == 0 || g2.sign == 0) {
      g = 0.0;  // Gamma pole: that side of the kernel vanishes
    } else {
      g = g1.sign * g2.sign * std::exp(-(g1.log_abs + g2.log_abs));
      if (g < 0)
        throw std::domain_error(
            "whittaker kernel: negative Gamma product (inadmissible z, z')");
    }
    (sign > 0 ? parts->gplus : parts->gminus) = g;
  }

  struct PM {
    std::shared_ptr<WhittakerParts> w;
    std::pair<double, double> plus(double x) const { return w->plus(x); }
    std::pair<double, double> minus(double xabs) const { return w->minus(xabs); }
  } pm{parts};

  auto off = [pm](double x, double y) {
    FourFunctions fx = assemble(pm, x), fy = assemble(pm, y);
    return (fx.f1 * fy.g1 + fx.f2 * fy.g2) / (x - y);
  };
  // Continuous variable: Richardson-extrapolated symmetric difference of the
  // numerator; documented accuracy ~1e-7.
  auto diag = [pm](double x) {
    FourFunctions fx = assemble(pm, x);
    auto numer = [&](double y) {
      FourFunctions fy = assemble(pm, y);
      return fx.f1 * fy.g1 + fx.f2 * fy.g2;
    };
    double h = std::min(0.05, std::fabs(x) / 4.0);
    auto slope = [&](double hh) { return (numer(x + hh) - numer(x - hh)) / (2.0 * hh); };
    double d = (4.0 * slope(h / 2.0) - slope(h)) / 3.0;
    return -d;
  };
  return Kernel("whittaker", PhaseSpace::RealStar, KernelSymmetry::sign_symmetric,
                off, diag);
}

// ---------------------------------------------------------------------------
// Airy and sine kernels

Kernel airy_kernel(const PrecisionPolicy& pol) {
  auto off = [pol](double x, double y) {
    AiryValue ax = airy(x, pol), ay = airy(y, pol);
    return (ax.ai * ay.aip - ax.aip * ay.ai) / (x - y);
  };
  auto diag = [pol](double x) {
    AiryValue a = airy(x, pol);
    return a.aip * a.aip - x * a.ai * a.ai;
  };
  return Kernel("airy", PhaseSpace::Real, KernelSymmetry::symmetric, off, diag);
}

Kernel sine_kernel_discrete(double a) {
  if (!(a > 0 && a < 3.14159265358979323846))
    throw std::invalid_argument("discrete sine kernel: a must be in (0, pi)");
  auto off = [a](double x, double y) {
    return std::sin(a * (x - y)) / (3.14159265358979323846 * (x - y));
  };
  auto diag = [a](double) { return a / 3.14159265358979323846; };
  return Kernel("sine-discrete", PhaseSpace::Zall, KernelSymmetry::symmetric,
                off, diag);
}

Kernel sine_kernel_continuous() {
  constexpr double pi = 3.14159265358979323846;
  auto off = [](double x, double y) {
    return std::sin(pi * (x - y)) / (pi * (x - y));
  };
  auto diag = [](double) { return 1.0; };
  return Kernel("sine", PhaseSpace::Real, KernelSymmetry::symmetric, off, diag);
}

// ---------------------------------------------------------------------------
// determinantal correlations

double correlation_det(const Kernel& k, const std::vector<double>& pts) {
  const size_t n = pts.size();
  if (n == 0) return 1.0;
  if (n > 12) throw std::invalid_argument("correlation_det: n <= 12");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (pts[i] == pts[j])
        throw std::invalid_argument("correlation_det: duplicate points");
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = k(pts[i], pts[j]);
  double det = 1.0;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    if (m[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      double f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace zm
