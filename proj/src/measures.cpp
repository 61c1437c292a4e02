#include "zmeasure/measures.hpp"

#include "zmeasure/rsk.hpp"

#include <cmath>
#include <stdexcept>

namespace zm {

namespace {

BigInt rational_floor(const Rational& r) {
  BigInt n = numerator(r), d = denominator(r);
  BigInt q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

// det of a small rational matrix by Gaussian elimination with pivoting.
Rational rational_det(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

}  // namespace

ZParams ZParams::rational(const Rational& z, const Rational& zp) {
  if (is_integer(z) || is_integer(zp))
    throw std::invalid_argument(
        "integer z parameters require the degenerate constructor");
  if (rational_floor(z) != rational_floor(zp))
    throw std::invalid_argument(
        "rational z parameters must lie strictly inside one integer gap");
  ZParams p;
  p.mode = Mode::rational_pair;
  p.z = z;
  p.zp = zp;
  if (p.t_exact() <= 0) throw std::invalid_argument("t = z z' must be positive");
  return p;
}

ZParams ZParams::degenerate(long long k, long long l) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("degenerate parameters must be positive integers");
  ZParams p;
  p.mode = Mode::degenerate_integer;
  p.z = k;
  p.zp = l;
  return p;
}

ZParams ZParams::conjugate(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
    throw std::invalid_argument("conjugate mode requires z outside Z");
  ZParams p;
  p.mode = Mode::conjugate_pair;
  p.zc = z;
  return p;
}

Rational ZParams::t_exact() const {
  if (mode == Mode::conjugate_pair)
    throw std::logic_error("t_exact unavailable in conjugate mode");
  return z * zp;
}

double ZParams::t() const {
  if (mode == Mode::conjugate_pair) return std::norm(zc);
  return to_double(z * zp);
}

double ZParams::z_real() const {
  if (mode == Mode::conjugate_pair)
    throw std::logic_error("z_real unavailable in conjugate mode");
  return to_double(z);
}

double ZParams::zp_real() const {
  if (mode == Mode::conjugate_pair)
    throw std::logic_error("zp_real unavailable in conjugate mode");
  return to_double(zp);
}

MixingLaw MixingLaw::none() { return MixingLaw{}; }

MixingLaw MixingLaw::negative_binomial(const Rational& xi, const Rational& t) {
  if (!(xi > 0 && xi < 1)) throw std::invalid_argument("xi must be in (0,1)");
  if (!(t > 0)) throw std::invalid_argument("t must be positive");
  MixingLaw law;
  law.kind = Kind::negative_binomial;
  law.xi = xi;
  law.t = t;
  return law;
}

MixingLaw MixingLaw::poisson(const Rational& theta) {
  if (!(theta > 0)) throw std::invalid_argument("theta must be positive");
  MixingLaw law;
  law.kind = Kind::poisson;
  law.theta = theta;
  return law;
}

MixingLaw MixingLaw::gamma_scaled(const Rational& t) {
  if (!(t > 0)) throw std::invalid_argument("t must be positive");
  MixingLaw law;
  law.kind = Kind::gamma_scaled;
  law.t = t;
  return law;
}

MeasureSpec MeasureSpec::mixed_z(const ZParams& zp, const Rational& xi) {
  MeasureSpec s;
  s.family = Family::z_family;
  s.zp = zp;
  if (zp.mode == ZParams::Mode::conjugate_pair) {
    s.mixing = MixingLaw::negative_binomial(xi, 1);
    s.mixing.t_override = zp.t();
  } else {
    s.mixing = MixingLaw::negative_binomial(xi, zp.t_exact());
  }
  return s;
}

MeasureSpec MeasureSpec::mixed_kl(int k, int l, const Rational& xi) {
  MeasureSpec s;
  s.family = Family::integer_kl;
  s.k = k;
  s.l = l;
  s.zp = ZParams::degenerate(k, l);
  s.mixing = MixingLaw::negative_binomial(xi, Rational(k) * l);
  return s;
}

MeasureSpec MeasureSpec::poissonized_k_infinity(int k, const Rational& theta) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  MeasureSpec s;
  s.family = Family::k_infinity;
  s.k = k;
  s.mixing = MixingLaw::poisson(theta);
  return s;
}

MeasureSpec MeasureSpec::poissonized_plancherel(const Rational& theta) {
  MeasureSpec s;
  s.family = Family::plancherel;
  s.mixing = MixingLaw::poisson(theta);
  return s;
}

Rational z_measure_formal(const Partition& la, const Rational& z,
                          const Rational& zp) {
  const long long n = la.n();
  Rational t = z * zp;
  Rational denom = pochhammer(t, static_cast<unsigned>(n));
  if (denom == 0) throw std::domain_error("(t)_n vanishes");
  Rational prod = 1;
  for (int i = 1; i <= la.rows(); ++i)
    for (int j = 1; j <= la.part(i); ++j) {
      int c = content(la, {i, j});
      int h = hook(la, {i, j});
      prod *= (c + z) * (c + zp) / (Rational(h) * h);
    }
  return Rational(factorial(static_cast<unsigned>(n))) / denom * prod;
}

Rational z_measure_exact(const Partition& la, const ZParams& zp) {
  if (zp.mode == ZParams::Mode::conjugate_pair)
    throw std::invalid_argument("exact evaluation requires rational parameters");
  return z_measure_formal(la, zp.z, zp.zp);
}

double z_measure_real(const Partition& la, double z, double zp) {
  const long long n = la.n();
  double t = z * zp;
  if (t <= 0) throw std::invalid_argument("t = z z' must be positive");
  double value = 1.0;
  // interleave n!/(t)_n with the box product to keep intermediates tame
  for (long long m = 0; m < n; ++m) value *= (m + 1) / (t + m);
  for (int i = 1; i <= la.rows(); ++i)
    for (int j = 1; j <= la.part(i); ++j) {
      double c = j - i;
      double h = hook(la, {i, j});
      value *= (c + z) * (c + zp) / (h * h);
    }
  return value;
}

double z_measure(const Partition& la, const ZParams& zp) {
  if (zp.mode == ZParams::Mode::conjugate_pair) {
    const long long n = la.n();
    double t = zp.t();
    double value = 1.0;
    for (long long m = 0; m < n; ++m) value *= (m + 1) / (t + m);
    for (int i = 1; i <= la.rows(); ++i)
      for (int j = 1; j <= la.part(i); ++j) {
        double c = content(la, {i, j});
        double h = hook(la, {i, j});
        value *= std::norm(c + zp.zc) / (h * h);
      }
    return value;
  }
  return to_double(z_measure_exact(la, zp));
}

Rational mixing_weight_coeff(const MixingLaw& law, long long n) {
  if (!law.exact())
    throw std::invalid_argument("exact mixing coefficient needs rational t");
  switch (law.kind) {
    case MixingLaw::Kind::negative_binomial:
      return pochhammer(law.t, static_cast<unsigned>(n)) *
             rational_pow(law.xi, n) / Rational(factorial(static_cast<unsigned>(n)));
    case MixingLaw::Kind::poisson:
      return rational_pow(law.theta, n) / Rational(factorial(static_cast<unsigned>(n)));
    case MixingLaw::Kind::none_fixed_n:
      return 1;
    default:
      throw std::invalid_argument("no discrete weight for this mixing law");
  }
}

double log_mixing_prefactor(const MixingLaw& law) {
  switch (law.kind) {
    case MixingLaw::Kind::negative_binomial:
      return law.t_value() * std::log1p(-to_double(law.xi));
    case MixingLaw::Kind::poisson:
      return -to_double(law.theta);
    case MixingLaw::Kind::none_fixed_n:
      return 0.0;
    default:
      throw std::invalid_argument("no discrete weight for this mixing law");
  }
}

double mixing_weight(const MixingLaw& law, long long n) {
  if (law.kind == MixingLaw::Kind::negative_binomial && !law.exact()) {
    double t = law.t_value(), xi = to_double(law.xi);
    double w = std::exp(t * std::log1p(-xi));
    for (long long m = 0; m < n; ++m) w *= (t + m) * xi / (m + 1);
    return w;
  }
  return to_double(mixing_weight_coeff(law, n)) *
         std::exp(log_mixing_prefactor(law));
}

double mixing_tail(const MixingLaw& law, long long n) {
  double cum = 0.0;
  for (long long m = 0; m <= n; ++m) cum += mixing_weight(law, m);
  double tail = 1.0 - cum;
  return tail > 0 ? tail : 0.0;
}

ExactMixtureValue mixed_measure_exact(const Partition& la,
                                      const MeasureSpec& spec) {
  Rational base;
  switch (spec.family) {
    case MeasureSpec::Family::z_family:
      base = z_measure_exact(la, spec.zp);
      break;
    case MeasureSpec::Family::integer_kl:
      base = degenerate_measure(la, DegenerateFamily::integer_kl, spec.k, spec.l);
      break;
    case MeasureSpec::Family::k_infinity:
      base = degenerate_measure(la, DegenerateFamily::k_infinity, spec.k);
      break;
    case MeasureSpec::Family::plancherel:
      base = degenerate_measure(la, DegenerateFamily::plancherel);
      break;
  }
  ExactMixtureValue v;
  v.coeff = base * mixing_weight_coeff(spec.mixing, la.n());
  v.log_prefactor = log_mixing_prefactor(spec.mixing);
  return v;
}

double ExactMixtureValue::value() const {
  return to_double(coeff) * std::exp(log_prefactor);
}

double mixed_measure(const Partition& la, const MeasureSpec& spec) {
  if (spec.family == MeasureSpec::Family::z_family &&
      spec.zp.mode == ZParams::Mode::conjugate_pair)
    return z_measure(la, spec.zp) * mixing_weight(spec.mixing, la.n());
  return mixed_measure_exact(la, spec).value();
}

ExactMixtureValue mixed_measure_frobenius_exact(const FrobeniusCoords& f,
                                                const MeasureSpec& spec) {
  if (spec.family != MeasureSpec::Family::z_family &&
      spec.family != MeasureSpec::Family::integer_kl)
    throw std::invalid_argument("frobenius form requires a z-family spec");
  if (spec.mixing.kind != MixingLaw::Kind::negative_binomial)
    throw std::invalid_argument("frobenius form requires negative binomial mixing");
  const Rational z = spec.zp.z, zp = spec.zp.zp;
  const Rational t = z * zp;
  const Rational xi = spec.mixing.xi;
  const int d = f.d();
  long long total = 0;
  for (int i = 0; i < d; ++i) total += f.p[i] + f.q[i] + 1;

  Rational coeff = rational_pow(xi, total) * rational_pow(t, d);
  for (int i = 0; i < d; ++i) {
    unsigned p = static_cast<unsigned>(f.p[i]);
    unsigned q = static_cast<unsigned>(f.q[i]);
    Rational pf = Rational(factorial(p)), qf = Rational(factorial(q));
    coeff *= pochhammer(z + 1, p) * pochhammer(zp + 1, p) *
             pochhammer(1 - z, q) * pochhammer(1 - zp, q) / (pf * pf * qf * qf);
  }
  std::vector<std::vector<Rational>> cauchy(d, std::vector<Rational>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      cauchy[i][j] = Rational(1, f.p[i] + f.q[j] + 1);
  Rational det = rational_det(std::move(cauchy));
  coeff *= det * det;

  ExactMixtureValue v;
  v.coeff = coeff;
  v.log_prefactor = log_mixing_prefactor(spec.mixing);
  return v;
}

double mixed_measure_frobenius(const FrobeniusCoords& f, const MeasureSpec& spec) {
  return mixed_measure_frobenius_exact(f, spec).value();
}

Rational degenerate_measure(const Partition& la, DegenerateFamily fam, int k,
                            int l) {
  const long long n = la.n();
  switch (fam) {
    case DegenerateFamily::integer_kl:
      if (k < 1 || l < 1) throw std::invalid_argument("k,l must be >= 1");
      return Rational(count_ssyt(la, k) * count_ssyt(la, l),
                      matrix_count(k, l, n));
    case DegenerateFamily::k_infinity: {
      if (k < 1) throw std::invalid_argument("k must be >= 1");
      BigInt kn = 1;
      for (long long i = 0; i < n; ++i) kn *= k;
      return Rational(count_ssyt(la, k) * dim_exact(la), kn);
    }
    case DegenerateFamily::plancherel:
      return Rational(dim_exact(la) * dim_exact(la),
                      factorial(static_cast<unsigned>(n)));
  }
  throw std::invalid_argument("unknown family");
}

std::vector<double> limit_check_z_to_degenerate(
    const Partition& la, int k, const std::vector<double>& zp_seq) {
  double target =
      to_double(degenerate_measure(la, DegenerateFamily::k_infinity, k));
  std::vector<double> errs;
  errs.reserve(zp_seq.size());
  for (double zp : zp_seq)
    errs.push_back(std::fabs(z_measure_real(la, static_cast<double>(k), zp) - target));
  return errs;
}

}  // namespace zm
