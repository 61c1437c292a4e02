// z-measures on partitions, mixing laws and the degenerate families.
//
// Exact rational evaluation is available whenever all parameters are
// rational (including the degenerate integer families); the transcendental
// mixture prefactor (1-xi)^t resp. e^-theta is kept symbolic so that
// normalization identities stay exact.
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "zmeasure/partition.hpp"
#include "zmeasure/rational.hpp"

namespace zm {

struct ZParams {
  enum class Mode { rational_pair, conjugate_pair, degenerate_integer };
  Mode mode = Mode::rational_pair;

  Rational z, zp;                 // rational / degenerate modes
  std::complex<double> zc{0, 0};  // conjugate mode; z' = conj(z)

  // Admissible rational pair: some integer m has m < z, z' < m+1.
  static ZParams rational(const Rational& z, const Rational& zp);
  // Positive integers; measure values may vanish but stay nonnegative.
  static ZParams degenerate(long long k, long long l);
  // z not real-integer; z' = conj(z).
  static ZParams conjugate(std::complex<double> z);

  bool is_rational() const { return mode != Mode::conjugate_pair; }
  Rational t_exact() const;  // z z' (rational modes)
  double t() const;
  double z_real() const;   // rational modes only
  double zp_real() const;  // rational modes only
};

struct MixingLaw {
  enum class Kind { none_fixed_n, negative_binomial, poisson, gamma_scaled };
  Kind kind = Kind::none_fixed_n;
  Rational xi;     // negative binomial, 0 < xi < 1
  Rational theta;  // poisson, > 0
  Rational t;      // t = z z' for the negative binomial / gamma laws
  // Conjugate-mode t = |z|^2 is not rational; when set it replaces `t` and
  // disables the exact coefficient path.
  double t_override = std::numeric_limits<double>::quiet_NaN();

  static MixingLaw none();
  static MixingLaw negative_binomial(const Rational& xi, const Rational& t);
  static MixingLaw poisson(const Rational& theta);
  static MixingLaw gamma_scaled(const Rational& t);

  bool exact() const { return std::isnan(t_override); }
  double t_value() const { return exact() ? to_double(t) : t_override; }
};

struct MeasureSpec {
  enum class Family { z_family, integer_kl, k_infinity, plancherel };
  Family family = Family::z_family;
  ZParams zp;      // z_family
  int k = 0, l = 0;  // integer families
  MixingLaw mixing;

  static MeasureSpec mixed_z(const ZParams& zp, const Rational& xi);
  static MeasureSpec mixed_kl(int k, int l, const Rational& xi);
  static MeasureSpec poissonized_k_infinity(int k, const Rational& theta);
  static MeasureSpec poissonized_plancherel(const Rational& theta);
};

// M_{z,z'}(lambda) by the content/hook product, exact.  Strictly positive
// for admissible parameters, nonnegative for degenerate integer ones.
Rational z_measure_exact(const Partition& la, const ZParams& zp);
// Same formula without the admissibility gate, for formal identities such
// as the transposition symmetry.
Rational z_measure_formal(const Partition& la, const Rational& z,
                          const Rational& zp);
// Floating evaluation; supports all modes including real non-rational z'.
double z_measure_real(const Partition& la, double z, double zp);
double z_measure(const Partition& la, const ZParams& zp);

// Mixing weight pi(n).  The exact form factors out the transcendental
// prefactor: value = coeff * prefactor with
//   negative binomial: coeff = (t)_n xi^n / n!,  prefactor = (1-xi)^t
//   poisson:           coeff = theta^n / n!,     prefactor = e^-theta.
Rational mixing_weight_coeff(const MixingLaw& law, long long n);
double log_mixing_prefactor(const MixingLaw& law);
double mixing_weight(const MixingLaw& law, long long n);
// Exact coefficient of the upper tail: sum_{m>n} coeff(m) is not rational in
// closed form, so the bound is reported as 1 - prefactor * partial_sum, in
// floating point with directed care left to the caller's tolerance slack.
double mixing_tail(const MixingLaw& law, long long n);

struct ExactMixtureValue {
  Rational coeff;  // value = coeff * exp(log_prefactor)
  double log_prefactor = 0.0;
  double value() const;
};

ExactMixtureValue mixed_measure_exact(const Partition& la, const MeasureSpec& spec);
double mixed_measure(const Partition& la, const MeasureSpec& spec);

// Explicit Frobenius-coordinate form of the mixed z-measure:
//   (1-xi)^t xi^{sum(p_i+q_i+1)} t^d prod_i [...] det^2[1/(p_i+q_j+1)].
ExactMixtureValue mixed_measure_frobenius_exact(const FrobeniusCoords& f,
                                                const MeasureSpec& spec);
double mixed_measure_frobenius(const FrobeniusCoords& f, const MeasureSpec& spec);

enum class DegenerateFamily { integer_kl, k_infinity, plancherel };

// Fixed-n degenerate measures, exact: M^{(n)}_{k,l}, M^{(n)}_{k,inf},
// M^{(n)}_{inf,inf}.
Rational degenerate_measure(const Partition& la, DegenerateFamily fam, int k = 0,
                            int l = 0);

// |M^{(n)}_{k,z'}(la) - M^{(n)}_{k,inf}(la)| along a z' sequence.
std::vector<double> limit_check_z_to_degenerate(const Partition& la, int k,
                                                const std::vector<double>& zp_seq);

}  // namespace zm
