// Correlation kernels: the hypergeometric kernel of the mixed z-measure
// point process on Z', its positive part, Christoffel-Darboux kernels of the
// four classical families, the discrete-Bessel (poissonized Plancherel)
// kernel, the Whittaker kernel on R*, the Airy kernel and the sine kernels;
// plus determinantal correlation evaluation.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "zmeasure/measures.hpp"
#include "zmeasure/orthopoly.hpp"
#include "zmeasure/specfun.hpp"

namespace zm {

enum class PhaseSpace {
  Zprime,      // half-integers
  ZprimePlus,  // positive half-integers
  Zplus,       // nonnegative integers
  Zall,        // integers
  Real,
  RealPlus,
  RealStar,  // punctured line
};

enum class KernelSymmetry { symmetric, sign_symmetric };

// Immutable evaluable kernel.  Evaluation is pure; lazily built caches are
// mutex-guarded and do not change observable results.
class Kernel {
 public:
  Kernel() = default;
  Kernel(std::string name, PhaseSpace space, KernelSymmetry sym,
         std::function<double(double, double)> off_diagonal,
         std::function<double(double)> diagonal);

  const std::string& name() const { return name_; }
  PhaseSpace space() const { return space_; }
  KernelSymmetry symmetry() const { return symmetry_; }

  // Evaluates K(x,y); the diagonal goes through the analytic limit.
  double operator()(double x, double y) const;

  void check_point(double x) const;  // throws outside the phase space

 private:
  std::string name_;
  PhaseSpace space_ = PhaseSpace::Real;
  KernelSymmetry symmetry_ = KernelSymmetry::symmetric;
  std::function<double(double, double)> off_;
  std::function<double(double)> diag_;
};

// Hypergeometric kernel on Z' (parameters (z, z', xi)); sign-symmetric.
// Degenerate integer parameters are accepted; xi is capped at 0.95.
Kernel hypergeometric_kernel(const ZParams& zp, double xi,
                             const PrecisionPolicy& pol = {});

// Restriction of a sign-symmetric kernel on Z' or R* to the positive half;
// the result is symmetric.
Kernel positive_part(const Kernel& k);

// Christoffel-Darboux kernel of order k: the rank-k projection
// sum_{n<k} phi_n(x) phi_n(y) with phi_n = p_n sqrt(w/h_n).
Kernel cd_kernel(const OrthoPolyFamily& fam, int k);

// Closed pair form a_{k-1}/(a_k h_{k-1}) (p_k(x)p_{k-1}(y)-p_{k-1}(x)p_k(y))
// / (x-y) * sqrt(w(x)w(y)); equal to cd_kernel off the diagonal, exposed for
// the cross-route tests.
double cd_kernel_pair_form(const OrthoPolyFamily& fam, int k, double x, double y);

// Poissonized-Plancherel kernel on Z' (theta <= 1e4); sign-symmetric.
Kernel plancherel_kernel(double theta, const PrecisionPolicy& pol = {});

// Whittaker kernel on R* for a real-mode parameter pair.
Kernel whittaker_kernel(const ZParams& zp, const PrecisionPolicy& pol = {});

Kernel airy_kernel(const PrecisionPolicy& pol = {});
Kernel sine_kernel_discrete(double a);  // on Z, 0 < a < pi
Kernel sine_kernel_continuous();        // on R

// det[K(x_i, x_j)] via partially pivoted elimination; n <= 12, points must
// be distinct and inside the kernel's phase space.
double correlation_det(const Kernel& k, const std::vector<double>& pts);

}  // namespace zm
