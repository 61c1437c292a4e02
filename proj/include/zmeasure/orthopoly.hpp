// The four classical orthogonal polynomial families behind the
// Christoffel-Darboux kernels: Laguerre, Hermite (physicists'), Charlier and
// Meixner.  Classical-normalization values, norms and leading coefficients
// come from closed forms validated against orthogonality oracles in the
// test suite; kernel evaluation uses the weighted orthonormal functions
// phi_n = p_n sqrt(w) / sqrt(h_n), which stay representable in the
// large-parameter regimes the limit transitions visit.
#pragma once

#include <string>
#include <vector>

namespace zm {

enum class OrthoFamily { laguerre, hermite, charlier, meixner };

struct SignedLog {
  int sign = 1;
  double log_abs = 0.0;
  double value() const;
};

class OrthoPolyFamily {
 public:
  static OrthoPolyFamily laguerre(double a);           // w = x^a e^-x on R+
  static OrthoPolyFamily hermite();                    // w = e^{-x^2} on R
  static OrthoPolyFamily charlier(double theta);       // w = theta^x/x! on Z+
  static OrthoPolyFamily meixner(double a, double xi); // w = (a+1)_x xi^x/x!

  OrthoFamily family() const { return family_; }
  bool discrete() const;
  std::string name() const;
  double laguerre_a() const { return a_; }
  double meixner_a() const { return a_; }
  double meixner_xi() const { return xi_; }
  double charlier_theta() const { return theta_; }

  // Classical-normalization polynomial value p_n(x) by three-term
  // recurrence (n <= 500).
  double eval(int n, double x) const;
  // Squared norm h_n = <p_n, p_n>_w and leading coefficient a_n.
  double norm(int n) const;
  double log_norm(int n) const;
  SignedLog leading(int n) const;

  double weight(double x) const;
  double log_weight(double x) const;

  // Orthonormal (Jacobi-matrix) recurrence coefficients:
  //   b_{n+1} phi_{n+1} = (x - a_n) phi_n - b_n phi_{n-1}.
  void jacobi_coeffs(int n, double& alpha, double& beta) const;

  // phi_n(x) = p_n(x) sqrt(w(x) / h_n) for n = 0..count-1.
  std::vector<double> phi(int count, double x) const;

 private:
  OrthoFamily family_;
  double a_ = 0.0, xi_ = 0.0, theta_ = 0.0;
  explicit OrthoPolyFamily(OrthoFamily f) : family_(f) {}
};

}  // namespace zm
