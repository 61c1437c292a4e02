#include "zmeasure/orthopoly.hpp"

#include "zmeasure/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace zm {

namespace {

constexpr double kLogSqrtPi = 0.57236494292470008707171367567652935582;

bool near_nonneg_integer(double x) {
  return x >= -1e-9 && std::fabs(x - std::round(x)) < 1e-9;
}

void check_order(int n) {
  if (n < 0 || n > 500)
    throw std::invalid_argument("orthogonal polynomial order out of range");
}

}  // namespace

double SignedLog::value() const { return sign * std::exp(log_abs); }

OrthoPolyFamily OrthoPolyFamily::laguerre(double a) {
  if (!(a > -1)) throw std::invalid_argument("laguerre: a must exceed -1");
  OrthoPolyFamily f(OrthoFamily::laguerre);
  f.a_ = a;
  return f;
}

OrthoPolyFamily OrthoPolyFamily::hermite() {
  return OrthoPolyFamily(OrthoFamily::hermite);
}

OrthoPolyFamily OrthoPolyFamily::charlier(double theta) {
  if (!(theta > 0)) throw std::invalid_argument("charlier: theta must be positive");
  OrthoPolyFamily f(OrthoFamily::charlier);
  f.theta_ = theta;
  return f;
}

OrthoPolyFamily OrthoPolyFamily::meixner(double a, double xi) {
  if (!(a > -1)) throw std::invalid_argument("meixner: a must exceed -1");
  if (!(xi > 0 && xi < 1)) throw std::invalid_argument("meixner: xi must be in (0,1)");
  OrthoPolyFamily f(OrthoFamily::meixner);
  f.a_ = a;
  f.xi_ = xi;
  return f;
}

bool OrthoPolyFamily::discrete() const {
  return family_ == OrthoFamily::charlier || family_ == OrthoFamily::meixner;
}

std::string OrthoPolyFamily::name() const {
  switch (family_) {
    case OrthoFamily::laguerre: return "laguerre";
    case OrthoFamily::hermite: return "hermite";
    case OrthoFamily::charlier: return "charlier";
    case OrthoFamily::meixner: return "meixner";
  }
  return "?";
}

double OrthoPolyFamily::eval(int n, double x) const {
  check_order(n);
  double pm1 = 0.0, p = 1.0;  // p_{n-1}, p_n starting at n = 0
  for (int m = 0; m < n; ++m) {
    double pn;
    switch (family_) {
      case OrthoFamily::laguerre:
        pn = ((2.0 * m + 1.0 + a_ - x) * p - (m + a_) * pm1) / (m + 1.0);
        break;
      case OrthoFamily::hermite:
        pn = 2.0 * x * p - 2.0 * m * pm1;
        break;
      case OrthoFamily::charlier:
        pn = ((m + theta_ - x) * p - m * pm1) / theta_;
        break;
      case OrthoFamily::meixner: {
        double beta = a_ + 1.0;
        pn = (((xi_ - 1.0) * x + m + (m + beta) * xi_) * p - m * pm1) /
             (xi_ * (m + beta));
        break;
      }
      default:
        throw std::logic_error("unreachable");
    }
    pm1 = p;
    p = pn;
  }
  return p;
}

double OrthoPolyFamily::log_norm(int n) const {
  check_order(n);
  double lg_n1 = log_gamma_real(n + 1.0);
  switch (family_) {
    case OrthoFamily::laguerre:
      return log_gamma_real(n + a_ + 1.0) - lg_n1;
    case OrthoFamily::hermite:
      return kLogSqrtPi + n * std::log(2.0) + lg_n1;
    case OrthoFamily::charlier:
      return lg_n1 - n * std::log(theta_) + theta_;
    case OrthoFamily::meixner: {
      double beta = a_ + 1.0;
      return lg_n1 - n * std::log(xi_) -
             (log_gamma_real(beta + n) - log_gamma_real(beta)) -
             beta * std::log1p(-xi_);
    }
  }
  throw std::logic_error("unreachable");
}

double OrthoPolyFamily::norm(int n) const { return std::exp(log_norm(n)); }

SignedLog OrthoPolyFamily::leading(int n) const {
  check_order(n);
  SignedLog r;
  switch (family_) {
    case OrthoFamily::laguerre:
      r.sign = (n % 2 == 0) ? 1 : -1;
      r.log_abs = -log_gamma_real(n + 1.0);
      return r;
    case OrthoFamily::hermite:
      r.sign = 1;
      r.log_abs = n * std::log(2.0);
      return r;
    case OrthoFamily::charlier:
      r.sign = (n % 2 == 0) ? 1 : -1;
      r.log_abs = -n * std::log(theta_);
      return r;
    case OrthoFamily::meixner: {
      double beta = a_ + 1.0;
      r.sign = (n % 2 == 0) ? 1 : -1;
      r.log_abs = n * std::log((1.0 - xi_) / xi_) -
                  (log_gamma_real(beta + n) - log_gamma_real(beta));
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

double OrthoPolyFamily::log_weight(double x) const {
  switch (family_) {
    case OrthoFamily::laguerre:
      if (x < 0) return -std::numeric_limits<double>::infinity();
      if (x == 0.0)
        return a_ == 0.0 ? 0.0
                         : (a_ > 0 ? -std::numeric_limits<double>::infinity()
                                   : std::numeric_limits<double>::infinity());
      return a_ * std::log(x) - x;
    case OrthoFamily::hermite:
      return -x * x;
    case OrthoFamily::charlier:
      if (!near_nonneg_integer(x))
        throw std::invalid_argument("charlier weight needs x in Z+");
      return x * std::log(theta_) - log_gamma_real(x + 1.0);
    case OrthoFamily::meixner: {
      if (!near_nonneg_integer(x))
        throw std::invalid_argument("meixner weight needs x in Z+");
      double beta = a_ + 1.0;
      return log_gamma_real(beta + x) - log_gamma_real(beta) +
             x * std::log(xi_) - log_gamma_real(x + 1.0);
    }
  }
  throw std::logic_error("unreachable");
}

double OrthoPolyFamily::weight(double x) const { return std::exp(log_weight(x)); }

void OrthoPolyFamily::jacobi_coeffs(int n, double& alpha, double& beta) const {
  switch (family_) {
    case OrthoFamily::laguerre:
      alpha = 2.0 * n + a_ + 1.0;
      beta = std::sqrt(n * (n + a_));
      return;
    case OrthoFamily::hermite:
      alpha = 0.0;
      beta = std::sqrt(n / 2.0);
      return;
    case OrthoFamily::charlier:
      alpha = n + theta_;
      beta = std::sqrt(n * theta_);
      return;
    case OrthoFamily::meixner: {
      double b = a_ + 1.0;
      alpha = (n + (n + b) * xi_) / (1.0 - xi_);
      beta = std::sqrt(n * (n + b - 1.0) * xi_) / (1.0 - xi_);
      return;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<double> OrthoPolyFamily::phi(int count, double x) const {
  if (count < 1) return {};
  std::vector<double> out(count);
  double lw = log_weight(x);
  double seed = 0.5 * (lw - log_norm(0));
  double phi0 = seed < -745.0 ? 0.0 : std::exp(seed);
  out[0] = phi0;
  if (count == 1) return out;
  double alpha0, beta0, alpha1, beta1;
  jacobi_coeffs(0, alpha0, beta0);
  jacobi_coeffs(1, alpha1, beta1);
  out[1] = (x - alpha0) * out[0] / beta1;
  for (int n = 1; n + 1 < count; ++n) {
    double an, bn, bn1, dummy;
    jacobi_coeffs(n, an, bn);
    jacobi_coeffs(n + 1, dummy, bn1);
    out[n + 1] = ((x - an) * out[n] - bn * out[n - 1]) / bn1;
  }
  return out;
}

}  // namespace zm
