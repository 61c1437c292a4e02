// Exact integer / rational arithmetic used by the combinatorial layer.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace zm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

// Rising factorial (a)_n = a (a+1) ... (a+n-1), computed by forward product.
inline Rational pochhammer(const Rational& a, unsigned n) {
  Rational r = 1, f = a;
  for (unsigned i = 0; i < n; ++i) {
    r *= f;
    f += 1;
  }
  return r;
}

inline Rational rational_pow(const Rational& base, long long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rational_pow: 0^negative");
    return 1 / rational_pow(base, -e);
  }
  Rational r = 1, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Accepts "p/q", plain integers and decimal literals ("0.4" -> 2/5).
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace zm
