#include "zmeasure/partition.hpp"

#include "zmeasure/detail/partition_gen.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace zm {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("bad rational literal: " + text);
    BigInt num(digits);
    BigInt den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(num, den);
  }
  return Rational(BigInt(text));
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

int Partition::conj_part(int j) const {
  if (j < 1) throw std::invalid_argument("column index must be >= 1");
  int count = 0;
  for (int p : parts_) {
    if (p >= j)
      ++count;
    else
      break;
  }
  return count;
}

Partition Partition::transpose() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.resize(parts_[0]);
    for (int j = 1; j <= parts_[0]; ++j) cols[j - 1] = conj_part(j);
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

FrobeniusCoords frobenius(const Partition& la) {
  FrobeniusCoords f;
  for (int i = 1; i <= la.rows(); ++i) {
    if (la.part(i) - i < 0) break;
    f.p.push_back(la.part(i) - i);
    f.q.push_back(la.conj_part(i) - i);
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
  if (f.p.size() != f.q.size())
    throw std::invalid_argument("frobenius coordinate lengths differ");
  const int d = f.d();
  for (int i = 0; i < d; ++i) {
    if (f.p[i] < 0 || f.q[i] < 0)
      throw std::invalid_argument("frobenius coordinates must be nonnegative");
    if (i > 0 && (f.p[i] >= f.p[i - 1] || f.q[i] >= f.q[i - 1]))
      throw std::invalid_argument("frobenius coordinates must be strictly decreasing");
  }
  // Row i (1-based, i <= d) has length p_i + i; rows below the diagonal
  // come from the q side: row i exists for i <= q_j + j for each column j.
  std::vector<int> parts;
  for (int i = 0; i < d; ++i) parts.push_back(f.p[i] + i + 1);
  // Column lengths below the diagonal: lambda'_j = q_j + j for j <= d.
  // Reconstruct remaining rows from the transposed information.
  int max_extra = d > 0 ? f.q[0] : 0;
  for (int r = d + 1; r <= d + max_extra; ++r) {
    int len = 0;
    for (int j = 0; j < d; ++j)
      if (f.q[j] + j + 1 >= r) ++len;
    if (len == 0) break;
    if (len > static_cast<int>(parts.empty() ? 0 : parts.back())) {
      throw std::invalid_argument("inconsistent frobenius coordinates");
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

bool contains_box(const Partition& la, Box b) {
  return b.i >= 1 && b.j >= 1 && b.i <= la.rows() && b.j <= la.part(b.i);
}

int content(const Partition& la, Box b) {
  if (!contains_box(la, b)) throw std::invalid_argument("box outside diagram");
  return b.j - b.i;
}

int hook(const Partition& la, Box b) {
  if (!contains_box(la, b)) throw std::invalid_argument("box outside diagram");
  return (la.part(b.i) - b.j) + (la.conj_part(b.j) - b.i) + 1;
}

BigInt dim_exact(const Partition& la) {
  BigInt num = factorial(static_cast<unsigned>(la.n()));
  BigInt den = 1;
  for (int i = 1; i <= la.rows(); ++i)
    for (int j = 1; j <= la.part(i); ++j) den *= hook(la, {i, j});
  return num / den;
}

double log_dim(const Partition& la) {
  double s = std::lgamma(static_cast<double>(la.n()) + 1.0);
  for (int i = 1; i <= la.rows(); ++i)
    for (int j = 1; j <= la.part(i); ++j)
      s -= std::log(static_cast<double>(hook(la, {i, j})));
  return s;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  detail::visit_partitions(n, [&](const std::vector<int>& parts) {
    fn(Partition(parts));
  });
}

void for_each_partition_first_part(
    int n, int first, const std::function<void(const Partition&)>& fn) {
  detail::visit_partitions_first_part(n, first,
                                      [&](const std::vector<int>& parts) {
                                        fn(Partition(parts));
                                      });
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  if (n > cap) throw std::invalid_argument("partition enumeration cap exceeded");
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& la) { out.push_back(la); });
  return out;
}

BigInt partition_count(int n) {
  if (n < 0) return 0;
  static std::vector<BigInt> cache{1};  // p(0) = 1
  static std::mutex* mtx = new std::mutex;
  std::lock_guard<std::mutex> lock(*mtx);
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    BigInt total = 0;
    for (int k = 1;; ++k) {
      long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
      long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      BigInt term = 0;
      if (g1 <= m) term += cache[m - g1];
      if (g2 <= m) term += cache[m - g2];
      if (k % 2 == 1)
        total += term;
      else
        total -= term;
    }
    cache.push_back(total);
  }
  return cache[n];
}

PointConfiguration PointConfiguration::from_halves(std::vector<int> doubled) {
  for (int v : doubled)
    if (v % 2 == 0)
      throw std::invalid_argument("Z' coordinates must be odd doubled integers");
  std::sort(doubled.begin(), doubled.end(), std::greater<int>());
  for (size_t i = 1; i < doubled.size(); ++i)
    if (doubled[i] == doubled[i - 1])
      throw std::invalid_argument("duplicate point in configuration");
  PointConfiguration c;
  c.twice = std::move(doubled);
  return c;
}

bool PointConfiguration::contains(int doubled) const {
  return std::find(twice.begin(), twice.end(), doubled) != twice.end();
}

bool PointConfiguration::balanced() const {
  int pos = 0, neg = 0;
  for (int v : twice) (v > 0 ? pos : neg)++;
  return pos == neg;
}

std::vector<double> PointConfiguration::as_doubles() const {
  std::vector<double> out;
  out.reserve(twice.size());
  for (int v : twice) out.push_back(v / 2.0);
  return out;
}

std::string PointConfiguration::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < twice.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(twice[i]) + "/2";
  }
  s += '}';
  return s;
}

PointConfiguration embed_config(const Partition& la) {
  FrobeniusCoords f = frobenius(la);
  std::vector<int> doubled;
  for (int p : f.p) doubled.push_back(2 * p + 1);
  for (int q : f.q) doubled.push_back(-2 * q - 1);
  return PointConfiguration::from_halves(std::move(doubled));
}

SimplexPoint embed_simplex(const Partition& la, long long n) {
  if (n <= 0) throw std::invalid_argument("embedding requires n >= 1");
  if (la.n() != n) throw std::invalid_argument("partition size mismatch");
  FrobeniusCoords f = frobenius(la);
  SimplexPoint s;
  for (int p : f.p) s.alpha.emplace_back(2 * p + 1, 2 * n);
  for (int q : f.q) s.beta.emplace_back(2 * q + 1, 2 * n);
  return s;
}

}  // namespace zm
