#include "zmeasure/sampling.hpp"

#include "zmeasure/rsk.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zm {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream) {
  state_ = seed ^ (0xD1B54A32D192ED03ull * (stream + 1));
  // decorrelate nearby (seed, stream) pairs
  splitmix64(state_);
  splitmix64(state_);
}

RandomSource RandomSource::for_draw(std::uint64_t seed, std::uint64_t index) {
  return RandomSource(seed, index + 1);
}

std::uint64_t RandomSource::next_u64() { return splitmix64(state_); }

double RandomSource::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool RandomSource::next_bit() { return (next_u64() >> 63) != 0; }

double RandomSource::next_normal() {
  double u1, u2;
  do {
    u1 = next_double();
  } while (u1 <= 0.0);
  u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

long long sample_size(const MixingLaw& law, RandomSource& rng) {
  if (law.kind != MixingLaw::Kind::negative_binomial &&
      law.kind != MixingLaw::Kind::poisson)
    throw std::invalid_argument("sample_size needs a discrete mixing law");
  double u = rng.next_double();
  double cum = 0.0;
  double w;
  double t = law.t_value(), xi = to_double(law.xi), theta = to_double(law.theta);
  if (law.kind == MixingLaw::Kind::negative_binomial)
    w = std::exp(t * std::log1p(-xi));
  else
    w = std::exp(-theta);
  for (long long n = 0;; ++n) {
    cum += w;
    if (u < cum) return n;
    if (1.0 - cum < 1e-15) return n;  // cumulative guard
    if (law.kind == MixingLaw::Kind::negative_binomial)
      w *= (t + n) * xi / (n + 1);
    else
      w *= theta / (n + 1);
  }
}

double sample_gamma_scaled(double t, RandomSource& rng) {
  if (!(t > 0)) throw std::invalid_argument("gamma parameter must be positive");
  if (t < 1.0) {
    double u;
    do {
      u = rng.next_double();
    } while (u <= 0.0);
    return sample_gamma_scaled(t + 1.0, rng) * std::pow(u, 1.0 / t);
  }
  // Marsaglia-Tsang
  double d = t - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = rng.next_normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    double u = rng.next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
      return d * v;
  }
}

namespace {

Rational conditional_weight(const Partition& la, const MeasureSpec& spec) {
  switch (spec.family) {
    case MeasureSpec::Family::z_family:
      return z_measure_exact(la, spec.zp);
    case MeasureSpec::Family::integer_kl:
      return degenerate_measure(la, DegenerateFamily::integer_kl, spec.k, spec.l);
    case MeasureSpec::Family::k_infinity:
      return degenerate_measure(la, DegenerateFamily::k_infinity, spec.k);
    case MeasureSpec::Family::plancherel:
      return degenerate_measure(la, DegenerateFamily::plancherel);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

Partition sample_partition_exact(int n, const MeasureSpec& spec,
                                 RandomSource& rng) {
  if (n < 0 || n > 30)
    throw std::invalid_argument("sample_partition_exact: n <= 30");
  std::vector<Partition> all = enumerate_partitions(n);
  std::vector<Rational> cum;
  cum.reserve(all.size());
  Rational total = 0;
  for (const Partition& la : all) {
    total += conditional_weight(la, spec);
    cum.push_back(total);
  }
  if (total <= 0) throw std::logic_error("measure has no mass");
  // refine a dyadic interval [A/2^k, (A+1)/2^k) until it sits in one bucket
  BigInt a = 0, pow2 = 1;
  for (int k = 0; k < 2048; ++k) {
    a <<= 1;
    pow2 <<= 1;
    if (rng.next_bit()) a += 1;
    // first bucket with cum_i * 2^k > a * total
    BigInt lhs_a = a * numerator(total);
    size_t lo = 0, hi = cum.size() - 1;
    while (lo < hi) {
      size_t mid = (lo + hi) / 2;
      // compare cum[mid] * pow2 > a * total  (denominators: total and cum
      // share arbitrary denominators; cross-multiply)
      BigInt lhs = numerator(cum[mid]) * denominator(total) * pow2;
      BigInt rhs = lhs_a * denominator(cum[mid]);
      if (lhs > rhs)
        hi = mid;
      else
        lo = mid + 1;
    }
    // containment: (a+1) * total <= cum[lo] * 2^k
    BigInt lhs = numerator(cum[lo]) * denominator(total) * pow2;
    BigInt rhs = (a + 1) * numerator(total) * denominator(cum[lo]);
    if (lhs >= rhs) return all[lo];
  }
  throw std::runtime_error("dyadic refinement did not converge");
}

Partition sample_mkl_rsk(long long n, int k, int l, RandomSource& rng) {
  if (k < 1 || l < 1) throw std::invalid_argument("k,l must be >= 1");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (n == 0) return Partition{};
  BigInt total = matrix_count(k, l, n);
  // uniform rank below total by rejection on fixed-width bit blocks
  unsigned bits = 0;
  {
    BigInt t = total;
    while (t > 0) {
      ++bits;
      t >>= 1;
    }
  }
  BigInt rank;
  do {
    rank = 0;
    for (unsigned i = 0; i < bits; ++i) {
      rank <<= 1;
      if (rng.next_bit()) rank += 1;
    }
  } while (rank >= total);
  // unrank the composition of n into k*l cells
  int cells = k * l;
  std::vector<long long> comp(cells, 0);
  long long s = n;
  for (int cell = 0; cell < cells; ++cell) {
    int r = cells - cell;  // cells still to fill, including this one
    if (r == 1) {
      comp[cell] = s;
      break;
    }
    // count of completions with this cell = c: C(s-c + r-2, s-c)
    BigInt count = binomial(s + r - 2, s);  // c = 0
    long long c = 0;
    while (rank >= count) {
      rank -= count;
      // ratio to c+1: (s-c)/(s-c+r-2)
      count = count * (s - c) / (s - c + r - 2);
      ++c;
      if (c > s) throw std::logic_error("composition unranking overflow");
    }
    comp[cell] = c;
    s -= c;
  }
  NonNegMatrix m = NonNegMatrix::zero(k, l);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j) m.at(i, j) = comp[static_cast<size_t>(i) * l + j];
  return rsk_matrix(m).P.shape();
}

namespace {

// Row insertion keeping only the row values (shape emerges as row lengths).
void insert_value(std::vector<std::vector<int>>& rows, int v) {
  int cur = v;
  for (size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({cur});
      return;
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), cur);
    if (it == row.end()) {
      row.push_back(cur);
      return;
    }
    std::swap(cur, *it);
  }
}

}  // namespace

Partition sample_word_rsk(int n, int k, RandomSource& rng) {
  if (n < 0 || n > 100000)
    throw std::invalid_argument("sample_word_rsk: n out of range");
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < n; ++i) {
    int letter = 1 + static_cast<int>(rng.next_u64() %
                                      static_cast<std::uint64_t>(k));
    insert_value(rows, letter);
  }
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

Partition sample_plancherel_rsk(int n, RandomSource& rng) {
  if (n < 0 || n > 10000)
    throw std::invalid_argument("sample_plancherel_rsk: n <= 1e4");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  std::vector<std::vector<int>> rows;
  for (int v : perm) insert_value(rows, v);
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

std::vector<long long> SampleBatch::lambda1() const {
  std::vector<long long> out;
  out.reserve(draws.size());
  for (const Partition& la : draws) out.push_back(la.part(1));
  return out;
}

std::string SampleBatch::to_json_lines() const {
  std::string out;
  for (size_t i = 0; i < draws.size(); ++i) {
    nlohmann::json j;
    j["seed"] = seed;
    j["index"] = i;
    j["parts"] = draws[i].parts();
    j["lambda1"] = draws[i].part(1);
    j["size"] = draws[i].n();
    out += j.dump();
    out += '\n';
  }
  return out;
}

SampleBatch sample_plancherel_batch(int n, int count, std::uint64_t seed) {
  SampleBatch batch;
  batch.family = "plancherel-rsk";
  batch.seed = seed;
  batch.draws.resize(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < count; ++i) {
    RandomSource rng = RandomSource::for_draw(seed, i);
    batch.draws[i] = sample_plancherel_rsk(n, rng);
  }
  return batch;
}

SampleBatch sample_k_infinity_batch(double theta, int k, int count,
                                    std::uint64_t seed) {
  SampleBatch batch;
  batch.family = "k-infinity-rsk";
  batch.seed = seed;
  batch.draws.resize(count);
  MixingLaw law = MixingLaw::poisson(Rational(theta));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < count; ++i) {
    RandomSource rng = RandomSource::for_draw(seed, i);
    long long n = sample_size(law, rng);
    batch.draws[i] = sample_word_rsk(static_cast<int>(n), k, rng);
  }
  return batch;
}

SampleBatch sample_mkl_batch(long long n, int k, int l, int count,
                             std::uint64_t seed) {
  SampleBatch batch;
  batch.family = "mkl-rsk";
  batch.seed = seed;
  batch.draws.resize(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < count; ++i) {
    RandomSource rng = RandomSource::for_draw(seed, i);
    batch.draws[i] = sample_mkl_rsk(n, k, l, rng);
  }
  return batch;
}

EdgeStatistics edge_statistics(const SampleBatch& batch, EdgeScaling scaling,
                               double n_or_theta, int k) {
  if (batch.draws.empty()) throw std::invalid_argument("empty batch");
  EdgeStatistics st;
  for (const Partition& la : batch.draws) {
    double l1 = static_cast<double>(la.part(1));
    double s;
    if (scaling == EdgeScaling::plancherel_edge) {
      s = (l1 - 2.0 * std::sqrt(n_or_theta)) / std::pow(n_or_theta, 1.0 / 6.0);
    } else {
      if (k < 1) throw std::invalid_argument("charlier edge scaling needs k");
      s = (l1 - n_or_theta / k) / std::sqrt(2.0 * n_or_theta / k);
    }
    st.scaled.push_back(s);
  }
  double sum = 0.0;
  for (double v : st.scaled) sum += v;
  st.mean = sum / st.scaled.size();
  double var = 0.0;
  for (double v : st.scaled) var += (v - st.mean) * (v - st.mean);
  st.variance = st.scaled.size() > 1 ? var / (st.scaled.size() - 1) : 0.0;
  return st;
}

}  // namespace zm
