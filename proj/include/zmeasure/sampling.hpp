// Seedable random generation: counter-based streams, mixing-law samplers,
// exact inverse-CDF sampling of z-measures at small n, RSK-based samplers
// for the degenerate families, and edge-scaling statistics.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zmeasure/measures.hpp"
#include "zmeasure/partition.hpp"

namespace zm {

// Counter-based generator: the stream is a pure function of (seed, stream),
// so per-draw substreams are reproducible independent of scheduling.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);
  static RandomSource for_draw(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  double next_double();  // uniform [0,1)
  bool next_bit();
  double next_normal();  // standard normal (Box-Muller)

 private:
  std::uint64_t state_;
};

// Inverse-CDF draw from a discrete mixing law (negative binomial / poisson);
// cumulative guard 1e-15.
long long sample_size(const MixingLaw& law, RandomSource& rng);
// Gamma(t) variate for the gamma-scaled law.
double sample_gamma_scaled(double t, RandomSource& rng);

// Exact inverse-CDF draw over Y_n (n <= 30) with probabilities exactly
// proportional to the exact measure; the uniform variate is refined bit by
// bit until a single bucket contains its dyadic interval.
Partition sample_partition_exact(int n, const MeasureSpec& spec,
                                 RandomSource& rng);

// Uniform k x l nonnegative matrix with sum n (unranked composition, exactly
// uniform), pushed through RSK.
Partition sample_mkl_rsk(long long n, int k, int l, RandomSource& rng);

// Uniform word of length n over {1..k} pushed through RSK; realizes the
// k-infinity degenerate family at fixed n.
Partition sample_word_rsk(int n, int k, RandomSource& rng);

// Uniform permutation (Fisher-Yates) pushed through RSK; n <= 1e4.
Partition sample_plancherel_rsk(int n, RandomSource& rng);

struct SampleBatch {
  std::string family;
  std::uint64_t seed = 0;
  std::vector<Partition> draws;

  std::vector<long long> lambda1() const;
  // one JSON object per line: {seed, index, parts, lambda1, size}
  std::string to_json_lines() const;
};

SampleBatch sample_plancherel_batch(int n, int count, std::uint64_t seed);
SampleBatch sample_mkl_batch(long long n, int k, int l, int count,
                             std::uint64_t seed);
// Poissonized k-infinity family: n ~ Poisson(theta), then a uniform word.
SampleBatch sample_k_infinity_batch(double theta, int k, int count,
                                    std::uint64_t seed);

enum class EdgeScaling { plancherel_edge, charlier_edge };

struct EdgeStatistics {
  std::vector<double> scaled;  // per draw
  double mean = 0.0;
  double variance = 0.0;
};

// (lambda_1 - 2 sqrt(n))/n^{1/6}, or (lambda_1 - theta/k)/sqrt(2 theta/k).
EdgeStatistics edge_statistics(const SampleBatch& batch, EdgeScaling scaling,
                               double n_or_theta, int k = 0);

}  // namespace zm
