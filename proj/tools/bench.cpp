// Benchmark comparing the serial reference implementations against the
// OpenMP-parallel enumeration and sampling kernels, with agreement checks.

#include "zmeasure/parallel.hpp"
#include "zmeasure/sampling.hpp"
#include "zmeasure/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

using namespace zm;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms,
            double max_delta) {
  std::printf("%-34s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   max|delta| %.3g\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms, max_delta);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", max_threads());

  {
    MeasureSpec spec = MeasureSpec::mixed_z(
        ZParams::rational(Rational(1, 2), Rational(1, 2)), Rational(1, 2));
    PointConfiguration pts = PointConfiguration::from_halves({1});
    const int trunc = 48;
    CorrelationEstimate s, p;
    double ts = time_ms([&] { s = brute_force_correlation_serial(spec, pts, trunc); });
    double tp = time_ms([&] { p = brute_force_correlation(spec, pts, trunc); });
    report("brute-force rho_1 (N=48)", ts, tp, std::fabs(s.value - p.value));
  }

  {
    MeasureSpec spec = MeasureSpec::poissonized_plancherel(Rational(16));
    PointConfiguration pts = PointConfiguration::from_halves({1, -1});
    const int trunc = 44;
    CorrelationEstimate s, p;
    double ts = time_ms([&] { s = brute_force_correlation_serial(spec, pts, trunc); });
    double tp = time_ms([&] { p = brute_force_correlation(spec, pts, trunc); });
    report("poissonized rho_2 (N=44)", ts, tp, std::fabs(s.value - p.value));
  }

  {
    const int n = 3000, count = 40;
    SampleBatch sb, pb;
    double ts = time_ms([&] {
      sb.seed = 11;
      sb.draws.clear();
      for (int i = 0; i < count; ++i) {
        RandomSource rng = RandomSource::for_draw(11, i);
        sb.draws.push_back(sample_plancherel_rsk(n, rng));
      }
    });
    double tp = time_ms([&] { pb = sample_plancherel_batch(n, count, 11); });
    double delta = 0;
    for (int i = 0; i < count; ++i)
      if (!(sb.draws[i] == pb.draws[i])) delta = 1;
    report("plancherel RSK batch (n=3000)", ts, tp, delta);
  }

  return 0;
}
