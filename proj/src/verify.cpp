#include "zmeasure/verify.hpp"

#include "zmeasure/detail/partition_gen.hpp"
#include "zmeasure/parallel.hpp"
#include "zmeasure/rsk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zm {

namespace {

// Column lengths of a raw parts vector, sized to parts[0].
void fill_conjugate(const std::vector<int>& parts, std::vector<int>& conj) {
  conj.assign(parts.empty() ? 0 : parts[0], 0);
  for (int j = 0; j < static_cast<int>(conj.size()); ++j) {
    int cnt = 0;
    for (int p : parts) {
      if (p >= j + 1)
        ++cnt;
      else
        break;
    }
    conj[j] = cnt;
  }
}

// Floating mixed-measure evaluator over raw parts vectors; the prefactor
// (1-xi)^t resp. e^-theta is folded in.
struct MixedEvaluator {
  MeasureSpec spec;
  double z = 0, zp = 0, t = 0, xi = 0, theta = 0, logtheta = 0;
  bool conjugate = false;
  Complex zc;
  int k = 0;
  double log_pref = 0;

  explicit MixedEvaluator(const MeasureSpec& s) : spec(s) {
    log_pref = log_mixing_prefactor(s.mixing);
    switch (s.family) {
      case MeasureSpec::Family::z_family:
        if (s.zp.mode == ZParams::Mode::conjugate_pair) {
          conjugate = true;
          zc = s.zp.zc;
        } else {
          z = s.zp.z_real();
          zp = s.zp.zp_real();
        }
        t = s.zp.t();
        xi = to_double(s.mixing.xi);
        break;
      case MeasureSpec::Family::integer_kl:
        z = s.k;
        zp = s.l;
        t = static_cast<double>(s.k) * s.l;
        xi = to_double(s.mixing.xi);
        break;
      case MeasureSpec::Family::k_infinity:
        k = s.k;
        theta = to_double(s.mixing.theta);
        logtheta = std::log(theta);
        break;
      case MeasureSpec::Family::plancherel:
        theta = to_double(s.mixing.theta);
        logtheta = std::log(theta);
        break;
    }
  }

  double operator()(const std::vector<int>& parts,
                    const std::vector<int>& conj) const {
    long long n = 0;
    for (int p : parts) n += p;
    switch (spec.family) {
      case MeasureSpec::Family::z_family:
      case MeasureSpec::Family::integer_kl: {
        // (1-xi)^t xi^n prod (c+z)(c+z')/h^2
        double v = std::exp(log_pref);
        for (int i = 1; i <= static_cast<int>(parts.size()); ++i)
          for (int j = 1; j <= parts[i - 1]; ++j) {
            double c = j - i;
            double h = (parts[i - 1] - j) + (conj[j - 1] - i) + 1;
            double num = conjugate ? std::norm(c + zc) : (c + z) * (c + zp);
            v *= xi * num / (h * h);
          }
        return v;
      }
      case MeasureSpec::Family::plancherel: {
        // exp(-theta + n log theta - 2 sum log h)
        double e = log_pref + n * logtheta;
        for (int i = 1; i <= static_cast<int>(parts.size()); ++i)
          for (int j = 1; j <= parts[i - 1]; ++j) {
            double h = (parts[i - 1] - j) + (conj[j - 1] - i) + 1;
            e -= 2.0 * std::log(h);
          }
        return std::exp(e);
      }
      case MeasureSpec::Family::k_infinity: {
        if (static_cast<int>(parts.size()) > k) return 0.0;
        // exp(-theta + n log theta - n log k - sum log h) * prod (c+k)/h
        double e = log_pref + n * (logtheta - std::log(static_cast<double>(k)));
        double v = 1.0;
        for (int i = 1; i <= static_cast<int>(parts.size()); ++i)
          for (int j = 1; j <= parts[i - 1]; ++j) {
            double c = j - i;
            double h = (parts[i - 1] - j) + (conj[j - 1] - i) + 1;
            v *= (c + k) / h;
            e -= std::log(h);
          }
        return v * std::exp(e);
      }
    }
    return 0.0;
  }
};

// Does the embedded configuration of `parts` contain all given points?
bool config_contains(const std::vector<int>& parts,
                     const std::vector<int>& conj,
                     const std::vector<int>& pts_twice) {
  for (int v : pts_twice) {
    bool found = false;
    if (v > 0) {
      int want = (v - 1) / 2;
      for (int i = 1; i <= static_cast<int>(parts.size()); ++i) {
        int pi = parts[i - 1] - i;
        if (pi < 0) break;
        if (pi == want) {
          found = true;
          break;
        }
        if (pi < want) break;  // strictly decreasing
      }
    } else {
      int want = (-v - 1) / 2;
      for (int j = 1; j <= static_cast<int>(conj.size()); ++j) {
        int qj = conj[j - 1] - j;
        if (qj < 0) break;
        if (qj == want) {
          found = true;
          break;
        }
        if (qj < want) break;
      }
    }
    if (!found) return false;
  }
  return true;
}

double brute_force_sum(const MeasureSpec& spec, const PointConfiguration& pts,
                       int truncation, bool parallel) {
  MixedEvaluator eval(spec);
  // task list (n, first part); first = 0 covers the empty diagram
  std::vector<std::pair<int, int>> tasks;
  for (int n = 0; n <= truncation; ++n)
    for (int f = (n == 0 ? 0 : 1); f <= (n == 0 ? 0 : n); ++f)
      tasks.emplace_back(n, f);
  auto task_sum = [&](std::size_t idx) {
    auto [n, f] = tasks[idx];
    double acc = 0.0;
    std::vector<int> conj;
    detail::visit_partitions_first_part(n, f, [&](const std::vector<int>& parts) {
      fill_conjugate(parts, conj);
      if (!config_contains(parts, conj, pts.twice)) return;
      acc += eval(parts, conj);
    });
    return acc;
  };
  if (parallel)
    return blocked_parallel_sum<double>(tasks.size(), task_sum, tasks.size());
  return serial_sum<double>(tasks.size(), task_sum);
}

}  // namespace

int adaptive_truncation(const MixingLaw& law, double tol, int max_n) {
  double cum = 0.0;
  for (int n = 0; n <= max_n; ++n) {
    cum += mixing_weight(law, n);
    double tail = std::max(0.0, 1.0 - cum);
    if (tail <= tol) return n;
  }
  throw std::runtime_error(
      "truncation too small to certify the requested tolerance");
}

CorrelationEstimate brute_force_correlation(const MeasureSpec& spec,
                                            const PointConfiguration& pts,
                                            int truncation) {
  CorrelationEstimate est;
  est.value = brute_force_sum(spec, pts, truncation, true);
  est.tail.level = truncation;
  est.tail.bound = mixing_tail(spec.mixing, truncation);
  return est;
}

CorrelationEstimate brute_force_correlation_serial(const MeasureSpec& spec,
                                                   const PointConfiguration& pts,
                                                   int truncation) {
  CorrelationEstimate est;
  est.value = brute_force_sum(spec, pts, truncation, false);
  est.tail.level = truncation;
  est.tail.bound = mixing_tail(spec.mixing, truncation);
  return est;
}

TheoremCheckReport check_theorem_determinantal(
    const ZParams& zp, const Rational& xi,
    const std::vector<PointConfiguration>& configs, double tol) {
  TheoremCheckReport rep;
  rep.tolerance = tol;
  MeasureSpec spec = MeasureSpec::mixed_z(zp, xi);
  int trunc = adaptive_truncation(spec.mixing, tol / 10.0);
  Kernel kernel = hypergeometric_kernel(zp, to_double(xi));
  for (const auto& cfg : configs) {
    if (cfg.size() > 3)
      throw std::invalid_argument("theorem check: configurations of size <= 3");
    TheoremCheckRow row;
    row.config = cfg;
    row.determinant = correlation_det(kernel, cfg.as_doubles());
    CorrelationEstimate est = brute_force_correlation(spec, cfg, trunc);
    row.brute_force = est.value;
    row.gap = std::fabs(row.determinant - row.brute_force);
    row.certified = row.gap + est.tail.bound;
    rep.rows.push_back(row);
    rep.worst_certified = std::max(rep.worst_certified, row.certified);
  }
  rep.pass = rep.worst_certified <= tol;
  return rep;
}

// ---------------------------------------------------------------------------
// depoissonization

namespace {

// lambda_1 histogram of the Plancherel measure on Y_m: mass[j] = sum over
// lambda with first part j of (dim lambda)^2 / m!.
std::vector<double> plancherel_first_row_histogram(int m) {
  std::vector<double> mass(static_cast<size_t>(m) + 1, 0.0);
  if (m == 0) {
    mass[0] = 1.0;
    return mass;
  }
  double lg_m1 = std::lgamma(m + 1.0);
  for (int f = 1; f <= m; ++f) {
    double acc = 0.0;
    std::vector<int> conj;
    detail::visit_partitions_first_part(m, f, [&](const std::vector<int>& parts) {
      fill_conjugate(parts, conj);
      double logdim = lg_m1;
      for (int i = 1; i <= static_cast<int>(parts.size()); ++i)
        for (int j = 1; j <= parts[i - 1]; ++j)
          logdim -= std::log(
              static_cast<double>((parts[i - 1] - j) + (conj[j - 1] - i) + 1));
      acc += std::exp(2.0 * logdim - lg_m1);
    });
    mass[f] = acc;
  }
  return mass;
}

}  // namespace

DepoissonizationReport check_depoissonization(const std::vector<int>& n_values,
                                              double trunc_tol) {
  DepoissonizationReport rep;
  for (int n : n_values) {
    if (n < 1 || n > 40)
      throw std::invalid_argument("depoissonization: n in 1..40");
    MixingLaw pois = MixingLaw::poisson(n);
    int trunc = adaptive_truncation(pois, trunc_tol, 110);
    // histograms for all m <= trunc, parallel over m
    std::vector<std::vector<double>> hist(trunc + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int m = 0; m <= trunc; ++m) hist[m] = plancherel_first_row_histogram(m);

    std::vector<double> mix(static_cast<size_t>(trunc) + 1, 0.0);
    for (int m = 0; m <= trunc; ++m) {
      double w = mixing_weight(pois, m);
      for (int j = 0; j <= m; ++j) mix[j] += w * hist[m][j];
    }
    const std::vector<double>& exact = hist[n];
    double tv = 0.0;
    for (int j = 0; j <= trunc; ++j) {
      double e = j < static_cast<int>(exact.size()) ? exact[j] : 0.0;
      tv += std::fabs(e - mix[j]);
    }
    DepoissonizationRow row;
    row.n = n;
    row.tv_distance = 0.5 * tv;
    row.truncation_slack = 0.5 * mixing_tail(pois, trunc);
    rep.rows.push_back(row);
  }
  rep.decreasing = true;
  for (size_t i = 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].tv_distance >
        rep.rows[i - 1].tv_distance + rep.rows[i - 1].truncation_slack +
            rep.rows[i].truncation_slack)
      rep.decreasing = false;
  return rep;
}

// ---------------------------------------------------------------------------
// simplex density (two-row measures)

SimplexDensityReport check_simplex_density(int a,
                                           const std::vector<int>& n_values,
                                           int max_moment) {
  if (a < 0) throw std::invalid_argument("simplex density: a >= 0");
  if (max_moment < 1) throw std::invalid_argument("need at least one moment");
  SimplexDensityReport rep;

  // limit moments by quadrature of u^r (2u-1)^2 (u(1-u))^a over [1/2, 1]
  auto dens = [a](double u) {
    return (2.0 * u - 1.0) * (2.0 * u - 1.0) * std::pow(u * (1.0 - u), a);
  };
  double z0 = adaptive_gauss_legendre(dens, 0.5, 1.0, 1e-13);
  for (int r = 1; r <= max_moment; ++r) {
    auto f = [&](double u) { return std::pow(u, r) * dens(u); };
    rep.limit_moments.push_back(adaptive_gauss_legendre(f, 0.5, 1.0, 1e-13) / z0);
  }

  for (int n : n_values) {
    // lambda = (n-m, m), weight ssyt_2 * ssyt_{2+a}, exact
    std::vector<Rational> weights;
    std::vector<int> first_parts;
    for (int m = 0; 2 * m <= n; ++m) {
      std::vector<int> parts;
      if (n - m > 0) parts.push_back(n - m);
      if (m > 0) parts.push_back(m);
      Partition la(parts);
      Rational w(count_ssyt(la, 2) * count_ssyt(la, 2 + a), 1);
      weights.push_back(w);
      first_parts.push_back(n - m);
    }
    Rational total = 0;
    for (const Rational& w : weights) total += w;
    SimplexMomentRow row;
    row.n = n;
    for (int r = 1; r <= max_moment; ++r) {
      Rational mom = 0;
      for (size_t i = 0; i < weights.size(); ++i)
        mom += weights[i] * rational_pow(Rational(first_parts[i], n), r);
      mom /= total;
      double m = to_double(mom);
      row.moments.push_back(m);
      row.rel_errors.push_back(std::fabs(m - rep.limit_moments[r - 1]) /
                               std::fabs(rep.limit_moments[r - 1]));
    }
    rep.rows.push_back(row);
  }
  rep.errors_decreasing = true;
  auto worst = [](const SimplexMomentRow& r) {
    return *std::max_element(r.rel_errors.begin(), r.rel_errors.end());
  };
  for (size_t i = 1; i < rep.rows.size(); ++i)
    if (worst(rep.rows[i]) > worst(rep.rows[i - 1])) rep.errors_decreasing = false;
  if (!rep.rows.empty()) rep.final_worst_rel_error = worst(rep.rows.back());
  return rep;
}

// ---------------------------------------------------------------------------
// gamma scaling (heuristic)

GammaScalingReport check_gamma_scaling(const Rational& t,
                                       const std::vector<Rational>& xi_values,
                                       int max_moment) {
  GammaScalingReport rep;
  double td = to_double(t);
  std::vector<double> gamma_moments;
  for (int r = 1; r <= max_moment; ++r) {
    double g = 1.0;
    for (int i = 0; i < r; ++i) g *= td + i;
    gamma_moments.push_back(g);  // Gamma(t+r)/Gamma(t)
  }
  for (const Rational& xi : xi_values) {
    MixingLaw law = MixingLaw::negative_binomial(xi, t);
    double xd = to_double(xi);
    double scale = 1.0 - xd;
    // summation cut where the scaled tail is negligible
    long long cap = static_cast<long long>(std::ceil(
        (td * xd / scale + 12.0 * std::sqrt(td * xd) / scale + 64.0)));
    std::vector<double> mom(max_moment, 0.0);
    double w = std::exp(log_mixing_prefactor(law));
    for (long long n = 0; n <= cap; ++n) {
      double s = scale * n, p = 1.0;
      for (int r = 0; r < max_moment; ++r) {
        p *= s;
        mom[r] += w * p;
      }
      w *= (td + n) * xd / (n + 1);
    }
    GammaScalingRow row;
    row.xi = xd;
    for (int r = 0; r < max_moment; ++r)
      row.rel_errors.push_back(std::fabs(mom[r] - gamma_moments[r]) /
                               gamma_moments[r]);
    rep.rows.push_back(row);
  }
  rep.decreasing = true;
  for (size_t i = 1; i < rep.rows.size(); ++i) {
    double prev = *std::max_element(rep.rows[i - 1].rel_errors.begin(),
                                    rep.rows[i - 1].rel_errors.end());
    double cur = *std::max_element(rep.rows[i].rel_errors.begin(),
                                   rep.rows[i].rel_errors.end());
    if (cur > prev) rep.decreasing = false;
  }
  return rep;
}

}  // namespace zm
