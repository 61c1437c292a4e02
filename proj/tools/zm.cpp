// Command-line surface for the z-measure / RSK / correlation-kernel library.
//
// Subcommands: measure, kernel, correlate, limits, rsk, sample.
// Exit codes: 0 success, 2 usage or parameter error, 3 verification
// tolerance failure, 4 limit-transition failure.

#include <CLI11.hpp>
#include <json.hpp>

#include "zmeasure/kernels.hpp"
#include "zmeasure/measures.hpp"
#include "zmeasure/rsk.hpp"
#include "zmeasure/sampling.hpp"
#include "zmeasure/verify.hpp"

#include <algorithm>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace zm;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool looks_complex(const std::string& s) {
  return s.find('i') != std::string::npos;
}

Complex parse_complex(const std::string& s) {
  std::string body = s.substr(0, s.find('i'));
  // split at the sign of the imaginary part (first +/- after position 0
  // that does not follow an exponent marker)
  size_t split = std::string::npos;
  for (size_t i = 1; i < body.size(); ++i) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
        body[i - 1] != 'E')
      split = i;
  }
  if (split == std::string::npos) throw UsageError("bad complex literal: " + s);
  double re = std::stod(body.substr(0, split));
  double im = std::stod(body.substr(split));
  return {re, im};
}

ZParams parse_zparams(const std::string& z, const std::string& zp) {
  if (looks_complex(z)) {
    Complex zc = parse_complex(z);
    if (zc.imag() == 0.0) {
      Rational r = parse_rational(std::to_string(zc.real()));
      // fall through to the real path below
      Rational rp = zp.empty() ? r : parse_rational(zp);
      if (denominator(r) == 1 && denominator(rp) == 1)
        return ZParams::degenerate(numerator(r).convert_to<long long>(),
                                   numerator(rp).convert_to<long long>());
      return ZParams::rational(r, rp);
    }
    return ZParams::conjugate(zc);
  }
  Rational r = parse_rational(z);
  Rational rp = zp.empty() ? r : parse_rational(zp);
  if (denominator(r) == 1 && denominator(rp) == 1)
    return ZParams::degenerate(numerator(r).convert_to<long long>(),
                               numerator(rp).convert_to<long long>());
  return ZParams::rational(r, rp);
}

double parse_point(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    double num = std::stod(s.substr(0, slash));
    double den = std::stod(s.substr(slash + 1));
    return num / den;
  }
  return std::stod(s);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

// ---------------------------------------------------------------------------

struct MeasureArgs {
  std::string z, zp, xi, theta;
  bool plancherel = false;
  int k = 0, l = 0;
  int n = -1;
  int top = 10;
  std::string format = "table";
};

// Mixed measure across all sizes: top diagrams up to the adaptive
// truncation of the mixing law.
int cmd_measure_mixed(const MeasureArgs& a) {
  MeasureSpec spec;
  if (a.plancherel) {
    spec = MeasureSpec::poissonized_plancherel(parse_rational(a.theta));
  } else if (a.k > 0 && a.l > 0) {
    spec = MeasureSpec::mixed_kl(a.k, a.l, parse_rational(a.xi));
  } else if (a.k > 0) {
    spec = MeasureSpec::poissonized_k_infinity(a.k, parse_rational(a.theta));
  } else if (!a.z.empty()) {
    spec = MeasureSpec::mixed_z(parse_zparams(a.z, a.zp), parse_rational(a.xi));
  } else {
    throw UsageError("measure: choose a family");
  }
  int trunc = adaptive_truncation(spec.mixing, 1e-9);
  struct Row {
    Partition la;
    double value;
  };
  std::vector<Row> rows;
  double total = 0;
  for (int n = 0; n <= trunc; ++n)
    for (const Partition& la : enumerate_partitions(n, std::max(60, trunc))) {
      double v = mixed_measure(la, spec);
      total += v;
      rows.push_back({la, v});
    }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& x, const Row& y) { return x.value > y.value; });
  if (static_cast<int>(rows.size()) > a.top) rows.resize(a.top);
  if (a.format == "json") {
    for (const Row& r : rows) {
      nlohmann::json j;
      j["parts"] = r.la.parts();
      j["value"] = r.value;
      std::cout << j.dump() << "\n";
    }
    nlohmann::json norm;
    norm["normalization"] = total;
    norm["truncation"] = trunc;
    std::cout << norm.dump() << "\n";
  } else {
    for (const Row& r : rows)
      std::printf("%-18s %.17g\n", r.la.to_string().c_str(), r.value);
    std::printf("%-18s %.17g   (mass up to truncation %d)\n",
                "(normalization)", total, trunc);
  }
  return 0;
}

int cmd_measure(const MeasureArgs& a) {
  struct Row {
    Partition la;
    Rational exact;
    double value;
  };
  std::vector<Row> rows;
  Rational total = 0;
  auto add_level = [&](int n, const std::function<Rational(const Partition&)>& w) {
    for (const Partition& la : enumerate_partitions(n)) {
      Rational v = w(la);
      rows.push_back({la, v, to_double(v)});
      total += v;
    }
  };
  if (a.n < 0) {
    if (!a.xi.empty() || !a.theta.empty()) return cmd_measure_mixed(a);
    throw UsageError("measure: --n or a mixing parameter is required");
  }
  if (a.plancherel) {
    add_level(a.n, [](const Partition& la) {
      return degenerate_measure(la, DegenerateFamily::plancherel);
    });
  } else if (a.k > 0 && a.l > 0) {
    add_level(a.n, [&](const Partition& la) {
      return degenerate_measure(la, DegenerateFamily::integer_kl, a.k, a.l);
    });
  } else if (a.k > 0) {
    add_level(a.n, [&](const Partition& la) {
      return degenerate_measure(la, DegenerateFamily::k_infinity, a.k);
    });
  } else if (!a.z.empty()) {
    ZParams zp = parse_zparams(a.z, a.zp);
    if (zp.mode == ZParams::Mode::conjugate_pair)
      throw UsageError("measure: conjugate parameters need the kernel surface");
    add_level(a.n, [&](const Partition& la) { return z_measure_exact(la, zp); });
  } else {
    throw UsageError("measure: choose --z/--zp, --k/--l, --k or --plancherel");
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& x, const Row& y) { return x.exact > y.exact; });
  if (static_cast<int>(rows.size()) > a.top) rows.resize(a.top);

  if (a.format == "json") {
    for (const Row& r : rows) {
      nlohmann::json j;
      j["parts"] = r.la.parts();
      j["exact"] = to_string(r.exact);
      j["value"] = r.value;
      std::cout << j.dump() << "\n";
    }
    nlohmann::json norm;
    norm["normalization"] = to_string(total);
    std::cout << norm.dump() << "\n";
  } else if (a.format == "csv") {
    std::cout << "partition,exact,value\n";
    for (const Row& r : rows)
      std::cout << "\"" << r.la.to_string() << "\"," << to_string(r.exact) << ","
                << r.value << "\n";
    std::cout << "\"(normalization)\"," << to_string(total) << ","
              << to_double(total) << "\n";
  } else {
    for (const Row& r : rows)
      std::printf("%-18s %-22s %.17g\n", r.la.to_string().c_str(),
                  to_string(r.exact).c_str(), r.value);
    std::printf("%-18s %-22s %.17g\n", "(normalization)",
                to_string(total).c_str(), to_double(total));
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct KernelArgs {
  bool hyp = false, plancherel = false, whittaker = false, airy = false;
  bool sine_discrete = false, sine_cont = false;
  bool meixner = false, charlier = false, laguerre = false, hermite = false;
  bool positive = false;
  std::string z, zp, xi, theta, a;
  int k = 0;
  std::string x, y;
};

Kernel build_kernel(const KernelArgs& ka) {
  PrecisionPolicy pol = PrecisionPolicy::from_env();
  if (ka.hyp) {
    if (ka.z.empty() || ka.xi.empty())
      throw UsageError("kernel --hyp needs --z [--zp] --xi");
    Kernel k = hypergeometric_kernel(parse_zparams(ka.z, ka.zp),
                                     to_double(parse_rational(ka.xi)), pol);
    return ka.positive ? positive_part(k) : k;
  }
  if (ka.plancherel) {
    if (ka.theta.empty()) throw UsageError("kernel --plancherel needs --theta");
    Kernel k = plancherel_kernel(to_double(parse_rational(ka.theta)), pol);
    return ka.positive ? positive_part(k) : k;
  }
  if (ka.whittaker) {
    if (ka.z.empty()) throw UsageError("kernel --whittaker needs --z [--zp]");
    Kernel k = whittaker_kernel(parse_zparams(ka.z, ka.zp), pol);
    return ka.positive ? positive_part(k) : k;
  }
  if (ka.airy) return airy_kernel(pol);
  if (ka.sine_discrete) {
    if (ka.a.empty()) throw UsageError("kernel --sine-discrete needs --a");
    return sine_kernel_discrete(to_double(parse_rational(ka.a)));
  }
  if (ka.sine_cont) return sine_kernel_continuous();
  if (ka.meixner || ka.charlier || ka.laguerre || ka.hermite) {
    if (ka.k < 1) throw UsageError("orthogonal kernels need --k (order)");
    OrthoPolyFamily fam = [&] {
      if (ka.meixner)
        return OrthoPolyFamily::meixner(to_double(parse_rational(ka.a)),
                                        to_double(parse_rational(ka.xi)));
      if (ka.charlier)
        return OrthoPolyFamily::charlier(to_double(parse_rational(ka.theta)));
      if (ka.laguerre)
        return OrthoPolyFamily::laguerre(to_double(parse_rational(ka.a)));
      return OrthoPolyFamily::hermite();
    }();
    return cd_kernel(fam, ka.k);
  }
  throw UsageError("kernel: choose a family flag");
}

int cmd_kernel(const KernelArgs& ka) {
  if (ka.x.empty() || ka.y.empty()) throw UsageError("kernel needs --x --y");
  Kernel k = build_kernel(ka);
  double v = k(parse_point(ka.x), parse_point(ka.y));
  std::printf("%.17g\n", v);
  return 0;
}

struct CorrelateArgs {
  KernelArgs kernel;
  std::vector<std::string> points;
  bool verify = false;
  double tol = 1e-6;
};

int cmd_correlate(const CorrelateArgs& ca) {
  if (ca.points.empty()) throw UsageError("correlate needs points");
  std::vector<double> pts;
  std::vector<int> doubled;
  for (const auto& p : ca.points) {
    double v = parse_point(p);
    pts.push_back(v);
    doubled.push_back(static_cast<int>(std::llround(2.0 * v)));
  }
  Kernel k = build_kernel(ca.kernel);
  double det = correlation_det(k, pts);
  if (!ca.verify) {
    std::printf("%.17g\n", det);
    return 0;
  }
  std::optional<MeasureSpec> spec;
  if (ca.kernel.plancherel)
    spec = MeasureSpec::poissonized_plancherel(parse_rational(ca.kernel.theta));
  else if (ca.kernel.hyp)
    spec = MeasureSpec::mixed_z(parse_zparams(ca.kernel.z, ca.kernel.zp),
                                parse_rational(ca.kernel.xi));
  else
    throw UsageError("--verify supports the hyp and plancherel kernels");
  PointConfiguration cfg = PointConfiguration::from_halves(doubled);
  int trunc = adaptive_truncation(spec->mixing, ca.tol / 10.0);
  CorrelationEstimate est = brute_force_correlation(*spec, cfg, trunc);
  double gap = std::fabs(det - est.value);
  double certified = gap + est.tail.bound;
  std::printf("determinant %.17g\n", det);
  std::printf("oracle      %.17g  (truncation %d, tail %.3g)\n", est.value,
              est.tail.level, est.tail.bound);
  std::printf("certified gap %.3g\n", certified);
  if (certified > ca.tol) {
    std::fprintf(stderr, "verification failed at tolerance %g\n", ca.tol);
    return 3;
  }
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_limits(const std::vector<std::string>& names) {
  std::vector<const Transition*> run;
  if (names.empty()) {
    for (const Transition& t : builtin_transitions()) run.push_back(&t);
  } else {
    for (const std::string& n : names) run.push_back(&find_transition(n));
  }
  bool all_pass = true;
  for (const Transition* t : run) {
    ConvergenceReport rep = run_transition(*t);
    std::cout << rep.to_json() << "\n";
    all_pass = all_pass && rep.pass;
  }
  return all_pass ? 0 : 4;
}

// ---------------------------------------------------------------------------

struct RskArgs {
  std::string perm, word, matrix_file;
};

int cmd_rsk(const RskArgs& ra) {
  TableauPair pair;
  int expected_lis = 0;
  if (!ra.perm.empty()) {
    Permutation p = parse_int_list(ra.perm);
    pair = rsk_permutation(p);
    expected_lis = lis(p);
  } else if (!ra.word.empty()) {
    Word w = parse_int_list(ra.word);
    int k = *std::max_element(w.begin(), w.end());
    pair = rsk_word(w, k);
    expected_lis = lis(w);
  } else if (!ra.matrix_file.empty()) {
    std::ifstream in(ra.matrix_file);
    if (!in) throw UsageError("cannot open " + ra.matrix_file);
    std::vector<std::vector<long long>> rows;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::vector<long long> row;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) row.push_back(std::stoll(cell));
      rows.push_back(row);
    }
    if (rows.empty()) throw UsageError("empty matrix");
    NonNegMatrix m = NonNegMatrix::zero(static_cast<int>(rows.size()),
                                        static_cast<int>(rows[0].size()));
    std::vector<int> two_line;  // weakly increasing subsequence source
    for (int i = 0; i < m.k; ++i) {
      if (static_cast<int>(rows[i].size()) != m.l)
        throw UsageError("ragged matrix");
      for (int j = 0; j < m.l; ++j) {
        m.at(i, j) = rows[i][j];
        for (long long r = 0; r < rows[i][j]; ++r) two_line.push_back(j + 1);
      }
    }
    pair = rsk_matrix(m);
    expected_lis = two_line.empty() ? 0 : lis(two_line);
  } else {
    throw UsageError("rsk: choose --perm, --word or --matrix");
  }
  Partition shape = pair.P.shape();
  if (expected_lis != shape.part(1))
    throw std::logic_error("internal: lis does not match the first row");
  std::cout << "P:\n" << pair.P.to_string();
  std::cout << "Q:\n" << pair.Q.to_string();
  std::cout << "shape " << shape.to_string() << "\n";
  std::cout << "lis " << expected_lis << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct SampleArgs {
  bool plancherel_rsk = false;
  bool mkl = false;
  bool kinf = false;
  bool exact_z = false;
  std::string z, zp, theta;
  int n = 0, k = 0, l = 0, count = 1;
  std::uint64_t seed = 0;
  std::string stats;
};

int cmd_sample(const SampleArgs& sa) {
  SampleBatch batch;
  if (sa.plancherel_rsk) {
    batch = sample_plancherel_batch(sa.n, sa.count, sa.seed);
  } else if (sa.mkl) {
    if (sa.k < 1 || sa.l < 1) throw UsageError("sample --mkl needs --k --l");
    batch = sample_mkl_batch(sa.n, sa.k, sa.l, sa.count, sa.seed);
  } else if (sa.kinf) {
    if (sa.k < 1 || sa.theta.empty())
      throw UsageError("sample --kinf needs --k --theta");
    batch = sample_k_infinity_batch(to_double(parse_rational(sa.theta)), sa.k,
                                    sa.count, sa.seed);
  } else if (sa.exact_z) {
    if (sa.z.empty()) throw UsageError("sample --exact-z needs --z [--zp]");
    MeasureSpec spec;
    spec.family = MeasureSpec::Family::z_family;
    spec.zp = parse_zparams(sa.z, sa.zp);
    batch.family = "exact-z";
    batch.seed = sa.seed;
    for (int i = 0; i < sa.count; ++i) {
      RandomSource rng = RandomSource::for_draw(sa.seed, i);
      batch.draws.push_back(sample_partition_exact(sa.n, spec, rng));
    }
  } else {
    throw UsageError("sample: choose --plancherel-rsk, --mkl or --exact-z");
  }
  if (sa.stats == "edge") {
    nlohmann::json j;
    j["count"] = batch.draws.size();
    if (sa.kinf) {
      double theta = to_double(parse_rational(sa.theta));
      EdgeStatistics st =
          edge_statistics(batch, EdgeScaling::charlier_edge, theta, sa.k);
      j["edge_scaled_mean"] = st.mean;
      j["edge_scaled_variance"] = st.variance;
    } else {
      EdgeStatistics st = edge_statistics(batch, EdgeScaling::plancherel_edge,
                                          static_cast<double>(sa.n));
      double mean_l1 = 0;
      for (long long v : batch.lambda1()) mean_l1 += static_cast<double>(v);
      mean_l1 /= batch.draws.size();
      j["mean_lambda1_over_sqrt_n"] = mean_l1 / std::sqrt(double(sa.n));
      j["edge_scaled_mean"] = st.mean;
      j["edge_scaled_variance"] = st.variance;
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << batch.to_json_lines();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"z-measures, RSK correspondences and correlation kernels"};
  app.require_subcommand(1);

  MeasureArgs ma;
  auto* measure = app.add_subcommand("measure", "evaluate a measure on Y_n");
  measure->add_option("--z", ma.z);
  measure->add_option("--zp", ma.zp);
  measure->add_flag("--plancherel", ma.plancherel);
  measure->add_option("--k", ma.k);
  measure->add_option("--l", ma.l);
  measure->add_option("--n", ma.n);
  measure->add_option("--xi", ma.xi);
  measure->add_option("--theta", ma.theta);
  measure->add_option("--top", ma.top);
  measure->add_option("--format", ma.format)
      ->check(CLI::IsMember({"table", "json", "csv"}));

  KernelArgs ka;
  auto add_kernel_flags = [](CLI::App* cmd, KernelArgs& k) {
    cmd->add_flag("--hyp", k.hyp);
    cmd->add_flag("--plancherel", k.plancherel);
    cmd->add_flag("--whittaker", k.whittaker);
    cmd->add_flag("--airy", k.airy);
    cmd->add_flag("--sine-discrete", k.sine_discrete);
    cmd->add_flag("--sine-cont", k.sine_cont);
    cmd->add_flag("--meixner", k.meixner);
    cmd->add_flag("--charlier", k.charlier);
    cmd->add_flag("--laguerre", k.laguerre);
    cmd->add_flag("--hermite", k.hermite);
    cmd->add_flag("--positive-part", k.positive);
    cmd->add_option("--z", k.z);
    cmd->add_option("--zp", k.zp);
    cmd->add_option("--xi", k.xi);
    cmd->add_option("--theta", k.theta);
    cmd->add_option("--a", k.a);
    cmd->add_option("--k", k.k);
  };
  auto* kernel = app.add_subcommand("kernel", "evaluate a correlation kernel");
  add_kernel_flags(kernel, ka);
  kernel->add_option("--x", ka.x);
  kernel->add_option("--y", ka.y);

  CorrelateArgs ca;
  auto* correlate =
      app.add_subcommand("correlate", "determinantal correlation at points");
  add_kernel_flags(correlate, ca.kernel);
  correlate->add_flag("--verify", ca.verify);
  correlate->add_option("--tol", ca.tol);
  correlate->add_option("points", ca.points);

  std::vector<std::string> limit_names;
  auto* limits = app.add_subcommand("limits", "run limit-transition checks");
  limits->add_option("names", limit_names);

  RskArgs ra;
  auto* rsk = app.add_subcommand("rsk", "row-insertion correspondences");
  rsk->add_option("--perm", ra.perm);
  rsk->add_option("--word", ra.word);
  rsk->add_option("--matrix", ra.matrix_file);

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "seeded random generation");
  sample->add_flag("--plancherel-rsk", sa.plancherel_rsk);
  sample->add_flag("--mkl", sa.mkl);
  sample->add_flag("--kinf", sa.kinf);
  sample->add_flag("--exact-z", sa.exact_z);
  sample->add_option("--z", sa.z);
  sample->add_option("--zp", sa.zp);
  sample->add_option("--theta", sa.theta);
  sample->add_option("--n", sa.n);
  sample->add_option("--k", sa.k);
  sample->add_option("--l", sa.l);
  sample->add_option("--count", sa.count);
  sample->add_option("--seed", sa.seed);
  sample->add_option("--stats", sa.stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*measure) return cmd_measure(ma);
    if (*kernel) return cmd_kernel(ka);
    if (*correlate) return cmd_correlate(ca);
    if (*limits) return cmd_limits(limit_names);
    if (*rsk) return cmd_rsk(ra);
    if (*sample) return cmd_sample(sa);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
