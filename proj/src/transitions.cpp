#include "zmeasure/verify.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zm {

namespace {

constexpr double kPi = 3.14159265358979323846;

double snap_half_integer(double x) {
  // nearest point of Z' (odd/2)
  double flo = std::floor(x) + 0.5;
  double alt = flo + (x > flo ? 1.0 : -1.0);
  return std::fabs(x - flo) <= std::fabs(x - alt) ? flo : alt;
}

double snap_integer(double x) { return std::round(x); }

Transition make_hyp_to_meixner() {
  Transition t;
  t.name = "hyp->meixner";
  t.description =
      "positive part of the hypergeometric kernel at integer (z,z')=(3,5) "
      "vs the Meixner kernel of order 3, a=2, shifted by k";
  t.steps = {0.2, 0.3, 0.4, 0.5};  // xi path; identity at every step
  t.tolerance = 1e-9;
  for (int p = 0; p < 10; ++p) t.grid.push_back(3.0 + p);  // Meixner points
  t.make_step = [](double xi) {
    const int k = 3, l = 5;
    TransitionStepEval st;
    st.source = positive_part(hypergeometric_kernel(ZParams::degenerate(k, l), xi));
    st.target = cd_kernel(OrthoPolyFamily::meixner(l - k, xi), k);
    st.to_source = [](double x) { return (x - 3) + 0.5; };
    st.back = [](double xs) { return (xs - 0.5) + 3; };
    st.kernel_scale = 1.0;
    return st;
  };
  return t;
}

Transition make_meixner_to_charlier() {
  Transition t;
  t.name = "meixner->charlier";
  t.description =
      "Meixner kernel, a->inf with theta = z(z+a)xi fixed, to the Charlier "
      "kernel with weight parameter theta/z (z = 3, theta = 3)";
  t.steps = {10, 40, 160, 640};  // a path
  t.tolerance = 2e-3;
  t.grid = {0, 1, 2, 3, 4, 5};
  t.make_step = [](double a) {
    const int k = 3;
    const double theta = 3.0;
    double xi = theta / (k * (k + a));
    TransitionStepEval st;
    st.source = cd_kernel(OrthoPolyFamily::meixner(a, xi), k);
    st.target = cd_kernel(OrthoPolyFamily::charlier(theta / k), k);
    st.to_source = [](double x) { return x; };
    st.back = [](double xs) { return xs; };
    st.kernel_scale = 1.0;
    return st;
  };
  return t;
}

Transition make_hyp_to_plancherel() {
  Transition t;
  t.name = "hyp->plancherel";
  t.description =
      "hypergeometric kernel along z = z' = s, xi = theta/s^2 (theta = 1) to "
      "the Plancherel kernel";
  t.steps = {20, 50, 100, 200};
  t.tolerance = 1e-2;
  t.grid = {-2.5, -1.5, -0.5, 0.5, 1.5, 2.5};
  t.make_step = [](double s) {
    const double theta = 1.0;
    long long si = static_cast<long long>(s);
    TransitionStepEval st;
    st.source =
        hypergeometric_kernel(ZParams::degenerate(si, si), theta / (s * s));
    st.target = plancherel_kernel(theta);
    st.to_source = [](double x) { return x; };
    st.back = [](double xs) { return xs; };
    st.kernel_scale = 1.0;
    return st;
  };
  return t;
}

Transition make_hyp_to_whittaker() {
  Transition t;
  t.name = "hyp->whittaker";
  t.description =
      "hypergeometric kernel, xi->1 with points scaled by 1-xi, to the "
      "Whittaker kernel (z = 1/3, z' = 2/3)";
  t.steps = {0.75, 0.85, 0.92, 0.95};  // xi path (0.95 is the 2F1 cap)
  t.tolerance = 5e-2;
  t.grid = {0.6, 1.4, 2.6, -0.8, -1.7};
  t.make_step = [](double xi) {
    ZParams zp = ZParams::rational(Rational(1, 3), Rational(2, 3));
    TransitionStepEval st;
    st.source = hypergeometric_kernel(zp, xi);
    st.target = whittaker_kernel(zp);
    double scale = 1.0 - xi;
    st.to_source = [scale](double u) { return snap_half_integer(u / scale); };
    st.back = [scale](double xs) { return xs * scale; };
    st.kernel_scale = 1.0 / scale;
    return st;
  };
  return t;
}

Transition make_whittaker_to_laguerre() {
  Transition t;
  t.name = "whittaker->laguerre";
  t.description =
      "positive part of the Whittaker kernel at integer z = k, z' = k+2, vs "
      "the Laguerre kernel of order k, a = 2 (identity at each order)";
  t.steps = {1, 2, 3, 4};  // order path
  t.tolerance = 1e-6;
  t.grid = {0.4, 1.1, 2.3, 3.7, 5.2};
  t.make_step = [](double kk) {
    int k = static_cast<int>(kk);
    TransitionStepEval st;
    st.source = positive_part(whittaker_kernel(ZParams::degenerate(k, k + 2)));
    st.target = cd_kernel(OrthoPolyFamily::laguerre(2.0), k);
    st.to_source = [](double u) { return u; };
    st.back = [](double xs) { return xs; };
    st.kernel_scale = 1.0;
    return st;
  };
  return t;
}

Transition make_meixner_to_laguerre() {
  Transition t;
  t.name = "meixner->laguerre";
  t.description =
      "Meixner kernel, xi->1 with x = u/(1-xi), to the Laguerre kernel "
      "(k = 3, a = 2)";
  t.steps = {0.90, 0.95, 0.975, 0.99};
  t.tolerance = 3e-2;
  t.grid = {0.5, 1.5, 3.0, 5.5, 8.0};
  t.make_step = [](double xi) {
    const int k = 3;
    const double a = 2.0;
    TransitionStepEval st;
    st.source = cd_kernel(OrthoPolyFamily::meixner(a, xi), k);
    st.target = cd_kernel(OrthoPolyFamily::laguerre(a), k);
    double scale = 1.0 - xi;
    st.to_source = [scale](double u) {
      return std::max(0.0, snap_integer(u / scale));
    };
    st.back = [scale](double xs) { return xs * scale; };
    st.kernel_scale = 1.0 / scale;
    return st;
  };
  return t;
}

Transition make_charlier_to_hermite() {
  Transition t;
  t.name = "charlier->hermite";
  t.description =
      "Charlier kernel, theta->inf with x = theta/k + u sqrt(2 theta/k), to "
      "the Hermite kernel of order k = 3";
  t.steps = {1e3, 4e3, 1.6e4, 6.4e4};  // mixing theta path
  t.tolerance = 2e-2;
  t.grid = {-1.6, -0.8, 0.0, 0.9, 1.7};
  t.make_step = [](double theta) {
    const int k = 3;
    double tw = theta / k;           // Charlier weight parameter
    double sigma = std::sqrt(2.0 * tw);
    TransitionStepEval st;
    st.source = cd_kernel(OrthoPolyFamily::charlier(tw), k);
    st.target = cd_kernel(OrthoPolyFamily::hermite(), k);
    st.to_source = [tw, sigma](double u) {
      return std::max(0.0, snap_integer(tw + sigma * u));
    };
    st.back = [tw, sigma](double xs) { return (xs - tw) / sigma; };
    st.kernel_scale = sigma;
    return st;
  };
  return t;
}

Transition make_plancherel_to_airy() {
  Transition t;
  t.name = "plancherel->airy";
  t.description =
      "Plancherel kernel at the edge, x = 2 sqrt(theta) + u theta^{1/6}, "
      "kernel rescaled by theta^{1/6}, to the Airy kernel";
  t.steps = {625, 1250, 2500, 5000, 10000};
  t.tolerance = 1e-2;
  t.grid = {-3.0, -2.0, -1.0, 0.0, 1.0};
  t.make_step = [](double theta) {
    double edge = 2.0 * std::sqrt(theta);
    double sigma = std::pow(theta, 1.0 / 6.0);
    TransitionStepEval st;
    st.source = plancherel_kernel(theta);
    st.target = airy_kernel();
    st.to_source = [edge, sigma](double u) {
      return snap_half_integer(edge + sigma * u);
    };
    st.back = [edge, sigma](double xs) { return (xs - edge) / sigma; };
    st.kernel_scale = sigma;
    return st;
  };
  return t;
}

Transition make_plancherel_to_sine() {
  Transition t;
  t.name = "plancherel->discrete-sine";
  t.description =
      "Plancherel kernel in the bulk, x near c sqrt(theta) with c = 1, to "
      "the discrete sine kernel with density parameter a = arccos(c/2)";
  t.steps = {625, 2500, 10000};
  t.tolerance = 1e-2;
  t.grid = {-2, -1, 0, 1, 2};
  t.make_step = [](double theta) {
    const double c = 1.0;
    double center = snap_half_integer(c * std::sqrt(theta));
    TransitionStepEval st;
    st.source = plancherel_kernel(theta);
    st.target = sine_kernel_discrete(std::acos(c / 2.0));
    st.to_source = [center](double u) { return center + u; };
    st.back = [center](double xs) { return xs - center; };
    st.kernel_scale = 1.0;
    return st;
  };
  return t;
}

Transition make_charlier_to_airy() {
  Transition t;
  t.name = "charlier->airy";
  t.description =
      "double limit of the Charlier kernel (order k, theta = k^3) at the "
      "upper edge to the Airy kernel";
  t.steps = {6, 10, 16, 26};  // k path, theta = k^3
  t.tolerance = 3e-2;
  t.grid = {-2.5, -1.5, -0.5, 0.5};
  t.make_step = [](double kk) {
    int k = static_cast<int>(kk);
    double theta = std::pow(kk, 3.0);
    double tw = theta / k;  // Charlier weight parameter
    double root = std::sqrt(theta) / k;
    double edge = k * (1.0 + root) * (1.0 + root);
    double sigma = std::pow(1.0 + root, 2.0 / 3.0) * std::pow(theta, 1.0 / 6.0);
    TransitionStepEval st;
    st.source = cd_kernel(OrthoPolyFamily::charlier(tw), k);
    st.target = airy_kernel();
    st.to_source = [edge, sigma](double u) {
      return std::max(0.0, snap_integer(edge + sigma * u));
    };
    st.back = [edge, sigma](double xs) { return (xs - edge) / sigma; };
    st.kernel_scale = sigma;
    return st;
  };
  return t;
}

}  // namespace

const std::vector<Transition>& builtin_transitions() {
  static const std::vector<Transition> all = {
      make_hyp_to_meixner(),      make_meixner_to_charlier(),
      make_hyp_to_plancherel(),   make_hyp_to_whittaker(),
      make_whittaker_to_laguerre(), make_meixner_to_laguerre(),
      make_charlier_to_hermite(), make_plancherel_to_airy(),
      make_plancherel_to_sine(),  make_charlier_to_airy()};
  return all;
}

const Transition& find_transition(const std::string& name) {
  for (const Transition& t : builtin_transitions())
    if (t.name == name) return t;
  // tolerate the unicode arrow spelling
  std::string ascii = name;
  size_t pos;
  while ((pos = ascii.find("→")) != std::string::npos)
    ascii.replace(pos, 3, "->");
  for (const Transition& t : builtin_transitions())
    if (t.name == ascii) return t;
  throw std::invalid_argument("unknown transition: " + name);
}

ConvergenceReport run_transition(const Transition& t) {
  ConvergenceReport rep;
  rep.name = t.name;
  rep.tolerance = t.tolerance;
  for (double s : t.steps) {
    TransitionStepEval st = t.make_step(s);
    double max_err = 0.0;
    for (size_t i = 0; i < t.grid.size(); ++i) {
      for (size_t j = i; j < t.grid.size(); ++j) {
        double xs = st.to_source(t.grid[i]);
        double ys = st.to_source(t.grid[j]);
        double ut = st.back(xs), vt = st.back(ys);
        double src = st.kernel_scale * st.source(xs, ys);
        double tgt = st.target(ut, vt);
        max_err = std::max(max_err, std::fabs(src - tgt));
      }
    }
    rep.steps.push_back({s, max_err});
  }
  rep.final_error = rep.steps.back().max_err;
  rep.monotone = true;
  for (size_t i = 1; i < rep.steps.size(); ++i) {
    double prev = rep.steps[i - 1].max_err, cur = rep.steps[i].max_err;
    // 1.2x single-step slack for floating noise; steps already below the
    // declared tolerance cannot break monotonicity (identity-type ladders
    // sit at numerical noise level)
    if (cur > 1.2 * prev && cur > t.tolerance) rep.monotone = false;
  }
  rep.pass = rep.monotone && rep.final_error <= t.tolerance;
  return rep;
}

std::string ConvergenceReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["steps"] = nlohmann::json::array();
  for (const auto& s : steps)
    j["steps"].push_back({{"s", s.s}, {"max_err", s.max_err}});
  j["monotone"] = monotone;
  j["final_error"] = final_error;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  return j.dump();
}

}  // namespace zm
