// Independent oracles and the limit-transition harness: brute-force
// correlation functions by measure enumeration, determinantal-formula
// validation, the kernel-degeneration ladder, depoissonization and
// simplex-density checks.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zmeasure/kernels.hpp"
#include "zmeasure/measures.hpp"
#include "zmeasure/partition.hpp"

namespace zm {

struct TailBound {
  int level = 0;      // truncation level N
  double bound = 0.0; // omitted mixture mass sum_{n>N} pi(n)
};

struct CorrelationEstimate {
  double value = 0.0;
  TailBound tail;
};

// Smallest N <= max_n with mixture tail below tol; throws if none.
int adaptive_truncation(const MixingLaw& law, double tol, int max_n = 60);

// rho(pts) = sum over |lambda| <= N with X(lambda) containing pts of the
// mixed measure; serial reference and the OpenMP production route.
CorrelationEstimate brute_force_correlation(const MeasureSpec& spec,
                                            const PointConfiguration& pts,
                                            int truncation);
CorrelationEstimate brute_force_correlation_serial(const MeasureSpec& spec,
                                                   const PointConfiguration& pts,
                                                   int truncation);

struct TheoremCheckRow {
  PointConfiguration config;
  double determinant = 0.0;
  double brute_force = 0.0;
  double gap = 0.0;
  double certified = 0.0;  // gap + tail bound
};

struct TheoremCheckReport {
  std::vector<TheoremCheckRow> rows;
  double worst_certified = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Determinantal correlations of the hypergeometric kernel against the
// enumeration oracle; configs of size <= 3.
TheoremCheckReport check_theorem_determinantal(
    const ZParams& zp, const Rational& xi,
    const std::vector<PointConfiguration>& configs, double tol);

// ---------------------------------------------------------------------------
// limit transitions

struct TransitionStepEval {
  Kernel source;
  Kernel target;
  // target coordinate u -> source point (already snapped to the source
  // lattice when discrete)
  std::function<double(double)> to_source;
  // source point -> effective target coordinate (inverse map of the snapped
  // point, so lattice rounding does not pollute the kernel comparison)
  std::function<double(double)> back;
  double kernel_scale = 1.0;
};

struct Transition {
  std::string name;
  std::string description;
  std::vector<double> steps;
  double tolerance = 0.0;
  std::vector<double> grid;  // target coordinates
  std::function<TransitionStepEval(double)> make_step;
};

struct TransitionStepResult {
  double s = 0.0;
  double max_err = 0.0;
};

struct ConvergenceReport {
  std::string name;
  std::vector<TransitionStepResult> steps;
  bool monotone = false;
  double final_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  std::string to_json() const;
};

ConvergenceReport run_transition(const Transition& t);

const std::vector<Transition>& builtin_transitions();
const Transition& find_transition(const std::string& name);

// ---------------------------------------------------------------------------
// depoissonization and simplex density

struct DepoissonizationRow {
  int n = 0;
  double tv_distance = 0.0;
  double truncation_slack = 0.0;
};

struct DepoissonizationReport {
  std::vector<DepoissonizationRow> rows;
  bool decreasing = false;
};

// TV distance between the lambda_1 law under the Plancherel measure on Y_n
// and its poissonization at theta = n.
DepoissonizationReport check_depoissonization(const std::vector<int>& n_values,
                                              double trunc_tol = 1e-5);

struct SimplexMomentRow {
  int n = 0;
  std::vector<double> moments;     // exact E[(lambda_1/n)^r], r = 1..
  std::vector<double> rel_errors;  // against the limit moments
};

struct SimplexDensityReport {
  std::vector<double> limit_moments;  // quadrature oracle
  std::vector<SimplexMomentRow> rows;
  bool errors_decreasing = false;
  double final_worst_rel_error = 0.0;
};

// Two-row measures M^{(n)}_{2,2+a}: moments of lambda_1/n against the
// (x1-x2)^2 (x1 x2)^a limit density on x1+x2=1.
SimplexDensityReport check_simplex_density(int a,
                                           const std::vector<int>& n_values,
                                           int max_moment);

// Heuristic xi->1 check: exact negative-binomial moments of (1-xi)|lambda|
// against the gamma-law moments t, t(t+1), ...
struct GammaScalingRow {
  double xi = 0.0;
  std::vector<double> rel_errors;
};
struct GammaScalingReport {
  std::vector<GammaScalingRow> rows;
  bool decreasing = false;
  bool heuristic = true;
};
GammaScalingReport check_gamma_scaling(const Rational& t,
                                       const std::vector<Rational>& xi_values,
                                       int max_moment);

}  // namespace zm
