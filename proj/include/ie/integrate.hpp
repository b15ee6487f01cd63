#pragma once

#include "ie/catalog.hpp"

namespace ie {

struct MonteCarloEstimate {
  double value = 0;
  double std_error = 0;  // sample stdev / sqrt(n), scaled like the value
  long n_samples = 0;
  std::uint64_t seed = 0;
  bool stochastic = false;
};

/// Integration node: the completed point plus its curvature invariants,
/// computed once per node and shared by all integrands of a batch.
struct EvalPoint {
  const SurfacePoint& point;
  const CurvatureSummary& curvature;
};

using Integrand = std::function<double(const EvalPoint&)>;

/// Deterministic integral over a quadrature-capable surface; exact (to
/// rounding) for trigonometric-polynomial integrands within the rule degree.
double integrate_quadrature(const Surface& M, const Integrand& f, int degree);
std::vector<double> integrate_quadrature_batch(const Surface& M,
                                               const std::vector<Integrand>& fs,
                                               int degree);

/// Plain Monte Carlo with the surface's exact sampler. Unbiased;
/// reproducible for a fixed seed.
MonteCarloEstimate integrate_mc(const Surface& M, const Integrand& f, long n,
                                std::uint64_t seed);
/// Shares one sample stream across all integrands (single pass).
std::vector<MonteCarloEstimate> integrate_mc_batch(const Surface& M,
                                                   const std::vector<Integrand>& fs,
                                                   long n, std::uint64_t seed);

/// Uniform Monte Carlo over the round unit sphere S^m in R^{m+1}; the
/// estimate carries the Vol(S^m) factor.
MonteCarloEstimate sphere_mc(int m, const std::function<double(const Vec&)>& f,
                             long n, std::uint64_t seed);
std::vector<MonteCarloEstimate> sphere_mc_batch(
    int m, const std::vector<std::function<double(const Vec&)>>& fs, long n,
    std::uint64_t seed);

enum class Method { Quadrature, MonteCarlo };

struct IntegrateOptions {
  int degree = 24;
  long samples = 200000;
  std::uint64_t seed = 1;
};

/// Dispatch on method; throws on a method/surface mismatch.
MonteCarloEstimate integrate(const Surface& M, const Integrand& f, Method method,
                             const IntegrateOptions& opt);

/// Aggregate integral functionals of one direction over one surface. The
/// defect fields carry the traceless-Ricci integral by its two routes
/// (curvature = Gauss equation, height = the height-function expansion).
/// On minimal surfaces (n+1) int_phi2 + int_psi2 = vol.
struct FunctionalReport {
  MonteCarloEstimate vol;
  MonteCarloEstimate int_phi2;
  MonteCarloEstimate int_psi2;
  MonteCarloEstimate int_phipsi;
  MonteCarloEstimate ie_defect_curvature;
  MonteCarloEstimate ie_defect_height;
};
FunctionalReport functional_report(const Surface& M, const Vec& a, Method method,
                                   const IntegrateOptions& opt);

/// The traceless-Ricci integral of a direction a, along two routes:
///   route A integrates Ric(aT, aT) - (R/n)|aT|^2 pointwise (Gauss equation);
///   route B integrates the height-function form
///     (n-1) [ (1 - (n+1) phi^2 - psi^2) - (rho - 1)(1 - phi^2 - (n+1) psi^2) ].
/// The two agree as integrals; `difference` carries its own error bar (the
/// routes are evaluated on a common sample stream).
struct DefectEstimate {
  MonteCarloEstimate route_a;
  MonteCarloEstimate route_b;
  MonteCarloEstimate difference;
};
DefectEstimate ie_defect(const Surface& M, const Vec& a, Method method,
                         const IntegrateOptions& opt);

/// Volume density of the parallel translation from the minimal level:
/// product over curvatures of cos(theta0 - theta) - sin(theta0 - theta) lambda
/// with multiplicities. Positive on (0, pi/g).
double profile_h(const IsoparametricProfile& pr, double theta);

/// Integral of |h| over (0, pi/g) by adaptive quadrature.
double profile_h_integral(const IsoparametricProfile& pr);

/// alpha = integral of sin^2(theta0 - theta) |h(theta)| over (0, pi/g).
double profile_alpha(const IsoparametricProfile& pr);

struct ProfileL2 {
  double h_integral = 0;
  double alpha = 0;
  double vol_m = 0;        // Vol(M) = Vol(S^{n+1}) / integral of |h|
  double coefficient = 0;  // integral of |h| - (n+2) alpha
  double predicted_phi2 = 0;  // the L2 norm the corrected identity forces
  double printed_coefficient = 0;  // 1 - (n+2) alpha
  double printed_phi2 = 0;  // prediction under the printed coefficient
};

/// Solves the level-average identity
///   (int |h| - (n+2) alpha) * int phi^2 + alpha Vol(M) = Vol(S^{n+1})/(n+2)
/// for int phi^2 (corrected coefficient). The variant with leading
/// coefficient 1 - (n+2) alpha is reported alongside for comparison; it is
/// inconsistent with the direction-independent value Vol(M)/(n+2).
/// Throws when |int |h| - (n+2) alpha| < 1e-10 (the identity degenerates,
/// e.g. for the g = 1 family).
ProfileL2 l2_from_profile(const IsoparametricProfile& pr);

}  // namespace ie
