#include "ie/integrate.hpp"

#include <cmath>
#include <limits>

#include "ie/heights.hpp"

namespace ie {

namespace {

/// Single-pass mean/variance accumulation (Welford) for a fixed-size batch of
/// integrands evaluated on shared samples.
class BatchWelford {
 public:
  explicit BatchWelford(std::size_t size) : mean_(size, 0.0), m2_(size, 0.0) {}

  void add(const std::vector<double>& vals) {
    ++count_;
    for (std::size_t i = 0; i < mean_.size(); ++i) {
      const double delta = vals[i] - mean_[i];
      mean_[i] += delta / count_;
      m2_[i] += delta * (vals[i] - mean_[i]);
    }
  }

  long count() const { return count_; }
  double mean(std::size_t i) const { return mean_[i]; }
  double std_error(std::size_t i) const {
    if (count_ < 2) return 0;
    return std::sqrt(m2_[i] / (count_ - 1) / count_);
  }

 private:
  long count_ = 0;
  std::vector<double> mean_;
  std::vector<double> m2_;
};

}  // namespace

std::vector<double> integrate_quadrature_batch(const Surface& M,
                                               const std::vector<Integrand>& fs,
                                               int degree) {
  if (!M.has_quadrature())
    throw std::logic_error("quadrature requested for a surface without a product rule");
  std::vector<KahanSum> sums(fs.size());
  M.quadrature_visit(degree, [&](const SurfacePoint& p, double w) {
    const CurvatureSummary c = curvature_invariants(p.shape);
    const EvalPoint ep{p, c};
    for (std::size_t i = 0; i < fs.size(); ++i) sums[i].add(w * fs[i](ep));
  });
  std::vector<double> out(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) out[i] = sums[i].value();
  return out;
}

double integrate_quadrature(const Surface& M, const Integrand& f, int degree) {
  return integrate_quadrature_batch(M, {f}, degree)[0];
}

std::vector<MonteCarloEstimate> integrate_mc_batch(const Surface& M,
                                                   const std::vector<Integrand>& fs,
                                                   long n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("integrate_mc: need at least 2 samples");
  Rng rng(seed);
  BatchWelford acc(fs.size());
  std::vector<double> vals(fs.size());
  for (long i = 0; i < n; ++i) {
    const SurfacePoint p = M.sample(rng);
    const CurvatureSummary c = curvature_invariants(p.shape);
    const EvalPoint ep{p, c};
    for (std::size_t j = 0; j < fs.size(); ++j) vals[j] = fs[j](ep);
    acc.add(vals);
  }
  const double vol = M.volume();
  std::vector<MonteCarloEstimate> out(fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j)
    out[j] = {vol * acc.mean(j), vol * acc.std_error(j), n, seed, true};
  return out;
}

MonteCarloEstimate integrate_mc(const Surface& M, const Integrand& f, long n,
                                std::uint64_t seed) {
  return integrate_mc_batch(M, {f}, n, seed)[0];
}

std::vector<MonteCarloEstimate> sphere_mc_batch(
    int m, const std::vector<std::function<double(const Vec&)>>& fs, long n,
    std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sphere_mc: need at least 2 samples");
  Rng rng(seed);
  BatchWelford acc(fs.size());
  std::vector<double> vals(fs.size());
  for (long i = 0; i < n; ++i) {
    const Vec x = rng.unit_vector(m + 1);
    for (std::size_t j = 0; j < fs.size(); ++j) vals[j] = fs[j](x);
    acc.add(vals);
  }
  const double vol = sphere_volume(m);
  std::vector<MonteCarloEstimate> out(fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j)
    out[j] = {vol * acc.mean(j), vol * acc.std_error(j), n, seed, true};
  return out;
}

MonteCarloEstimate sphere_mc(int m, const std::function<double(const Vec&)>& f,
                             long n, std::uint64_t seed) {
  return sphere_mc_batch(m, {f}, n, seed)[0];
}

MonteCarloEstimate integrate(const Surface& M, const Integrand& f, Method method,
                             const IntegrateOptions& opt) {
  if (method == Method::Quadrature) {
    if (!M.has_quadrature())
      throw std::logic_error("surface '" + M.name() + "' offers no quadrature rule");
    MonteCarloEstimate est;
    est.value = integrate_quadrature(M, f, opt.degree);
    est.stochastic = false;
    return est;
  }
  return integrate_mc(M, f, opt.samples, opt.seed);
}

FunctionalReport functional_report(const Surface& M, const Vec& a, Method method,
                                   const IntegrateOptions& opt) {
  const Integrand one = [](const EvalPoint&) { return 1.0; };
  const Integrand phi2 = [&a](const EvalPoint& ep) {
    const double v = a.dot(ep.point.x);
    return v * v;
  };
  const Integrand psi2 = [&a](const EvalPoint& ep) {
    const double v = a.dot(ep.point.nu);
    return v * v;
  };
  const Integrand phipsi = [&a](const EvalPoint& ep) {
    return a.dot(ep.point.x) * a.dot(ep.point.nu);
  };
  const Integrand curv_route = [&a](const EvalPoint& ep) {
    const HeightData d = height_pair(a, ep.point);
    return ricci_quadratic_form(ep.point.shape, d.aT, ep.curvature.H) -
           ep.curvature.R / ep.point.dim() * d.aT.squaredNorm();
  };
  const Integrand height_route = [&a](const EvalPoint& ep) {
    const int n = ep.point.dim();
    const double phi = a.dot(ep.point.x), psi = a.dot(ep.point.nu);
    const double p2 = phi * phi, q2 = psi * psi;
    return (n - 1.0) * ((1.0 - (n + 1) * p2 - q2) -
                        (ep.curvature.rho - 1.0) * (1.0 - p2 - (n + 1) * q2));
  };
  const std::vector<Integrand> fs = {one,    phi2,       psi2,
                                     phipsi, curv_route, height_route};
  std::vector<MonteCarloEstimate> est;
  if (method == Method::Quadrature) {
    const auto vals = integrate_quadrature_batch(M, fs, opt.degree);
    est.resize(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) est[i] = {vals[i], 0, 0, 0, false};
  } else {
    est = integrate_mc_batch(M, fs, opt.samples, opt.seed);
  }
  return {est[0], est[1], est[2], est[3], est[4], est[5]};
}

DefectEstimate ie_defect(const Surface& M, const Vec& a, Method method,
                         const IntegrateOptions& opt) {
  const Integrand route_a = [&a](const EvalPoint& ep) {
    const HeightData d = height_pair(a, ep.point);
    return ricci_quadratic_form(ep.point.shape, d.aT, ep.curvature.H) -
           ep.curvature.R / ep.point.dim() * d.aT.squaredNorm();
  };
  const Integrand route_b = [&a](const EvalPoint& ep) {
    const int n = ep.point.dim();
    const double phi = a.dot(ep.point.x), psi = a.dot(ep.point.nu);
    const double phi2 = phi * phi, psi2 = psi * psi;
    const double lhs = 1.0 - (n + 1) * phi2 - psi2;
    const double rhs = (ep.curvature.rho - 1.0) * (1.0 - phi2 - (n + 1) * psi2);
    return (n - 1.0) * (lhs - rhs);
  };
  const Integrand gap = [&](const EvalPoint& ep) { return route_a(ep) - route_b(ep); };

  DefectEstimate out;
  if (method == Method::Quadrature) {
    const auto vals = integrate_quadrature_batch(M, {route_a, route_b, gap}, opt.degree);
    out.route_a.value = vals[0];
    out.route_b.value = vals[1];
    out.difference.value = vals[2];
  } else {
    const auto est = integrate_mc_batch(M, {route_a, route_b, gap}, opt.samples, opt.seed);
    out.route_a = est[0];
    out.route_b = est[1];
    out.difference = est[2];
  }
  return out;
}

double profile_h(const IsoparametricProfile& pr, double theta) {
  const double u = pr.theta0 - theta;
  const double c = std::cos(u), s = std::sin(u);
  double prod = 1;
  for (const auto& [lam, mult] : pr.lambdas) prod *= std::pow(c - s * lam, mult);
  return prod;
}

double profile_h_integral(const IsoparametricProfile& pr) {
  return adaptive_simpson([&pr](double t) { return std::abs(profile_h(pr, t)); },
                          0.0, kPi / pr.g, 1e-13);
}

double profile_alpha(const IsoparametricProfile& pr) {
  return adaptive_simpson(
      [&pr](double t) {
        const double s = std::sin(pr.theta0 - t);
        return s * s * std::abs(profile_h(pr, t));
      },
      0.0, kPi / pr.g, 1e-13);
}

ProfileL2 l2_from_profile(const IsoparametricProfile& pr) {
  ProfileL2 out;
  const int n = pr.n();
  out.h_integral = profile_h_integral(pr);
  out.alpha = profile_alpha(pr);
  const double vol_sphere = sphere_volume(n + 1);
  out.vol_m = vol_sphere / out.h_integral;
  out.coefficient = out.h_integral - (n + 2) * out.alpha;
  if (std::abs(out.coefficient) < 1e-10)
    throw std::runtime_error(
        "l2_from_profile: degenerate coefficient, the level-average identity "
        "does not pin the L2 norm for this profile");
  const double rhs = vol_sphere / (n + 2) - out.alpha * out.vol_m;
  out.predicted_phi2 = rhs / out.coefficient;
  out.printed_coefficient = 1.0 - (n + 2) * out.alpha;
  out.printed_phi2 = std::abs(out.printed_coefficient) < 1e-10
                         ? std::numeric_limits<double>::quiet_NaN()
                         : rhs / out.printed_coefficient;
  return out;
}

}  // namespace ie
