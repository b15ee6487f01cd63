#include "ie/heights.hpp"

#include <cmath>

namespace ie {

HeightData height_pair(const Vec& a, const SurfacePoint& p) {
  if (a.size() != p.ambient_dim())
    throw std::invalid_argument("height_pair: direction has wrong dimension");
  if (std::abs(a.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("height_pair: direction must be a unit vector");
  HeightData d;
  d.phi = a.dot(p.x);
  d.psi = a.dot(p.nu);
  d.aT = p.frame.transpose() * a;
  return d;
}

HeightData analytic_derivatives(const Vec& a, const SurfacePoint& p,
                                const CurvatureSummary& curv, bool constant_H) {
  if (!constant_H)
    throw std::invalid_argument(
        "analytic_derivatives: only the constant mean curvature form is implemented");
  HeightData d = height_pair(a, p);
  const int n = p.dim();
  d.grad_phi = d.aT;
  d.hess_phi = -d.phi * Mat::Identity(n, n) + d.psi * p.shape;
  d.lap_phi = -n * d.phi + n * curv.H * d.psi;
  d.grad_psi = -(p.shape * d.aT);
  d.constant_H = true;
  d.grad_H_term = 0;
  d.lap_psi = n * curv.H * d.phi - curv.S * d.psi;
  return d;
}

namespace {

double second_difference_sum(const Surface& M, const SurfacePoint& p,
                             const std::function<double(const SurfacePoint&)>& f,
                             double h, double center) {
  KahanSum acc;
  const int n = p.dim();
  for (int i = 0; i < n; ++i) {
    const Vec e = p.frame.col(i);
    for (const double s : {1.0, -1.0}) {
      const SurfacePoint q = M.complete(M.project(p.x + s * h * e));
      acc.add(f(q));
    }
    acc.add(-2.0 * center);
  }
  return acc.value() / (h * h);
}

}  // namespace

FdResult fd_laplacian(const Surface& M, const SurfacePoint& p,
                      const std::function<double(const SurfacePoint&)>& f,
                      double step) {
  if (!(step >= 1e-4 && step <= 1e-2))
    throw std::invalid_argument("fd_laplacian: step must lie in [1e-4, 1e-2]");
  const double center = f(p);
  const double v1 = second_difference_sum(M, p, f, step, center);
  const double v2 = second_difference_sum(M, p, f, 2.0 * step, center);
  return {v1, std::abs(v1 - v2) / 3.0};
}

}  // namespace ie
