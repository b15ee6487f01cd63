#include "ie/geometry.hpp"

#include <cmath>
#include <vector>

namespace ie {

Mat orthonormal_complement(const Mat& span) {
  const int N = static_cast<int>(span.rows());
  const int s = static_cast<int>(span.cols());
  std::vector<Vec> basis;
  basis.reserve(N);
  for (int j = 0; j < s; ++j) basis.push_back(span.col(j));
  Mat out(N, N - s);
  int col = 0;
  for (int i = 0; i < N && col < N - s; ++i) {
    Vec cand = Vec::Unit(N, i);
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& b : basis) cand -= b.dot(cand) * b;
    const double norm = cand.norm();
    if (norm < 1e-6) continue;  // candidate nearly inside the current span
    cand /= norm;
    basis.push_back(cand);
    out.col(col++) = cand;
  }
  if (col != N - s)
    throw std::runtime_error("orthonormal_complement: standard basis exhausted");
  return out;
}

Mat tangent_frame(const Vec& x, const Vec& nu) {
  if (x.size() != nu.size() || x.size() < 3)
    throw std::invalid_argument("tangent_frame: bad dimensions");
  if (std::abs(x.norm() - 1.0) > 1e-8 || std::abs(nu.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("tangent_frame: x and nu must be unit vectors");
  if (std::abs(x.dot(nu)) > 1e-8)
    throw std::invalid_argument("tangent_frame: x and nu must be orthogonal");
  Mat span(x.size(), 2);
  span.col(0) = x / x.norm();
  span.col(1) = nu / nu.norm();
  return orthonormal_complement(span);
}

CurvatureSummary curvature_invariants(const Mat& shape) {
  const int n = static_cast<int>(shape.rows());
  if (shape.cols() != n || n < 2)
    throw std::invalid_argument("curvature_invariants: need a square matrix, n >= 2");
  if ((shape - shape.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("curvature_invariants: shape matrix not symmetric");
  const Mat A = 0.5 * (shape + shape.transpose());
  CurvatureSummary c;
  c.n = n;
  c.H = A.trace() / n;
  c.S = A.squaredNorm();
  c.f3 = (A * A * A).trace();
  c.rho = 1.0 + (double(n) * n * c.H * c.H - c.S) / (double(n) * (n - 1));
  c.R = double(n) * (n - 1) * c.rho;
  return c;
}

double ricci_quadratic_form(const Mat& shape, const Vec& v, double H) {
  const int n = static_cast<int>(shape.rows());
  const Vec Av = shape * v;
  return (n - 1.0) * v.squaredNorm() + n * H * v.dot(Av) - Av.squaredNorm();
}

SurfacePoint shape_from_level_set(const AmbientField& F, const Vec& x) {
  if (std::abs(x.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("shape_from_level_set: x must lie on the unit sphere");
  const Vec g = F.gradient(x);
  const double radial = g.dot(x);
  const Vec w = g - radial * x;
  const double wn = w.norm();
  if (wn < 1e-8)
    throw FocalPointError("shape_from_level_set: tangential gradient vanishes (focal point)");

  SurfacePoint p;
  p.x = x;
  p.nu = w / wn;
  p.frame = tangent_frame(p.x, p.nu);
  const int n = p.dim();

  // Hess_sphere F(e_i, e_j) = Hess_ambient F(e_i, e_j) - <grad F, x> delta_ij
  // and A = -Hess_sphere F / |w| restricted to the tangent space of the level.
  const Mat Hamb = F.hessian(x);
  Mat A = -(p.frame.transpose() * Hamb * p.frame - radial * Mat::Identity(n, n)) / wn;
  const double asym = (A - A.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-9)
    throw std::runtime_error("shape_from_level_set: shape operator asymmetry " +
                             format_double(asym));
  p.shape = 0.5 * (A + A.transpose());
  return p;
}

void validate_surface_point(const SurfacePoint& p, double tol) {
  const int n = p.dim();
  if (p.ambient_dim() != n + 2)
    throw std::invalid_argument("surface point: frame has wrong column count");
  if (std::abs(p.x.norm() - 1.0) > tol) throw std::invalid_argument("surface point: |x| != 1");
  if (std::abs(p.nu.norm() - 1.0) > tol) throw std::invalid_argument("surface point: |nu| != 1");
  if (std::abs(p.x.dot(p.nu)) > tol) throw std::invalid_argument("surface point: <x, nu> != 0");
  const Mat gram = p.frame.transpose() * p.frame;
  if ((gram - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("surface point: frame not orthonormal");
  if ((p.frame.transpose() * p.x).cwiseAbs().maxCoeff() > tol ||
      (p.frame.transpose() * p.nu).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("surface point: frame not tangent");
  if (p.shape.rows() != n || p.shape.cols() != n ||
      (p.shape - p.shape.transpose()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("surface point: shape matrix not symmetric");
}

}  // namespace ie
