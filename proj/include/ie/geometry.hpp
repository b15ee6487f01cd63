#pragma once

#include <stdexcept>

#include "ie/numeric.hpp"

namespace ie {

/// Pointwise data of a hypersurface M^n in S^{n+1} in R^{n+2}: position,
/// unit normal (tangent to the sphere), an orthonormal tangent frame and the
/// matrix of the shape operator A(X) = -D_X nu in that frame.
struct SurfacePoint {
  Vec x;
  Vec nu;
  Mat frame;  // (n+2) x n, columns orthonormal, orthogonal to x and nu
  Mat shape;  // n x n symmetric

  int dim() const { return static_cast<int>(frame.cols()); }
  int ambient_dim() const { return static_cast<int>(x.size()); }
};

struct CurvatureSummary {
  int n = 0;
  double H = 0;    // mean curvature Tr(A)/n
  double S = 0;    // squared Frobenius norm of A
  double f3 = 0;   // Tr(A^3)
  double rho = 0;  // normalized scalar curvature
  double R = 0;    // scalar curvature n(n-1) rho
};

class FocalPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Orthonormal basis of the orthogonal complement of the (orthonormal)
/// columns of `span`, built by Gram-Schmidt over the standard basis; seed
/// candidates whose residual is below 1e-6 are skipped. Deterministic.
Mat orthonormal_complement(const Mat& span);

/// Frame of the complement of span{x, nu}. Requires |x| = |nu| = 1 and
/// <x, nu> = 0 within 1e-8.
Mat tangent_frame(const Vec& x, const Vec& nu);

/// H, S, f3 from traces; rho from the Gauss equation
/// rho - 1 = (n^2 H^2 - S) / (n (n-1)). Input must be symmetric to 1e-10.
CurvatureSummary curvature_invariants(const Mat& shape);

/// Ric(v, v) for a hypersurface of the unit sphere by the Gauss equation:
/// (n-1)|v|^2 + n H <A v, v> - |A v|^2, with v in frame coordinates.
double ricci_quadratic_form(const Mat& shape, const Vec& v, double H);

/// A smooth scalar field on the ambient R^{n+2} with analytic derivatives.
struct AmbientField {
  virtual ~AmbientField() = default;
  virtual double value(const Vec& x) const = 0;
  virtual Vec gradient(const Vec& x) const = 0;
  virtual Mat hessian(const Vec& x) const = 0;
};

/// Completes the hypersurface point of {F = const} intersected with the unit
/// sphere through x. The normal points along the sphere-tangential part of
/// grad F; the shape operator comes from the ambient Hessian corrected by the
/// spherical connection. Throws FocalPointError when the tangential gradient
/// norm is below 1e-8.
SurfacePoint shape_from_level_set(const AmbientField& F, const Vec& x);

/// Throws unless unit norms, orthogonality and frame orthonormality hold to
/// `tol` and the shape matrix is symmetric.
void validate_surface_point(const SurfacePoint& p, double tol = 1e-10);

}  // namespace ie
