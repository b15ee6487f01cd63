#pragma once

#include "ie/catalog.hpp"

namespace ie {

/// The position and normal height functions phi = <x, a>, psi = <nu, a> of a
/// unit ambient direction a, with their derivatives on the surface.
/// grad/hess entries live in the point's frame coordinates.
struct HeightData {
  double phi = 0;
  double psi = 0;
  Vec aT;  // tangential part of a, frame coordinates

  Vec grad_phi;   // = aT
  Mat hess_phi;   // -phi Id + psi A
  double lap_phi = 0;
  Vec grad_psi;   // = -A aT
  double lap_psi = 0;

  // The Laplacian of psi carries a -n <grad H, a> term in general; the whole
  // catalog has constant mean curvature, so it is pinned to zero and flagged.
  bool constant_H = true;
  double grad_H_term = 0;
};

/// Values only: phi, psi and the tangential decomposition. |a| must be 1.
HeightData height_pair(const Vec& a, const SurfacePoint& p);

/// Full analytic derivative data (constant mean curvature form):
///   grad phi = aT,             hess phi = -phi Id + psi A,
///   lap phi  = -n phi + n H psi,
///   grad psi = -A aT,          lap psi  = n H phi - S psi.
/// Throws when constant_H is false.
HeightData analytic_derivatives(const Vec& a, const SurfacePoint& p,
                                const CurvatureSummary& curv,
                                bool constant_H = true);

struct FdResult {
  double value;           // central second differences at the given step
  double error_estimate;  // Richardson gap against the doubled step
};

/// Laplace-Beltrami value of a scalar field by symmetric second differences
/// along the frame directions, with points pulled back to M through the
/// surface retraction. The retraction is second order, so normal
/// acceleration does not contaminate the tangential Hessian; the result
/// matches the true Laplacian to O(step^2). step must lie in [1e-4, 1e-2].
FdResult fd_laplacian(const Surface& M, const SurfacePoint& p,
                      const std::function<double(const SurfacePoint&)>& f,
                      double step = 1e-3);

}  // namespace ie
