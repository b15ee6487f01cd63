#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ie/geometry.hpp"

namespace ie {

/// Constant principal-curvature data of an isoparametric family: g distinct
/// curvatures cot(theta0 + (j-1) pi / g) with multiplicities m+ and m-
/// alternating, theta0 the minimal level.
struct IsoparametricProfile {
  int g = 0;
  int m_plus = 0;
  int m_minus = 0;
  double theta0 = 0;
  std::vector<std::pair<double, int>> lambdas;  // (curvature, multiplicity)

  int n() const;
  double S() const;   // sum m_j lambda_j^2
  double f3() const;  // sum m_j lambda_j^3
};

/// Builds the profile from (g, m+, m-); theta0 solves
/// cos(g theta0) = (m- - m+) / (m- + m+). Rejects g outside {1,2,3,4,6},
/// multiplicities below 1, and combinations whose curvatures do not sum to
/// zero with these multiplicities (non-minimal level, inadmissible input).
IsoparametricProfile profile_lambdas(int g, int m_plus, int m_minus);

class SpecParseError : public std::runtime_error {
 public:
  SpecParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
  std::size_t position;
};

struct HypersurfaceSpec {
  enum class Kind { Equator, CliffordTorus, CartanCubic, Profile };
  Kind kind = Kind::Equator;
  int n = 0;       // intrinsic dimension (Equator, CliffordTorus)
  int k = 0;       // first factor dimension (CliffordTorus)
  double r1 = 0;   // first factor radius (CliffordTorus)
  int g = 0, m_plus = 0, m_minus = 0;  // Profile
  std::string text;                    // the input spec string

  bool geometric() const { return kind != Kind::Profile; }
};

/// Parses the compact grammar
///   equator:n=<int>
///   clifford:k=<int>,n=<int>,r=<minimal|einstein|float>
///   cartan
///   profile:g=<int>,m=<int>,<int>
/// Throws SpecParseError with the offending position.
HypersurfaceSpec parse_surface_spec(const std::string& s);

/// A catalog hypersurface with exact sampling, a retraction, and, where the
/// geometry allows it, exact product quadrature. All catalog surfaces are
/// isoparametric, so the curvature invariants are constant.
class Surface {
 public:
  virtual ~Surface() = default;

  virtual const HypersurfaceSpec& spec() const = 0;
  std::string name() const { return spec().text; }

  virtual int dim() const = 0;
  int ambient_dim() const { return dim() + 2; }

  virtual CurvatureSummary curvature() const = 0;
  bool minimal() const { return std::abs(curvature().H) < 1e-12; }
  virtual bool constant_mean_curvature() const { return true; }
  virtual double volume() const = 0;

  /// Completes a point known to lie on M.
  virtual SurfacePoint complete(const Vec& x) const = 0;

  /// Retraction: maps an ambient point near M back onto M. Second order
  /// (the retraction curve's initial acceleration is normal to M), so it is
  /// safe to drive finite-difference tangential derivatives through it.
  virtual Vec project(const Vec& y) const = 0;

  virtual SurfacePoint sample(Rng& rng) const = 0;

  virtual bool has_quadrature() const = 0;
  /// Visits quadrature nodes with weights summing to Vol(M).
  virtual void quadrature_visit(
      int nodes_per_angle,
      const std::function<void(const SurfacePoint&, double)>& visit) const;

  /// The isoparametric profile, when the surface sits at the minimal level of
  /// its family; null otherwise.
  virtual const IsoparametricProfile* profile() const { return nullptr; }
  /// The ambient first integral whose level sets foliate the family, when the
  /// surface is realized as a level set; null otherwise.
  virtual const AmbientField* level_field() const { return nullptr; }
};

std::unique_ptr<Surface> make_surface(const HypersurfaceSpec& spec);
std::unique_ptr<Surface> make_surface(const std::string& spec_text);

/// The totally geodesic equator {x_{n+2} = 0} of S^{n+1}.
class EquatorSurface final : public Surface {
 public:
  explicit EquatorSurface(HypersurfaceSpec spec);

  const HypersurfaceSpec& spec() const override { return spec_; }
  int dim() const override { return spec_.n; }
  CurvatureSummary curvature() const override;
  double volume() const override { return sphere_volume(spec_.n); }
  SurfacePoint complete(const Vec& x) const override;
  Vec project(const Vec& y) const override;
  SurfacePoint sample(Rng& rng) const override;
  bool has_quadrature() const override { return true; }
  void quadrature_visit(
      int nodes_per_angle,
      const std::function<void(const SurfacePoint&, double)>& visit) const override;
  const IsoparametricProfile* profile() const override { return &profile_; }

 private:
  HypersurfaceSpec spec_;
  IsoparametricProfile profile_;
};

/// S^k(r1) x S^{n-k}(r2), r1^2 + r2^2 = 1. The normal is oriented so the
/// S^k-factor principal curvature r2/r1 is positive.
class CliffordTorusSurface final : public Surface {
 public:
  explicit CliffordTorusSurface(HypersurfaceSpec spec);

  const HypersurfaceSpec& spec() const override { return spec_; }
  int dim() const override { return spec_.n; }
  CurvatureSummary curvature() const override;
  double volume() const override;
  SurfacePoint complete(const Vec& x) const override;
  Vec project(const Vec& y) const override;
  SurfacePoint sample(Rng& rng) const override;
  bool has_quadrature() const override { return true; }
  void quadrature_visit(
      int nodes_per_angle,
      const std::function<void(const SurfacePoint&, double)>& visit) const override;
  const IsoparametricProfile* profile() const override;

  /// Point from unit factor points u in S^k, v in S^{n-k}.
  SurfacePoint point_at(const Vec& u, const Vec& v) const;

  double r1() const { return spec_.r1; }
  double r2() const { return r2_; }
  double kappa1() const { return r2_ / spec_.r1; }
  double kappa2() const { return -spec_.r1 / r2_; }

  static double minimal_radius(int k, int n);
  static double einstein_radius(int k, int n);

 private:
  HypersurfaceSpec spec_;
  double r2_;
  std::optional<IsoparametricProfile> profile_;  // set at the minimal radius
};

/// The minimal level of the cubic isoparametric family of S^4 (three distinct
/// principal curvatures, multiplicities one), realized as the conjugation
/// orbit of traceless symmetric 3x3 matrices with R^5 carrying the Tr(XY)
/// inner product.
class CartanCubicSurface final : public Surface {
 public:
  explicit CartanCubicSurface(HypersurfaceSpec spec);

  const HypersurfaceSpec& spec() const override { return spec_; }
  int dim() const override { return 3; }
  CurvatureSummary curvature() const override;
  double volume() const override { return volume_; }
  SurfacePoint complete(const Vec& x) const override;
  Vec project(const Vec& y) const override;
  SurfacePoint sample(Rng& rng) const override;
  bool has_quadrature() const override { return false; }
  const IsoparametricProfile* profile() const override { return &profile_; }
  const AmbientField* level_field() const override;

  double minimal_level_angle() const { return profile_.theta0; }  // pi/6

  /// Haar sample of the level set at angle theta in (0, pi/3): conjugates the
  /// level eigenvalue matrix by a Haar-uniform rotation. The pushforward of
  /// Haar measure is the normalized Riemannian measure of the orbit.
  SurfacePoint sample_level(double theta, Rng& rng) const;

  /// Angle theta(x) = arccos(F(x)) / 3, the family parameter through x.
  double level_angle(const Vec& x) const;

  static Eigen::Matrix3d coords_to_matrix(const Vec& y);
  static Vec matrix_to_coords(const Eigen::Matrix3d& X);
  static Eigen::Vector3d level_eigenvalues(double theta);
  static Eigen::Matrix3d haar_rotation(Rng& rng);

 private:
  HypersurfaceSpec spec_;
  IsoparametricProfile profile_;
  double volume_;
  std::unique_ptr<AmbientField> field_;
};

/// cos(delta) x + sin(delta) nu: the spherical parallel translation carrying
/// the level of p toward the focal set the normal points at. On a level at
/// angle theta the image lies on the level at theta - delta.
Vec parallel_translate(const SurfacePoint& p, double delta);

/// Same translation together with the transported normal
/// -sin(delta) x + cos(delta) nu, so the translation can be reversed exactly.
std::pair<Vec, Vec> parallel_translate_with_normal(const SurfacePoint& p, double delta);

}  // namespace ie
