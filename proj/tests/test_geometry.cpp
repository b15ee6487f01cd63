#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "ie/geometry.hpp"

using namespace ie;

namespace {

Mat random_symmetric(int n, Rng& rng) {
  Mat A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) A(i, j) = A(j, i) = rng.next_gaussian();
  return A;
}

std::pair<Vec, Vec> random_point_normal(int N, Rng& rng) {
  const Vec x = rng.unit_vector(N);
  Vec nu = rng.gaussian_vector(N);
  nu -= nu.dot(x) * x;
  nu.normalize();
  return {x, nu};
}

}  // namespace

TEST_CASE("tangent_frame: coordinate case picks the remaining axes") {
  const Vec x = Vec::Unit(5, 0), nu = Vec::Unit(5, 1);
  const Mat F = tangent_frame(x, nu);
  REQUIRE(F.cols() == 3);
  for (int j = 0; j < 3; ++j) {
    const Vec expect = Vec::Unit(5, j + 2);
    CHECK((F.col(j) - expect).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("tangent_frame: gram matrix is the identity") {
  Rng rng(11);
  for (const int N : {5, 6, 8}) {
    for (int t = 0; t < 30; ++t) {
      const auto [x, nu] = random_point_normal(N, rng);
      const Mat F = tangent_frame(x, nu);
      const Mat gram = F.transpose() * F;
      CHECK((gram - Mat::Identity(N - 2, N - 2)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((F.transpose() * x).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((F.transpose() * nu).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("tangent_frame: torus point from the catalog grammar") {
  const double r1 = 0.6, r2 = 0.8;
  Vec x(5), nu(5);
  x << r1, 0, r2, 0, 0;
  nu << r2, 0, -r1, 0, 0;
  const Mat F = tangent_frame(x, nu);
  CHECK((F.transpose() * x).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((F.transpose() * nu).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("tangent_frame: rejects bad input") {
  CHECK_THROWS_AS(tangent_frame(2 * Vec::Unit(5, 0), Vec::Unit(5, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(tangent_frame(Vec::Unit(5, 0), Vec::Unit(5, 0)),
                  std::invalid_argument);
}

TEST_CASE("curvature_invariants: totally geodesic case") {
  const CurvatureSummary c = curvature_invariants(Mat::Zero(4, 4));
  CHECK(c.H == 0);
  CHECK(c.S == 0);
  CHECK(c.f3 == 0);
  CHECK(c.rho == doctest::Approx(1.0));
  CHECK(c.R == doctest::Approx(12.0));
}

TEST_CASE("curvature_invariants: catalog constants") {
  // minimal torus k=1, n=4: eigenvalues {sqrt3, -1/sqrt3 x3}
  Vec d(4);
  d << std::sqrt(3.0), -1 / std::sqrt(3.0), -1 / std::sqrt(3.0),
      -1 / std::sqrt(3.0);
  CurvatureSummary c = curvature_invariants(Mat(d.asDiagonal()));
  CHECK(std::abs(c.H) < 1e-15);
  CHECK(c.S == doctest::Approx(4.0));

  // three distinct curvatures {sqrt3, 0, -sqrt3}
  Vec e(3);
  e << std::sqrt(3.0), 0.0, -std::sqrt(3.0);
  c = curvature_invariants(Mat(e.asDiagonal()));
  CHECK(c.S == doctest::Approx(6.0));
  CHECK(std::abs(c.f3) < 1e-14);
}

TEST_CASE("curvature_invariants: gauss-equation identity and eigen oracle") {
  Rng rng(5);
  for (const int n : {3, 4, 6}) {
    for (int t = 0; t < 25; ++t) {
      const Mat A = random_symmetric(n, rng);
      const CurvatureSummary c = curvature_invariants(A);
      // definitional identity
      CHECK(c.rho - 1 ==
            doctest::Approx((n * n * c.H * c.H - c.S) / (n * (n - 1.0)))
                .epsilon(1e-12));
      CHECK(c.R == doctest::Approx(n * (n - 1.0) * c.rho).epsilon(1e-12));
      // independent eigenvalue route
      Eigen::SelfAdjointEigenSolver<Mat> es(A);
      double S = 0, f3 = 0, tr = 0;
      for (int i = 0; i < n; ++i) {
        const double lam = es.eigenvalues()[i];
        tr += lam;
        S += lam * lam;
        f3 += lam * lam * lam;
      }
      CHECK(c.H == doctest::Approx(tr / n).epsilon(1e-9));
      CHECK(c.S == doctest::Approx(S).epsilon(1e-9));
      CHECK(c.f3 == doctest::Approx(f3).epsilon(1e-9));
    }
  }
}

TEST_CASE("curvature_invariants: rejects asymmetric input") {
  Mat A = Mat::Zero(3, 3);
  A(0, 1) = 1.0;
  CHECK_THROWS_AS(curvature_invariants(A), std::invalid_argument);
}

TEST_CASE("ricci_quadratic_form: round metric") {
  Rng rng(9);
  const Mat A = Mat::Zero(4, 4);
  for (int t = 0; t < 10; ++t) {
    const Vec v = rng.unit_vector(4);
    CHECK(ricci_quadratic_form(A, v, 0.0) == doctest::Approx(3.0));
  }
}

TEST_CASE("ricci_quadratic_form: einstein torus directions") {
  Vec d(4);
  d << 1, 1, -1, -1;
  const Mat A = d.asDiagonal();
  const CurvatureSummary c = curvature_invariants(A);
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const Vec v = rng.unit_vector(4);
    const double ric = ricci_quadratic_form(A, v, c.H);
    CHECK(ric == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ric - c.R / 4 * v.squaredNorm() == doctest::Approx(0.0));
  }
}

TEST_CASE("ricci_quadratic_form: flat direction on the minimal torus") {
  Vec d(4);
  d << std::sqrt(3.0), -1 / std::sqrt(3.0), -1 / std::sqrt(3.0),
      -1 / std::sqrt(3.0);
  const Mat A = d.asDiagonal();
  const Vec v = Vec::Unit(4, 0);  // first principal direction
  CHECK(ricci_quadratic_form(A, v, 0.0) == doctest::Approx(0.0));
}

namespace {

// linear height field F(x) = <x, a>; its level sets through the sphere are
// the totally geodesic equators when the level is zero
struct HeightField final : AmbientField {
  Vec a;
  explicit HeightField(Vec v) : a(std::move(v)) {}
  double value(const Vec& x) const override { return a.dot(x); }
  Vec gradient(const Vec&) const override { return a; }
  Mat hessian(const Vec& x) const override {
    return Mat::Zero(x.size(), x.size());
  }
};

}  // namespace

TEST_CASE("shape_from_level_set: equator of a height function") {
  Rng rng(21);
  const HeightField F(Vec::Unit(5, 0));
  for (int t = 0; t < 20; ++t) {
    Vec x = Vec::Zero(5);
    x.tail(4) = rng.unit_vector(4);
    const SurfacePoint p = shape_from_level_set(F, x);
    validate_surface_point(p);
    CHECK(p.shape.cwiseAbs().maxCoeff() < 1e-12);
    CHECK((p.nu - Vec::Unit(5, 0)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("shape_from_level_set: small sphere of a height function") {
  // level <x, e1> = cos(t): principal curvatures cot(t) toward the pole
  const HeightField F(Vec::Unit(5, 0));
  const double t = 0.7;
  Rng rng(22);
  Vec x = Vec::Zero(5);
  x[0] = std::cos(t);
  x.tail(4) = std::sin(t) * rng.unit_vector(4);
  const SurfacePoint p = shape_from_level_set(F, x);
  Eigen::SelfAdjointEigenSolver<Mat> es(p.shape);
  for (int i = 0; i < 3; ++i)
    CHECK(es.eigenvalues()[i] == doctest::Approx(1.0 / std::tan(t)).epsilon(1e-10));
}

TEST_CASE("shape_from_level_set: focal point error") {
  const HeightField F(Vec::Unit(5, 0));
  CHECK_THROWS_AS(shape_from_level_set(F, Vec::Unit(5, 0)), FocalPointError);
}

TEST_CASE("shape_from_level_set: orientation flips with the field sign") {
  struct Negated final : AmbientField {
    const AmbientField& inner;
    explicit Negated(const AmbientField& f) : inner(f) {}
    double value(const Vec& x) const override { return -inner.value(x); }
    Vec gradient(const Vec& x) const override { return -inner.gradient(x); }
    Mat hessian(const Vec& x) const override { return -inner.hessian(x); }
  };
  const HeightField F(Vec::Unit(5, 0));
  const Negated G(F);
  const double t = 1.1;
  Rng rng(23);
  Vec x = Vec::Zero(5);
  x[0] = std::cos(t);
  x.tail(4) = std::sin(t) * rng.unit_vector(4);
  const SurfacePoint p = shape_from_level_set(F, x);
  const SurfacePoint q = shape_from_level_set(G, x);
  CHECK((p.nu + q.nu).cwiseAbs().maxCoeff() < 1e-12);
  // same tangent plane, so the frames agree and the shapes negate
  CHECK((p.frame - q.frame).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((p.shape + q.shape).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("validate_surface_point rejects corrupted data") {
  const HeightField F(Vec::Unit(5, 0));
  Vec x = Vec::Zero(5);
  x[1] = 1.0;
  SurfacePoint p = shape_from_level_set(F, x);
  validate_surface_point(p);
  SurfacePoint bad = p;
  bad.nu *= 1.01;
  CHECK_THROWS_AS(validate_surface_point(bad), std::invalid_argument);
  bad = p;
  bad.shape(0, 1) += 1e-3;
  CHECK_THROWS_AS(validate_surface_point(bad), std::invalid_argument);
}
