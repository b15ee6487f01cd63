#include <doctest.h>

#include <cmath>

#include "ie/checks.hpp"

using namespace ie;

namespace {

CheckContext quick_ctx() {
  CheckContext ctx;
  ctx.samples = 30000;
  ctx.seed = 99;
  ctx.degree = 16;
  ctx.random_directions = 8;
  ctx.sample_points = 20;
  return ctx;
}

/// The same surface conjugated by a fixed ambient rotation. Rotating the
/// direction set along with it must leave every check value unchanged.
class RotatedSurface final : public Surface {
 public:
  RotatedSurface(const Surface& inner, Mat rotation)
      : inner_(inner), rot_(std::move(rotation)) {}

  const HypersurfaceSpec& spec() const override { return inner_.spec(); }
  int dim() const override { return inner_.dim(); }
  CurvatureSummary curvature() const override { return inner_.curvature(); }
  double volume() const override { return inner_.volume(); }
  bool has_quadrature() const override { return inner_.has_quadrature(); }
  SurfacePoint complete(const Vec& x) const override {
    return rotate(inner_.complete(rot_.transpose() * x));
  }
  Vec project(const Vec& y) const override {
    return rot_ * inner_.project(rot_.transpose() * y);
  }
  SurfacePoint sample(Rng& rng) const override {
    return rotate(inner_.sample(rng));
  }
  void quadrature_visit(int deg,
                        const std::function<void(const SurfacePoint&, double)>&
                            visit) const override {
    inner_.quadrature_visit(
        deg, [&](const SurfacePoint& p, double w) { visit(rotate(p), w); });
  }

 private:
  SurfacePoint rotate(SurfacePoint p) const {
    p.x = rot_ * p.x;
    p.nu = rot_ * p.nu;
    p.frame = rot_ * p.frame;
    return p;
  }
  const Surface& inner_;
  Mat rot_;
};

/// The same surface with the opposite normal orientation.
class FlippedSurface final : public Surface {
 public:
  explicit FlippedSurface(const Surface& inner) : inner_(inner) {}

  const HypersurfaceSpec& spec() const override { return inner_.spec(); }
  int dim() const override { return inner_.dim(); }
  CurvatureSummary curvature() const override {
    CurvatureSummary c = inner_.curvature();
    c.H = -c.H;
    c.f3 = -c.f3;
    return c;
  }
  double volume() const override { return inner_.volume(); }
  bool has_quadrature() const override { return inner_.has_quadrature(); }
  SurfacePoint complete(const Vec& x) const override {
    return flip(inner_.complete(x));
  }
  Vec project(const Vec& y) const override { return inner_.project(y); }
  SurfacePoint sample(Rng& rng) const override { return flip(inner_.sample(rng)); }
  void quadrature_visit(int deg,
                        const std::function<void(const SurfacePoint&, double)>&
                            visit) const override {
    inner_.quadrature_visit(
        deg, [&](const SurfacePoint& p, double w) { visit(flip(p), w); });
  }

 private:
  SurfacePoint flip(SurfacePoint p) const {
    p.nu = -p.nu;
    p.shape = -p.shape;
    return p;
  }
  const Surface& inner_;
};

Mat random_rotation(int N, Rng& rng) {
  Mat A(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) A(i, j) = rng.next_gaussian();
  const Eigen::HouseholderQR<Mat> qr(A);
  Mat Q = qr.householderQ();
  if (Q.determinant() < 0) Q.col(0) *= -1;
  return Q;
}

}  // namespace

TEST_CASE("close_to: the three verdict regions") {
  CHECK(close_to(1.0, 1.0, 0.0, 1e-9, 4) == Verdict::Pass);
  CHECK(close_to(1.0 + 5e-10, 1.0, 0.0, 1e-9, 4) == Verdict::Pass);
  CHECK(close_to(1.1, 1.0, 0.0, 1e-9, 4) == Verdict::Fail);
  CHECK(close_to(1.0 + 5e-3, 1.0, 1e-3, 1e-9, 4) == Verdict::Inconclusive);
  CHECK(close_to(1.0 + 9e-3, 1.0, 1e-3, 1e-9, 4) == Verdict::Fail);
}

TEST_CASE("direction_set: frame plus seeded randoms") {
  const auto dirs = direction_set(6, 4, Rng(5));
  REQUIRE(dirs.size() == 10);
  CHECK(dirs[0].first == "e1");
  CHECK(dirs[6].first == "r01");
  for (const auto& [label, a] : dirs) {
    (void)label;
    CHECK(std::abs(a.norm() - 1.0) < 1e-14);
  }
  const auto again = direction_set(6, 4, Rng(5));
  CHECK((dirs[7].second - again[7].second).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("expected_ie covers the catalog") {
  CHECK(*expected_ie(parse_surface_spec("equator:n=4")) == true);
  CHECK(*expected_ie(parse_surface_spec("cartan")) == true);
  CHECK(*expected_ie(parse_surface_spec("clifford:k=1,n=4,r=minimal")) == false);
  CHECK(*expected_ie(parse_surface_spec("clifford:k=1,n=4,r=0.3")) == false);
  CHECK(*expected_ie(parse_surface_spec("clifford:k=3,n=4,r=0.3")) == false);
  CHECK(*expected_ie(parse_surface_spec("clifford:k=2,n=4,r=einstein")) == true);
  CHECK(*expected_ie(parse_surface_spec("clifford:k=2,n=4,r=minimal")) == true);
  CHECK(*expected_ie(parse_surface_spec("clifford:k=2,n=5,r=einstein")) == true);
  CHECK(!expected_ie(parse_surface_spec("clifford:k=2,n=5,r=0.77")).has_value());
  CHECK(*expected_ie(parse_surface_spec("clifford:k=2,n=5,r=minimal")) == false);
  CHECK(*expected_ie(parse_surface_spec("profile:g=3,m=1,1")) == true);
}

TEST_CASE("check_takahashi on the catalog") {
  const auto ctx = quick_ctx();
  auto res = check_takahashi(*make_surface("equator:n=4"), ctx);
  CHECK(res.verdict == Verdict::Pass);

  res = check_takahashi(*make_surface("clifford:k=1,n=4,r=0.3"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  for (const auto& m : res.measured)
    if (m.name == "position_height_residual") CHECK(m.value < 1e-8);

  res = check_takahashi(*make_surface("cartan"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  for (const auto& m : res.measured)
    if (m.name == "lambda_normal") CHECK(m.value == doctest::Approx(6.0));
}

TEST_CASE("check_derivatives passes at reduced size") {
  CheckContext ctx = quick_ctx();
  ctx.sample_points = 8;
  ctx.random_directions = 4;
  for (const char* s :
       {"equator:n=4", "clifford:k=1,n=4,r=minimal", "cartan"}) {
    const auto res = check_derivatives(*make_surface(s), ctx);
    CHECK(res.verdict == Verdict::Pass);
  }
}

TEST_CASE("check_ie: verdicts across the catalog") {
  const auto ctx = quick_ctx();

  auto res = check_ie(*make_surface("clifford:k=2,n=4,r=einstein"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome == "IE");

  res = check_ie(*make_surface("clifford:k=1,n=4,r=minimal"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome == "not-IE");
  CHECK(*res.expected_outcome == "not-IE");

  res = check_ie(*make_surface("clifford:k=1,n=4,r=0.3"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome == "not-IE");

  res = check_ie(*make_surface("equator:n=4"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome == "IE");

  CheckContext mc = ctx;
  mc.samples = 60000;
  res = check_ie(*make_surface("cartan"), mc);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome == "IE");
}

TEST_CASE("check_l2_bounds: equality attribution") {
  const auto ctx = quick_ctx();

  auto res = check_l2_bounds(*make_surface("clifford:k=1,n=4,r=minimal"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome.find("half-harmonic") != std::string::npos);
  double qmin = 1, qmax = 0;
  for (const auto& m : res.measured) {
    if (m.name == "min_phi2_over_vol") qmin = m.value;
    if (m.name == "max_phi2_over_vol") qmax = m.value;
  }
  CHECK(qmin == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(qmax == doctest::Approx(0.1875).epsilon(1e-12));

  res = check_l2_bounds(*make_surface("equator:n=4"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome.find("totally geodesic") != std::string::npos);

  res = check_l2_bounds(*make_surface("clifford:k=2,n=4,r=einstein"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome.find("IE minimal") != std::string::npos);

  // nonminimal: informational only
  res = check_l2_bounds(*make_surface("clifford:k=1,n=4,r=0.3"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome == "strict chain");
}

TEST_CASE("check_simons_gap: equalities land on the classified surfaces") {
  const auto ctx = quick_ctx();

  auto res = check_simons_gap(*make_surface("clifford:k=1,n=4,r=minimal"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome.find("S == n") != std::string::npos);
  // the second gap stays strict there
  CHECK(res.outcome.find("second gap equality") == std::string::npos);

  res = check_simons_gap(*make_surface("equator:n=4"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome.find("totally geodesic") != std::string::npos);

  res = check_simons_gap(*make_surface("clifford:k=2,n=4,r=einstein"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome == "strict gaps");

  CHECK_THROWS_AS(check_simons_gap(*make_surface("clifford:k=1,n=4,r=0.3"), ctx),
                  std::logic_error);
}

TEST_CASE("check_crown: widths clear the forbidden radii") {
  const auto ctx = quick_ctx();

  auto res = check_crown(*make_surface("clifford:k=1,n=4,r=minimal"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  double min_width = 0;
  for (const auto& m : res.measured)
    if (m.name == "min_width") min_width = m.value;
  CHECK(min_width == doctest::Approx(0.5).epsilon(1e-3));

  res = check_crown(*make_surface("equator:n=4"), ctx);
  CHECK(res.verdict == Verdict::Pass);
  CHECK(res.outcome.find("hemisphere equality") != std::string::npos);

  CheckContext mc = ctx;
  mc.samples = 60000;
  res = check_crown(*make_surface("cartan"), mc);
  CHECK(res.verdict == Verdict::Pass);
}

TEST_CASE("check_isoparametric: profile and surface routes") {
  const auto ctx = quick_ctx();

  auto res = check_isoparametric(profile_lambdas(3, 1, 1), "profile:g=3,m=1,1", ctx);
  CHECK(res.verdict == Verdict::Pass);

  res = check_isoparametric(profile_lambdas(4, 2, 2), "profile:g=4,m=2,2", ctx);
  CHECK(res.verdict == Verdict::Pass);

  res = check_isoparametric(*make_surface("clifford:k=1,n=4,r=minimal"), ctx);
  CHECK(res.verdict == Verdict::Pass);

  CheckContext mc = ctx;
  mc.samples = 60000;
  res = check_isoparametric(*make_surface("cartan"), mc);
  CHECK(res.verdict == Verdict::Pass);

  // nonminimal tori sit away from the family's minimal level
  CHECK_THROWS_AS(
      check_isoparametric(*make_surface("clifford:k=1,n=4,r=0.3"), ctx),
      std::logic_error);
}

TEST_CASE("check_integral_identities on the catalog") {
  const auto ctx = quick_ctx();
  for (const char* s : {"equator:n=4", "clifford:k=1,n=4,r=minimal",
                        "clifford:k=1,n=4,r=0.3", "clifford:k=2,n=4,r=einstein"}) {
    const auto res = check_integral_identities(*make_surface(s), ctx);
    CHECK(res.verdict == Verdict::Pass);
  }
  CheckContext mc = ctx;
  mc.samples = 60000;
  const auto res = check_integral_identities(*make_surface("cartan"), mc);
  CHECK(res.verdict == Verdict::Pass);
}

TEST_CASE("verdicts are invariant under ambient rotation") {
  // rotating the surface and the direction set together: every inner
  // product the checks consume is unchanged up to rounding
  const auto ctx = quick_ctx();
  const auto base = make_surface("clifford:k=1,n=4,r=minimal");
  Rng rng(300);
  const Mat Q = random_rotation(6, rng);
  const RotatedSurface rotated(*base, Q);
  CheckContext rctx = ctx;
  rctx.direction_rotation = Q;

  const auto r0 = check_ie(*base, ctx);
  const auto r1 = check_ie(rotated, rctx);
  CHECK(r0.verdict == r1.verdict);
  CHECK(r0.outcome == r1.outcome);

  const auto b0 = check_l2_bounds(*base, ctx);
  const auto b1 = check_l2_bounds(rotated, rctx);
  CHECK(b0.verdict == b1.verdict);
  CHECK(b0.outcome == b1.outcome);
  double min0 = -1, min1 = -2, max0 = -1, max1 = -2;
  for (const auto& m : b0.measured) {
    if (m.name == "min_phi2_over_vol") min0 = m.value;
    if (m.name == "max_phi2_over_vol") max0 = m.value;
  }
  for (const auto& m : b1.measured) {
    if (m.name == "min_phi2_over_vol") min1 = m.value;
    if (m.name == "max_phi2_over_vol") max1 = m.value;
  }
  CHECK(min1 == doctest::Approx(min0).epsilon(1e-10));
  CHECK(max1 == doctest::Approx(max0).epsilon(1e-10));

  const auto s0 = check_simons_gap(*base, ctx);
  const auto s1 = check_simons_gap(rotated, rctx);
  CHECK(s0.verdict == s1.verdict);
  CHECK(s0.outcome == s1.outcome);
}

TEST_CASE("verdicts are invariant under the normal flip") {
  const auto ctx = quick_ctx();
  for (const char* s : {"clifford:k=1,n=4,r=minimal", "clifford:k=1,n=4,r=0.3",
                        "clifford:k=2,n=4,r=einstein"}) {
    const auto base = make_surface(s);
    const FlippedSurface flipped(*base);
    const auto r0 = check_ie(*base, ctx);
    const auto r1 = check_ie(flipped, ctx);
    CHECK(r0.verdict == r1.verdict);
    CHECK(r0.outcome == r1.outcome);
    const auto i0 = check_integral_identities(*base, ctx);
    const auto i1 = check_integral_identities(flipped, ctx);
    CHECK(i0.verdict == i1.verdict);
  }
}

TEST_CASE("largest principal curvature obeys the (n-1)/n S bound") {
  Rng rng(301);
  for (const char* s : {"equator:n=4", "clifford:k=1,n=4,r=minimal",
                        "clifford:k=2,n=4,r=einstein", "cartan"}) {
    const auto M = make_surface(s);
    const bool is_half_split =
        M->spec().kind == HypersurfaceSpec::Kind::CliffordTorus &&
        M->spec().k == 1;
    for (int i = 0; i < 25; ++i) {
      const SurfacePoint p = M->sample(rng);
      const CurvatureSummary c = curvature_invariants(p.shape);
      Eigen::SelfAdjointEigenSolver<Mat> es(p.shape);
      double lam1 = 0;
      for (int j = 0; j < p.dim(); ++j)
        lam1 = std::max(lam1, std::abs(es.eigenvalues()[j]));
      const double bound = (p.dim() - 1.0) / p.dim() * c.S;
      CHECK(lam1 * lam1 <= bound + 1e-9);
      if (is_half_split)
        CHECK(lam1 * lam1 == doctest::Approx(bound).epsilon(1e-10));
      if (s == std::string("cartan"))
        CHECK(lam1 * lam1 < bound - 0.5);
    }
  }
}

TEST_CASE("applicability matrix") {
  const auto eq = parse_surface_spec("equator:n=4");
  const auto tor = parse_surface_spec("clifford:k=1,n=4,r=0.3");
  const auto pro = parse_surface_spec("profile:g=3,m=1,1");
  CHECK(check_applicable("ie", eq));
  CHECK(check_applicable("simons-gap", eq));
  CHECK(!check_applicable("isoparametric", eq));
  CHECK(!check_applicable("simons-gap", tor));
  CHECK(!check_applicable("crown", tor));
  CHECK(check_applicable("identities", tor));
  CHECK(check_applicable("isoparametric", pro));
  CHECK(!check_applicable("ie", pro));
}
