#include <doctest.h>

#include <cmath>

#include "ie/integrate.hpp"

using namespace ie;

namespace {

Integrand phi2(const Vec& a) {
  return [a](const EvalPoint& ep) {
    const double v = a.dot(ep.point.x);
    return v * v;
  };
}

const Integrand kOne = [](const EvalPoint&) { return 1.0; };

}  // namespace

TEST_CASE("quadrature: torus volume matches the product closed form") {
  for (const char* text : {"clifford:k=1,n=4,r=minimal", "clifford:k=2,n=4,r=0.7",
                           "clifford:k=1,n=3,r=0.3"}) {
    const auto M = make_surface(text);
    const double vol = integrate_quadrature(*M, kOne, 16);
    CHECK(vol == doctest::Approx(M->volume()).epsilon(1e-13));
  }
}

TEST_CASE("quadrature: minimal torus height moments") {
  const auto M = make_surface("clifford:k=1,n=4,r=minimal");
  const double vol = M->volume();
  // direction in the circle factor: k/(n(k+1)) = 1/8
  Vec a = Vec::Zero(6);
  a[0] = 1;
  CHECK(integrate_quadrature(*M, phi2(a), 24) ==
        doctest::Approx(vol / 8).epsilon(1e-13));
  // direction in the second factor: (n-k)/(n(n-k+1)) = 3/16
  a.setZero();
  a[3] = 1;
  CHECK(integrate_quadrature(*M, phi2(a), 24) ==
        doctest::Approx(3 * vol / 16).epsilon(1e-13));
}

TEST_CASE("quadrature: equator height moment") {
  const auto M = make_surface("equator:n=4");
  Vec a = Vec::Zero(6);
  a[1] = 1;
  CHECK(integrate_quadrature(*M, phi2(a), 24) ==
        doctest::Approx(sphere_volume(4) / 5).epsilon(1e-13));
}

TEST_CASE("quadrature: degree overflow guard") {
  const auto M = make_surface("clifford:k=3,n=6,r=0.5");
  CHECK_THROWS_AS(integrate_quadrature(*M, kOne, 64), std::invalid_argument);
}

TEST_CASE("monte carlo: reproducible and consistent with quadrature") {
  const auto M = make_surface("clifford:k=1,n=4,r=minimal");
  Rng rng(81);
  const Vec a = rng.unit_vector(6);
  const auto e1 = integrate_mc(*M, phi2(a), 40000, 7);
  const auto e2 = integrate_mc(*M, phi2(a), 40000, 7);
  CHECK(e1.value == e2.value);
  CHECK(e1.std_error == e2.std_error);
  CHECK(e1.n_samples == 40000);
  CHECK(e1.seed == 7);
  CHECK(e1.stochastic);
  CHECK(e1.std_error > 0);

  const double exact = integrate_quadrature(*M, phi2(a), 24);
  CHECK(std::abs(e1.value - exact) < 4 * e1.std_error);
}

TEST_CASE("monte carlo: constant integrand has zero variance") {
  const auto M = make_surface("cartan");
  const auto e = integrate_mc(*M, kOne, 10000, 3);
  CHECK(e.value == doctest::Approx(M->volume()).epsilon(1e-13));
  CHECK(e.std_error < 1e-12);
}

TEST_CASE("cartan volume equals the level-density prediction") {
  const auto M = make_surface("cartan");
  CHECK(M->volume() == doctest::Approx(4 * kPi * kPi).epsilon(1e-12));
}

TEST_CASE("uniform sphere sampler: coordinate second moments") {
  // int over S^m of <x, a>^2 = Vol(S^m)/(m+1); for the ambient sphere of the
  // n = 4 catalog surfaces (m = 5) the share is 1/6
  for (const int m : {4, 5}) {
    Vec a = Vec::Zero(m + 1);
    a[0] = 1;
    const auto est = sphere_mc(
        m, [&a](const Vec& x) { const double v = a.dot(x); return v * v; },
        200000, 17);
    CHECK(std::abs(est.value - sphere_volume(m) / (m + 1)) < 4 * est.std_error);
  }
}

TEST_CASE("integrate dispatch: method/surface mismatch") {
  const auto M = make_surface("cartan");
  IntegrateOptions opt;
  CHECK_THROWS_AS(integrate(*M, kOne, Method::Quadrature, opt), std::logic_error);
}

TEST_CASE("ie defect: einstein torus vanishes along both routes") {
  const auto M = make_surface("clifford:k=2,n=4,r=einstein");
  Rng rng(82);
  IntegrateOptions opt;
  for (int t = 0; t < 4; ++t) {
    const Vec a = rng.unit_vector(6);
    const auto d = ie_defect(*M, a, Method::Quadrature, opt);
    CHECK(std::abs(d.route_a.value) < 1e-10);
    CHECK(std::abs(d.route_b.value) < 1e-10);
    CHECK(std::abs(d.difference.value) < 1e-10);
  }
}

TEST_CASE("ie defect: the circle-factor direction of S^1(1/2) x S^3") {
  const auto M = make_surface("clifford:k=1,n=4,r=minimal");
  const double vol = M->volume();
  Vec a = Vec::Zero(6);
  a[0] = 1;
  IntegrateOptions opt;
  const auto d = ie_defect(*M, a, Method::Quadrature, opt);
  // the height-route evaluation of the printed product formulas gives -V
  CHECK(d.route_b.value == doctest::Approx(-vol).epsilon(1e-12));
  CHECK(d.route_a.value == doctest::Approx(-vol).epsilon(1e-12));
  CHECK(std::abs(d.difference.value) < 1e-9);
  // and +V/2 for directions in the big factor
  a.setZero();
  a[4] = 1;
  const auto d2 = ie_defect(*M, a, Method::Quadrature, opt);
  CHECK(d2.route_b.value == doctest::Approx(vol / 2).epsilon(1e-12));
}

TEST_CASE("ie defect: cartan directions vanish within noise") {
  const auto M = make_surface("cartan");
  Rng rng(83);
  IntegrateOptions opt;
  opt.samples = 50000;
  for (int t = 0; t < 5; ++t) {
    const Vec a = rng.unit_vector(5);
    opt.seed = 900 + t;
    const auto d = ie_defect(*M, a, Method::MonteCarlo, opt);
    CHECK(std::abs(d.route_a.value) < 4 * d.route_a.std_error + 1e-9);
    CHECK(std::abs(d.route_b.value) < 4 * d.route_b.std_error + 1e-9);
    CHECK(std::abs(d.difference.value) < 4 * d.difference.std_error + 1e-9);
  }
}

TEST_CASE("profile density: cubic family closed form") {
  const auto pr = profile_lambdas(3, 1, 1);
  // h(theta) == sin(3 theta) on the whole level interval
  for (int i = 0; i <= 100; ++i) {
    const double theta = kPi / 3 * i / 100.0;
    CHECK(profile_h(pr, theta) ==
          doctest::Approx(std::sin(3 * theta)).epsilon(1e-12));
  }
  CHECK(profile_h(pr, pr.theta0) == doctest::Approx(1.0));
  CHECK(profile_h_integral(pr) == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
  // alpha oracle: int sin^2(u) cos(3u) du over [-pi/6, pi/6] = 1/3 - 3/10
  CHECK(profile_alpha(pr) ==
        doctest::Approx(1.0 / 3.0 - 3.0 / 10.0).epsilon(1e-10));
}

TEST_CASE("profile density: positive on the open level interval") {
  for (const auto& [g, mp, mm] : std::vector<std::array<int, 3>>{
           {2, 1, 3}, {2, 2, 2}, {3, 1, 1}, {4, 2, 2}, {6, 1, 1}, {4, 1, 5}}) {
    const auto pr = profile_lambdas(g, mp, mm);
    for (int i = 1; i < 60; ++i) {
      const double theta = kPi / g * i / 60.0;
      CHECK(profile_h(pr, theta) > 0);
    }
  }
}

TEST_CASE("l2_from_profile: cubic family values") {
  const auto l2 = l2_from_profile(profile_lambdas(3, 1, 1));
  CHECK(l2.vol_m == doctest::Approx(4 * kPi * kPi).epsilon(1e-12));
  CHECK(l2.coefficient == doctest::Approx(0.5).epsilon(1e-12));  // 2/3 - 5/30
  CHECK(l2.predicted_phi2 == doctest::Approx(4 * kPi * kPi / 5).epsilon(1e-10));
  // the printed coefficient misses the mark by a wide margin
  CHECK(l2.printed_phi2 == doctest::Approx(12 * kPi * kPi / 25).epsilon(1e-10));
  CHECK(std::abs(l2.printed_phi2 - l2.predicted_phi2) > 0.1);
}

TEST_CASE("l2_from_profile: every admissible family predicts the equal share") {
  for (const auto& [g, mp, mm] : std::vector<std::array<int, 3>>{
           {3, 1, 1}, {3, 2, 2}, {4, 2, 2}, {4, 1, 2}, {6, 1, 1}, {6, 2, 2}}) {
    const auto pr = profile_lambdas(g, mp, mm);
    const auto l2 = l2_from_profile(pr);
    CHECK(l2.predicted_phi2 / l2.vol_m ==
          doctest::Approx(1.0 / (pr.n() + 2)).epsilon(1e-10));
  }
}

TEST_CASE("l2_from_profile: the umbilic family degenerates") {
  // for g = 1 the coefficient int|h| - (n+2) alpha vanishes identically,
  // matching the fact that the L2 norm is direction-dependent on equators
  CHECK_THROWS_AS(l2_from_profile(profile_lambdas(1, 1, 1)), std::runtime_error);
  CHECK_THROWS_AS(l2_from_profile(profile_lambdas(1, 4, 4)), std::runtime_error);
}

TEST_CASE("l2_from_profile: two-curvature families average the torus values") {
  const auto M = make_surface("clifford:k=1,n=4,r=minimal");
  const auto l2 = l2_from_profile(profile_lambdas(2, 1, 3));
  CHECK(l2.vol_m == doctest::Approx(M->volume()).epsilon(1e-10));
  // frame-averaged quadrature value equals the profile prediction
  double frame_sum = 0;
  for (int j = 0; j < 6; ++j)
    frame_sum += integrate_quadrature(*M, phi2(Vec::Unit(6, j)), 24);
  CHECK(l2.predicted_phi2 == doctest::Approx(frame_sum / 6).epsilon(1e-10));
  // the per-direction values straddle it strictly (2k < n)
  CHECK(1.0 / 8 < l2.predicted_phi2 / l2.vol_m);
  CHECK(l2.predicted_phi2 / l2.vol_m < 3.0 / 16);
}

TEST_CASE("closed-surface integral: the laplacian of phi^2 integrates to zero") {
  Rng rng(84);
  for (const char* text : {"equator:n=4", "clifford:k=1,n=4,r=minimal",
                           "clifford:k=2,n=4,r=0.62", "clifford:k=1,n=3,r=0.3"}) {
    const auto M = make_surface(text);
    for (int t = 0; t < 3; ++t) {
      const Vec a = rng.unit_vector(M->ambient_dim());
      const Integrand f = [a](const EvalPoint& ep) {
        const double phi = a.dot(ep.point.x), psi = a.dot(ep.point.nu);
        const int n = ep.point.dim();
        return 1.0 - (n + 1) * phi * phi - psi * psi +
               n * ep.curvature.H * phi * psi;
      };
      CHECK(std::abs(integrate_quadrature(*M, f, 24)) < 1e-10);
    }
  }
}

TEST_CASE("batched monte carlo shares one sample stream") {
  const auto M = make_surface("cartan");
  Rng rng(85);
  const Vec a = rng.unit_vector(5);
  const auto batch = integrate_mc_batch(
      *M, {phi2(a), kOne}, 20000, 55);
  const auto solo = integrate_mc(*M, phi2(a), 20000, 55);
  CHECK(batch[0].value == solo.value);
  CHECK(batch[1].value == doctest::Approx(M->volume()).epsilon(1e-13));
}

TEST_CASE("functional_report: minimal closed-surface budget identity") {
  Rng rng(86);
  IntegrateOptions opt;
  for (const char* text :
       {"equator:n=4", "clifford:k=1,n=4,r=minimal", "clifford:k=2,n=4,r=einstein"}) {
    const auto M = make_surface(text);
    const int n = M->dim();
    const Vec a = rng.unit_vector(M->ambient_dim());
    const auto rep = functional_report(*M, a, Method::Quadrature, opt);
    CHECK(rep.vol.value == doctest::Approx(M->volume()).epsilon(1e-13));
    // minimal surfaces: (n+1) int phi^2 + int psi^2 = Vol
    CHECK((n + 1) * rep.int_phi2.value + rep.int_psi2.value ==
          doctest::Approx(rep.vol.value).epsilon(1e-12));
    CHECK(std::abs(rep.ie_defect_curvature.value - rep.ie_defect_height.value) <
          1e-10);
  }
  // stochastic route carries error bars
  const auto cart = make_surface("cartan");
  opt.samples = 30000;
  opt.seed = 5;
  const auto rep = functional_report(*cart, rng.unit_vector(5), Method::MonteCarlo, opt);
  CHECK(rep.int_phi2.std_error > 0);
  CHECK(std::abs(4 * rep.int_phi2.value + rep.int_psi2.value - rep.vol.value) <
        4 * (4 * rep.int_phi2.std_error + rep.int_psi2.std_error) + 1e-9);
}
