#include "ie/catalog.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "ie/integrate.hpp"

namespace ie {

int IsoparametricProfile::n() const {
  int total = 0;
  for (const auto& [lam, mult] : lambdas) total += mult;
  return total;
}

double IsoparametricProfile::S() const {
  double s = 0;
  for (const auto& [lam, mult] : lambdas) s += mult * lam * lam;
  return s;
}

double IsoparametricProfile::f3() const {
  double s = 0;
  for (const auto& [lam, mult] : lambdas) s += mult * lam * lam * lam;
  return s;
}

IsoparametricProfile profile_lambdas(int g, int m_plus, int m_minus) {
  if (g != 1 && g != 2 && g != 3 && g != 4 && g != 6)
    throw std::invalid_argument("profile: g must be one of 1, 2, 3, 4, 6");
  if (m_plus < 1 || m_minus < 1)
    throw std::invalid_argument("profile: multiplicities must be >= 1");
  IsoparametricProfile pr;
  pr.g = g;
  pr.m_plus = m_plus;
  pr.m_minus = m_minus;
  const double c0 = double(m_minus - m_plus) / double(m_minus + m_plus);
  pr.theta0 = std::acos(c0) / g;
  double weighted_sum = 0;
  for (int j = 0; j < g; ++j) {
    const double lam = 1.0 / std::tan(pr.theta0 + j * kPi / g);
    const int mult = (j % 2 == 0) ? m_plus : m_minus;
    pr.lambdas.emplace_back(lam, mult);
    weighted_sum += mult * lam;
  }
  if (std::abs(weighted_sum) > 1e-10)
    throw std::invalid_argument(
        "profile: curvatures weighted by these multiplicities do not vanish; "
        "odd g requires m+ == m-");
  return pr;
}

// ---------------------------------------------------------------------------
// spec grammar

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }

  void expect(char c) {
    if (done() || s[pos] != c)
      throw SpecParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  void expect_key(const std::string& key) {
    if (s.compare(pos, key.size(), key) != 0)
      throw SpecParseError("expected '" + key + "'", pos);
    pos += key.size();
  }

  long parse_int() {
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (end == begin) throw SpecParseError("expected an integer", pos);
    pos += static_cast<std::size_t>(end - begin);
    return v;
  }

  double parse_double() {
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw SpecParseError("expected a number", pos);
    pos += static_cast<std::size_t>(end - begin);
    return v;
  }

  bool peek_word(const std::string& w) const {
    return s.compare(pos, w.size(), w) == 0;
  }

  void expect_end() {
    if (!done()) throw SpecParseError("unexpected trailing characters", pos);
  }
};

}  // namespace

HypersurfaceSpec parse_surface_spec(const std::string& s) {
  HypersurfaceSpec spec;
  spec.text = s;
  Cursor c{s};

  if (c.peek_word("cartan")) {
    c.pos += 6;
    c.expect_end();
    spec.kind = HypersurfaceSpec::Kind::CartanCubic;
    spec.n = 3;
    return spec;
  }
  if (c.peek_word("equator:")) {
    c.pos += 8;
    c.expect_key("n=");
    const std::size_t npos = c.pos;
    const long n = c.parse_int();
    if (n < 2) throw SpecParseError("n must be at least 2", npos);
    c.expect_end();
    spec.kind = HypersurfaceSpec::Kind::Equator;
    spec.n = static_cast<int>(n);
    return spec;
  }
  if (c.peek_word("clifford:")) {
    c.pos += 9;
    c.expect_key("k=");
    const std::size_t kpos = c.pos;
    const long k = c.parse_int();
    c.expect(',');
    c.expect_key("n=");
    const std::size_t npos = c.pos;
    const long n = c.parse_int();
    if (n < 2) throw SpecParseError("n must be at least 2", npos);
    if (k < 1 || k > n - 1)
      throw SpecParseError("k must satisfy 1 <= k <= n-1", kpos);
    c.expect(',');
    c.expect_key("r=");
    const std::size_t rpos = c.pos;
    double r1 = 0;
    if (c.peek_word("minimal")) {
      c.pos += 7;
      r1 = CliffordTorusSurface::minimal_radius(static_cast<int>(k),
                                                static_cast<int>(n));
    } else if (c.peek_word("einstein")) {
      c.pos += 8;
      if (k < 2 || k > n - 2)
        throw SpecParseError("r=einstein needs 2 <= k <= n-2", rpos);
      r1 = CliffordTorusSurface::einstein_radius(static_cast<int>(k),
                                                 static_cast<int>(n));
    } else {
      r1 = c.parse_double();
      if (!(r1 > 0.0 && r1 < 1.0))
        throw SpecParseError("r must lie strictly between 0 and 1", rpos);
    }
    c.expect_end();
    spec.kind = HypersurfaceSpec::Kind::CliffordTorus;
    spec.k = static_cast<int>(k);
    spec.n = static_cast<int>(n);
    spec.r1 = r1;
    return spec;
  }
  if (c.peek_word("profile:")) {
    c.pos += 8;
    c.expect_key("g=");
    const std::size_t gpos = c.pos;
    const long g = c.parse_int();
    c.expect(',');
    c.expect_key("m=");
    const std::size_t mpos = c.pos;
    const long mp = c.parse_int();
    c.expect(',');
    const long mm = c.parse_int();
    try {
      profile_lambdas(static_cast<int>(g), static_cast<int>(mp),
                      static_cast<int>(mm));
    } catch (const std::invalid_argument& e) {
      throw SpecParseError(e.what(), g == 1 || g == 2 || g == 3 || g == 4 || g == 6 ? mpos : gpos);
    }
    spec.kind = HypersurfaceSpec::Kind::Profile;
    spec.g = static_cast<int>(g);
    spec.m_plus = static_cast<int>(mp);
    spec.m_minus = static_cast<int>(mm);
    spec.n = profile_lambdas(spec.g, spec.m_plus, spec.m_minus).n();
    return spec;
  }
  throw SpecParseError(
      "unknown surface kind (expected equator:, clifford:, cartan, profile:)", 0);
}

// ---------------------------------------------------------------------------
// Surface base

void Surface::quadrature_visit(
    int, const std::function<void(const SurfacePoint&, double)>&) const {
  throw std::logic_error("quadrature is not available for surface '" + name() +
                         "'; use Monte Carlo");
}

std::unique_ptr<Surface> make_surface(const HypersurfaceSpec& spec) {
  switch (spec.kind) {
    case HypersurfaceSpec::Kind::Equator:
      return std::make_unique<EquatorSurface>(spec);
    case HypersurfaceSpec::Kind::CliffordTorus:
      return std::make_unique<CliffordTorusSurface>(spec);
    case HypersurfaceSpec::Kind::CartanCubic:
      return std::make_unique<CartanCubicSurface>(spec);
    case HypersurfaceSpec::Kind::Profile:
      throw std::invalid_argument(
          "profile specs carry no immersion; only profile-level checks apply");
  }
  throw std::logic_error("make_surface: unreachable");
}

std::unique_ptr<Surface> make_surface(const std::string& spec_text) {
  return make_surface(parse_surface_spec(spec_text));
}

// ---------------------------------------------------------------------------
// Equator

EquatorSurface::EquatorSurface(HypersurfaceSpec spec)
    : spec_(std::move(spec)), profile_(profile_lambdas(1, spec_.n, spec_.n)) {}

CurvatureSummary EquatorSurface::curvature() const {
  return curvature_invariants(Mat::Zero(spec_.n, spec_.n));
}

SurfacePoint EquatorSurface::complete(const Vec& x) const {
  const int N = ambient_dim();
  SurfacePoint p;
  p.x = project(x);
  p.nu = Vec::Unit(N, N - 1);
  p.frame = tangent_frame(p.x, p.nu);
  p.shape = Mat::Zero(spec_.n, spec_.n);
  return p;
}

Vec EquatorSurface::project(const Vec& y) const {
  const int N = ambient_dim();
  if (y.size() != N) throw std::invalid_argument("equator: wrong ambient dimension");
  Vec z = y;
  z[N - 1] = 0;
  const double norm = z.norm();
  if (norm < 1e-12)
    throw std::runtime_error("equator: retraction undefined at the polar axis");
  return z / norm;
}

SurfacePoint EquatorSurface::sample(Rng& rng) const {
  const int N = ambient_dim();
  Vec x = Vec::Zero(N);
  x.head(N - 1) = rng.unit_vector(N - 1);
  return complete(x);
}

void EquatorSurface::quadrature_visit(
    int nodes_per_angle,
    const std::function<void(const SurfacePoint&, double)>& visit) const {
  const int N = ambient_dim();
  if (std::pow(double(nodes_per_angle), spec_.n) > 5e7)
    throw std::invalid_argument("equator: quadrature degree overflow");
  sphere_rule_visit(spec_.n, nodes_per_angle, [&](const Vec& u, double w) {
    Vec x = Vec::Zero(N);
    x.head(N - 1) = u;
    visit(complete(x), w);
  });
}

// ---------------------------------------------------------------------------
// Clifford torus

double CliffordTorusSurface::minimal_radius(int k, int n) {
  return std::sqrt(double(k) / n);
}

double CliffordTorusSurface::einstein_radius(int k, int n) {
  if (k < 2 || k > n - 2)
    throw std::invalid_argument("einstein radius needs 2 <= k <= n-2");
  return std::sqrt(double(k - 1) / (n - 2));
}

CliffordTorusSurface::CliffordTorusSurface(HypersurfaceSpec spec)
    : spec_(std::move(spec)), r2_(std::sqrt(1.0 - spec_.r1 * spec_.r1)) {
  if (spec_.k < 1 || spec_.k > spec_.n - 1 || !(spec_.r1 > 0 && spec_.r1 < 1))
    throw std::invalid_argument("clifford torus: invalid parameters");
  if (std::abs(spec_.r1 - minimal_radius(spec_.k, spec_.n)) < 1e-12)
    profile_ = profile_lambdas(2, spec_.k, spec_.n - spec_.k);
}

const IsoparametricProfile* CliffordTorusSurface::profile() const {
  return profile_ ? &*profile_ : nullptr;
}

CurvatureSummary CliffordTorusSurface::curvature() const {
  Vec diag(spec_.n);
  diag.head(spec_.k).setConstant(kappa1());
  diag.tail(spec_.n - spec_.k).setConstant(kappa2());
  return curvature_invariants(Mat(diag.asDiagonal()));
}

double CliffordTorusSurface::volume() const {
  return std::pow(spec_.r1, spec_.k) * std::pow(r2_, spec_.n - spec_.k) *
         sphere_volume(spec_.k) * sphere_volume(spec_.n - spec_.k);
}

SurfacePoint CliffordTorusSurface::point_at(const Vec& u, const Vec& v) const {
  const int k = spec_.k, n = spec_.n;
  if (u.size() != k + 1 || v.size() != n - k + 1)
    throw std::invalid_argument("clifford torus: wrong factor dimensions");
  SurfacePoint p;
  p.x = Vec(n + 2);
  p.x.head(k + 1) = spec_.r1 * u;
  p.x.tail(n - k + 1) = r2_ * v;
  // normal oriented so the S^k factor curvature r2/r1 is positive
  p.nu = Vec(n + 2);
  p.nu.head(k + 1) = -r2_ * u;
  p.nu.tail(n - k + 1) = spec_.r1 * v;

  p.frame = Mat::Zero(n + 2, n);
  const Mat u_perp = orthonormal_complement(u);
  const Mat v_perp = orthonormal_complement(v);
  p.frame.block(0, 0, k + 1, k) = u_perp;
  p.frame.block(k + 1, k, n - k + 1, n - k) = v_perp;

  Vec diag(n);
  diag.head(k).setConstant(kappa1());
  diag.tail(n - k).setConstant(kappa2());
  p.shape = diag.asDiagonal();
  return p;
}

SurfacePoint CliffordTorusSurface::complete(const Vec& x) const {
  const int k = spec_.k, n = spec_.n;
  if (x.size() != n + 2) throw std::invalid_argument("clifford torus: wrong ambient dimension");
  const Vec u = x.head(k + 1);
  const Vec v = x.tail(n - k + 1);
  const double un = u.norm(), vn = v.norm();
  if (un < 1e-12 || vn < 1e-12)
    throw std::runtime_error("clifford torus: point collapses onto a factor axis");
  return point_at(u / un, v / vn);
}

Vec CliffordTorusSurface::project(const Vec& y) const {
  const int k = spec_.k, n = spec_.n;
  if (y.size() != n + 2) throw std::invalid_argument("clifford torus: wrong ambient dimension");
  const Vec u = y.head(k + 1);
  const Vec v = y.tail(n - k + 1);
  const double un = u.norm(), vn = v.norm();
  if (un < 1e-12 || vn < 1e-12)
    throw std::runtime_error("clifford torus: retraction undefined on a factor axis");
  Vec out(n + 2);
  out.head(k + 1) = spec_.r1 / un * u;
  out.tail(n - k + 1) = r2_ / vn * v;
  return out;
}

SurfacePoint CliffordTorusSurface::sample(Rng& rng) const {
  const Vec u = rng.unit_vector(spec_.k + 1);
  const Vec v = rng.unit_vector(spec_.n - spec_.k + 1);
  return point_at(u, v);
}

void CliffordTorusSurface::quadrature_visit(
    int nodes_per_angle,
    const std::function<void(const SurfacePoint&, double)>& visit) const {
  const int k = spec_.k, n = spec_.n;
  if (std::pow(double(nodes_per_angle), n) > 5e7)
    throw std::invalid_argument("clifford torus: quadrature degree overflow");
  const double jac = std::pow(spec_.r1, k) * std::pow(r2_, n - k);
  sphere_rule_visit(k, nodes_per_angle, [&](const Vec& u, double wu) {
    sphere_rule_visit(n - k, nodes_per_angle, [&](const Vec& v, double wv) {
      visit(point_at(u, v), wu * wv * jac);
    });
  });
}

// ---------------------------------------------------------------------------
// Cartan cubic

namespace {

constexpr double kSqrt6 = 2.449489742783178;

const std::array<Eigen::Matrix3d, 5>& cartan_basis() {
  static const std::array<Eigen::Matrix3d, 5> basis = [] {
    std::array<Eigen::Matrix3d, 5> b;
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s6 = 1.0 / std::sqrt(6.0);
    b[0] = Eigen::Vector3d(1, -1, 0).asDiagonal();
    b[0] *= s2;
    b[1] = Eigen::Vector3d(1, 1, -2).asDiagonal();
    b[1] *= s6;
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int t = 0; t < 3; ++t) {
      b[2 + t].setZero();
      b[2 + t](pairs[t][0], pairs[t][1]) = s2;
      b[2 + t](pairs[t][1], pairs[t][0]) = s2;
    }
    return b;
  }();
  return basis;
}

// E_i E_j + E_j E_i, precomputed for the Hessian
const std::array<Eigen::Matrix3d, 25>& cartan_basis_products() {
  static const std::array<Eigen::Matrix3d, 25> prods = [] {
    std::array<Eigen::Matrix3d, 25> p;
    const auto& b = cartan_basis();
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        p[5 * i + j] = b[i] * b[j] + b[j] * b[i];
    return p;
  }();
  return prods;
}

/// The degree-3 first integral of the family: sqrt(6) Tr(X^3) in the matrix
/// model, normalized so its maximum on the unit sphere is 1.
class CartanMunznerField final : public AmbientField {
 public:
  double value(const Vec& y) const override {
    const Eigen::Matrix3d X = CartanCubicSurface::coords_to_matrix(y);
    return kSqrt6 * (X * X * X).trace();
  }

  Vec gradient(const Vec& y) const override {
    const Eigen::Matrix3d X = CartanCubicSurface::coords_to_matrix(y);
    const Eigen::Matrix3d X2 = X * X;
    const auto& b = cartan_basis();
    Vec g(5);
    for (int i = 0; i < 5; ++i) g[i] = 3.0 * kSqrt6 * (X2 * b[i]).trace();
    return g;
  }

  Mat hessian(const Vec& y) const override {
    const Eigen::Matrix3d X = CartanCubicSurface::coords_to_matrix(y);
    const auto& prods = cartan_basis_products();
    Mat H(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = i; j < 5; ++j) {
        H(i, j) = 3.0 * kSqrt6 * (X * prods[5 * i + j]).trace();
        H(j, i) = H(i, j);
      }
    return H;
  }
};

}  // namespace

Eigen::Matrix3d CartanCubicSurface::coords_to_matrix(const Vec& y) {
  if (y.size() != 5) throw std::invalid_argument("cartan: coordinates must be 5-dimensional");
  const auto& b = cartan_basis();
  Eigen::Matrix3d X = Eigen::Matrix3d::Zero();
  for (int i = 0; i < 5; ++i) X += y[i] * b[i];
  return X;
}

Vec CartanCubicSurface::matrix_to_coords(const Eigen::Matrix3d& X) {
  const auto& b = cartan_basis();
  Vec y(5);
  for (int i = 0; i < 5; ++i) y[i] = (X * b[i]).trace();
  return y;
}

Eigen::Vector3d CartanCubicSurface::level_eigenvalues(double theta) {
  Eigen::Vector3d mu;
  for (int i = 0; i < 3; ++i)
    mu[i] = 2.0 / kSqrt6 * std::cos(theta + 2.0 * kPi * i / 3.0);
  return mu;
}

Eigen::Matrix3d CartanCubicSurface::haar_rotation(Rng& rng) {
  double q0 = rng.next_gaussian(), q1 = rng.next_gaussian();
  double q2 = rng.next_gaussian(), q3 = rng.next_gaussian();
  const double norm = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
  q0 /= norm;
  q1 /= norm;
  q2 /= norm;
  q3 /= norm;
  Eigen::Matrix3d R;
  R << 1 - 2 * (q2 * q2 + q3 * q3), 2 * (q1 * q2 - q3 * q0), 2 * (q1 * q3 + q2 * q0),
      2 * (q1 * q2 + q3 * q0), 1 - 2 * (q1 * q1 + q3 * q3), 2 * (q2 * q3 - q1 * q0),
      2 * (q1 * q3 - q2 * q0), 2 * (q2 * q3 + q1 * q0), 1 - 2 * (q1 * q1 + q2 * q2);
  return R;
}

CartanCubicSurface::CartanCubicSurface(HypersurfaceSpec spec)
    : spec_(std::move(spec)),
      profile_(profile_lambdas(3, 1, 1)),
      field_(std::make_unique<CartanMunznerField>()) {
  volume_ = sphere_volume(4) / profile_h_integral(profile_);
}

const AmbientField* CartanCubicSurface::level_field() const { return field_.get(); }

CurvatureSummary CartanCubicSurface::curvature() const {
  Vec diag(3);
  for (int j = 0; j < 3; ++j) diag[j] = profile_.lambdas[j].first;
  return curvature_invariants(Mat(diag.asDiagonal()));
}

SurfacePoint CartanCubicSurface::complete(const Vec& x) const {
  return shape_from_level_set(*field_, x);
}

double CartanCubicSurface::level_angle(const Vec& x) const {
  const double f = std::clamp(field_->value(x), -1.0, 1.0);
  return std::acos(f) / 3.0;
}

SurfacePoint CartanCubicSurface::sample_level(double theta, Rng& rng) const {
  if (theta < 1e-6 || theta > kPi / 3.0 - 1e-6)
    throw FocalPointError("cartan: level angle within 1e-6 of the focal set");
  const Eigen::Matrix3d D = level_eigenvalues(theta).asDiagonal();
  const Eigen::Matrix3d Q = haar_rotation(rng);
  const Eigen::Matrix3d X = Q * D * Q.transpose();
  return complete(matrix_to_coords(X));
}

SurfacePoint CartanCubicSurface::sample(Rng& rng) const {
  return sample_level(profile_.theta0, rng);
}

Vec CartanCubicSurface::project(const Vec& y) const {
  const double yn = y.norm();
  if (yn < 1e-12) throw std::runtime_error("cartan: retraction undefined at the origin");
  Vec x = y / yn;
  const double target = std::cos(3.0 * profile_.theta0);
  for (int it = 0; it < 50; ++it) {
    const double f = std::clamp(field_->value(x), -1.0, 1.0);
    if (std::abs(f - target) < 1e-13) return x;
    const Vec g = field_->gradient(x);
    const Vec w = g - g.dot(x) * x;
    const double wn = w.norm();
    if (wn < 1e-8) throw FocalPointError("cartan: retraction hit a focal point");
    const Vec nu = w / wn;
    // the first integral equals cos(3 theta); translating by the angle gap
    // along the normal geodesic lands on the target level in one step
    const double eps = std::acos(f) / 3.0 - profile_.theta0;
    x = std::cos(eps) * x + std::sin(eps) * nu;
    x.normalize();
  }
  throw std::runtime_error("cartan: level retraction did not converge in 50 steps");
}

// ---------------------------------------------------------------------------

Vec parallel_translate(const SurfacePoint& p, double delta) {
  return std::cos(delta) * p.x + std::sin(delta) * p.nu;
}

std::pair<Vec, Vec> parallel_translate_with_normal(const SurfacePoint& p, double delta) {
  return {std::cos(delta) * p.x + std::sin(delta) * p.nu,
          -std::sin(delta) * p.x + std::cos(delta) * p.nu};
}

}  // namespace ie
