#include "ie/numeric.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ie {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] keeps the log finite
  const double u1 = 1.0 - next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * kPi * u2);
  has_spare_ = true;
  return r * std::cos(2.0 * kPi * u2);
}

Vec Rng::gaussian_vector(int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = next_gaussian();
  return v;
}

Vec Rng::unit_vector(int dim) {
  while (true) {
    Vec v = gaussian_vector(dim);
    const double n = v.norm();
    if (n > 1e-8) return v / n;
  }
}

Rng Rng::fork(std::uint64_t stream) const { return Rng(mix_seed(seed_, stream)); }

double sphere_volume(int m) {
  if (m < 0) throw std::invalid_argument("sphere_volume: negative dimension");
  // Vol(S^m) = 2 pi / (m - 1) * Vol(S^{m-2}), Vol(S^0) = 2, Vol(S^1) = 2 pi
  double even = 2.0, odd = 2.0 * kPi;
  if (m == 0) return even;
  if (m == 1) return odd;
  double v = (m % 2 == 0) ? even : odd;
  for (int j = (m % 2 == 0) ? 2 : 3; j <= m; j += 2) v *= 2.0 * kPi / (j - 1);
  return v;
}

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one more recurrence pass so dp matches the converged node
        p0 = 1.0;
        p1 = x;
        for (int j = 2; j <= n; ++j) {
          const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + hw * rule.nodes[i];
    rule.weights[i] *= hw;
  }
  return rule;
}

void sphere_rule_visit(int m, int nodes_per_angle,
                       const std::function<void(const Vec&, double)>& visit) {
  if (m < 1) throw std::invalid_argument("sphere_rule_visit: need m >= 1");
  if (nodes_per_angle < 4)
    throw std::invalid_argument("sphere_rule_visit: need at least 4 nodes per angle");
  if (m == 1) {
    const double w = 2.0 * kPi / nodes_per_angle;
    Vec u(2);
    for (int j = 0; j < nodes_per_angle; ++j) {
      const double phi = 2.0 * kPi * j / nodes_per_angle;
      u << std::cos(phi), std::sin(phi);
      visit(u, w);
    }
    return;
  }
  const GaussRule gl = gauss_legendre(nodes_per_angle, 0.0, kPi);
  sphere_rule_visit(m - 1, nodes_per_angle, [&](const Vec& sub, double wsub) {
    Vec u(m + 1);
    for (int i = 0; i < nodes_per_angle; ++i) {
      const double th = gl.nodes[i];
      const double s = std::sin(th);
      u[0] = std::cos(th);
      u.tail(m) = s * sub;
      visit(u, gl.weights[i] * std::pow(s, m - 1) * wsub);
    }
  });
}

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, double tol,
                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace ie
