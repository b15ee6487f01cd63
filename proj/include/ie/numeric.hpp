#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ie {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

/// splitmix64 step, used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

/// Deterministic random stream. Only the raw mt19937_64 output is consumed;
/// the uniform and gaussian mappings are spelled out so the stream does not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  double next_double();    // uniform in [0, 1)
  double next_gaussian();  // standard normal (Box-Muller)

  Vec gaussian_vector(int dim);
  Vec unit_vector(int dim);  // uniform on S^{dim-1}

  /// Independent derived stream; forking with distinct ids gives
  /// reproducible, non-overlapping streams.
  Rng fork(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0;
  bool has_spare_ = false;
};

/// Vol(S^m) of the unit m-sphere, m >= 0.
double sphere_volume(int m);

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b]; nodes computed by Newton iteration
/// on the Legendre recurrence.
GaussRule gauss_legendre(int n, double a, double b);

/// Streams the nodes of a tensor rule over the unit sphere S^m in R^{m+1}:
/// Gauss-Legendre in the polar angles with the sin-power Jacobian folded into
/// the weight, a uniform rule in the periodic angle. Weights sum to Vol(S^m).
void sphere_rule_visit(int m, int nodes_per_angle,
                       const std::function<void(const Vec&, double)>& visit);

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12);

/// Shortest round-trip decimal representation.
std::string format_double(double v);

/// Compensated (Kahan) accumulator.
class KahanSum {
 public:
  void add(double v) {
    const double y = v - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0;
  double carry_ = 0;
};

}  // namespace ie
