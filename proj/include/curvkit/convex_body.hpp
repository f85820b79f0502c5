#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "vec.hpp"

namespace curvkit {

enum class GaugeKind { euclidean, p_norm, halfspace_family };

// Origin-symmetric convex body given by its gauge (Minkowski functional).
// Supplies the polar gauge (support function) and the moment-body norm.
class ConvexBody {
 public:
  static ConvexBody euclidean(int d);
  static ConvexBody pnorm(int d, double p);  // p in [1, inf]; inf = cube/square
  static ConvexBody halfspaces(int d, std::vector<Vec> normals);

  int dim() const { return d_; }
  GaugeKind kind() const { return kind_; }
  double exponent() const { return p_; }
  double inner_radius() const { return r_in_; }
  double outer_radius() const { return r_out_; }
  const std::string& name() const { return name_; }

  double gauge(const Vec& x) const;
  // sup_{gauge(x)<=1} y.x ; closed form for euclidean/p_norm, sampled ascent otherwise
  double polar_gauge(const Vec& y) const;
  // (d+1)/2 * integral over the body of |y.x| dx, low-discrepancy sampling
  double moment_norm(const Vec& y, size_t samples, uint64_t seed = 0,
                     double* stat_error = nullptr) const;

 private:
  ConvexBody() = default;
  int d_ = 2;
  GaugeKind kind_ = GaugeKind::euclidean;
  double p_ = 2.0;
  std::vector<Vec> normals_;  // stored as |a_i . x| pairs (origin symmetric)
  double r_in_ = 1.0, r_out_ = 1.0;
  std::string name_ = "euclidean";
};

}  // namespace curvkit
