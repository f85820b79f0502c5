#pragma once
#include <cmath>
#include <stdexcept>

namespace curvkit {

inline constexpr double PI = 3.14159265358979323846;

// Surface measure of the unit m-sphere S^m, kappa(0)=2, kappa(1)=2*pi, kappa(2)=4*pi.
inline double kappa(int m) {
  if (m < 0) throw std::invalid_argument("kappa: negative sphere dimension");
  // H^m(S^m) = 2 pi^{(m+1)/2} / Gamma((m+1)/2)
  return 2.0 * std::pow(PI, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
}

// Volume of the unit ball in R^m.
inline double unit_ball_volume(int m) {
  return std::pow(PI, 0.5 * m) / std::tgamma(0.5 * m + 1.0);
}

}  // namespace curvkit
