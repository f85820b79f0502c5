#pragma once
#include <array>
#include <cmath>

namespace curvkit {

// Small fixed-capacity vector for d = 2 or 3.  Unused components stay zero,
// so dot/norm over all three entries are always valid.
using Vec = std::array<double, 3>;

inline Vec vec2(double x, double y) { return {x, y, 0.0}; }
inline Vec vec3(double x, double y, double z) { return {x, y, z}; }

inline Vec operator+(const Vec& a, const Vec& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec operator-(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec operator-(const Vec& a) { return {-a[0], -a[1], -a[2]}; }
inline Vec operator*(double s, const Vec& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline Vec operator*(const Vec& a, double s) { return s * a; }
inline Vec operator/(const Vec& a, double s) { return {a[0] / s, a[1] / s, a[2] / s}; }
inline Vec& operator+=(Vec& a, const Vec& b) { a = a + b; return a; }
inline Vec& operator-=(Vec& a, const Vec& b) { a = a - b; return a; }

inline double dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }
inline Vec normalized(const Vec& a) { return a / norm(a); }

inline Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Any unit vector orthogonal to n (n must be nonzero).
inline Vec any_orthogonal(const Vec& n) {
  Vec axis = std::abs(n[0]) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
  Vec t = cross(n, axis);
  double len = norm(t);
  if (len < 1e-14) { t = cross(n, Vec{0, 0, 1}); len = norm(t); }
  return t / len;
}

}  // namespace curvkit
