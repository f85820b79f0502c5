#include "curvkit/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "curvkit/constants.hpp"
#include "curvkit/sampling.hpp"

namespace curvkit {

namespace {

Vec unit_from_angles(double theta, double phi, int d) {
  if (d == 2) return {std::cos(theta), std::sin(theta), 0.0};
  double s = std::sin(phi);
  return {s * std::cos(theta), s * std::sin(theta), std::cos(phi)};
}

}  // namespace

ConvexBody ConvexBody::euclidean(int d) {
  ConvexBody b;
  b.d_ = d;
  b.kind_ = GaugeKind::euclidean;
  b.r_in_ = b.r_out_ = 1.0;
  b.name_ = "euclidean";
  return b;
}

ConvexBody ConvexBody::pnorm(int d, double p) {
  if (p < 1.0) throw std::invalid_argument("pnorm: p must be >= 1");
  ConvexBody b;
  b.d_ = d;
  b.kind_ = GaugeKind::p_norm;
  b.p_ = p;
  // Extremes of ||x||_p over the unit sphere sit at axis and diagonal vectors.
  double diag = std::isinf(p) ? 1.0 / std::sqrt(static_cast<double>(d))
                              : std::pow(static_cast<double>(d), 1.0 / p - 0.5);
  // gauge on sphere ranges over [min(1,diag), max(1,diag)]
  b.r_in_ = 1.0 / std::max(1.0, diag);
  b.r_out_ = 1.0 / std::min(1.0, diag);
  b.name_ = std::isinf(p) ? "pnorm:inf" : "pnorm:" + std::to_string(p);
  return b;
}

ConvexBody ConvexBody::halfspaces(int d, std::vector<Vec> normals) {
  if (normals.empty()) throw std::invalid_argument("halfspaces: empty family");
  ConvexBody b;
  b.d_ = d;
  b.kind_ = GaugeKind::halfspace_family;
  b.normals_ = std::move(normals);
  b.name_ = "halfspaces";
  // Certify inner/outer radii by dense sphere sampling of the gauge.
  double gmin = std::numeric_limits<double>::infinity(), gmax = 0.0;
  int nt = 720, np = d == 3 ? 360 : 1;
  for (int i = 0; i < nt; ++i)
    for (int k = 0; k < np; ++k) {
      double theta = 2.0 * PI * (i + 0.5) / nt;
      double phi = PI * (k + 0.5) / np;
      double g = b.gauge(unit_from_angles(theta, phi, d));
      gmin = std::min(gmin, g);
      gmax = std::max(gmax, g);
    }
  if (gmin <= 1e-12)
    throw std::invalid_argument("halfspaces: normals do not span the space (unbounded body)");
  b.r_in_ = 1.0 / gmax;
  b.r_out_ = 1.0 / gmin;
  return b;
}

double ConvexBody::gauge(const Vec& x) const {
  switch (kind_) {
    case GaugeKind::euclidean:
      return norm(x);
    case GaugeKind::p_norm: {
      if (std::isinf(p_)) {
        double m = 0.0;
        for (int i = 0; i < d_; ++i) m = std::max(m, std::abs(x[i]));
        return m;
      }
      double s = 0.0;
      for (int i = 0; i < d_; ++i) s += std::pow(std::abs(x[i]), p_);
      return std::pow(s, 1.0 / p_);
    }
    case GaugeKind::halfspace_family: {
      double m = 0.0;
      for (const auto& a : normals_) m = std::max(m, std::abs(dot(a, x)));
      return m;
    }
  }
  return 0.0;
}

double ConvexBody::polar_gauge(const Vec& y) const {
  switch (kind_) {
    case GaugeKind::euclidean:
      return norm(y);
    case GaugeKind::p_norm: {
      // dual exponent: q = p/(p-1); p=1 <-> inf
      if (std::isinf(p_)) {
        double s = 0.0;
        for (int i = 0; i < d_; ++i) s += std::abs(y[i]);
        return s;
      }
      if (p_ == 1.0) {
        double m = 0.0;
        for (int i = 0; i < d_; ++i) m = std::max(m, std::abs(y[i]));
        return m;
      }
      double q = p_ / (p_ - 1.0);
      double s = 0.0;
      for (int i = 0; i < d_; ++i) s += std::pow(std::abs(y[i]), q);
      return std::pow(s, 1.0 / q);
    }
    case GaugeKind::halfspace_family:
      break;
  }
  // sup over rays: max_u (y.u) / gauge(u); coarse scan then local refinement.
  double yn = norm(y);
  if (yn == 0.0) return 0.0;
  auto value = [&](double theta, double phi) {
    Vec u = unit_from_angles(theta, phi, d_);
    return dot(y, u) / gauge(u);
  };
  double best = 0.0, bt = 0.0, bp = PI / 2;
  int nt = 2048, np = d_ == 3 ? 512 : 1;
  for (int i = 0; i < nt; ++i)
    for (int k = 0; k < np; ++k) {
      double theta = 2.0 * PI * i / nt;
      double phi = d_ == 3 ? PI * (k + 0.5) / np : PI / 2;
      double v = value(theta, phi);
      if (v > best) { best = v; bt = theta; bp = phi; }
    }
  // golden-section style shrink around the best sample
  double ht = 2.0 * PI / nt, hp = d_ == 3 ? PI / np : 0.0;
  for (int it = 0; it < 60; ++it) {
    bool improved = false;
    for (int si = -1; si <= 1; ++si)
      for (int sk = -1; sk <= 1; ++sk) {
        if (si == 0 && sk == 0) continue;
        double v = value(bt + si * ht, bp + sk * hp);
        if (v > best) { best = v; bt += si * ht; bp += sk * hp; improved = true; }
      }
    if (!improved) { ht *= 0.5; hp *= 0.5; }
    if (ht < 1e-14) break;
  }
  return best;
}

double ConvexBody::moment_norm(const Vec& y, size_t samples, uint64_t seed,
                               double* stat_error) const {
  if (samples == 0) samples = 1;
  double box = r_out_;
  double box_vol = std::pow(2.0 * box, d_);
  double sum = 0.0, sumsq = 0.0;
  double pt[3] = {0, 0, 0};
  for (size_t i = 0; i < samples; ++i) {
    halton_point(i, seed, d_, pt);
    Vec x{0, 0, 0};
    for (int k = 0; k < d_; ++k) x[k] = (2.0 * pt[k] - 1.0) * box;
    double v = gauge(x) <= 1.0 ? std::abs(dot(y, x)) : 0.0;
    sum += v;
    sumsq += v * v;
  }
  double n = static_cast<double>(samples);
  double mean = sum / n;
  double value = 0.5 * (d_ + 1) * box_vol * mean;
  if (stat_error) {
    double var = std::max(0.0, sumsq / n - mean * mean);
    *stat_error = 0.5 * (d_ + 1) * box_vol * std::sqrt(var / n);
  }
  return value;
}

}  // namespace curvkit
