#include "curvkit/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "curvkit/constants.hpp"
#include "curvkit/quad.hpp"

namespace curvkit {

namespace {

constexpr double INF = std::numeric_limits<double>::infinity();

// integral over [a,b] of r^p dr, b may be +inf (then requires p < -1)
double power_integral(double a, double b, double p) {
  if (b <= a) return 0.0;
  if (std::isinf(b)) {
    if (p >= -1.0) throw std::domain_error("divergent power tail");
    return -std::pow(a, p + 1.0) / (p + 1.0);
  }
  if (std::abs(p + 1.0) < 1e-14) return std::log(b / a);
  return (std::pow(b, p + 1.0) - std::pow(a, p + 1.0)) / (p + 1.0);
}

}  // namespace

double RadialProfile::moment(double a, double b, int m) const {
  if (b <= a) return 0.0;
  if (moment_closed) return moment_closed(a, b, m);
  if (support_radius) b = std::min(b, *support_radius);
  if (b <= a) return 0.0;
  auto f = [&](double r) { return std::pow(r, m) * eval(r); };
  if (std::isinf(b)) {
    double split = std::max(1.0, 2.0 * a);
    double head = moment(a, split, m);
    // r = split/u maps [split,inf) to (0,1]
    auto tail = [&](double u) {
      double r = split / u;
      return std::pow(r, m) * eval(r) * split / (u * u);
    };
    double t = integrate_graded(tail, 1.0, 1e-12);
    if (!std::isfinite(t)) throw std::domain_error("divergent profile tail");
    return head + t;
  }
  if (a <= 0.0) return integrate_graded(f, b, 1e-12);
  return adaptive_simpson(f, a, b, 1e-12 * std::max(1.0, b - a));
}

double Kernel::operator()(const Vec& x) const {
  double r = norm(x);
  if (r == 0.0) throw std::domain_error("kernel evaluated at the origin");
  if (g.isotropic) return j.eval(r);
  return g.eval(x / r) * j.eval(r);
}

double sphere_integral(int d, const std::function<double(const Vec&)>& f, double tol) {
  if (d == 2) {
    double prev = 0.0;
    for (int n = 64; n <= (1 << 20); n *= 2) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) {
        double t = 2.0 * PI * (i + 0.5) / n;
        s += f(Vec{std::cos(t), std::sin(t), 0.0});
      }
      s *= 2.0 * PI / n;
      if (n > 64 && std::abs(s - prev) <= tol * std::max(1.0, std::abs(s))) return s;
      prev = s;
    }
    return prev;
  }
  if (d == 3) {
    double prev = 0.0;
    for (int n = 32; n <= 2048; n *= 2) {
      // equal-area product grid: z uniform, azimuth uniform
      int nz = n, na = 2 * n;
      double s = 0.0;
      for (int i = 0; i < nz; ++i) {
        double z = -1.0 + 2.0 * (i + 0.5) / nz;
        double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        double row = 0.0;
        for (int k = 0; k < na; ++k) {
          double t = 2.0 * PI * (k + 0.5) / na;
          row += f(Vec{rho * std::cos(t), rho * std::sin(t), z});
        }
        s += row;
      }
      s *= 4.0 * PI / (static_cast<double>(nz) * na);
      if (n > 32 && std::abs(s - prev) <= tol * std::max(1.0, std::abs(s))) return s;
      prev = s;
    }
    return prev;
  }
  throw std::invalid_argument("sphere_integral: d must be 2 or 3");
}

double KernelStats::tail(double R) const {
  if (R <= 0.0) return 1.0;
  const RadialProfile& j = kernel->j;
  int d = kernel->d;
  double w = R < 1.0 ? j.moment(R, 1.0, d) + j.moment(1.0, INF, d - 1)
                     : j.moment(R, INF, d - 1);
  double t = c_g * w / c_phi;
  return std::min(1.0, std::max(0.0, t));
}

KernelStats compute_stats(const Kernel& k, double tol) {
  KernelStats s;
  s.kernel = &k;
  if (k.g.isotropic) {
    s.c_g = kappa(k.d - 1);
  } else {
    s.c_g = sphere_integral(k.d, k.g.eval, tol);
  }
  s.radial_weight = k.j.moment(0.0, 1.0, k.d) + k.j.moment(1.0, INF, k.d - 1);
  if (!std::isfinite(s.radial_weight) || s.radial_weight <= 0.0)
    throw std::domain_error("kernel not admissible: weighted radial integral diverges");
  s.c_phi = s.c_g * s.radial_weight;
  // closed-form moments are exact to round-off; numeric paths carry quad tol
  double rel = k.j.has_closed_moments() ? 1e-14 : 1e-9;
  if (!k.g.isotropic) rel += tol;
  s.c_phi_error = rel * s.c_phi;
  return s;
}

double tail_profile_integral(const RadialProfile& p, double R, int d) {
  if (R <= 0.0) throw std::invalid_argument("tail_profile_integral: R must be positive");
  double t = p.moment(R, INF, d - 1);
  if (!std::isfinite(t)) throw std::domain_error("divergent profile tail");
  return kappa(d - 1) * t;
}

RadialProfile fractional_profile(int d, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
  RadialProfile p;
  double expo = -(d + alpha);
  p.eval = [expo](double r) { return std::pow(r, expo); };
  p.beta = 1.0;
  p.singular_at_zero = true;
  p.id = "fractional:" + std::to_string(alpha);
  p.moment_closed = [expo](double a, double b, int m) {
    return power_integral(a, b, m + expo);
  };
  return p;
}

RadialProfile ball_indicator_profile() {
  RadialProfile p;
  p.eval = [](double r) { return r <= 1.0 ? 1.0 : 0.0; };
  p.beta = 1.0;
  p.support_radius = 1.0;
  p.singular_at_zero = false;
  p.id = "ball_indicator";
  p.moment_closed = [](double a, double b, int m) {
    return power_integral(a, std::min(b, 1.0), static_cast<double>(m));
  };
  return p;
}

RadialProfile regvar_profile(int d, bool log_factor) {
  RadialProfile p;
  int q = d + 1;
  if (log_factor) {
    p.eval = [q](double r) {
      double s = std::max(r, 1.0);
      return std::pow(s, -q) * std::log(std::exp(1.0) + s);
    };
  } else {
    p.eval = [q](double r) { return std::pow(std::max(r, 1.0), -q); };
    p.moment_closed = [q](double a, double b, int m) {
      double lo = std::min(a, 1.0), hi = std::min(b, 1.0);
      double head = hi > lo ? power_integral(lo, hi, static_cast<double>(m)) : 0.0;
      double a2 = std::max(a, 1.0);
      double tail = b > a2 ? power_integral(a2, b, static_cast<double>(m - q)) : 0.0;
      return head + tail;
    };
  }
  p.beta = 1.0;
  p.singular_at_zero = false;
  p.id = log_factor ? "regvar:log" : "regvar:1";
  return p;
}

RadialProfile rescaled_profile(const RadialProfile& base, int d, double epsilon, double scale) {
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
  RadialProfile p;
  RadialProfile b = base;
  double amp = scale * std::pow(epsilon, -d);
  p.eval = [b, epsilon, amp](double r) { return amp * b.eval(r / epsilon); };
  p.beta = base.beta;
  p.singular_at_zero = base.singular_at_zero;
  if (base.support_radius) p.support_radius = *base.support_radius * epsilon;
  p.id = base.id + "@eps=" + std::to_string(epsilon);
  // change of variables: integral r^m eps^{-d} j(r/eps) dr
  //   = scale * eps^{m+1-d} * integral s^m j(s) ds over [a/eps, b/eps]
  p.moment_closed = [b, d, epsilon, scale](double a, double bb, int m) {
    return scale * std::pow(epsilon, m + 1 - d) * b.moment(a / epsilon, bb / epsilon, m);
  };
  return p;
}

Anisotropy isotropic_anisotropy() {
  Anisotropy g;
  g.eval = [](const Vec&) { return 1.0; };
  g.sup = 1.0;
  g.isotropic = true;
  g.id = "isotropic";
  return g;
}

Anisotropy body_anisotropy(const ConvexBody& K, double exponent) {
  Anisotropy g;
  ConvexBody body = K;
  g.eval = [body, exponent](const Vec& theta) {
    return std::pow(body.gauge(theta), -exponent);
  };
  // gauge on the sphere is minimized at 1/r_out-ish directions; sup of gauge^-e
  g.sup = std::pow(1.0 / K.outer_radius(), -exponent);
  g.isotropic = false;
  g.id = "body:" + K.name() + "^-" + std::to_string(exponent);
  return g;
}

Kernel fractional_kernel(int d, double alpha) {
  Kernel k;
  k.d = d;
  k.g = isotropic_anisotropy();
  k.j = fractional_profile(d, alpha);
  k.id = "fractional:a=" + std::to_string(alpha) + ":d=" + std::to_string(d);
  return k;
}

Kernel anisotropic_fractional_kernel(int d, double alpha, const ConvexBody& K) {
  Kernel k;
  k.d = d;
  k.g = body_anisotropy(K, d + alpha);
  k.j = fractional_profile(d, alpha);
  k.id = "anisotropic:a=" + std::to_string(alpha) + ":" + K.name();
  return k;
}

double fractional_c_alpha(int d, double alpha) {
  return kappa(d - 1) * (1.0 / alpha + 1.0 / (1.0 - alpha));
}

KernelFamily make_family(FamilyKind kind, const FamilyParams& params) {
  KernelFamily fam;
  fam.kind = kind;
  fam.d = params.d;
  int d = params.d;
  switch (kind) {
    case FamilyKind::fractional: {
      fam.make = [d](double alpha) { return fractional_kernel(d, alpha); };
      fam.scaling_constant = [d](double alpha) { return fractional_c_alpha(d, alpha); };
      fam.id = "fractional";
      break;
    }
    case FamilyKind::anisotropic_fractional: {
      if (!params.body) throw std::invalid_argument("anisotropic family needs a body");
      ConvexBody K = *params.body;
      fam.make = [d, K](double alpha) { return anisotropic_fractional_kernel(d, alpha, K); };
      fam.scaling_constant = [d, K](double alpha) {
        Kernel k = anisotropic_fractional_kernel(d, alpha, K);
        return compute_stats(k).c_phi;
      };
      fam.id = "anisotropic:" + K.name();
      break;
    }
    case FamilyKind::rescaled: {
      RadialProfile base = params.base_profile ? *params.base_profile : ball_indicator_profile();
      fam.make = [d, base](double eps) {
        Kernel k;
        k.d = d;
        k.g = isotropic_anisotropy();
        k.j = rescaled_profile(base, d, eps);
        k.id = "rescaled:eps=" + std::to_string(eps);
        return k;
      };
      fam.scaling_constant = [d, base, fam_make = fam.make](double eps) {
        return compute_stats(fam_make(eps)).c_phi;
      };
      fam.id = "rescaled:" + base.id;
      break;
    }
    case FamilyKind::regularly_varying: {
      bool logf = params.log_factor;
      RadialProfile base = regvar_profile(d, logf);
      // psi_eps = eps^{-d} j(r/eps) / (eps * Lbar(1/eps)); for ell = 1 the
      // scaling constant is eps log(1/eps)
      auto lbar = [base, d](double R) {
        // integral over [1,R] of ell(s)/s ds with ell(s) = s^{d+1} j(s)
        auto f = [&](double s) { return std::pow(s, d + 1) * base.eval(s) / s; };
        return adaptive_simpson(f, 1.0, std::max(R, 1.0 + 1e-12), 1e-10);
      };
      fam.make = [d, base, lbar](double eps) {
        double norm = eps * lbar(1.0 / eps);
        Kernel k;
        k.d = d;
        k.g = isotropic_anisotropy();
        k.j = rescaled_profile(base, d, eps, 1.0 / norm);
        k.id = "regvar:eps=" + std::to_string(eps);
        return k;
      };
      if (logf) {
        fam.scaling_constant = [lbar](double eps) { return eps * lbar(1.0 / eps); };
      } else {
        fam.scaling_constant = [](double eps) { return eps * std::log(1.0 / eps); };
      }
      fam.id = logf ? "regvar:log" : "regvar:1";
      break;
    }
  }
  return fam;
}

}  // namespace curvkit
