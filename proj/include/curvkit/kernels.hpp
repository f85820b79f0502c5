#pragma once
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "convex_body.hpp"
#include "vec.hpp"

namespace curvkit {

// Radial profile j(r): non-negative, non-increasing, integrable against (1 ^ r^beta).
struct RadialProfile {
  std::function<double(double)> eval;
  double beta = 1.0;
  std::optional<double> support_radius;  // finite cutoff, if any
  bool singular_at_zero = true;
  std::string id = "profile";
  // Optional closed form for integral over [a,b] of r^m j(r) dr (b may be +inf).
  std::function<double(double, double, int)> moment_closed;

  // integral over [a,b] of r^m j(r) dr; adaptive quadrature when no closed form.
  double moment(double a, double b, int m) const;
  bool has_closed_moments() const { return static_cast<bool>(moment_closed); }
};

// Angular weight g on the unit sphere, even and continuous.
struct Anisotropy {
  std::function<double(const Vec&)> eval;
  double sup = 1.0;
  bool isotropic = true;
  std::string id = "isotropic";
};

struct Kernel {
  int d = 2;
  Anisotropy g;
  RadialProfile j;
  std::string id = "kernel";

  double operator()(const Vec& x) const;  // g(x/|x|) j(|x|); throws at x = 0
};

// Derived constants: C_phi = integral of (1 ^ |x|) phi, C_g = spherical mass of g,
// and the probability tail R -> lambda_phi(B_R complement).
struct KernelStats {
  double c_phi = 0.0;
  double c_g = 0.0;
  double c_phi_error = 0.0;
  double radial_weight = 0.0;  // integral of (1 ^ r) r^{d-1} j(r) dr
  const Kernel* kernel = nullptr;

  double tail(double R) const;  // lambda_phi(B_R^c) in [0,1]
};

KernelStats compute_stats(const Kernel& k, double tol = 1e-10);

// kappa_{d-1} * integral over [R,inf) of r^{d-1} j(r) dr: far-field truncation bound.
double tail_profile_integral(const RadialProfile& p, double R, int d);

// --- profile and kernel constructors -------------------------------------

RadialProfile fractional_profile(int d, double alpha);          // r^{-d-alpha}
RadialProfile ball_indicator_profile();                         // 1_{r<=1}
// (max(r,1))^{-d-1} * ell(max(r,1)); regularly varying with index -(d+1)
RadialProfile regvar_profile(int d, bool log_factor);
// epsilon^{-d} j(r/epsilon), optionally scaled by an overall constant
RadialProfile rescaled_profile(const RadialProfile& base, int d, double epsilon, double scale = 1.0);

Anisotropy isotropic_anisotropy();
Anisotropy body_anisotropy(const ConvexBody& K, double exponent);  // ||theta||_K^{-exponent}

Kernel fractional_kernel(int d, double alpha);
Kernel anisotropic_fractional_kernel(int d, double alpha, const ConvexBody& K);

// --- families -------------------------------------------------------------

enum class FamilyKind { fractional, anisotropic_fractional, rescaled, regularly_varying };

struct KernelFamily {
  FamilyKind kind = FamilyKind::fractional;
  int d = 2;
  std::function<Kernel(double)> make;              // index: alpha or epsilon
  std::function<double(double)> scaling_constant;  // C used for normalized limits
  std::string id = "family";
};

struct FamilyParams {
  int d = 2;
  std::optional<ConvexBody> body;               // anisotropic_fractional
  std::optional<RadialProfile> base_profile;    // rescaled (default: ball indicator)
  bool log_factor = false;                      // regularly_varying ell = log(e+r)
};

KernelFamily make_family(FamilyKind kind, const FamilyParams& params);

// Closed-form C_alpha = kappa_{d-1} (1/alpha + 1/(1-alpha)) for the fractional kernel.
double fractional_c_alpha(int d, double alpha);

// Integral of f over the unit sphere S^{d-1}, refined until the relative change
// drops below tol.
double sphere_integral(int d, const std::function<double(const Vec&)>& f, double tol = 1e-9);

}  // namespace curvkit
