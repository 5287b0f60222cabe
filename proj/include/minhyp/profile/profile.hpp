#pragma once

#include <array>
#include <cmath>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "minhyp/profile/spline.hpp"

namespace minhyp::profile {

struct ProfileError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Which power of the height enters the r-term of the catenary equation
/// g g'' + 3 r g^p + 2 g'^2 - 2 delta = 0. `quadratic` (p = 2) is the
/// equation whose rotation hypersurfaces in Q^4(r) are minimal; `printed`
/// (p = 1) is the literal transcription and agrees with it only for r = 0.
enum class CatenaryForm { quadratic, printed };

struct CatenaryParams {
  double r = 0;
  int delta = 1;  ///< -1, 0 or 1
  double gamma0 = 1;
  double dgamma0 = 0;
  CatenaryForm form = CatenaryForm::quadratic;
};

/// g''(s) forced by the catenary equation at (g, g').
double catenary_rhs(const CatenaryParams& p, double g, double dg);
/// Left side of the catenary equation.
double catenary_residual(const CatenaryParams& p, double g, double dg, double ddg);

struct HeightSample {
  double s, g, dg, ddg;
};

/// Height function on a uniform grid with first and second derivatives.
struct HeightFunction {
  std::vector<HeightSample> samples;
  double step = 0;
  bool truncated = false;
  std::string flag;

  double s_begin() const { return samples.front().s; }
  double s_end() const { return samples.back().s; }
  /// Quintic Hermite interpolation between samples.
  HeightSample at(double s) const;
};

struct IntegrateOptions {
  /// Integration stops (truncated = true) once |g| falls below this.
  double floor = 1e-6;
};

/// Classical fourth-order Runge-Kutta for (g, g') with a fixed step. The
/// step is adjusted to divide [s0, s1] evenly.
HeightFunction integrate_catenary(const CatenaryParams& p, double s0, double s1, double step,
                                  const IntegrateOptions& opts = {});

/// Max catenary residual over interior nodes with g'' taken from a
/// fourth-order central difference of the sampled g'; independent of the
/// g'' the integrator stored.
double a_posteriori_residual(const CatenaryParams& p, const HeightFunction& h);

struct RichardsonReport {
  double diff_h = 0;   ///< max |g_h - g_{h/2}| on the coarse nodes
  double diff_h2 = 0;  ///< max |g_{h/2} - g_{h/4}| on the coarse nodes
  double order = 0;    ///< log2(diff_h / diff_h2)
  double estimate = 0; ///< diff_h2 / 15, error estimate of the h/4 solution
};
RichardsonReport richardson_check(const CatenaryParams& p, double s0, double s1, double step);

/// g'' + c g = 0 in closed form.
struct HelixHeight {
  double c = 0, A = 0, B = 0;
  double g(double s) const;
  double dg(double s) const;
  double ddg(double s) const { return -c * g(s); }
  HeightFunction sample(double s0, double s1, double step) const;
};
HelixHeight helix_height(double c, double A, double B);

struct ProfileSample {
  double s;
  std::array<double, 3> p, dp, ddp;
  double theta, dtheta, ddtheta;  ///< angle (abscissa for k = 0) and its derivatives
};

/// Unit-speed curve on Q^2(k) inside R^3 (k >= 0) or R^3_1 (k < 0), with the
/// height function as first coordinate.
struct ProfileCurve {
  double k = 0;
  int eps0 = 0;                         ///< 0 for k >= 0, 1 for k < 0
  std::array<double, 3> eta{1, 1, 1};   ///< signature of the flat 3-space
  std::vector<ProfileSample> samples;
  bool truncated = false;
  std::string flag;

  double inner(const std::array<double, 3>& a, const std::array<double, 3>& b) const {
    return eta[0] * a[0] * b[0] + eta[1] * a[1] * b[1] + eta[2] * a[2] * b[2];
  }
  double s_begin() const { return samples.front().s; }
  double s_end() const { return samples.back().s; }
  HermiteSpline<3> spline() const;
};

struct ReconstructOptions {
  /// Truncate where the rotation radius w of the remaining coordinates drops below this.
  double floor = 1e-6;
  /// Radicands below this give zero angular speed. A meridian has radicand 0
  /// identically and its rounding noise must not reach the angle.
  double flat_radicand = 1e-10;
  /// Radicands in [-radicand_tol, 0) are treated as 0. Interpolated
  /// derivatives carry rounding of order eps / step, so this sits well above
  /// 1e-13 for the default step.
  double radicand_tol = 1e-9;
};

/// k > 0: (g, w cos th, w sin th) with g^2 + w^2 = 1/k.
/// k < 0: (g, w cosh th, w sinh th) in signature (+, -, +) with g^2 - w^2 = 1/k.
/// k = 0: (g, x, 0) with x' = sqrt(1 - g'^2).
/// The height between nodes is the nodal interpolant of the node heights, and
/// th (or x) is its unit-speed angle, integrated per segment by three-point
/// Gauss-Legendre quadrature. A negative radicand or a collapsing radius
/// truncates the curve and sets the flag. Needs at least six samples.
ProfileCurve reconstruct_on_spaceform(const HeightFunction& h, double k, const ReconstructOptions& opts = {});

/// Evaluates a reconstructed curve between its nodes on double or Jet: the
/// height from the nodal interpolant, the angle from a quintic Hermite fit of
/// (th, th', th''), the remaining radius from the quadric. Derivatives of the
/// result are consistent with one smooth curve, so curvature computed from
/// them converges at the order of the node data.
class ProfileEvaluator {
 public:
  explicit ProfileEvaluator(const ProfileCurve& curve);

  double s_begin() const { return height_.begin(); }
  double s_end() const { return height_.end(); }

  template <class T>
  std::array<T, 3> operator()(const T& s) const {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    using std::sqrt;
    T g = height_(s)[0];
    T th = angle_(s)[0];
    if (k_ == 0) return {g, th, T(0.0)};
    if (k_ > 0) {
      T w = sqrt(1 / k_ - g * g);
      return {g, w * cos(th), w * sin(th)};
    }
    T w = sqrt(g * g - 1 / k_);
    return {g, w * cosh(th), w * sinh(th)};
  }

 private:
  double k_ = 0;
  NodalSpline<1> height_;
  HermiteSpline<1> angle_;
};

struct ProfileInvariants {
  double quadric = 0;     ///< max |<b,b> - 1/k| (0 for k = 0)
  double unit_speed = 0;  ///< max |<b',b'> - 1|
  double height = 0;      ///< max |b_1 - g|
};
ProfileInvariants profile_invariants(const ProfileCurve& curve, const HeightFunction& h);

/// s,gamma,dgamma,beta1,beta2,beta3 with a header row.
void write_profile_csv(std::ostream& os, const ProfileCurve& curve, const HeightFunction& h);
void write_profile_csv(const std::filesystem::path& path, const ProfileCurve& curve, const HeightFunction& h);

}  // namespace minhyp::profile
