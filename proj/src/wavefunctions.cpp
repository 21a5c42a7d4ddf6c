#include "cosmicsusy/wavefunctions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cosmicsusy/errors.hpp"
#include "cosmicsusy/special_functions.hpp"

namespace cosmicsusy {

namespace {

void require_positive_x(double x, const char* where) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(where) + ": requires finite x > 0");
}

// u = exp(log_scale) * S(x), where exp(log_scale) = x^p e^{-kappa x^2} times a
// constant. s is its logarithmic derivative and pp its second derivative
// over itself.
Jet assemble(double log_scale, double p, double kappa, double x, double S,
             double S1, double S2) {
  const double s = p / x - 2.0 * kappa * x;
  const double pp = p * (p - 1.0) / (x * x) - 2.0 * kappa * (2.0 * p + 1.0) +
                    4.0 * kappa * kappa * x * x;
  Jet j;
  j.log_scale = log_scale;
  j.value = S;
  j.d1 = S1 + s * S;
  j.d2 = S2 + 2.0 * s * S1 + pp * S;
  j.d2_bound = std::abs(S2) + 2.0 * std::abs(s * S1) + std::abs(pp * S);
  return j;
}

double oscillator_log_norm(double omega, double ell, int n) {
  return 0.5 * (std::log(2.0) + std::lgamma(n + 1.0) -
                std::lgamma(n + ell + 1.5) + (ell + 1.5) * std::log(0.5 * omega));
}

void require_oscillator(double omega, double ell, int n) {
  if (!(omega > 0.0)) throw ParameterError("oscillator state needs omega > 0");
  if (n < 0) throw ParameterError("oscillator state needs n >= 0");
  if (!(ell > -1.5))
    throw ParameterError("non-normalizable channel: ell = " + std::to_string(ell) +
                         " is not > -3/2");
}

}  // namespace

RadialGrid::RadialGrid(Eigen::ArrayXd points) : points_(std::move(points)) {
  if (points_.size() < 16) throw ShapeError("RadialGrid: need at least 16 points");
  for (Eigen::Index i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_(i)) || !(points_(i) > 0.0))
      throw ShapeError("RadialGrid: points must be finite and > 0");
    if (i > 0 && !(points_(i) > points_(i - 1)))
      throw ShapeError("RadialGrid: points must be strictly increasing");
  }
}

RadialGrid RadialGrid::uniform(double lo, double hi, Eigen::Index count) {
  return RadialGrid(Eigen::ArrayXd::LinSpaced(count, lo, hi));
}

bool RadialGrid::operator==(const RadialGrid& other) const {
  return points_.size() == other.points_.size() &&
         (points_ == other.points_).all();
}

double Jet::u() const {
  if (value == 0.0) return 0.0;
  return std::exp(log_scale) * value;
}

Jet radial_oscillator_jet(double omega, double ell, int n, double x) {
  require_oscillator(omega, ell, n);
  require_positive_x(x, "radial_oscillator_jet");
  const double lambda = ell + 0.5;
  const double z = 0.5 * omega * x * x;
  const auto L = laguerre_jet<double>(n, lambda, z);
  const double zx = omega * x;
  const double log_scale = oscillator_log_norm(omega, ell, n) +
                           (ell + 1.0) * std::log(x) - 0.25 * omega * x * x;
  return assemble(log_scale, ell + 1.0, 0.25 * omega, x, L.value, L.d1 * zx,
                  L.d2 * zx * zx + L.d1 * omega);
}

Jet u11_jet(const StringParams& p, double ell1, int n, double x, Branch branch) {
  p.require_bound_states();
  const double ell = branch == Branch::L1 ? ell1 : -1.0 - ell1;
  return radial_oscillator_jet(p.omega(), ell, n, x);
}

double u11(const StringParams& p, double ell1, int n, double x, Branch branch) {
  return u11_jet(p, ell1, n, x, branch).u();
}

double x_to_r(double x, double M) { return x / std::sqrt(2.0 * M); }

WaveSample psi_from_u(const WaveSample& u, double M) {
  if (!(M > 0.0)) throw ParameterError("psi_from_u: M must be > 0");
  const Eigen::ArrayXd r = u.grid.points() / std::sqrt(2.0 * M);
  return {u.grid, u.values / r.sqrt(), false};
}

double radial_equation_residual(const RealFunction& potential, double eps_sq,
                                const JetFunction& u, double x) {
  require_positive_x(x, "radial_equation_residual");
  const Jet j = u(x);
  const double V = potential(x);
  const double scale =
      std::max({j.d2_bound, std::abs(j.d2), std::abs(V * j.value),
                std::abs(eps_sq * j.value)});
  if (scale == 0.0) return 0.0;
  return (-j.d2 + (V - eps_sq) * j.value) / scale;
}

double radial_equation_residual(const Channel& channel, double eps_sq,
                                const JetFunction& u, double x) {
  return radial_equation_residual(
      [&channel](double y) { return channel.potential(y); }, eps_sq, u, x);
}

double apply_raising(const StringParams& p, double ell1, double c,
                     const JetFunction& u, double x) {
  require_positive_x(x, "apply_raising");
  const double f = x * x + c;
  if (f == 0.0) throw SingularityError("raising operator", x);
  const double W = (ell1 + 1.0) / x + p.B * p.e / (4.0 * p.M) * x - 2.0 * x / f;
  const Jet j = u(x);
  const double v = -j.d1 + W * j.value;
  if (v == 0.0) return 0.0;
  return std::exp(j.log_scale) * v;
}

Jet u12_isotonic_scaled(const StringParams& p, double ell1, int n, double c,
                        double x) {
  p.require_bound_states();
  require_oscillator(p.omega(), ell1, n);
  require_positive_x(x, "u12_isotonic");
  const double f = x * x + c;
  if (f == 0.0) throw SingularityError("isotonic partner state", x);
  const double omega = p.omega();
  const double z = 0.5 * omega * x * x;
  const double lambda = ell1 + 0.5;
  const double bracket =
      (2.0 * n + 2.0 * ell1 + 1.0) * laguerre<double>(n, lambda, z) -
      2.0 * (n + 1.0) * laguerre<double>(n + 1, lambda, z) +
      omega * c * laguerre<double>(n, lambda + 1.0, z);
  Jet j;
  j.log_scale = oscillator_log_norm(omega, ell1, n) + (ell1 + 2.0) * std::log(x) -
                0.25 * omega * x * x;
  j.value = bracket / f;
  j.d1 = j.d2 = j.d2_bound = std::numeric_limits<double>::quiet_NaN();
  return j;
}

double u12_isotonic(const StringParams& p, double ell1, int n, double c, double x) {
  return u12_isotonic_scaled(p, ell1, n, c, x).u();
}

double reconstruct_vm_at(const StringParams& p, double alpha_prime, int codim_m,
                         double x, bool allow_inadmissible) {
  p.require_bound_states();
  require_positive_x(x, "reconstruct_vm");
  if (codim_m < 0) throw ParameterError("reconstruct_vm: codim_m must be >= 0");
  if (!(alpha_prime > 0.0) && !allow_inadmissible)
    throw ParameterError("reconstruct_vm: alpha' must be > 0");
  const double C = p.B * p.e / p.M;
  const double g = 0.25 * C * x * x;
  const double g1 = 0.5 * C * x, g2 = 0.5 * C, g3 = 0.0;
  const auto phi = laguerre_reflected_jet<double>(codim_m, alpha_prime - 1.0, g);
  if (phi.value == 0.0) throw SingularityError("exceptional potential", x);
  const double r = phi.d1 / phi.value;
  const double dr = phi.d2 / phi.value - r * r;
  const double Q = (alpha_prime + 1.0) / g - 1.0 - 2.0 * r;
  const double dQ = -(alpha_prime + 1.0) / (g * g) - 2.0 * dr;
  const double R = (codim_m - 2.0 * alpha_prime * r) / g;
  const double schwarz = 0.5 * g3 / g1 - 0.75 * (g2 / g1) * (g2 / g1);
  return -(schwarz + g1 * g1 * (R - 0.5 * dQ - 0.25 * Q * Q));
}

double reconstruct_vm(const StringParams& p, double ell2, int codim_m, double x) {
  return reconstruct_vm_at(p, exceptional_alpha_prime(ell2, AlphaPolicy::Literal),
                           codim_m, x);
}

Jet u12_exceptional_jet(const StringParams& p, double alpha_prime, int n,
                        int codim_m, double x, GaussianConvention conv) {
  p.require_bound_states();
  require_positive_x(x, "u12_exceptional");
  if (n < 0) throw ParameterError("u12_exceptional: n must be >= 0");
  const XmParams xp{codim_m, alpha_prime, n + codim_m};
  xp.validate();
  const double C = p.B * p.e / p.M;
  const double beta = conv == GaussianConvention::Standard ? 0.25 * C : 0.125 * C;
  const double h = beta * x * x;
  const double h1 = 2.0 * beta * x, h2 = 2.0 * beta;

  const auto X = xm_jet(xp, h);
  const auto phi = laguerre_reflected_jet<double>(codim_m, alpha_prime - 1.0, h);
  if (phi.value == 0.0) throw SingularityError("exceptional state", x);
  const double S = X.value / phi.value;
  const double r = phi.d1 / phi.value;
  const double Sh = X.d1 / phi.value - S * r;
  const double Shh = X.d2 / phi.value - 2.0 * (X.d1 / phi.value) * r -
                     S * (phi.d2 / phi.value) + 2.0 * S * r * r;

  const double log_norm =
      -0.5 * (std::log(0.5) + (alpha_prime + 1.0) * std::log(4.0 / C) +
              std::log(xm_norm(xp)));
  const double p_exp = alpha_prime + 0.5;
  const double kappa = 0.5 * beta;
  const double log_scale = log_norm + p_exp * std::log(x) - kappa * x * x;
  return assemble(log_scale, p_exp, kappa, x, S, Sh * h1, Shh * h1 * h1 + Sh * h2);
}

double u12_exceptional(const StringParams& p, double ell2, int n, int codim_m,
                       double x, AlphaPolicy policy) {
  const double ap = exceptional_alpha_prime(ell2, policy);
  if (!(ap > 0.0))
    throw ParameterError("exceptional channel not admissible: alpha' = " +
                         std::to_string(ap));
  return u12_exceptional_jet(p, ap, n, codim_m, x).u();
}

double quadrature_norm(const JetFunction& u, double tol) {
  auto f = [&u](double x) {
    if (!(x > 0.0)) return 0.0;
    const Jet j = u(x);
    if (j.value == 0.0) return 0.0;
    const double w = std::exp(2.0 * j.log_scale);
    if (w == 0.0) return 0.0;
    return w * j.value * j.value;
  };
  return integrate(f, 0.0, std::numeric_limits<double>::infinity(), tol).value;
}

WaveSample sample(const JetFunction& u, const RadialGrid& grid, bool normalized) {
  Eigen::ArrayXd v(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) v(i) = u(grid.points()(i)).u();
  return {grid, v, normalized};
}

double trapezoid_norm(const WaveSample& u) {
  const auto& x = u.grid.points();
  const Eigen::ArrayXd sq = u.values.square();
  const Eigen::Index n = x.size();
  const Eigen::ArrayXd dx = x.tail(n - 1) - x.head(n - 1);
  return 0.5 * (dx * (sq.tail(n - 1) + sq.head(n - 1))).sum();
}

WaveSample probability_density(const WaveSample& u11_s, const WaveSample& u12_s) {
  if (!(u11_s.grid == u12_s.grid) || u11_s.values.size() != u12_s.values.size())
    throw ShapeError("probability_density: samples are on different grids");
  return {u11_s.grid, u11_s.values.square() + u12_s.values.square(), false};
}

}  // namespace cosmicsusy
