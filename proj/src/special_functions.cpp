#include "cosmicsusy/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cosmicsusy {

namespace {

void require_finite(double x, const char* where) {
  if (!std::isfinite(x)) throw DomainError(std::string(where) + ": non-finite argument");
}

PolyJet<double> product(const PolyJet<double>& a, const PolyJet<double>& b) {
  return {a.value * b.value, a.d1 * b.value + a.value * b.d1,
          a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2};
}

}  // namespace

double laguerre_eval(const PolyIndex& idx, double x) {
  require_finite(x, "laguerre_eval");
  return laguerre<double>(idx.n, idx.alpha, x);
}

double laguerre_deriv(const PolyIndex& idx, double x) {
  require_finite(x, "laguerre_deriv");
  return laguerre_derivative<double>(idx.n, idx.alpha, x);
}

double laguerre_contiguous_residual(const PolyIndex& idx, double x) {
  if (idx.n < 1)
    throw ParameterError("laguerre_contiguous_residual: requires n >= 1");
  require_finite(x, "laguerre_contiguous_residual");
  return laguerre<double>(idx.n, idx.alpha, x) -
         laguerre<double>(idx.n - 1, idx.alpha, x) -
         laguerre<double>(idx.n, idx.alpha - 1.0, x);
}

void XmParams::validate() const {
  if (codim_m < 0) throw ParameterError("XmParams: codim_m must be >= 0");
  if (n < codim_m) throw ParameterError("XmParams: n must be >= codim_m");
  if (!(alpha_prime > 0.0))
    throw ParameterError("XmParams: alpha_prime must be > 0");
}

PolyJet<double> xm_jet(const XmParams& p, double g) {
  p.validate();
  require_finite(g, "xm_jet");
  const int m = p.codim_m;
  const double ap = p.alpha_prime;
  const auto first = product(laguerre_reflected_jet<double>(m, ap, g),
                             laguerre_jet<double>(p.n - m, ap - 1.0, g));
  const auto second = product(laguerre_reflected_jet<double>(m, ap - 1.0, g),
                              laguerre_jet<double>(p.n - m - 1, ap, g));
  return {first.value + second.value, first.d1 + second.d1,
          first.d2 + second.d2};
}

double xm_eval(const XmParams& p, double g) {
  p.validate();
  require_finite(g, "xm_eval");
  const int m = p.codim_m;
  const double ap = p.alpha_prime;
  return laguerre<double>(m, ap, -g) * laguerre<double>(p.n - m, ap - 1.0, g) +
         laguerre<double>(m, ap - 1.0, -g) *
             laguerre<double>(p.n - m - 1, ap, g);
}

double xm_weight(const XmParams& p, double g) {
  p.validate();
  if (!(g > 0.0) || !std::isfinite(g))
    throw DomainError("xm_weight: requires finite g > 0");
  const double phi = laguerre<double>(p.codim_m, p.alpha_prime - 1.0, -g);
  return std::exp(p.alpha_prime * std::log(g) - g) / (phi * phi);
}

double xm_norm(const XmParams& p) {
  p.validate();
  const double ap = p.alpha_prime;
  const int k = p.n - p.codim_m;
  return (ap + p.n) * std::exp(std::lgamma(ap + k) - std::lgamma(k + 1.0));
}

double xm_ode_residual(const XmParams& p, double g, int eigen_candidate) {
  p.validate();
  if (!(g > 0.0) || !std::isfinite(g))
    throw DomainError("xm_ode_residual: requires finite g > 0");
  const int m = p.codim_m;
  const double ap = p.alpha_prime;
  const double r = laguerre<double>(m - 1, ap, -g) /
                   laguerre<double>(m, ap - 1.0, -g);
  const double F = ((ap + 1.0 - g) - 2.0 * g * r) / g;
  const double G = (eigen_candidate - 2.0 * ap * r) / g;
  const auto L = xm_jet(p, g);
  const double t0 = L.d2, t1 = F * L.d1, t2 = G * L.value;
  const double scale = std::max({std::abs(t0), std::abs(t1), std::abs(t2),
                                 std::numeric_limits<double>::min()});
  return (t0 + t1 + t2) / scale;
}

int xm_eigenvalue(const XmParams& p) {
  p.validate();
  return p.n;
}

int calibrate_xm_eigenvalue(const XmParams& p, std::span<const double> grid) {
  p.validate();
  if (grid.empty()) throw ParameterError("calibrate_xm_eigenvalue: empty grid");
  auto worst = [&](int k) {
    double w = 0.0;
    for (double g : grid) w = std::max(w, std::abs(xm_ode_residual(p, g, k)));
    return w;
  };
  const int a = p.n, b = p.n - p.codim_m;
  if (a == b) return a;
  return worst(a) <= worst(b) ? a : b;
}

QuadratureResult xm_orthogonality_integral(const XmParams& p, int k,
                                           double tol) {
  p.validate();
  XmParams q = p;
  q.n = k;
  q.validate();
  const double scale = std::sqrt(xm_norm(p) * xm_norm(q));
  auto f = [&](double g) {
    if (g <= 0.0) return 0.0;
    const double w = xm_weight(p, g);
    if (w == 0.0) return 0.0;
    return xm_eval(p, g) * xm_eval(q, g) * w;
  };
  return integrate(f, 0.0, std::numeric_limits<double>::infinity(),
                   QuadratureOptions{tol * scale, tol, 4000});
}

}  // namespace cosmicsusy
