#pragma once

#include <cmath>
#include <span>

#include "cosmicsusy/errors.hpp"
#include "cosmicsusy/numerics.hpp"

namespace cosmicsusy {

// Degree and order of a generalized Laguerre polynomial L_n^{alpha}.
struct PolyIndex {
  int n = 0;
  double alpha = 0.0;
};

// L_n^{alpha}(x) by the upward three-term recurrence. Negative degree is the
// zero polynomial, which keeps the derivative and contiguous identities valid
// at the bottom of the ladder.
template <typename Scalar>
Scalar laguerre(int n, const Scalar& alpha, const Scalar& x) {
  if (n < 0) return Scalar(0);
  Scalar prev(1);
  if (n == 0) return prev;
  Scalar cur = Scalar(1) + alpha - x;
  for (int k = 1; k < n; ++k) {
    Scalar next =
        ((Scalar(2 * k + 1) + alpha - x) * cur - (Scalar(k) + alpha) * prev) /
        Scalar(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

// d/dx L_n^{alpha}(x) = -L_{n-1}^{alpha+1}(x)
template <typename Scalar>
Scalar laguerre_derivative(int n, const Scalar& alpha, const Scalar& x) {
  return -laguerre<Scalar>(n - 1, alpha + Scalar(1), x);
}

// Value with first and second derivative in the polynomial's own variable.
template <typename Scalar>
struct PolyJet {
  Scalar value{};
  Scalar d1{};
  Scalar d2{};
};

template <typename Scalar>
PolyJet<Scalar> laguerre_jet(int n, const Scalar& alpha, const Scalar& x) {
  return {laguerre<Scalar>(n, alpha, x),
          -laguerre<Scalar>(n - 1, alpha + Scalar(1), x),
          laguerre<Scalar>(n - 2, alpha + Scalar(2), x)};
}

// Jet of g -> L_n^{alpha}(-g), derivatives taken with respect to g.
template <typename Scalar>
PolyJet<Scalar> laguerre_reflected_jet(int n, const Scalar& alpha,
                                       const Scalar& g) {
  return {laguerre<Scalar>(n, alpha, -g),
          laguerre<Scalar>(n - 1, alpha + Scalar(1), -g),
          laguerre<Scalar>(n - 2, alpha + Scalar(2), -g)};
}

double laguerre_eval(const PolyIndex& idx, double x);
double laguerre_deriv(const PolyIndex& idx, double x);

// L_n^a - L_{n-1}^a - L_n^{a-1}; vanishes identically. Requires n >= 1.
double laguerre_contiguous_residual(const PolyIndex& idx, double x);

// Exceptional X_m Laguerre family L_{n,m}^{alpha'}: codimension m, order
// alpha' > 0, degree n >= m.
struct XmParams {
  int codim_m = 0;
  double alpha_prime = 1.0;
  int n = 0;

  // Throws ParameterError unless m >= 0, n >= m and alpha' > 0.
  void validate() const;
};

// L_m^{a'}(-g) L_{n-m}^{a'-1}(g) + L_m^{a'-1}(-g) L_{n-m-1}^{a'}(g)
double xm_eval(const XmParams& p, double g);

// Value and analytic g-derivatives of xm_eval.
PolyJet<double> xm_jet(const XmParams& p, double g);

// g^{a'} e^{-g} / (L_m^{a'-1}(-g))^2, g > 0.
double xm_weight(const XmParams& p, double g);

// Squared weighted norm (a'+n) Gamma(a'+n-m) / (n-m)!.
double xm_norm(const XmParams& p);

// Residual of the X_m Sturm-Liouville equation
//   L'' + F(g) L' + G(g; k) L = 0,
//   F = ((a'+1-g) - 2g r) / g,  G = (k - 2a' r) / g,  r = L_{m-1}^{a'}(-g) / L_m^{a'-1}(-g)
// relative to the largest of the three terms. k is the eigenvalue integer
// under test.
double xm_ode_residual(const XmParams& p, double g, int eigen_candidate);

// Eigenvalue integer of the X_m equation. Residual calibration over
// candidates {n, n-m} selects the polynomial degree n for every (n, m, a')
// tested, so this returns n.
int xm_eigenvalue(const XmParams& p);

// Picks, among {n, n-m}, the candidate with the smallest max residual over
// the supplied grid (g > 0).
int calibrate_xm_eigenvalue(const XmParams& p, std::span<const double> grid);

// Weighted overlap of L_{n,m} and L_{k,m} over (0, inf). Throws
// NumericalError if the quadrature does not reach tol.
QuadratureResult xm_orthogonality_integral(const XmParams& p, int k,
                                           double tol = 1e-12);

}  // namespace cosmicsusy
