#pragma once

// Independent reference implementations used only by tests. None of these
// share code with the library.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

// Explicit finite series sum_k binom(n+a, n-k) (-x)^k / k!, in long double.
inline long double laguerre_series(int n, long double a, long double x) {
  if (n < 0) return 0.0L;
  long double sum = 0.0L;
  for (int k = 0; k <= n; ++k) {
    long double binom = 1.0L;
    for (int j = 1; j <= n - k; ++j) binom *= (a + k + j) / j;
    long double term = binom;
    for (int j = 1; j <= k; ++j) term *= -x / j;
    sum += term;
  }
  return sum;
}

// Lanczos approximation, g = 7, nine coefficients.
inline double lanczos_gamma(double z) {
  static const double c[] = {0.99999999999980993,  676.5203681218851,
                             -1259.1392167224028,  771.32342877765313,
                             -176.61502916214059,  12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6,
                             1.5056327351493116e-7};
  if (z < 0.5) return M_PI / (std::sin(M_PI * z) * lanczos_gamma(1.0 - z));
  z -= 1.0;
  double x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// X_m built from the series oracle: the two-product form with reflected
// arguments on the codimension factors.
inline long double xm_series(int m, long double ap, int n, long double g) {
  return laguerre_series(m, ap, -g) * laguerre_series(n - m, ap - 1.0L, g) +
         laguerre_series(m, ap - 1.0L, -g) * laguerre_series(n - m - 1, ap, g);
}

inline double central_difference(const std::function<double(double)>& f, double x,
                                 double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Central difference with one Richardson step, O(h^4).
inline double richardson_derivative(const std::function<double(double)>& f, double x,
                                    double h) {
  return (4.0 * central_difference(f, x, 0.5 * h) - central_difference(f, x, h)) / 3.0;
}

inline double second_difference(const std::function<double(double)>& f, double x,
                                double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// Lowest k eigenvalues of the same three-point Dirichlet discretization,
// computed densely.
inline std::vector<double> dense_fd_eigen(const std::function<double(double)>& V,
                                          double lo, double hi, int n, int k) {
  const double h = (hi - lo) / (n + 1);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    H(i, i) = 2.0 / (h * h) + V(lo + (i + 1) * h);
    if (i + 1 < n) H(i, i + 1) = H(i + 1, i) = -1.0 / (h * h);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + k);
  return out;
}

// Quantization residual assembled by hand from the channel data:
// (E^2 - M^2) - omega (2n + ell + 3/2) - shift, with ell = -1 - l1 and
// shift = -omega (l1 + 3/2), l1 = (1 + 2m - 2 alpha + 2 a E - 2 Phi)/(2 alpha).
inline double quantization_residual(double alpha, double a, double B, double Phi,
                                    double M, double e, int m, int n, double E) {
  const double l1 = (1.0 + 2.0 * m - 2.0 * alpha + 2.0 * a * E - 2.0 * Phi) / (2.0 * alpha);
  const double omega = B * e / (2.0 * M);
  const double ell = -1.0 - l1;
  return (E * E - M * M) - omega * (2.0 * n + ell + 1.5) + omega * (l1 + 1.5);
}

// Sign changes of a sampled function, ignoring exact zeros.
inline int sign_changes(const std::vector<double>& v) {
  int count = 0;
  double last = 0.0;
  for (double y : v) {
    if (y == 0.0) continue;
    if (last != 0.0 && (y > 0.0) != (last > 0.0)) ++count;
    last = y;
  }
  return count;
}

}  // namespace oracle
