#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

namespace cosmicsusy {

using RealFunction = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double achieved_tolerance = 0.0;
  int evaluations = 0;
  int subdivisions = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
};

// One 15-point Kronrod panel on [a, b] with its embedded 7-point Gauss value.
struct KronrodPanel {
  double kronrod = 0.0;
  double gauss = 0.0;
};
KronrodPanel gauss_kronrod15(const RealFunction& f, double a, double b);

// Globally adaptive Gauss-Kronrod (G7/K15). hi may be +infinity, in which
// case the tail is mapped onto [0, 1) by x = lo + t / (1 - t). Converges when
// the summed |K15 - G7| estimate drops below max(abs_tol, rel_tol |I|).
// Throws NumericalError with the best estimate if the subdivision budget runs
// out.
QuadratureResult integrate(const RealFunction& f, double lo, double hi,
                           const QuadratureOptions& opts);
QuadratureResult integrate(const RealFunction& f, double lo, double hi,
                           double tol);

// Brent's bracketed root finder. Requires f(lo) f(hi) <= 0; the returned
// point sits in a final bracket no wider than tol.
double brent_root(const RealFunction& f, double lo, double hi, double tol,
                  int max_iter = 200);

// Golden-section minimiser on [lo, hi]; returns the abscissa.
double golden_minimize(const RealFunction& f, double lo, double hi, double tol,
                       int max_iter = 200);

// All roots of f in [lo, hi]: uniform sign scan over `samples` panels, Brent
// refinement of each sign change, and a split at interior extrema so that
// pairs of roots closer than one panel are still found. Sorted ascending.
std::vector<double> find_roots(const RealFunction& f, double lo, double hi,
                               int samples, double tol);

// Symmetric tridiagonal matrix: diag(0..n-1), off(0..n-2).
struct Tridiagonal {
  Eigen::VectorXd diag;
  Eigen::VectorXd off;
};

// Number of eigenvalues strictly below lambda (Sturm sequence).
int sturm_count(const Tridiagonal& t, double lambda);

// The k lowest eigenvalues, ascending, by Sturm-sequence bisection.
Eigen::VectorXd sturm_lowest_eigenvalues(const Tridiagonal& t, int k,
                                         double tol = 1e-12);

// -u'' + V(x) u on a uniform interior grid with Dirichlet walls at x_min and
// x_max. n_points counts interior nodes, so h = (x_max - x_min)/(n_points+1).
struct FDProblem {
  RealFunction potential;
  double x_min = 1e-3;
  double x_max = 20.0;
  int n_points = 1000;

  void validate() const;
  double spacing() const { return (x_max - x_min) / (n_points + 1); }
  // Same walls, half the spacing.
  FDProblem refined() const;
};

Tridiagonal fd_discretize(const FDProblem& prob);

// k lowest eigenvalues of the discretized operator; k <= n_points/4.
Eigen::VectorXd fd_hamiltonian_eigen(const FDProblem& prob, int k);

struct RichardsonEigen {
  Eigen::VectorXd coarse;
  Eigen::VectorXd fine;
  Eigen::VectorXd extrapolated;
};

// Eigenvalues on h and h/2 and the O(h^2) Richardson combination
// (4 fine - coarse) / 3.
RichardsonEigen fd_richardson(const FDProblem& prob, int k);

}  // namespace cosmicsusy
