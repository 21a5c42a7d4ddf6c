#pragma once

#include <functional>

#include <Eigen/Core>

#include "cosmicsusy/numerics.hpp"
#include "cosmicsusy/spectrum.hpp"
#include "cosmicsusy/string_model.hpp"

namespace cosmicsusy {

// Strictly increasing positive abscissae, at least 16 of them.
class RadialGrid {
 public:
  explicit RadialGrid(Eigen::ArrayXd points);
  static RadialGrid uniform(double lo, double hi, Eigen::Index count);

  const Eigen::ArrayXd& points() const { return points_; }
  Eigen::Index size() const { return points_.size(); }
  bool operator==(const RadialGrid& other) const;

 private:
  Eigen::ArrayXd points_;
};

struct WaveSample {
  RadialGrid grid;
  Eigen::ArrayXd values;
  bool normalized = false;
};

// u = exp(log_scale) * value, u' = exp(log_scale) * d1, u'' likewise.
// Keeping the scale apart lets residuals be formed where u itself underflows.
// d2_bound is the sum of magnitudes of the pieces that make up d2, used as
// the natural size of u'' near nodes.
struct Jet {
  double log_scale = 0.0;
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d2_bound = 0.0;

  double u() const;
};
using JetFunction = std::function<Jet(double)>;

// Unit-normalized oscillator state of -u'' + (ell(ell+1)/x^2 + omega^2 x^2/4) u
// with eigenvalue omega (2n + ell + 3/2):
//   N x^{ell+1} e^{-omega x^2/4} L_n^{ell+1/2}(omega x^2/2),
//   N^2 = 2 n! (omega/2)^{ell+3/2} / Gamma(n + ell + 3/2).
// Requires ell > -3/2 (square integrable).
Jet radial_oscillator_jet(double omega, double ell, int n, double x);

// v-channel state for ell1: branch L1 uses ell = ell1, NegL1 uses -1 - ell1.
Jet u11_jet(const StringParams& p, double ell1, int n, double x,
            Branch branch = Branch::L1);
double u11(const StringParams& p, double ell1, int n, double x,
           Branch branch = Branch::L1);

// x / sqrt(2M)
double x_to_r(double x, double M);

// psi = u / sqrt(r) with r = x / sqrt(2M).
WaveSample psi_from_u(const WaveSample& u, double M);

// (-u'' + (V - eps_sq) u) / max(|u''| size, |V u|, |eps_sq u|)
double radial_equation_residual(const RealFunction& potential, double eps_sq,
                                const JetFunction& u, double x);
double radial_equation_residual(const Channel& channel, double eps_sq,
                                const JetFunction& u, double x);

// (-d/dx + (ell1+1)/x + (Be/4M) x - 2x/(x^2+c)) u at x.
double apply_raising(const StringParams& p, double ell1, double c,
                     const JetFunction& u, double x);

// The raising operator applied to the unit-normalized L1-branch state u11(n)
// in closed form, z = Be x^2/4M:
//   N x^{l1+2} e^{-z/2} / (x^2+c) [ (2n+2l1+1) L_n^{l1+1/2}(z)
//     - 2(n+1) L_{n+1}^{l1+1/2}(z) + (Be c/2M) L_n^{l1+3/2}(z) ]
// Returned as exp(log_scale) * value (d1, d2 unset).
Jet u12_isotonic_scaled(const StringParams& p, double ell1, int n, double c,
                        double x);
double u12_isotonic(const StringParams& p, double ell1, int n, double c,
                    double x);

// V_m rebuilt from the point canonical transformation of the X_m equation,
//   V = -[ g'''/(2g') - 3g''^2/(4g'^2) + g'^2 (R - Q_g/2 - Q^2/4) ],
// with g = C x^2/4 and R taken at eigen integer m (the eps^2 = 0 level).
// Independent of exceptional_vm's closed form.
double reconstruct_vm_at(const StringParams& p, double alpha_prime, int codim_m,
                         double x, bool allow_inadmissible = false);
double reconstruct_vm(const StringParams& p, double ell2, int codim_m, double x);

// Gaussian and argument of the exceptional state: Standard is e^{-g/2} with
// argument g; Alternate is e^{-g/4} with argument g/2.
enum class GaussianConvention { Standard, Alternate };

// N x^{a'+1/2} e^{-g/2} L_{n+m,m}^{a'}(g) / L_m^{a'-1}(-g), g = C x^2/4, with
// N fixed analytically by the X_m norm so that the integral of u^2 is 1.
// Eigenvalue of V_m is n C.
Jet u12_exceptional_jet(const StringParams& p, double alpha_prime, int n,
                        int codim_m, double x,
                        GaussianConvention conv = GaussianConvention::Standard);
double u12_exceptional(const StringParams& p, double ell2, int n, int codim_m,
                       double x, AlphaPolicy policy = AlphaPolicy::Literal);

// Integral of u^2 over (0, inf) by adaptive quadrature.
double quadrature_norm(const JetFunction& u, double tol = 1e-12);

WaveSample sample(const JetFunction& u, const RadialGrid& grid,
                  bool normalized);

// Trapezoidal integral of |u|^2 over the grid.
double trapezoid_norm(const WaveSample& u);

// |u11|^2 + |u12|^2 pointwise. Throws ShapeError on grid mismatch.
WaveSample probability_density(const WaveSample& u11_s, const WaveSample& u12_s);

}  // namespace cosmicsusy
