#pragma once

#include <functional>
#include <vector>

namespace cosmicsusy {

// Physical parameters of the fermion in the spinning string background.
// Natural units; every field is a dimensionless double.
struct StringParams {
  double alpha = 1.0;  // deficit parameter, 1 - 4 mu
  double a = 0.0;      // rotation, 4 J
  double B = 1.0;      // magnetic field
  double Phi = 0.0;    // Aharonov-Bohm flux
  double M = 1.0;      // fermion mass
  double e = 1.0;      // charge
  int azimuthal_m = 0;

  // alpha in (0, 1], M > 0, all fields finite.
  void validate() const;
  // validate() plus B e > 0, needed for Gaussian decay.
  void require_bound_states() const;
  // Be / 2M
  double omega() const { return B * e / (2.0 * M); }
};

// Which root of l(l+1) = l1(l1+1) labels the oscillator state.
enum class Branch { L1, NegL1 };

// Centrifugal index, oscillator frequency and constant term of a radial
// channel: V(x) = ell(ell+1)/x^2 + omega^2 x^2/4 + shift.
struct Channel {
  double ell = 0.0;
  double omega = 1.0;
  double shift = 0.0;

  double potential(double x) const;
};

Channel v_channel(const StringParams& p, double ell1);
Channel u_channel(const StringParams& p, double ell2);

double mass_density_to_alpha(double mu);
double ctc_radius(const StringParams& p);
bool inside_ctc_region(const StringParams& p, double r);
double vector_potential_phi(const StringParams& p, double r);

double ell1(const StringParams& p, double E);
double ell2(const StringParams& p, double E);

double v_eff(const StringParams& p, double ell1, double x);
double u_eff(const StringParams& p, double ell2, double x);

struct Superpotential {
  double w = 0.0;
  double dw = 0.0;
};
using SuperpotentialFn = std::function<Superpotential(double)>;

// (Be/4M) x + ell1/x and its derivative.
Superpotential superpotential_w(const StringParams& p, double ell1, double x);

struct PartnerPair {
  double v1 = 0.0;
  double v2 = 0.0;
};

// (W^2 - W' + E2, W^2 + W' + E2) with factorization energy E2.
PartnerPair partner_potentials(const SuperpotentialFn& W, double x,
                               double factorization_energy = 0.0);

// The four roots of a1(a1-1) = l1(l1+1), a2^2 = (Be/4M)^2.
enum class ExtensionBranch {
  NegEll1PosA2,      // a1 = -l1,  a2 = +Be/4M
  NegEll1NegA2,      // a1 = -l1,  a2 = -Be/4M
  OnePlusEll1PosA2,  // a1 = 1+l1, a2 = +Be/4M
  OnePlusEll1NegA2,  // a1 = 1+l1, a2 = -Be/4M
};

// W = a1/x + a2 x - 2x/(x^2+c) with c = (2a1-1)/(2a2).
struct SusyExtensionParams {
  double a1 = 0.0;
  double a2 = 0.0;
  double c = 0.0;
  ExtensionBranch branch = ExtensionBranch::OnePlusEll1PosA2;

  // -a2 (2 a1 - 5): removes the constant left over once c cancels the
  // rational terms of V1.
  double factorization_energy() const { return -a2 * (2.0 * a1 - 5.0); }
};

SusyExtensionParams make_extension(const StringParams& p, double ell1,
                                   ExtensionBranch branch);
Superpotential extended_superpotential(const SusyExtensionParams& s, double x);

// (V1, V2p) built from the extended superpotential with its factorization
// energy. Throws SingularityError at x^2 + c = 0.
PartnerPair extended_potentials(const SusyExtensionParams& s, double x);

// a2^2 x^2 + a1(a1-1)/x^2 + 4/(x^2+c) - 8c/(x^2+c)^2 + 2 a2
double isotonic_v2p(const StringParams& p, double ell1, double c, double x,
                    ExtensionBranch branch = ExtensionBranch::OnePlusEll1PosA2);

// alpha' of the exceptional channel. Literal is ell2 + 1/2; Regular reflects
// ell2 -> -1 - ell2 when that makes the state regular at the origin.
enum class AlphaPolicy { Literal, Regular };
double exceptional_alpha_prime(double ell2, AlphaPolicy policy);

// Rationally extended potential of codimension m in the u channel, with
// C = Be/M, g = C x^2/4, phi = L_m^{a'-1}(-g):
//   C^2 x^2/16 + (a'^2 - 1/4)/x^2 - (C^2 x^2/4) phi''/phi
//   + C (a' + g - 1) phi'/phi + (C^2 x^2/2) (phi'/phi)^2 - (C/2)(2m + a' + 1)
// alpha_prime is passed directly. Non-positive alpha' is a ParameterError
// unless allow_inadmissible is set (potential plotting only). A zero of phi
// is a SingularityError.
double exceptional_vm_at(const StringParams& p, double alpha_prime,
                         int codim_m, double x, bool allow_inadmissible = false);

// Same, with alpha' = ell2 + 1/2.
double exceptional_vm(const StringParams& p, double ell2, int codim_m,
                      double x, bool allow_inadmissible = false);

// Poles of the exceptional potential in (lo, hi): the zeros of
// L_m^{a'-1}(-C x^2/4), located by scan and Brent refinement.
std::vector<double> exceptional_singularities(const StringParams& p,
                                              double alpha_prime, int codim_m,
                                              double lo, double hi);

}  // namespace cosmicsusy
