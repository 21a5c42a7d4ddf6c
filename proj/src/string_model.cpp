#include "cosmicsusy/string_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cosmicsusy/errors.hpp"
#include "cosmicsusy/numerics.hpp"
#include "cosmicsusy/special_functions.hpp"

namespace cosmicsusy {

namespace {

void require_positive_x(double x, const char* where) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(where) + ": requires finite x > 0");
}

}  // namespace

void StringParams::validate() const {
  if (!(std::isfinite(alpha) && std::isfinite(a) && std::isfinite(B) &&
        std::isfinite(Phi) && std::isfinite(M) && std::isfinite(e)))
    throw ParameterError("StringParams: non-finite field");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ParameterError("StringParams: alpha must lie in (0, 1]");
  if (!(M > 0.0)) throw ParameterError("StringParams: M must be > 0");
}

void StringParams::require_bound_states() const {
  validate();
  if (!(B * e > 0.0))
    throw ParameterError("StringParams: bound states need B e > 0");
}

double Channel::potential(double x) const {
  require_positive_x(x, "Channel::potential");
  return ell * (ell + 1.0) / (x * x) + 0.25 * omega * omega * x * x + shift;
}

Channel v_channel(const StringParams& p, double ell1) {
  p.require_bound_states();
  const double w = p.omega();
  return {ell1, w, -w * (ell1 + 1.5)};
}

Channel u_channel(const StringParams& p, double ell2) {
  p.require_bound_states();
  const double w = p.omega();
  return {ell2, w, -w * (ell2 + 0.5)};
}

double mass_density_to_alpha(double mu) {
  if (!(mu >= 0.0 && mu < 0.25))
    throw ParameterError("mass_density_to_alpha: mu must lie in [0, 0.25)");
  return 1.0 - 4.0 * mu;
}

double ctc_radius(const StringParams& p) {
  p.validate();
  return std::abs(p.a) / p.alpha;
}

bool inside_ctc_region(const StringParams& p, double r) {
  return r < ctc_radius(p);
}

double vector_potential_phi(const StringParams& p, double r) {
  if (p.e == 0.0) throw ParameterError("vector_potential_phi: e must be nonzero");
  if (!(r >= 0.0)) throw DomainError("vector_potential_phi: requires r >= 0");
  return -0.5 * p.alpha * p.B * r * r - p.Phi / p.e;
}

double ell1(const StringParams& p, double E) {
  p.validate();
  return (1.0 + 2.0 * p.azimuthal_m - 2.0 * p.alpha + 2.0 * p.a * E -
          2.0 * p.Phi) /
         (2.0 * p.alpha);
}

double ell2(const StringParams& p, double E) {
  p.validate();
  return (-1.0 - 2.0 * p.azimuthal_m - 2.0 * p.alpha - 2.0 * p.a * E +
          2.0 * p.Phi) /
         (2.0 * p.alpha);
}

double v_eff(const StringParams& p, double ell1, double x) {
  require_positive_x(x, "v_eff");
  return v_channel(p, ell1).potential(x);
}

double u_eff(const StringParams& p, double ell2, double x) {
  require_positive_x(x, "u_eff");
  return u_channel(p, ell2).potential(x);
}

Superpotential superpotential_w(const StringParams& p, double ell1, double x) {
  require_positive_x(x, "superpotential_w");
  const double k = p.B * p.e / (4.0 * p.M);
  return {k * x + ell1 / x, k - ell1 / (x * x)};
}

PartnerPair partner_potentials(const SuperpotentialFn& W, double x,
                               double factorization_energy) {
  const Superpotential s = W(x);
  const double w2 = s.w * s.w;
  return {w2 - s.dw + factorization_energy, w2 + s.dw + factorization_energy};
}

SusyExtensionParams make_extension(const StringParams& p, double ell1,
                                   ExtensionBranch branch) {
  p.require_bound_states();
  const double k = p.B * p.e / (4.0 * p.M);
  SusyExtensionParams s;
  s.branch = branch;
  switch (branch) {
    case ExtensionBranch::NegEll1PosA2: s.a1 = -ell1; s.a2 = k; break;
    case ExtensionBranch::NegEll1NegA2: s.a1 = -ell1; s.a2 = -k; break;
    case ExtensionBranch::OnePlusEll1PosA2: s.a1 = 1.0 + ell1; s.a2 = k; break;
    case ExtensionBranch::OnePlusEll1NegA2: s.a1 = 1.0 + ell1; s.a2 = -k; break;
  }
  s.c = (2.0 * s.a1 - 1.0) / (2.0 * s.a2);

  const double lhs = s.a1 * (s.a1 - 1.0), rhs = ell1 * (ell1 + 1.0);
  if (std::abs(lhs - rhs) > 1e-12 * std::max({1.0, std::abs(lhs), std::abs(rhs)}) ||
      std::abs(s.a2 * s.a2 - k * k) > 1e-12 * k * k)
    throw NumericalError("make_extension: branch constraints not met", lhs - rhs,
                         1e-12);
  return s;
}

Superpotential extended_superpotential(const SusyExtensionParams& s, double x) {
  require_positive_x(x, "extended_superpotential");
  const double f = x * x + s.c;
  if (f == 0.0) throw SingularityError("extended superpotential", x);
  return {s.a1 / x + s.a2 * x - 2.0 * x / f,
          -s.a1 / (x * x) + s.a2 - 2.0 / f + 4.0 * x * x / (f * f)};
}

PartnerPair extended_potentials(const SusyExtensionParams& s, double x) {
  return partner_potentials(
      [&s](double y) { return extended_superpotential(s, y); }, x,
      s.factorization_energy());
}

double isotonic_v2p(const StringParams& p, double ell1, double c, double x,
                    ExtensionBranch branch) {
  require_positive_x(x, "isotonic_v2p");
  const SusyExtensionParams s = make_extension(p, ell1, branch);
  const double f = x * x + c;
  if (f == 0.0) throw SingularityError("isotonic potential", x);
  return s.a2 * s.a2 * x * x + s.a1 * (s.a1 - 1.0) / (x * x) + 4.0 / f -
         8.0 * c / (f * f) + 2.0 * s.a2;
}

double exceptional_alpha_prime(double ell2, AlphaPolicy policy) {
  const double literal = ell2 + 0.5;
  return policy == AlphaPolicy::Literal ? literal : std::abs(literal);
}

double exceptional_vm_at(const StringParams& p, double alpha_prime, int codim_m,
                         double x, bool allow_inadmissible) {
  p.require_bound_states();
  require_positive_x(x, "exceptional_vm");
  if (codim_m < 0) throw ParameterError("exceptional_vm: codim_m must be >= 0");
  if (!(alpha_prime > 0.0) && !allow_inadmissible)
    throw ParameterError("exceptional_vm: alpha' = " +
                         std::to_string(alpha_prime) + " is not > 0");
  const double C = p.B * p.e / p.M;
  const double g = 0.25 * C * x * x;
  const auto phi = laguerre_reflected_jet<double>(codim_m, alpha_prime - 1.0, g);
  if (phi.value == 0.0) throw SingularityError("exceptional potential", x);
  const double r1 = phi.d1 / phi.value;
  const double r2 = phi.d2 / phi.value;
  const double cx2 = C * C * x * x;
  const double v = cx2 / 16.0 + (alpha_prime * alpha_prime - 0.25) / (x * x) -
                   0.25 * cx2 * r2 + C * (alpha_prime + g - 1.0) * r1 +
                   0.5 * cx2 * r1 * r1 -
                   0.5 * C * (2.0 * codim_m + alpha_prime + 1.0);
  if (!std::isfinite(v)) throw SingularityError("exceptional potential", x);
  return v;
}

double exceptional_vm(const StringParams& p, double ell2, int codim_m, double x,
                      bool allow_inadmissible) {
  return exceptional_vm_at(p, exceptional_alpha_prime(ell2, AlphaPolicy::Literal),
                           codim_m, x, allow_inadmissible);
}

std::vector<double> exceptional_singularities(const StringParams& p,
                                              double alpha_prime, int codim_m,
                                              double lo, double hi) {
  p.require_bound_states();
  if (!(lo > 0.0 && hi > lo))
    throw ParameterError("exceptional_singularities: need 0 < lo < hi");
  const double C = p.B * p.e / p.M;
  auto phi = [&](double x) {
    return laguerre<double>(codim_m, alpha_prime - 1.0, -0.25 * C * x * x);
  };
  return find_roots(phi, lo, hi, 4000, 1e-13 * hi);
}

}  // namespace cosmicsusy
