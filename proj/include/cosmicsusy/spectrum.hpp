#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cosmicsusy/string_model.hpp"

namespace cosmicsusy {

enum class Sign { Plus, Minus };

// One bound state. eps_sq = E^2 - M^2, ell1_at_E = ell1(p, E), residual is
// the quantization residual at E on the entry's branch.
struct SpectrumEntry {
  int n = 0;
  Sign sign = Sign::Plus;
  Branch branch = Branch::NegL1;
  double E = 0.0;
  double eps_sq = 0.0;
  double ell1_at_E = 0.0;
  double residual = 0.0;
  bool degenerate = false;
};

// omega (2n + ell + 3/2)
double oscillator_energy(double omega, double ell, int n);

// (E^2 - M^2) minus the v-channel oscillator eigenvalue at E. For NegL1 the
// state has ell = -1 - ell1(E), giving omega (2n - 2 ell1(E) - 1); for L1 it
// has ell = ell1(E), giving 2 n omega.
double quantization_residual(const StringParams& p, int n, double E,
                             Branch branch = Branch::NegL1);

// Be (1 + 2m - alpha - 2 n alpha - 2 Phi) - 2 M^3 alpha
double gamma_coefficient(const StringParams& p, int n);

// 2 M alpha E^2 + 2 a B e E + gamma, relative to its largest term. Multiplying
// the NegL1 residual by 2 M alpha gives exactly this quadratic.
double quadratic_certificate(const StringParams& p, int n, double E);

// Both roots of the quantization condition, plus branch first. On the NegL1
// branch these are -aBe/(2M alpha) +- sqrt(4a^2B^2e^2 - 8 M alpha gamma)/(4 M alpha),
// evaluated in cancellation-free form; on L1, E = +-sqrt(M^2 + 2 n omega).
// Throws DomainError when no real root exists.
std::pair<SpectrumEntry, SpectrumEntry> energy_closed_form(
    const StringParams& p, int n, Branch branch = Branch::NegL1);
std::optional<std::pair<SpectrumEntry, SpectrumEntry>> try_energy_closed_form(
    const StringParams& p, int n, Branch branch = Branch::NegL1);

// Symmetric bracket [-R, R] wide enough for both branches: the larger of
// M + 10 sqrt(|Be| (2n+3)/M) and the Cauchy bound of the quadratic.
std::pair<double, double> default_bracket(const StringParams& p, int n);

// Roots of quantization_residual inside the bracket by sign scan, extremum
// splitting and Brent refinement. Empty if there are none.
std::vector<SpectrumEntry> energy_numeric(const StringParams& p, int n,
                                          std::pair<double, double> bracket,
                                          Branch branch = Branch::NegL1);

// Physical index n (polynomial degree n+m, eps^2 = nC) or the alternative
// reading eps^2 = (n+m)C.
enum class Indexing { NC, NPlusMC };

// E = +-sqrt(M^2 + kC), C = Be/M, k from the indexing. alpha' is evaluated
// at the solution under the given policy and must be > 0.
SpectrumEntry exceptional_energy(const StringParams& p, int n, int codim_m,
                                 Indexing indexing, Sign sign,
                                 AlphaPolicy policy = AlphaPolicy::Literal);

// The level whose oscillator state is regular at the origin (ell > -1/2),
// trying NegL1 first and L1 second, each with its own self-consistent
// energy. Throws ParameterError if neither branch qualifies.
SpectrumEntry regular_level(const StringParams& p, int n, Sign sign);

// The state index of an entry's branch: -1 - ell1 or ell1.
double branch_ell(const SpectrumEntry& s);

}  // namespace cosmicsusy
