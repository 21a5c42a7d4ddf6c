#include "cosmicsusy/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cosmicsusy/errors.hpp"
#include "cosmicsusy/numerics.hpp"

namespace cosmicsusy {

namespace {

SpectrumEntry make_entry(const StringParams& p, int n, Sign sign, Branch branch,
                         double E) {
  SpectrumEntry s;
  s.n = n;
  s.sign = sign;
  s.branch = branch;
  s.E = E;
  s.eps_sq = E * E - p.M * p.M;
  s.ell1_at_E = ell1(p, E);
  s.residual = quantization_residual(p, n, E, branch);
  return s;
}

void require_level(int n) {
  if (n < 0) throw ParameterError("quantum number n must be >= 0");
}

}  // namespace

double oscillator_energy(double omega, double ell, int n) {
  return omega * (2.0 * n + ell + 1.5);
}

double quantization_residual(const StringParams& p, int n, double E,
                             Branch branch) {
  p.require_bound_states();
  require_level(n);
  const double l1 = ell1(p, E);
  const Channel ch = v_channel(p, l1);
  const double ell = branch == Branch::NegL1 ? -1.0 - l1 : l1;
  return (E * E - p.M * p.M) - (oscillator_energy(ch.omega, ell, n) + ch.shift);
}

double gamma_coefficient(const StringParams& p, int n) {
  p.validate();
  const double Be = p.B * p.e;
  return Be * (1.0 + 2.0 * p.azimuthal_m - p.alpha - 2.0 * n * p.alpha -
               2.0 * p.Phi) -
         2.0 * p.M * p.M * p.M * p.alpha;
}

double quadratic_certificate(const StringParams& p, int n, double E) {
  const double t2 = 2.0 * p.M * p.alpha * E * E;
  const double t1 = 2.0 * p.a * p.B * p.e * E;
  const double t0 = gamma_coefficient(p, n);
  const double scale = std::max({std::abs(t2), std::abs(t1), std::abs(t0)});
  return scale == 0.0 ? 0.0 : (t2 + t1 + t0) / scale;
}

std::optional<std::pair<SpectrumEntry, SpectrumEntry>> try_energy_closed_form(
    const StringParams& p, int n, Branch branch) {
  p.require_bound_states();
  require_level(n);
  double plus = 0.0, minus = 0.0;
  bool degenerate = false;
  if (branch == Branch::L1) {
    const double e2 = p.M * p.M + 2.0 * n * p.omega();
    plus = std::sqrt(e2);
    minus = -plus;
  } else {
    const double A = 2.0 * p.M * p.alpha;
    const double Bq = 2.0 * p.a * p.B * p.e;
    const double Cq = gamma_coefficient(p, n);
    const double disc = Bq * Bq - 4.0 * A * Cq;
    if (disc < 0.0) return std::nullopt;
    const double root = std::sqrt(disc);
    degenerate = disc == 0.0;
    if (Bq == 0.0) {
      plus = root / (2.0 * A);
      minus = -plus;
    } else {
      const double q = -0.5 * (Bq + std::copysign(root, Bq));
      const double r1 = q / A;
      const double r2 = q != 0.0 ? Cq / q : r1;
      plus = std::max(r1, r2);
      minus = std::min(r1, r2);
    }
  }
  auto hi = make_entry(p, n, Sign::Plus, branch, plus);
  auto lo = make_entry(p, n, Sign::Minus, branch, minus);
  hi.degenerate = lo.degenerate = degenerate;
  return std::make_pair(hi, lo);
}

std::pair<SpectrumEntry, SpectrumEntry> energy_closed_form(const StringParams& p,
                                                           int n, Branch branch) {
  auto r = try_energy_closed_form(p, n, branch);
  if (!r)
    throw DomainError("no real bound-state energy at n = " + std::to_string(n));
  return *r;
}

std::pair<double, double> default_bracket(const StringParams& p, int n) {
  p.require_bound_states();
  require_level(n);
  const double ladder =
      p.M + 10.0 * std::sqrt(std::abs(p.B * p.e) * (2.0 * n + 3.0) / p.M);
  const double A = 2.0 * p.M * p.alpha;
  const double cauchy =
      1.0 + std::max(std::abs(2.0 * p.a * p.B * p.e),
                     std::abs(gamma_coefficient(p, n))) / A;
  const double R = std::max(ladder, cauchy);
  return {-R, R};
}

std::vector<SpectrumEntry> energy_numeric(const StringParams& p, int n,
                                          std::pair<double, double> bracket,
                                          Branch branch) {
  p.require_bound_states();
  require_level(n);
  const auto [lo, hi] = bracket;
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
    throw ParameterError("energy_numeric: bracket must be finite with lo < hi");
  auto f = [&](double E) { return quantization_residual(p, n, E, branch); };
  const double tol = 1e-15 * std::max({1.0, std::abs(lo), std::abs(hi)});
  std::vector<SpectrumEntry> out;
  for (double E : find_roots(f, lo, hi, 400, tol)) {
    out.push_back(make_entry(p, n, E >= 0.0 ? Sign::Plus : Sign::Minus, branch, E));
  }
  return out;
}

SpectrumEntry exceptional_energy(const StringParams& p, int n, int codim_m,
                                 Indexing indexing, Sign sign,
                                 AlphaPolicy policy) {
  p.require_bound_states();
  require_level(n);
  if (codim_m < 0) throw ParameterError("codim_m must be >= 0");
  const int k = indexing == Indexing::NC ? n : n + codim_m;
  const double C = p.B * p.e / p.M;
  const double mag = std::sqrt(p.M * p.M + k * C);
  const double E = sign == Sign::Plus ? mag : -mag;
  const double ap = exceptional_alpha_prime(ell2(p, E), policy);
  if (!(ap > 0.0))
    throw ParameterError("exceptional channel not admissible: alpha' = " +
                         std::to_string(ap));
  SpectrumEntry s;
  s.n = n;
  s.sign = sign;
  s.E = E;
  s.eps_sq = E * E - p.M * p.M;
  s.ell1_at_E = ell1(p, E);
  s.residual = s.eps_sq - k * C;
  return s;
}

SpectrumEntry regular_level(const StringParams& p, int n, Sign sign) {
  if (auto r = try_energy_closed_form(p, n, Branch::NegL1)) {
    const SpectrumEntry& s = sign == Sign::Plus ? r->first : r->second;
    if (s.ell1_at_E < -0.5) return s;
  }
  const auto r = energy_closed_form(p, n, Branch::L1);
  const SpectrumEntry& s = sign == Sign::Plus ? r.first : r.second;
  if (s.ell1_at_E > -0.5) return s;
  throw ParameterError("non-normalizable channel: no branch regular at the origin for n = " +
                       std::to_string(n));
}

double branch_ell(const SpectrumEntry& s) {
  return s.branch == Branch::NegL1 ? -1.0 - s.ell1_at_E : s.ell1_at_E;
}

}  // namespace cosmicsusy
