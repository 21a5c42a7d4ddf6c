#include "cosmicsusy/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "cosmicsusy/cli/presets.hpp"
#include "cosmicsusy/errors.hpp"
#include "cosmicsusy/numerics.hpp"
#include "cosmicsusy/special_functions.hpp"
#include "cosmicsusy/spectrum.hpp"
#include "cosmicsusy/string_model.hpp"
#include "cosmicsusy/wavefunctions.hpp"

namespace cosmicsusy::cli {

namespace {

double rel(double a, double b) {
  const double s = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / s;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

// A wavefunction with the potential and eigenvalue it should satisfy.
struct Eigenpair {
  RealFunction potential;
  double eps_sq;
  JetFunction u;
};

// Parameter tuples the spectrum checks sweep: flux and alpha sweeps of the
// spectrum presets at reduced density.
std::vector<StringParams> spectrum_sweep() {
  std::vector<StringParams> out;
  for (const auto& f : all_presets()) {
    if (f.kind == PresetKind::Potential || f.kind == PresetKind::Density) continue;
    for (const auto& s : f.series) {
      const auto pts = f.sweep.points();
      for (std::size_t i = 0; i < pts.size(); i += 5) {
        RunConfig c = s.config;
        apply_setting(c, f.sweep_key, format_number(pts[i]));
        out.push_back(c.params);
      }
    }
  }
  return out;
}

double max_closed_vs_numeric() {
  double worst = 0.0;
  for (const auto& p : spectrum_sweep()) {
    for (int n = 0; n <= 2; ++n) {
      const auto closed = try_energy_closed_form(p, n);
      const auto numeric = energy_numeric(p, n, default_bracket(p, n));
      if (!closed) {
        if (!numeric.empty()) return std::numeric_limits<double>::infinity();
        continue;
      }
      for (const SpectrumEntry* e : {&closed->first, &closed->second}) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& r : numeric) best = std::min(best, rel(r.E, e->E));
        worst = std::max(worst, best);
      }
      for (const auto& r : numeric) {
        worst = std::max(worst, std::min(rel(r.E, closed->first.E),
                                         rel(r.E, closed->second.E)));
      }
    }
  }
  return worst;
}

double max_quadratic_certificate() {
  double worst = 0.0;
  for (const auto& p : spectrum_sweep()) {
    for (int n = 0; n <= 2; ++n) {
      const auto closed = try_energy_closed_form(p, n);
      if (!closed) continue;
      worst = std::max({worst, std::abs(quadratic_certificate(p, n, closed->first.E)),
                        std::abs(quadratic_certificate(p, n, closed->second.E))});
    }
  }
  return worst;
}

std::vector<Eigenpair> u11_states() {
  std::vector<Eigenpair> out;
  auto add = [&](const StringParams& p, double l1, int n, Branch b) {
    const Channel ch = v_channel(p, l1);
    const double ell = b == Branch::L1 ? l1 : -1.0 - l1;
    out.push_back({[ch](double x) { return ch.potential(x); },
                   oscillator_energy(ch.omega, ell, n) + ch.shift,
                   [p, l1, n, b](double x) { return u11_jet(p, l1, n, x, b); }});
  };
  for (const auto& f : all_presets()) {
    if (f.kind != PresetKind::Density) continue;
    const RunConfig& c = f.series.front().config;
    for (int n : c.levels) {
      if (c.channel == DensityChannel::Ordinary) {
        const SpectrumEntry s = regular_level(c.params, n, Sign::Plus);
        add(c.params, s.ell1_at_E, n, s.branch);
      } else {
        const double E = c.channel == DensityChannel::Isotonic
                             ? energy_closed_form(c.params, n, Branch::L1).first.E
                             : exceptional_energy(c.params, n, c.codim_m, c.indexing,
                                                  Sign::Plus, AlphaPolicy::Regular).E;
        const double l1 = ell1(c.params, E);
        add(c.params, l1 > -0.5 ? l1 : -1.0 - l1, n, Branch::L1);
      }
    }
  }
  const StringParams worked{1.0, 0.0, 2.0, 0.0, 1.0, 1.0, 0};
  for (int n = 0; n <= 3; ++n) add(worked, -2.0, n, Branch::NegL1);
  return out;
}

std::vector<Eigenpair> exceptional_states() {
  std::vector<Eigenpair> out;
  const StringParams fig9 = find_preset("fig9").series.front().config.params;
  const double C = fig9.B * fig9.e / fig9.M;
  for (int n = 0; n <= 2; ++n) {
    const SpectrumEntry s =
        exceptional_energy(fig9, n, 1, Indexing::NC, Sign::Plus, AlphaPolicy::Regular);
    const double ap = exceptional_alpha_prime(ell2(fig9, s.E), AlphaPolicy::Regular);
    out.push_back({[fig9, ap](double x) { return exceptional_vm_at(fig9, ap, 1, x); },
                   n * C,
                   [fig9, ap, n](double x) { return u12_exceptional_jet(fig9, ap, n, 1, x); }});
  }
  const StringParams unit{1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0};
  for (int m = 0; m <= 3; ++m) {
    for (double ap : {1.5, 2.0, 3.5}) {
      for (int n = 0; n <= 3; ++n) {
        out.push_back({[unit, ap, m](double x) { return exceptional_vm_at(unit, ap, m, x); },
                       static_cast<double>(n),
                       [unit, ap, n, m](double x) {
                         return u12_exceptional_jet(unit, ap, n, m, x);
                       }});
      }
    }
  }
  return out;
}

double max_residual(const std::vector<Eigenpair>& states, double lo, double hi) {
  double worst = 0.0;
  const auto xs = linspace(lo, hi, 300);
  for (const auto& s : states)
    for (double x : xs)
      worst = std::max(worst, std::abs(radial_equation_residual(s.potential, s.eps_sq, s.u, x)));
  return worst;
}

double max_contiguous() {
  double worst = 0.0;
  for (int n = 1; n <= 50; ++n)
    for (double a : {-0.5, 0.5, 2.5, 7.0})
      for (double x : {0.1, 1.0, 4.2, 9.0, 20.0}) {
        const double s = std::max({std::abs(laguerre_eval({n, a}, x)),
                                   std::abs(laguerre_eval({n - 1, a}, x)),
                                   std::abs(laguerre_eval({n, a - 1.0}, x)), 1e-300});
        worst = std::max(worst, std::abs(laguerre_contiguous_residual({n, a}, x)) / s);
      }
  return worst;
}

double max_derivative_fd() {
  double worst = 0.0;
  for (int n = 0; n <= 12; ++n)
    for (double a : {-0.5, 0.5, 3.0})
      for (double x : {0.3, 2.0, 7.5}) {
        const double h = 1e-5 * std::max(1.0, x);
        const double fd = (laguerre_eval({n, a}, x + h) - laguerre_eval({n, a}, x - h)) / (2 * h);
        const double an = laguerre_deriv({n, a}, x);
        worst = std::max(worst, std::abs(fd - an) / std::max(1.0, std::abs(an)));
      }
  return worst;
}

double max_m0_collapse() {
  double worst = 0.0;
  for (double ap : {0.3, 1.5, 2.0, 5.5})
    for (int n = 0; n <= 20; ++n)
      for (double g : {0.2, 1.0, 3.7, 11.0}) {
        worst = std::max(worst, rel(xm_eval({0, ap, n}, g), laguerre_eval({n, ap}, g)));
      }
  return worst;
}

struct OrthoStats {
  double off = 0.0;
  double diag = 0.0;
};

OrthoStats orthogonality() {
  OrthoStats st;
  for (int m = 0; m <= 3; ++m)
    for (double ap : {1.5, 2.0, 3.5})
      for (int n = m; n <= m + 8; ++n)
        for (int k = n; k <= m + 8; ++k) {
          const XmParams pn{m, ap, n}, pk{m, ap, k};
          const double I = xm_orthogonality_integral(pn, k).value;
          if (k == n) {
            st.diag = std::max(st.diag, rel(I, xm_norm(pn)));
          } else {
            st.off = std::max(st.off, std::abs(I) / std::sqrt(xm_norm(pn) * xm_norm(pk)));
          }
        }
  return st;
}

double eigen_calibration_mismatches() {
  const auto grid = linspace(0.05, 20.0, 100);
  int bad = 0;
  for (int m = 0; m <= 3; ++m)
    for (double ap : {1.5, 2.0, 3.5})
      for (int n = m; n <= m + 8; ++n)
        if (calibrate_xm_eigenvalue({m, ap, n}, grid) != xm_eigenvalue({m, ap, n})) ++bad;
  return bad;
}

double max_annihilation() {
  double worst = 0.0;
  const auto xs = linspace(0.01, 15.0, 2000);
  const StringParams cases[] = {{1.0, 0.0, 2.0, 0.0, 1.0, 1.0, 0},
                                 {0.5, 0.0, 10.0, 3.0, 2.0, 1.0, 1}};
  const double ells[] = {-2.0, -3.3};
  for (int i = 0; i < 2; ++i) {
    const StringParams& p = cases[i];
    const double l1 = ells[i];
    double peak = 0.0, res = 0.0;
    for (double x : xs) {
      const Jet j = u11_jet(p, l1, 0, x, Branch::NegL1);
      const double w = superpotential_w(p, l1, x).w;
      peak = std::max(peak, std::abs(j.u()));
      res = std::max(res, std::abs(std::exp(j.log_scale) * (j.d1 + w * j.value)));
    }
    worst = std::max(worst, res / peak);
  }
  return worst;
}

double max_isotonic_vs_raising() {
  double worst = 0.0;
  const StringParams fig8 = find_preset("fig8").series.front().config.params;
  for (int n = 0; n <= 5; ++n) {
    const double E = energy_closed_form(fig8, n, Branch::L1).first.E;
    const double l1 = ell1(fig8, E);
    const double c = make_extension(fig8, l1, ExtensionBranch::OnePlusEll1PosA2).c;
    for (double x : linspace(0.2, 10.0, 120)) {
      const double a = apply_raising(
          fig8, l1, c, [&](double y) { return u11_jet(fig8, l1, n, y, Branch::L1); }, x);
      const double b = u12_isotonic(fig8, l1, n, c, x);
      const double scale = std::max(std::abs(a), 1e-250);
      worst = std::max(worst, std::abs(a - b) / scale);
    }
  }
  return worst;
}

double max_vm_dual_path() {
  double worst = 0.0;
  const StringParams p{0.2, 0.1, 10.0, 0.5, 2.0, 1.0, 1};
  for (int m = 0; m <= 3; ++m)
    for (double ap : {0.7, 2.0, 3.5})
      for (double x : linspace(0.2, 10.0, 60)) {
        const double a = exceptional_vm_at(p, ap, m, x);
        const double b = reconstruct_vm_at(p, ap, m, x);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
      }
  return worst;
}

double max_isotonic_identity() {
  double worst = 0.0;
  const StringParams p = find_preset("fig8").series.front().config.params;
  for (double l1 : {0.3, 1.7, 4.0}) {
    for (auto br : {ExtensionBranch::NegEll1PosA2, ExtensionBranch::NegEll1NegA2,
                    ExtensionBranch::OnePlusEll1PosA2, ExtensionBranch::OnePlusEll1NegA2}) {
      const auto s = make_extension(p, l1, br);
      for (double x : linspace(0.1, 10.0, 80)) {
        if (std::abs(x * x + s.c) < 1e-3) continue;
        const double v45 = extended_potentials(s, x).v2;
        const double v47 = isotonic_v2p(p, l1, s.c, x, br);
        worst = std::max(worst, std::abs(v45 - v47) / std::max(1.0, std::abs(v45)));
      }
    }
  }
  return worst;
}

double max_u11_orthonormal() {
  const StringParams p{1.0, 0.0, 2.0, 0.0, 1.0, 1.0, 0};
  const double l1 = -2.0;
  double worst = 0.0;
  for (int n = 0; n <= 5; ++n)
    for (int k = n; k <= 5; ++k) {
      auto f = [&](double x) {
        const Jet a = u11_jet(p, l1, n, x, Branch::NegL1);
        const Jet b = u11_jet(p, l1, k, x, Branch::NegL1);
        const double w = std::exp(a.log_scale + b.log_scale);
        return w == 0.0 ? 0.0 : w * a.value * b.value;
      };
      const double I =
          integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-12).value;
      worst = std::max(worst, std::abs(I - (n == k ? 1.0 : 0.0)));
    }
  return worst;
}

FDProblem oscillator_problem() {
  return {[](double x) { return 0.25 * x * x + 2.0 / (x * x); }, 1e-3, 25.0, 4000};
}

double fd_oscillator_error() {
  const auto r = fd_richardson(oscillator_problem(), 3);
  double worst = 0.0;
  for (int n = 0; n < 3; ++n)
    worst = std::max(worst, std::abs(r.extrapolated(n) - oscillator_energy(1.0, 1.0, n)));
  return worst;
}

double fd_order_ratio_deviation() {
  FDProblem p = oscillator_problem();
  p.n_points = 1000;
  const double exact = oscillator_energy(1.0, 1.0, 0);
  const double e1 = fd_hamiltonian_eigen(p, 1)(0) - exact;
  const double e2 = fd_hamiltonian_eigen(p.refined(), 1)(0) - exact;
  // Distance of the error ratio outside [3.6, 4.4].
  const double ratio = e1 / e2;
  return std::max({0.0, 3.6 - ratio, ratio - 4.4});
}

double fd_partner_error() {
  const StringParams p{1.0, 0.0, 2.0, 0.0, 1.0, 1.0, 0};
  const double l1 = -2.0;
  auto W = [&](double x) { return superpotential_w(p, l1, x); };
  FDProblem v1{[&](double x) { return partner_potentials(W, x).v1; }, 1e-3, 25.0, 4000};
  FDProblem v2{[&](double x) { return partner_potentials(W, x).v2; }, 1e-3, 25.0, 4000};
  const auto a = fd_richardson(v1, 4).extrapolated;
  const auto b = fd_richardson(v2, 3).extrapolated;
  double worst = std::abs(a(0));
  for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(b(k) - a(k + 1)));
  return worst;
}

double fd_vm_error(Indexing indexing) {
  const StringParams p{1.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0};
  const int m = 1;
  FDProblem prob{[&](double x) { return exceptional_vm_at(p, 2.0, m, x); }, 1e-3, 30.0, 4000};
  const auto r = fd_richardson(prob, 3).extrapolated;
  double worst = 0.0;
  for (int n = 0; n < 3; ++n) {
    const int k = indexing == Indexing::NC ? n : n + m;
    const double expect = k * p.B * p.e / p.M;
    worst = std::max(worst, std::abs(r(n) - expect));
  }
  return worst;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::string VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name;
  return {};
}

SeriesTable VerifyReport::table() const {
  SeriesTable t;
  t.columns = {"check", "tolerance", "achieved", "pass"};
  t.set_meta("tool", std::string("cosmicsusy ") + kToolVersion);
  t.set_meta("command", "verify");
  for (const auto& c : checks)
    t.add_row({c.name, c.tolerance, c.achieved, std::string(c.pass ? "true" : "false")});
  return t;
}

VerifyReport run_verify(Suite suite, double tolerance_scale) {
  VerifyReport r;
  auto check = [&](const std::string& name, double tol, const std::function<double()>& f) {
    CheckResult c;
    c.name = name;
    c.tolerance = tol * tolerance_scale;
    try {
      c.achieved = f();
    } catch (const Error&) {
      c.achieved = std::numeric_limits<double>::infinity();
    }
    c.pass = c.achieved <= c.tolerance;
    r.checks.push_back(c);
  };

  check("laguerre.contiguous_identity", 1e-12, max_contiguous);
  check("laguerre.derivative_vs_central_difference", 1e-6, max_derivative_fd);
  check("xm.m0_collapse", 1e-12, max_m0_collapse);
  const OrthoStats ortho = orthogonality();
  check("xm.orthogonality_offdiagonal", 1e-8, [&] { return ortho.off; });
  check("xm.norm_vs_quadrature", 1e-8, [&] { return ortho.diag; });
  check("xm.eigen_integer_calibration", 0.0, eigen_calibration_mismatches);
  check("spectrum.closed_form_vs_brent", 1e-10, max_closed_vs_numeric);
  check("spectrum.quadratic_certificate", 1e-10, max_quadratic_certificate);
  check("model.isotonic_vs_extended_partner", 1e-12, max_isotonic_identity);
  check("wave.u11_radial_residual", 1e-8, [] { return max_residual(u11_states(), 0.1, 12.0); });
  check("wave.u11_orthonormality", 1e-8, max_u11_orthonormal);
  check("wave.susy_annihilation", 1e-8, max_annihilation);
  check("wave.isotonic_vs_raising_operator", 1e-10, max_isotonic_vs_raising);
  check("wave.vm_closed_vs_reconstructed", 1e-10, max_vm_dual_path);
  check("wave.u12_exceptional_residual", 1e-6,
        [] { return max_residual(exceptional_states(), 0.2, 10.0); });

  if (suite == Suite::All) {
    check("fd.oscillator_ladder_richardson", 1e-4, fd_oscillator_error);
    check("fd.second_order_ratio", 0.0, fd_order_ratio_deviation);
    check("fd.partner_isospectrality", 1e-4, fd_partner_error);
    check("fd.vm_spectrum_nC_indexing", 1e-4, [] { return fd_vm_error(Indexing::NC); });
  }
  return r;
}

}  // namespace cosmicsusy::cli
