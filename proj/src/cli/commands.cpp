#include "cosmicsusy/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cosmicsusy/errors.hpp"
#include "cosmicsusy/special_functions.hpp"
#include "cosmicsusy/spectrum.hpp"
#include "cosmicsusy/wavefunctions.hpp"

namespace cosmicsusy::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kResidualTol = 1e-10;

void stamp(SeriesTable& t, const std::string& command, const RunConfig& cfg) {
  t.set_meta("tool", std::string("cosmicsusy ") + kToolVersion);
  t.set_meta("command", command);
  for (const auto& [k, v] : echo(cfg)) t.set_meta(k, v);
}

double reference_energy(const RunConfig& cfg) {
  if (cfg.energy) return *cfg.energy;
  const int n = cfg.levels.empty() ? 0 : cfg.levels.front();
  return regular_level(cfg.params, n, Sign::Plus).E;
}

double regular_index(double ell) { return ell > -0.5 ? ell : -1.0 - ell; }

void mask_poles(PotentialCurve& c, double spacing) {
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    for (double pole : c.poles) {
      if (std::abs(c.x[i] - pole) < 0.5 * spacing) c.v[i] = kNaN;
    }
  }
}

}  // namespace

std::vector<std::string> spectrum_columns() {
  return {"n", "sign", "branch", "E", "eps_sq", "ell1_at_E", "residual", "status"};
}

void append_spectrum_rows(SeriesTable& t, const std::vector<Cell>& prefix,
                          const StringParams& p, int n, Branch branch) {
  auto row = [&](std::vector<Cell> tail) {
    std::vector<Cell> r = prefix;
    r.insert(r.end(), tail.begin(), tail.end());
    t.add_row(std::move(r));
  };
  const auto levels = try_energy_closed_form(p, n, branch);
  if (!levels) {
    for (Sign s : {Sign::Plus, Sign::Minus})
      row({static_cast<double>(n), to_string(s), to_string(branch), kNaN, kNaN,
           kNaN, kNaN, std::string("no-real-root")});
    return;
  }
  for (const SpectrumEntry* e : {&levels->first, &levels->second}) {
    const double scale = std::max({e->E * e->E, p.M * p.M, 1.0});
    if (!(std::abs(e->residual) <= kResidualTol * scale))
      throw NumericalError("spectrum row failed its quantization check", e->E,
                           std::abs(e->residual) / scale);
    row({static_cast<double>(n), to_string(e->sign), to_string(branch), e->E,
         e->eps_sq, e->ell1_at_E, e->residual,
         std::string(e->degenerate ? "degenerate" : "ok")});
  }
}

SeriesTable cmd_spectrum(const RunConfig& cfg) {
  cfg.params.require_bound_states();
  SeriesTable t;
  t.columns = spectrum_columns();
  stamp(t, "spectrum", cfg);
  for (int n : cfg.levels) append_spectrum_rows(t, {}, cfg.params, n, cfg.branch);
  return t;
}

PotentialCurve sample_potential(const RunConfig& cfg) {
  const StringParams& p = cfg.params;
  p.require_bound_states();
  PotentialCurve c;
  c.x = cfg.grid.points();
  if (c.x.front() <= 0.0) throw ParameterError("potential grid must be > 0");
  c.v.assign(c.x.size(), kNaN);
  c.energy = reference_energy(cfg);
  const double spacing = (cfg.grid.hi - cfg.grid.lo) / (cfg.grid.count - 1);

  std::function<double(double)> f;
  switch (cfg.potential) {
    case PotentialKind::Veff: {
      c.index = ell1(p, c.energy);
      f = [&](double x) { return v_eff(p, c.index, x); };
      break;
    }
    case PotentialKind::Ueff: {
      c.index = ell2(p, c.energy);
      f = [&](double x) { return u_eff(p, c.index, x); };
      break;
    }
    case PotentialKind::Isotonic: {
      c.index = ell1(p, c.energy);
      const auto ext = make_extension(p, c.index, ExtensionBranch::OnePlusEll1PosA2);
      if (ext.c < 0.0) {
        const double pole = std::sqrt(-ext.c);
        if (pole >= c.x.front() && pole <= c.x.back()) c.poles.push_back(pole);
      }
      f = [&p, &c, cc = ext.c](double x) { return isotonic_v2p(p, c.index, cc, x); };
      break;
    }
    case PotentialKind::Vm: {
      c.index = exceptional_alpha_prime(ell2(p, c.energy), cfg.policy);
      c.inadmissible = !(c.index > 0.0);
      c.poles = exceptional_singularities(p, c.index, cfg.codim_m, c.x.front(),
                                          c.x.back());
      const int m = cfg.codim_m;
      f = [&p, &c, m](double x) { return exceptional_vm_at(p, c.index, m, x, true); };
      break;
    }
  }
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    try {
      c.v[i] = f(c.x[i]);
    } catch (const SingularityError&) {
      c.v[i] = kNaN;
    }
  }
  mask_poles(c, spacing);
  return c;
}

SeriesTable cmd_potential(const RunConfig& cfg) {
  const PotentialCurve c = sample_potential(cfg);
  SeriesTable t;
  t.columns = {"x", "V"};
  stamp(t, "potential", cfg);
  t.set_meta("reference_energy", format_number(c.energy));
  t.set_meta("index", format_number(c.index));
  std::string poles;
  for (double x : c.poles) poles += (poles.empty() ? "" : ";") + format_number(x);
  t.set_meta("poles", poles);
  if (c.inadmissible) t.set_meta("warning", "alpha' <= 0: channel not admissible for states");
  for (std::size_t i = 0; i < c.x.size(); ++i) t.add_row({c.x[i], c.v[i]});
  return t;
}

std::vector<DensityCurve> sample_density(const RunConfig& cfg) {
  const StringParams& p = cfg.params;
  p.require_bound_states();
  const auto xs = cfg.grid.points();
  if (xs.front() <= 0.0) throw ParameterError("density grid must be > 0");
  const double omega = p.omega();
  std::vector<DensityCurve> out;
  for (int n : cfg.levels) {
    DensityCurve d;
    d.n = n;
    JetFunction u1, u2;
    switch (cfg.channel) {
      case DensityChannel::Ordinary: {
        const SpectrumEntry s = regular_level(p, n, Sign::Plus);
        d.energy = s.E;
        const double l1 = s.ell1_at_E;
        const Branch b = s.branch;
        const double l2 = regular_index(ell2(p, s.E));
        u1 = [=](double x) { return u11_jet(p, l1, n, x, b); };
        u2 = [=](double x) { return radial_oscillator_jet(omega, l2, n, x); };
        break;
      }
      case DensityChannel::Isotonic: {
        const SpectrumEntry s = energy_closed_form(p, n, Branch::L1).first;
        d.energy = s.E;
        const double l1 = s.ell1_at_E;
        if (!(l1 > -0.5))
          throw ParameterError("non-normalizable channel: isotonic partner needs ell1 > -1/2");
        const double c = make_extension(p, l1, ExtensionBranch::OnePlusEll1PosA2).c;
        if (c < 0.0)
          throw ParameterError("isotonic partner state has a pole at x = sqrt(-c)");
        u1 = [=](double x) { return u11_jet(p, l1, n, x, Branch::L1); };
        auto raw = [=](double x) { return u12_isotonic_scaled(p, l1, n, c, x); };
        const double shift = -0.5 * std::log(quadrature_norm(raw));
        u2 = [=](double x) {
          Jet j = raw(x);
          j.log_scale += shift;
          return j;
        };
        break;
      }
      case DensityChannel::Exceptional: {
        const SpectrumEntry s = exceptional_energy(p, n, cfg.codim_m, cfg.indexing,
                                                   Sign::Plus, AlphaPolicy::Regular);
        d.energy = s.E;
        const double l1 = regular_index(s.ell1_at_E);
        const double ap = exceptional_alpha_prime(ell2(p, s.E), AlphaPolicy::Regular);
        const int m = cfg.codim_m;
        u1 = [=](double x) { return u11_jet(p, l1, n, x, Branch::L1); };
        u2 = [=](double x) { return u12_exceptional_jet(p, ap, n, m, x); };
        break;
      }
    }
    d.rho.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double a = u1(xs[i]).u(), b = u2(xs[i]).u();
      d.rho[i] = a * a + b * b;
    }
    out.push_back(std::move(d));
  }
  return out;
}

SeriesTable cmd_density(const RunConfig& cfg) {
  const auto curves = sample_density(cfg);
  const auto xs = cfg.grid.points();
  SeriesTable t;
  t.columns = {"x", "r"};
  for (const auto& c : curves) t.columns.push_back("rho_n" + std::to_string(c.n));
  stamp(t, "density", cfg);
  for (const auto& c : curves)
    t.set_meta("energy_n" + std::to_string(c.n), format_number(c.energy));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Cell> row{xs[i], x_to_r(xs[i], cfg.params.M)};
    for (const auto& c : curves) row.emplace_back(c.rho[i]);
    t.add_row(std::move(row));
  }
  return t;
}

SeriesTable cmd_polynomial(const RunConfig& cfg) {
  std::vector<XmParams> polys;
  for (int n : cfg.levels) {
    XmParams xp{cfg.codim_m, cfg.alpha_prime, n};
    xp.validate();
    polys.push_back(xp);
  }
  SeriesTable t;
  t.columns = {"g", "weight"};
  for (const auto& xp : polys) t.columns.push_back("X_n" + std::to_string(xp.n));
  stamp(t, "polynomial", cfg);
  if (polys.empty()) return t;
  const XmParams base{cfg.codim_m, cfg.alpha_prime, cfg.codim_m};
  for (double g : cfg.grid.points()) {
    if (!(g > 0.0)) throw ParameterError("polynomial grid must be > 0");
    std::vector<Cell> row{g, xm_weight(base, g)};
    for (const auto& xp : polys) row.emplace_back(xm_eval(xp, g));
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace cosmicsusy::cli
