#include "cosmicsusy/cli/presets.hpp"

#include <tuple>

#include "cosmicsusy/cli/commands.hpp"
#include "cosmicsusy/errors.hpp"

namespace cosmicsusy::cli {

namespace {

RunConfig base(double alpha, double a, double B, double Phi, double M, double e,
               int m, std::vector<int> levels) {
  RunConfig c;
  c.params = StringParams{alpha, a, B, Phi, M, e, m};
  c.levels = std::move(levels);
  return c;
}

std::string label_of(std::initializer_list<std::pair<const char*, double>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ',';
    out += std::string(k) + "=" + format_compact(v);
  }
  return out;
}

std::vector<FigurePreset> build() {
  std::vector<FigurePreset> out;

  {
    FigurePreset f;
    f.id = "fig1";
    f.kind = PresetKind::SpectrumSweep;
    f.description = "energy of level n=1 versus flux, M=2, m=1, e=1";
    f.expansion = "each (B,a,alpha) tuple emits a + and a - branch per flux value";
    for (auto [B, a, alpha] : {std::tuple{100.0, 0.1, 0.1}, std::tuple{1.0, 0.5, 0.2},
                               std::tuple{8.0, 0.1, 0.45}}) {
      f.series.push_back({label_of({{"B", B}, {"a", a}, {"alpha", alpha}}),
                          base(alpha, a, B, 0.0, 2.0, 1.0, 1, {1})});
    }
    f.sweep_key = "Phi";
    f.sweep = {0.0, 20.0, 201};
    out.push_back(std::move(f));
  }
  {
    FigurePreset f;
    f.id = "fig2";
    f.kind = PresetKind::Potential;
    f.description = "v-channel effective potential, M=2, m=1, e=1, B=10, alpha=0.5";
    f.expansion = "one curve per (Phi,a) tuple; indices frozen at the regular n=0 particle energy";
    for (auto [Phi, a] : {std::pair{0.4, 1.0}, std::pair{5.0, 2.0}, std::pair{10.0, 5.0},
                          std::pair{20.0, 2.0}}) {
      RunConfig c = base(0.5, a, 10.0, Phi, 2.0, 1.0, 1, {0});
      c.potential = PotentialKind::Veff;
      c.grid = {0.05, 10.0, 400};
      f.series.push_back({label_of({{"Phi", Phi}, {"a", a}}), c});
    }
    out.push_back(std::move(f));
  }
  {
    FigurePreset f;
    f.id = "fig3";
    f.kind = PresetKind::Potential;
    f.description = "u-channel effective potential, M=2, m=1, e=1, n=1, Phi=0.1, alpha=0.1";
    f.expansion = "one curve per (B,a) tuple; indices frozen at the regular n=1 particle energy";
    for (auto [B, a] : {std::pair{0.1, 1.2}, std::pair{0.5, 10.0}, std::pair{140.0, 50.0}}) {
      RunConfig c = base(0.1, a, B, 0.1, 2.0, 1.0, 1, {1});
      c.potential = PotentialKind::Ueff;
      c.grid = {0.05, 10.0, 400};
      f.series.push_back({label_of({{"B", B}, {"a", a}}), c});
    }
    out.push_back(std::move(f));
  }
  {
    FigurePreset f;
    f.id = "fig4";
    f.kind = PresetKind::Density;
    f.description = "ordinary density, B=100, alpha=0.1, Phi=10, a=0.1, M=2, m=1, e=1";
    f.expansion = "one column per level n=0,1,2; each component on its regular branch";
    RunConfig c = base(0.1, 0.1, 100.0, 10.0, 2.0, 1.0, 1, {0, 1, 2});
    c.channel = DensityChannel::Ordinary;
    c.grid = {0.01, 6.0, 600};
    f.series.push_back({label_of({{"B", 100.0}, {"alpha", 0.1}, {"Phi", 10.0}, {"a", 0.1}}), c});
    out.push_back(std::move(f));
  }
  {
    FigurePreset f;
    f.id = "fig5";
    f.kind = PresetKind::SpectrumSweep;
    f.description = "energy of level n=1 versus alpha, M=2, m=1, e=1, a=0.1";
    f.expansion = "each (Phi,B) tuple emits a + and a - branch per alpha value";
    for (auto [Phi, B] : {std::pair{0.5, 5.0}, std::pair{1.3, 10.0}, std::pair{5.0, 50.0}}) {
      f.series.push_back({label_of({{"Phi", Phi}, {"B", B}}),
                          base(1.0, 0.1, B, Phi, 2.0, 1.0, 1, {1})});
    }
    f.sweep_key = "alpha";
    f.sweep = {0.005, 1.0, 200};
    out.push_back(std::move(f));
  }
  {
    FigurePreset f;
    f.id = "fig6";
    f.kind = PresetKind::Potential;
    f.description = "isotonic partner potential, a=0.1, B=10, M=2, m=1, alpha=0.2, e=1";
    f.expansion = "one curve per flux; indices frozen at E=M; a1=1+ell1, a2=+Be/4M";
    for (double Phi : {0.5, 1.5, 0.1, 50.0}) {
      RunConfig c = base(0.2, 0.1, 10.0, Phi, 2.0, 1.0, 1, {0});
      c.potential = PotentialKind::Isotonic;
      c.energy = 2.0;
      c.grid = {0.05, 10.0, 400};
      f.series.push_back({label_of({{"Phi", Phi}}), c});
    }
    out.push_back(std::move(f));
  }
  {
    FigurePreset f;
    f.id = "fig7";
    f.kind = PresetKind::Potential;
    f.description = "codimension-1 rationally extended potential, a=0.1, B=10, M=2, m=1, alpha=0.2, e=1";
    f.expansion = "one curve per flux; alpha'=ell2+1/2 at E=M taken literally; poles masked";
    for (double Phi : {0.1, 0.5, 0.95}) {
      RunConfig c = base(0.2, 0.1, 10.0, Phi, 2.0, 1.0, 1, {0});
      c.potential = PotentialKind::Vm;
      c.codim_m = 1;
      c.energy = 2.0;
      c.policy = AlphaPolicy::Literal;
      c.grid = {0.05, 10.0, 400};
      f.series.push_back({label_of({{"Phi", Phi}}), c});
    }
    out.push_back(std::move(f));
  }
  {
    FigurePreset f;
    f.id = "fig8";
    f.kind = PresetKind::Density;
    f.description = "isotonic density, a=0.1, B=10, M=2, m=1, alpha=0.2, Phi=0.9, e=1";
    f.expansion = "one column per level n=0,1,3; partner state normalized by quadrature";
    RunConfig c = base(0.2, 0.1, 10.0, 0.9, 2.0, 1.0, 1, {0, 1, 3});
    c.channel = DensityChannel::Isotonic;
    c.grid = {0.01, 8.0, 800};
    f.series.push_back({label_of({{"Phi", 0.9}}), c});
    out.push_back(std::move(f));
  }
  {
    FigurePreset f;
    f.id = "fig9";
    f.kind = PresetKind::Density;
    f.description = "exceptional density, a=0.1, B=10, M=2, m=1, codim=1, alpha=0.2, Phi=0.5, e=1";
    f.expansion = "one column per level n=0,1,2; alpha' reflected to the regular value";
    RunConfig c = base(0.2, 0.1, 10.0, 0.5, 2.0, 1.0, 1, {0, 1, 2});
    c.channel = DensityChannel::Exceptional;
    c.codim_m = 1;
    c.grid = {0.01, 8.0, 800};
    f.series.push_back({label_of({{"Phi", 0.5}, {"codim", 1.0}}), c});
    out.push_back(std::move(f));
  }
  {
    FigurePreset f;
    f.id = "fig10";
    f.kind = PresetKind::SpectrumGrid;
    f.description = "energy of level n=2 over (B, Phi), a=0.2, M=2, m=1, alpha=0.6, e=1";
    f.expansion = "long format: one + and one - row per (B,Phi) node";
    f.series.push_back({label_of({{"a", 0.2}, {"alpha", 0.6}}),
                        base(0.6, 0.2, 10.0, 0.0, 2.0, 1.0, 1, {2})});
    f.sweep_key = "B";
    f.sweep = {1.0, 20.0, 20};
    f.sweep2_key = "Phi";
    f.sweep2 = {0.0, 20.0, 41};
    out.push_back(std::move(f));
  }
  return out;
}

void stamp(SeriesTable& t, const FigurePreset& f) {
  t.set_meta("tool", std::string("cosmicsusy ") + kToolVersion);
  t.set_meta("preset", f.id);
  t.set_meta("description", f.description);
  t.set_meta("expansion", f.expansion);
  if (!f.sweep_key.empty()) t.set_meta("sweep." + f.sweep_key, f.sweep.str());
  if (!f.sweep2_key.empty()) t.set_meta("sweep." + f.sweep2_key, f.sweep2.str());
  for (std::size_t i = 0; i < f.series.size(); ++i) {
    std::string params;
    for (const auto& [k, v] : echo(f.series[i].config)) {
      if (!params.empty()) params += ' ';
      params += k + "=" + v;
    }
    t.set_meta("label." + std::to_string(i), f.series[i].label);
    t.set_meta("config." + std::to_string(i), params);
  }
}

SeriesTable run_spectrum(const FigurePreset& f) {
  SeriesTable t;
  t.columns = {"series", f.sweep_key};
  if (f.kind == PresetKind::SpectrumGrid) t.columns.push_back(f.sweep2_key);
  for (auto& c : spectrum_columns()) t.columns.push_back(c);
  stamp(t, f);
  const std::vector<double> outer = f.sweep.points();
  const std::vector<double> inner =
      f.kind == PresetKind::SpectrumGrid ? f.sweep2.points() : std::vector<double>{0.0};
  for (const auto& s : f.series) {
    for (double v1 : outer) {
      for (double v2 : inner) {
        RunConfig c = s.config;
        apply_setting(c, f.sweep_key, format_number(v1));
        std::vector<Cell> prefix{s.label, v1};
        if (f.kind == PresetKind::SpectrumGrid) {
          apply_setting(c, f.sweep2_key, format_number(v2));
          prefix.emplace_back(v2);
        }
        for (int n : c.levels) append_spectrum_rows(t, prefix, c.params, n, c.branch);
      }
    }
  }
  return t;
}

SeriesTable run_potential(const FigurePreset& f) {
  SeriesTable t;
  t.columns = {"series", "x", "V"};
  stamp(t, f);
  for (std::size_t i = 0; i < f.series.size(); ++i) {
    const auto& s = f.series[i];
    const std::string tag = "." + std::to_string(i);
    const PotentialCurve c = sample_potential(s.config);
    t.set_meta("reference_energy" + tag, format_number(c.energy));
    t.set_meta("index" + tag, format_number(c.index));
    std::string poles;
    for (double x : c.poles) poles += (poles.empty() ? "" : ";") + format_number(x);
    t.set_meta("poles" + tag, poles);
    for (std::size_t i = 0; i < c.x.size(); ++i) t.add_row({s.label, c.x[i], c.v[i]});
  }
  return t;
}

SeriesTable run_density(const FigurePreset& f) {
  SeriesTable t = cmd_density(f.series.front().config);
  auto energies = t.metadata;
  t.metadata.clear();
  stamp(t, f);
  for (const auto& [k, v] : energies)
    if (k.rfind("energy_", 0) == 0) t.set_meta(k, v);
  return t;
}

}  // namespace

const std::vector<FigurePreset>& all_presets() {
  static const std::vector<FigurePreset> presets = build();
  return presets;
}

const FigurePreset& find_preset(std::string_view id) {
  for (const auto& p : all_presets())
    if (p.id == id) return p;
  throw ParameterError("unknown preset '" + std::string(id) + "'");
}

SeriesTable run_preset(const FigurePreset& preset) {
  switch (preset.kind) {
    case PresetKind::SpectrumSweep:
    case PresetKind::SpectrumGrid: return run_spectrum(preset);
    case PresetKind::Potential: return run_potential(preset);
    case PresetKind::Density: return run_density(preset);
  }
  throw ParameterError("unhandled preset kind");
}

SeriesTable run_preset(std::string_view id) { return run_preset(find_preset(id)); }

}  // namespace cosmicsusy::cli
