#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cosmicsusy/cli/commands.hpp"
#include "cosmicsusy/cli/config.hpp"
#include "cosmicsusy/cli/presets.hpp"
#include "cosmicsusy/cli/series_table.hpp"
#include "cosmicsusy/cli/verify.hpp"
#include "cosmicsusy/errors.hpp"

namespace cs = cosmicsusy;
namespace cli = cosmicsusy::cli;

namespace {

enum Exit { kOk = 0, kUsage = 1, kBadInput = 2, kNumerical = 3, kVerifyFailed = 4 };

struct Common {
  std::string out;
  std::string format;
  std::string grid;
  std::string branch;
  std::string indexing;
  std::string config;
  std::vector<std::string> sets;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out,-o", c.out, "Output file (stdout if omitted)");
  sub->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--grid", c.grid, "Sample grid lo:hi:count");
  sub->add_option("--branch", c.branch, "l1 or neg-l1");
  sub->add_option("--indexing", c.indexing, "nC or n+mC");
  sub->add_option("--config", c.config, "key=value configuration file");
  sub->add_option("--set", c.sets, "Override one setting, key=value")
      ->allow_extra_args(false);
}

cli::RunConfig build_config(const Common& c) {
  cli::RunConfig cfg;
  if (!c.config.empty()) cli::apply_config_file(cfg, c.config);
  for (const auto& s : c.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw cs::ParameterError("--set expects key=value, got '" + s + "'");
    cli::apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
  }
  if (!c.grid.empty()) cli::apply_setting(cfg, "grid", c.grid);
  if (!c.branch.empty()) cli::apply_setting(cfg, "branch", c.branch);
  if (!c.indexing.empty()) cli::apply_setting(cfg, "indexing", c.indexing);
  return cfg;
}

void emit(const cli::SeriesTable& t, const Common& c) {
  std::optional<cli::Format> f;
  if (!c.format.empty()) f = cli::parse_format(c.format);
  if (c.out.empty()) {
    std::cout << cli::render(t, f.value_or(cli::Format::Csv));
    std::cout.flush();
  } else {
    cli::write_table(t, c.out, f);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, potentials and densities of a fermion near a spinning cosmic string"};
  app.set_version_flag("--version", std::string("cosmicsusy ") + cli::kToolVersion);
  app.require_subcommand(1);

  Common spectrum_c, potential_c, density_c, polynomial_c, preset_c, verify_c;

  auto* spectrum = app.add_subcommand("spectrum", "Energy levels E(n) for both signs");
  add_common(spectrum, spectrum_c);
  auto* potential = app.add_subcommand("potential", "Sample an effective potential");
  add_common(potential, potential_c);
  auto* density = app.add_subcommand("density", "Sample probability densities");
  add_common(density, density_c);
  auto* polynomial = app.add_subcommand("polynomial", "Sample exceptional polynomials");
  add_common(polynomial, polynomial_c);

  auto* preset = app.add_subcommand("preset", "Regenerate a figure's data series");
  std::string preset_id;
  preset->add_option("id", preset_id, "fig1 .. fig10")->required();
  preset->add_option("--out,-o", preset_c.out, "Output file (stdout if omitted)");
  preset->add_option("--format", preset_c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Run the built-in self-checks");
  std::string suite = "fast";
  double tolerance_scale = 1.0;
  verify->add_option("--suite", suite, "fast or all")->check(CLI::IsMember({"fast", "all"}));
  verify->add_option("--tolerance-scale", tolerance_scale, "Multiply every tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out,-o", verify_c.out, "Report file (stdout if omitted)");
  verify->add_option("--format", verify_c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*spectrum) emit(cli::cmd_spectrum(build_config(spectrum_c)), spectrum_c);
    if (*potential) emit(cli::cmd_potential(build_config(potential_c)), potential_c);
    if (*density) emit(cli::cmd_density(build_config(density_c)), density_c);
    if (*polynomial) emit(cli::cmd_polynomial(build_config(polynomial_c)), polynomial_c);
    if (*preset) emit(cli::run_preset(preset_id), preset_c);
    if (*verify) {
      const auto report = cli::run_verify(
          suite == "all" ? cli::Suite::All : cli::Suite::Fast, tolerance_scale);
      emit(report.table(), verify_c);
      if (!report.all_pass()) {
        std::cerr << "verification failed: " << report.first_failure() << "\n";
        return kVerifyFailed;
      }
    }
  } catch (const cs::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumerical;
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
