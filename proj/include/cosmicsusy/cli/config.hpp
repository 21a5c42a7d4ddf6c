#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cosmicsusy/spectrum.hpp"
#include "cosmicsusy/string_model.hpp"

namespace cosmicsusy::cli {

// lo:hi:count
struct GridSpec {
  double lo = 0.05;
  double hi = 10.0;
  int count = 200;

  static GridSpec parse(std::string_view text);
  std::string str() const;
  std::vector<double> points() const;
};

enum class PotentialKind { Veff, Ueff, Isotonic, Vm };
enum class DensityChannel { Ordinary, Isotonic, Exceptional };

// Everything a subcommand reads. Filled from defaults, then a flat
// key=value file, then command-line overrides.
struct RunConfig {
  StringParams params{};
  std::vector<int> levels{0};
  int codim_m = 1;
  double alpha_prime = 1.5;
  PotentialKind potential = PotentialKind::Veff;
  DensityChannel channel = DensityChannel::Ordinary;
  Branch branch = Branch::NegL1;
  Indexing indexing = Indexing::NC;
  AlphaPolicy policy = AlphaPolicy::Literal;
  GridSpec grid{};
  // Energy at which E-dependent indices are frozen for potential plots.
  // Unset means the regular level of the first entry of `levels`.
  std::optional<double> energy;
};

// Throws ParameterError for unknown keys or unparsable values.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

// "key=value" lines; blank lines and lines starting with '#' are skipped.
void apply_config_text(RunConfig& cfg, std::string_view text);
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);

// Ordered key/value echo of every setting, in the config file syntax.
std::vector<std::pair<std::string, std::string>> echo(const RunConfig& cfg);

std::string to_string(Branch b);
std::string to_string(Indexing i);
std::string to_string(PotentialKind k);
std::string to_string(DensityChannel c);
std::string to_string(AlphaPolicy p);
std::string to_string(Sign s);

Branch parse_branch(std::string_view s);
Indexing parse_indexing(std::string_view s);

}  // namespace cosmicsusy::cli
