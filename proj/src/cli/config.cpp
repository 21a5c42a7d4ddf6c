#include "cosmicsusy/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cosmicsusy/cli/series_table.hpp"
#include "cosmicsusy/errors.hpp"

namespace cosmicsusy::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParameterError("config: '" + std::string(key) + "' expects a number, got '" +
                         std::string(text) + "'");
  return v;
}

int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParameterError("config: '" + std::string(key) + "' expects an integer, got '" +
                         std::string(text) + "'");
  return v;
}

std::vector<int> parse_levels(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - start);
    const int n = parse_int("n", item);
    if (n < 0) throw ParameterError("config: levels must be >= 0");
    out.push_back(n);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void bad_choice(std::string_view key, std::string_view value) {
  throw ParameterError("config: invalid value '" + std::string(value) + "' for '" +
                       std::string(key) + "'");
}

}  // namespace

GridSpec GridSpec::parse(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c1 == std::string_view::npos || c2 == std::string_view::npos)
    throw ParameterError("grid: expected lo:hi:count, got '" + std::string(text) + "'");
  GridSpec g;
  g.lo = parse_double("grid", text.substr(0, c1));
  g.hi = parse_double("grid", text.substr(c1 + 1, c2 - c1 - 1));
  g.count = parse_int("grid", text.substr(c2 + 1));
  if (!(g.hi > g.lo) || g.count < 2)
    throw ParameterError("grid: need hi > lo and count >= 2");
  return g;
}

std::string GridSpec::str() const {
  return format_compact(lo) + ":" + format_compact(hi) + ":" + std::to_string(count);
}

std::vector<double> GridSpec::points() const {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = i + 1 == count ? hi : lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  return out;
}

Branch parse_branch(std::string_view s) {
  if (s == "l1") return Branch::L1;
  if (s == "neg-l1") return Branch::NegL1;
  bad_choice("branch", s);
}

Indexing parse_indexing(std::string_view s) {
  if (s == "nC") return Indexing::NC;
  if (s == "n+mC") return Indexing::NPlusMC;
  bad_choice("indexing", s);
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  auto& p = cfg.params;
  if (key == "alpha") p.alpha = parse_double(key, value);
  else if (key == "a") p.a = parse_double(key, value);
  else if (key == "B") p.B = parse_double(key, value);
  else if (key == "Phi") p.Phi = parse_double(key, value);
  else if (key == "M") p.M = parse_double(key, value);
  else if (key == "e") p.e = parse_double(key, value);
  else if (key == "m") p.azimuthal_m = parse_int(key, value);
  else if (key == "n") cfg.levels = parse_levels(value);
  else if (key == "codim") {
    cfg.codim_m = parse_int(key, value);
    if (cfg.codim_m < 0) throw ParameterError("config: codim must be >= 0");
  } else if (key == "alpha_prime") cfg.alpha_prime = parse_double(key, value);
  else if (key == "potential") {
    if (value == "veff") cfg.potential = PotentialKind::Veff;
    else if (value == "ueff") cfg.potential = PotentialKind::Ueff;
    else if (value == "isotonic") cfg.potential = PotentialKind::Isotonic;
    else if (value == "vm") cfg.potential = PotentialKind::Vm;
    else bad_choice(key, value);
  } else if (key == "channel") {
    if (value == "ordinary") cfg.channel = DensityChannel::Ordinary;
    else if (value == "isotonic") cfg.channel = DensityChannel::Isotonic;
    else if (value == "exceptional") cfg.channel = DensityChannel::Exceptional;
    else bad_choice(key, value);
  } else if (key == "branch") cfg.branch = parse_branch(value);
  else if (key == "indexing") cfg.indexing = parse_indexing(value);
  else if (key == "policy") {
    if (value == "literal") cfg.policy = AlphaPolicy::Literal;
    else if (value == "regular") cfg.policy = AlphaPolicy::Regular;
    else bad_choice(key, value);
  } else if (key == "grid") cfg.grid = GridSpec::parse(value);
  else if (key == "energy") {
    if (value == "auto") cfg.energy.reset();
    else cfg.energy = parse_double(key, value);
  } else {
    throw ParameterError("config: unknown key '" + std::string(key) + "'");
  }
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::size_t start = 0;
  int line_no = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParameterError("config line " + std::to_string(line_no) +
                           ": expected key=value");
    apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ParameterError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  apply_config_text(cfg, ss.str());
}

std::string to_string(Branch b) { return b == Branch::L1 ? "l1" : "neg-l1"; }
std::string to_string(Indexing i) { return i == Indexing::NC ? "nC" : "n+mC"; }
std::string to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }
std::string to_string(AlphaPolicy p) {
  return p == AlphaPolicy::Literal ? "literal" : "regular";
}
std::string to_string(PotentialKind k) {
  switch (k) {
    case PotentialKind::Veff: return "veff";
    case PotentialKind::Ueff: return "ueff";
    case PotentialKind::Isotonic: return "isotonic";
    case PotentialKind::Vm: return "vm";
  }
  return {};
}
std::string to_string(DensityChannel c) {
  switch (c) {
    case DensityChannel::Ordinary: return "ordinary";
    case DensityChannel::Isotonic: return "isotonic";
    case DensityChannel::Exceptional: return "exceptional";
  }
  return {};
}

std::vector<std::pair<std::string, std::string>> echo(const RunConfig& cfg) {
  const auto& p = cfg.params;
  std::string levels;
  for (std::size_t i = 0; i < cfg.levels.size(); ++i) {
    if (i) levels += ',';
    levels += std::to_string(cfg.levels[i]);
  }
  return {
      {"alpha", format_compact(p.alpha)},
      {"a", format_compact(p.a)},
      {"B", format_compact(p.B)},
      {"Phi", format_compact(p.Phi)},
      {"M", format_compact(p.M)},
      {"e", format_compact(p.e)},
      {"m", std::to_string(p.azimuthal_m)},
      {"n", levels},
      {"codim", std::to_string(cfg.codim_m)},
      {"alpha_prime", format_compact(cfg.alpha_prime)},
      {"potential", to_string(cfg.potential)},
      {"channel", to_string(cfg.channel)},
      {"branch", to_string(cfg.branch)},
      {"indexing", to_string(cfg.indexing)},
      {"policy", to_string(cfg.policy)},
      {"grid", cfg.grid.str()},
      {"energy", cfg.energy ? format_compact(*cfg.energy) : "auto"},
  };
}

}  // namespace cosmicsusy::cli
