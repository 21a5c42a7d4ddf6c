#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cosmicsusy/cli/config.hpp"
#include "cosmicsusy/cli/series_table.hpp"

namespace cosmicsusy::cli {

enum class PresetKind { SpectrumSweep, SpectrumGrid, Potential, Density };

struct PresetSeries {
  std::string label;
  RunConfig config;
};

// One figure's worth of parameter tuples. Spectrum presets sweep one or two
// StringParams fields (by config key) over the given ranges; potential and
// density presets use each series config's own grid.
struct FigurePreset {
  std::string id;
  PresetKind kind = PresetKind::Potential;
  std::string description;
  // How parameter tuples map to emitted series.
  std::string expansion;
  std::vector<PresetSeries> series;
  std::string sweep_key;
  GridSpec sweep{};
  std::string sweep2_key;
  GridSpec sweep2{};
};

const std::vector<FigurePreset>& all_presets();
// Throws ParameterError for an unknown id.
const FigurePreset& find_preset(std::string_view id);

SeriesTable run_preset(const FigurePreset& preset);
SeriesTable run_preset(std::string_view id);

}  // namespace cosmicsusy::cli
