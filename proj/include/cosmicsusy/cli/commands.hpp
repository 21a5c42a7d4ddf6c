#pragma once

#include <string>
#include <vector>

#include "cosmicsusy/cli/config.hpp"
#include "cosmicsusy/cli/series_table.hpp"

namespace cosmicsusy::cli {

// Columns n, sign, branch, E, eps_sq, ell1_at_E, residual, status. Levels
// without a real root get status "no-real-root" and gaps. Every emitted root
// is re-checked against the quantization residual (relative 1e-10) and a
// NumericalError is raised otherwise.
SeriesTable cmd_spectrum(const RunConfig& cfg);

// Appends the two sign rows of level n to a table whose leading columns are
// `prefix`, followed by the cmd_spectrum columns.
void append_spectrum_rows(SeriesTable& t, const std::vector<Cell>& prefix,
                          const StringParams& p, int n, Branch branch);
std::vector<std::string> spectrum_columns();

struct PotentialCurve {
  std::vector<double> x;
  std::vector<double> v;      // NaN at masked abscissae
  std::vector<double> poles;  // inside the grid range
  double energy = 0.0;        // where E-dependent indices were frozen
  double index = 0.0;         // ell1, ell2 or alpha' as used
  bool inadmissible = false;  // literal alpha' <= 0 was plotted
};

// Samples the configured potential on cfg.grid. Grid points closer than half
// a spacing to a pole are masked.
PotentialCurve sample_potential(const RunConfig& cfg);

// Columns x, V.
SeriesTable cmd_potential(const RunConfig& cfg);

struct DensityCurve {
  int n = 0;
  double energy = 0.0;
  std::vector<double> rho;
};

// |u11|^2 + |u12|^2 of unit-normalized components on the x grid, per level.
std::vector<DensityCurve> sample_density(const RunConfig& cfg);

// Columns x, r, rho_n<k>... (r = x / sqrt(2M)).
SeriesTable cmd_density(const RunConfig& cfg);

// Columns g, weight, X_n<k>... for codim and alpha_prime over cfg.grid.
SeriesTable cmd_polynomial(const RunConfig& cfg);

}  // namespace cosmicsusy::cli
