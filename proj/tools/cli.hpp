#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cavityrad/geometry.hpp"

namespace cavityrad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

enum class Shape { Film, Rod, Box, Sphere };

/// One validated `spectrum` or `modes` run.
struct RunConfig {
  Shape shape = Shape::Film;
  std::vector<double> lengths;  // film 1, rod 2, box 3, sphere {diameter}
  BoundaryCondition bc = BoundaryCondition::Dirichlet;
  double temperature = 300.0;
  double omega_min = 0.0;
  double omega_max = 1e15;
  std::size_t samples = 2000;
  double delta_omega = 1e13;
  bool compare_planck = false;
  bool compare_weyl = false;
  bool json = false;
  std::uint64_t max_lattice_points = 100'000'000;
  unsigned threads = 0;
};

/// Column-oriented result of a spectrum run. Binned runs use bin left edges
/// as the abscissa and bin averages for the comparison columns.
struct SpectrumTable {
  bool binned = false;
  std::vector<double> omega;
  std::vector<std::string> names;    // cavity, planck, weyl
  std::vector<std::string> headers;  // CSV column headers, abscissa first
  std::vector<std::vector<std::optional<double>>> columns;
  std::vector<std::string> warnings;
};

SpectrumTable compute_spectrum(const RunConfig& config);
void write_csv(std::ostream& out, const SpectrumTable& table);
void write_json(std::ostream& out, const RunConfig& config, const SpectrumTable& table);

/// Output file name and run for each curve of a figure preset. Curves
/// without a run are Planck reference curves on the preset grid.
struct FigureCurve {
  std::string filename;
  std::optional<RunConfig> run;
  double omega_max = 1e15;
  std::size_t samples = 2000;
};

/// Presets for figures 1-4; empty for any other id.
std::vector<FigureCurve> figure_presets(int id);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cavityrad::cli
