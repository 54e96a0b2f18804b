#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "cavityrad/binned.hpp"
#include "cavityrad/csv.hpp"
#include "cavityrad/errors.hpp"
#include "cavityrad/modes.hpp"
#include "cavityrad/physics.hpp"
#include "cavityrad/slab_rod.hpp"

namespace cavityrad::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view shape_name(Shape shape) {
  switch (shape) {
    case Shape::Film:
      return "film";
    case Shape::Rod:
      return "rod";
    case Shape::Box:
      return "box";
    case Shape::Sphere:
      return "sphere";
  }
  return "?";
}

Shape parse_shape(const std::string& text) {
  if (text == "film") return Shape::Film;
  if (text == "rod") return Shape::Rod;
  if (text == "box") return Shape::Box;
  if (text == "sphere") return Shape::Sphere;
  throw UsageError("unknown geometry '" + text + "' (expected film, rod, box or sphere)");
}

// Flags as typed, before validation.
struct RawOptions {
  std::string geometry;
  std::string bc;
  double length = 0.0;
  std::vector<double> lengths;
  double diameter = 0.0;
  double temperature = 300.0;
  double omega_min = 0.0;
  double omega_max = 1e15;
  std::size_t samples = 2000;
  double delta_omega = 1e13;
  std::vector<std::string> compare;
  std::string format = "csv";
  std::string output;
  std::string config;
  std::uint64_t max_lattice_points = 100'000'000;
};

void add_run_options(CLI::App& sub, RawOptions& raw, bool spectrum) {
  sub.add_option("--geometry", raw.geometry, "film | rod | box | sphere")->required();
  sub.add_option("--bc", raw.bc, "periodic | antiperiodic | dirichlet (sphere: dirichlet only)");
  sub.add_option("--length", raw.length, "Edge length in m (film thickness, square rod, cube)");
  sub.add_option("--lengths", raw.lengths, "Comma-separated edge lengths in m (rod: 2, box: 3)")
      ->delimiter(',');
  sub.add_option("--diameter", raw.diameter, "Sphere diameter in m");
  sub.add_option("--omega-max", raw.omega_max, "Upper angular frequency in rad/s");
  sub.add_option("--max-lattice-points", raw.max_lattice_points,
                 "Refuse mode enumerations larger than this");
  sub.add_option("-o,--output", raw.output, "Output file (default: stdout)");
  if (spectrum) {
    sub.add_option("--temperature", raw.temperature, "Temperature in K");
    sub.add_option("--omega-min", raw.omega_min, "Lower angular frequency in rad/s");
    sub.add_option("--samples", raw.samples, "Grid points for film and rod spectra");
    sub.add_option("--delta-omega", raw.delta_omega, "Bin width in rad/s for box and sphere");
    sub.add_option("--compare", raw.compare, "Reference curves: planck, weyl")->delimiter(',');
    sub.add_option("--format", raw.format, "csv | json");
  }
  sub.add_option("--config", raw.config, "key=value file with the same keys as the flags");
}

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

RunConfig validate(const RawOptions& raw, unsigned threads) {
  RunConfig config;
  config.shape = parse_shape(raw.geometry);
  config.temperature = raw.temperature;
  config.omega_min = raw.omega_min;
  config.omega_max = raw.omega_max;
  config.samples = raw.samples;
  config.delta_omega = raw.delta_omega;
  config.max_lattice_points = raw.max_lattice_points;
  config.threads = threads;

  const std::size_t needed = config.shape == Shape::Film  ? 1
                             : config.shape == Shape::Rod ? 2
                             : config.shape == Shape::Box ? 3
                                                          : 1;
  if (config.shape == Shape::Sphere) {
    require(raw.diameter > 0.0 || raw.length > 0.0, "sphere needs --diameter");
    config.lengths = {raw.diameter > 0.0 ? raw.diameter : raw.length};
  } else if (!raw.lengths.empty()) {
    require(raw.lengths.size() == needed, std::string(shape_name(config.shape)) + " needs " +
                                              std::to_string(needed) + " value(s) in --lengths");
    config.lengths = raw.lengths;
  } else {
    require(raw.length != 0.0, std::string(shape_name(config.shape)) + " needs --length or --lengths");
    config.lengths.assign(needed, raw.length);
  }
  for (double l : config.lengths) {
    require(std::isfinite(l) && l > 0.0, "lengths must be positive");
  }

  if (config.shape == Shape::Sphere) {
    if (!raw.bc.empty()) {
      BoundaryCondition bc{};
      try {
        bc = parse_boundary_condition(raw.bc);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      require(bc == BoundaryCondition::Dirichlet, "sphere supports only --bc dirichlet");
    }
    config.bc = BoundaryCondition::Dirichlet;
  } else {
    require(!raw.bc.empty(), std::string(shape_name(config.shape)) + " needs --bc");
    try {
      config.bc = parse_boundary_condition(raw.bc);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  require(std::isfinite(config.temperature) && config.temperature > 0.0, "temperature must be > 0");
  require(std::isfinite(config.omega_min) && config.omega_min >= 0.0, "omega-min must be >= 0");
  require(std::isfinite(config.omega_max) && config.omega_max > config.omega_min,
          "omega-max must exceed omega-min");
  require(config.samples >= 2, "samples must be >= 2");
  require(std::isfinite(config.delta_omega) && config.delta_omega > 0.0, "delta-omega must be > 0");

  for (const auto& name : raw.compare) {
    if (name == "planck") {
      config.compare_planck = true;
    } else if (name == "weyl") {
      config.compare_weyl = true;
    } else {
      throw UsageError("unknown comparison '" + name + "' (expected planck or weyl)");
    }
  }
  require(!config.compare_weyl || config.shape == Shape::Box || config.shape == Shape::Sphere,
          "weyl comparison needs a closed cavity (box or sphere)");
  require(raw.format == "csv" || raw.format == "json", "format must be csv or json");
  config.json = raw.format == "json";
  return config;
}

EnumerationOptions enumeration_options(const RunConfig& config) {
  return {config.max_lattice_points, config.threads};
}

ModeList closed_cavity_modes(const RunConfig& config, double omega_max) {
  if (config.shape == Shape::Box) {
    const BoxGeometry box(config.lengths[0], config.lengths[1], config.lengths[2]);
    return enumerate_box_modes(box, config.bc, omega_max, enumeration_options(config));
  }
  return enumerate_sphere_modes(SphereGeometry(config.lengths[0]), omega_max,
                                enumeration_options(config));
}

GeometryDescriptors closed_cavity_descriptors(const RunConfig& config) {
  if (config.shape == Shape::Box) {
    return descriptors_for(BoxGeometry(config.lengths[0], config.lengths[1], config.lengths[2]));
  }
  return descriptors_for(SphereGeometry(config.lengths[0]));
}

std::string format_omega(double omega) { return csv::format_double(omega); }

SpectrumTable pointwise_spectrum(const RunConfig& config) {
  const Temperature T(config.temperature);
  SpectrumTable table;
  table.names = {"cavity"};
  table.headers = {"omega_rad_s", "u_J_s_m3"};
  if (config.compare_planck) {
    table.names.push_back("planck");
    table.headers.push_back("planck_J_s_m3");
  }
  table.columns.resize(table.names.size());

  const std::size_t n = config.samples;
  for (std::size_t i = 0; i < n; ++i) {
    const double omega = (i + 1 == n) ? config.omega_max
                                      : config.omega_min + (config.omega_max - config.omega_min) *
                                                               static_cast<double>(i) /
                                                               static_cast<double>(n - 1);
    table.omega.push_back(omega);
    std::optional<double> value;
    if (config.shape == Shape::Film) {
      value = film_density(omega, T, FilmGeometry(config.lengths[0]), config.bc);
    } else {
      try {
        value = rod_density(omega, T, RodGeometry(config.lengths[0], config.lengths[1]), config.bc);
      } catch (const ThresholdSingularity& e) {
        table.warnings.push_back("omega = " + format_omega(omega) +
                                 " rad/s skipped: " + e.what());
      }
    }
    table.columns[0].push_back(value);
    if (config.compare_planck) table.columns[1].push_back(planck_density(omega, T));
  }
  return table;
}

SpectrumTable binned_spectrum(const RunConfig& config) {
  const Temperature T(config.temperature);
  const double dw = config.delta_omega;
  // Cut at a whole number of bins so no bin is half enumerated.
  const double bins = std::ceil(config.omega_max / dw - 1e-9);
  const double cutoff = std::max(1.0, bins) * dw;
  const ModeList modes = closed_cavity_modes(config, cutoff);
  const GeometryDescriptors desc = closed_cavity_descriptors(config);
  const BinnedSpectrum spectrum = binned_density(modes, T, dw, desc.volume);

  SpectrumTable table;
  table.binned = true;
  table.names = {"cavity"};
  table.headers = {"omega_left_rad_s", "u_J_s_m3"};
  if (config.compare_planck) {
    table.names.push_back("planck");
    table.headers.push_back("planck_bin_avg_J_s_m3");
  }
  if (config.compare_weyl) {
    table.names.push_back("weyl");
    table.headers.push_back("weyl_bin_avg_J_s_m3");
  }
  table.columns.resize(table.names.size());
  if (spectrum.last_bin_partial) {
    table.warnings.push_back("last bin at omega = " + format_omega(spectrum.bins.back().omega_left) +
                             " rad/s is only partially enumerated");
  }

  for (const auto& bin : spectrum.bins) {
    if (bin.omega_left < config.omega_min) continue;
    table.omega.push_back(bin.omega_left);
    std::size_t column = 0;
    table.columns[column++].push_back(bin.u);
    if (config.compare_planck) {
      table.columns[column++].push_back(planck_band_average(bin.omega_left, bin.omega_left + dw, T));
    }
    if (config.compare_weyl) {
      table.columns[column++].push_back(
          weyl_band_average(bin.omega_left, bin.omega_left + dw, T, desc));
    }
  }
  return table;
}

nlohmann::json config_json(const RunConfig& config) {
  nlohmann::json j;
  j["geometry"] = shape_name(config.shape);
  j["lengths_m"] = config.lengths;
  j["bc"] = to_string(config.bc);
  j["temperature_K"] = config.temperature;
  j["omega_min_rad_s"] = config.omega_min;
  j["omega_max_rad_s"] = config.omega_max;
  if (config.shape == Shape::Film || config.shape == Shape::Rod) {
    j["samples"] = config.samples;
  } else {
    j["delta_omega_rad_s"] = config.delta_omega;
  }
  std::vector<std::string> compare;
  if (config.compare_planck) compare.emplace_back("planck");
  if (config.compare_weyl) compare.emplace_back("weyl");
  j["compare"] = compare;
  return j;
}

void write_planck_reference(std::ostream& out, double omega_max, std::size_t samples,
                            double temperature) {
  const Temperature T(temperature);
  std::vector<csv::Row> rows;
  for (std::size_t i = 0; i < samples; ++i) {
    const double omega = (i + 1 == samples)
                             ? omega_max
                             : omega_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    rows.push_back({omega, planck_density(omega, T)});
  }
  csv::write_table(out, {"omega_rad_s", "u_J_s_m3"}, rows);
}

// Emits to the named file, or to `out` when path is empty.
template <typename Writer>
void emit(const std::string& path, std::ostream& out, Writer&& writer) {
  if (path.empty()) {
    writer(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  writer(file);
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  for (const auto& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

// Appends `--key value` for every key of the --config file that the command
// line does not already set.
std::vector<std::string> merge_config_file(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::string> extra;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string content = trim(line);
    if (content.empty() || content[0] == '#') continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(number) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(content).substr(0, eq));
    const std::string value = trim(std::string_view(content).substr(eq + 1));
    const std::string flag = "--" + key;
    if (key.empty() || key == "config" || has_flag(args, flag)) continue;
    extra.push_back(flag);
    extra.push_back(value);
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

unsigned threads_from_environment() {
  if (const char* value = std::getenv("CAVITYRAD_THREADS")) {
    try {
      const long parsed = std::stol(value);
      if (parsed > 0) return static_cast<unsigned>(parsed);
    } catch (const std::exception&) {
    }
  }
  return 0;
}

std::string size_token(double metres) {
  std::ostringstream s;
  s << metres * 1e3 << "mm";
  return s.str();
}

}  // namespace

SpectrumTable compute_spectrum(const RunConfig& config) {
  if (config.shape == Shape::Film || config.shape == Shape::Rod) return pointwise_spectrum(config);
  return binned_spectrum(config);
}

void write_csv(std::ostream& out, const SpectrumTable& table) {
  std::vector<csv::Row> rows;
  rows.reserve(table.omega.size());
  for (std::size_t i = 0; i < table.omega.size(); ++i) {
    csv::Row row{table.omega[i]};
    for (const auto& column : table.columns) row.push_back(column[i]);
    rows.push_back(std::move(row));
  }
  csv::write_table(out, table.headers, rows);
}

void write_json(std::ostream& out, const RunConfig& config, const SpectrumTable& table) {
  nlohmann::json doc;
  doc["config"] = config_json(config);
  doc["series"] = nlohmann::json::array();
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : table.columns[c]) {
      if (v) {
        values.push_back(*v);
      } else {
        values.push_back(nullptr);
      }
    }
    doc["series"].push_back({{"name", table.names[c]}, {"omega", table.omega}, {"values", values}});
  }
  doc["warnings"] = table.warnings;
  out << doc.dump(2) << '\n';
}

std::vector<FigureCurve> figure_presets(int id) {
  const double sizes[] = {1e-5, 5e-5, 2e-4};
  const BoundaryCondition panel_bcs[] = {BoundaryCondition::Dirichlet, BoundaryCondition::Periodic,
                                         BoundaryCondition::Antiperiodic};
  const std::string prefix = "fig" + std::to_string(id) + "_";
  std::vector<FigureCurve> curves;

  auto base = [](Shape shape, std::vector<double> lengths, BoundaryCondition bc) {
    RunConfig config;
    config.shape = shape;
    config.lengths = std::move(lengths);
    config.bc = bc;
    config.temperature = 300.0;
    config.omega_min = 0.0;
    config.omega_max = 1e15;
    config.samples = 2000;
    config.delta_omega = 1e13;
    return config;
  };

  switch (id) {
    case 1:
    case 2:
      for (auto bc : panel_bcs) {
        const std::string panel = prefix + std::string(to_string(bc)) + "_";
        for (double l : sizes) {
          auto config = id == 1 ? base(Shape::Film, {l}, bc) : base(Shape::Rod, {l, l}, bc);
          curves.push_back({panel + "L" + size_token(l) + ".csv", config});
        }
        curves.push_back({panel + "planck.csv", std::nullopt});
      }
      break;
    case 3:
      for (double l : sizes) {
        const std::string panel = prefix + "L" + size_token(l) + "_";
        for (auto bc : {BoundaryCondition::Periodic, BoundaryCondition::Antiperiodic}) {
          curves.push_back({panel + std::string(to_string(bc)) + ".csv",
                            base(Shape::Box, {l, l, l}, bc)});
        }
        curves.push_back({panel + "planck.csv", std::nullopt});
      }
      break;
    case 4:
      for (double l : sizes) {
        auto cube = base(Shape::Box, {l, l, l}, BoundaryCondition::Dirichlet);
        cube.compare_planck = cube.compare_weyl = true;
        curves.push_back({prefix + "cube_L" + size_token(l) + "_dirichlet.csv", cube});
      }
      for (double d : sizes) {
        auto sphere = base(Shape::Sphere, {d}, BoundaryCondition::Dirichlet);
        sphere.compare_planck = sphere.compare_weyl = true;
        curves.push_back({prefix + "sphere_d" + size_token(d) + "_dirichlet.csv", sphere});
      }
      break;
    default:
      break;
  }
  return curves;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blackbody spectra in finite cavities", "cavityrad"};
  app.require_subcommand(1);

  RawOptions spectrum_raw;
  auto* spectrum = app.add_subcommand("spectrum", "Spectral energy density of one cavity");
  add_run_options(*spectrum, spectrum_raw, true);

  RawOptions modes_raw;
  auto* modes = app.add_subcommand("modes", "Discrete mode list of a box or sphere");
  add_run_options(*modes, modes_raw, false);

  int figure_id = 0;
  std::string output_dir = ".";
  std::uint64_t figure_cap = 100'000'000;
  auto* figures = app.add_subcommand("figures", "Regenerate the data behind one figure preset");
  figures->add_option("id", figure_id, "Figure number 1-4")->required();
  figures->add_option("--output-dir", output_dir, "Directory for the CSV files");
  figures->add_option("--max-lattice-points", figure_cap, "Refuse mode enumerations larger than this");

  std::vector<std::string> merged;
  try {
    merged = merge_config_file(args);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::vector<const char*> argv{"cavityrad"};
  for (const auto& a : merged) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'cavityrad --help' for usage\n";
    return kExitUsage;
  }

  const unsigned threads = threads_from_environment();
  try {
    if (spectrum->parsed()) {
      const RunConfig config = validate(spectrum_raw, threads);
      const SpectrumTable table = compute_spectrum(config);
      for (const auto& w : table.warnings) err << "warning: " << w << '\n';
      emit(spectrum_raw.output, out, [&](std::ostream& o) {
        if (config.json) {
          write_json(o, config, table);
        } else {
          write_csv(o, table);
        }
      });
      return kExitOk;
    }

    if (modes->parsed()) {
      RunConfig config = validate(modes_raw, threads);
      require(config.shape == Shape::Box || config.shape == Shape::Sphere,
              "modes needs a box or sphere geometry");
      const ModeList list = closed_cavity_modes(config, config.omega_max);
      emit(modes_raw.output, out, [&](std::ostream& o) { csv::write_modes(o, list); });
      err << "modes: " << list.entries.size() << " distinct frequencies, N(<=omega_max) = "
          << list.total() << '\n';
      return kExitOk;
    }

    if (figures->parsed()) {
      const auto curves = figure_presets(figure_id);
      require(!curves.empty(), "unknown figure id " + std::to_string(figure_id) + " (expected 1-4)");
      std::filesystem::create_directories(output_dir);
      for (const auto& curve : curves) {
        const auto path = (std::filesystem::path(output_dir) / curve.filename).string();
        if (!curve.run) {
          emit(path, out, [&](std::ostream& o) {
            write_planck_reference(o, curve.omega_max, curve.samples, 300.0);
          });
        } else {
          RunConfig config = *curve.run;
          config.max_lattice_points = figure_cap;
          config.threads = threads;
          const SpectrumTable table = compute_spectrum(config);
          for (const auto& w : table.warnings) err << "warning: " << curve.filename << ": " << w << '\n';
          emit(path, out, [&](std::ostream& o) { write_csv(o, table); });
        }
        err << "wrote " << path << '\n';
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitExceeded& e) {
    err << "error: " << e.what() << "; raise --max-lattice-points to at least " << e.required()
        << '\n';
    return kExitResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cavityrad::cli
