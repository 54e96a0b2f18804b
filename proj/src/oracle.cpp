#include "cavityrad/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cavityrad/csv.hpp"
#include "cavityrad/physics.hpp"

namespace cavityrad::oracle {

ModeList naive_box_count(const BoxGeometry& geom, BoundaryCondition bc, double omega_max) {
  const double k_max = omega_max / si::c;
  const double lengths[3] = {geom.L1, geom.L2, geom.L3};

  std::int64_t lo[3];
  std::int64_t hi[3];
  double scanned = 1.0;
  for (int d = 0; d < 3; ++d) {
    if (bc == BoundaryCondition::Dirichlet) {
      lo[d] = 1;
      hi[d] = static_cast<std::int64_t>(std::ceil(k_max * lengths[d] / pi)) + 1;
    } else {
      hi[d] = static_cast<std::int64_t>(std::ceil(k_max * lengths[d] / (2.0 * pi))) + 1;
      lo[d] = -hi[d] - 1;
    }
    scanned *= static_cast<double>(hi[d] - lo[d] + 1);
  }
  if (scanned > static_cast<double>(kNaiveScanBudget)) {
    throw std::length_error("naive_box_count: scan of " + std::to_string(scanned) +
                            " points exceeds the oracle budget");
  }

  auto wavenumber = [bc](std::int64_t n, double length) {
    if (bc == BoundaryCondition::Periodic) return 2.0 * pi * static_cast<double>(n) / length;
    if (bc == BoundaryCondition::Antiperiodic) return 2.0 * pi * (static_cast<double>(n) + 0.5) / length;
    return pi * static_cast<double>(n) / length;
  };

  std::vector<double> omegas;
  for (std::int64_t a = lo[0]; a <= hi[0]; ++a) {
    for (std::int64_t b = lo[1]; b <= hi[1]; ++b) {
      for (std::int64_t c = lo[2]; c <= hi[2]; ++c) {
        if (bc == BoundaryCondition::Periodic && a == 0 && b == 0 && c == 0) continue;
        const double kx = wavenumber(a, lengths[0]);
        const double ky = wavenumber(b, lengths[1]);
        const double kz = wavenumber(c, lengths[2]);
        const double omega = si::c * std::sqrt(kx * kx + ky * ky + kz * kz);
        if (omega <= omega_max) omegas.push_back(omega);
      }
    }
  }
  std::sort(omegas.begin(), omegas.end());

  ModeList list;
  list.omega_max = omega_max;
  for (double omega : omegas) {
    if (!list.entries.empty() &&
        omega - list.entries.back().omega <= kMergeTolerance * list.entries.back().omega) {
      list.entries.back().multiplicity += 2;
    } else {
      list.entries.push_back({omega, 2});
    }
  }
  return list;
}

QuadratureNonConvergence::QuadratureNonConvergence(double last, double previous)
    : std::runtime_error("quadrature did not converge: last estimate " + std::to_string(last) +
                         ", previous " + std::to_string(previous)),
      last_(last),
      previous_(previous) {}

namespace {

// Midpoint rule on [0, s_max] for g(s) = 2 s f(a + s^2).
double substituted_midpoint(const std::function<double(double)>& f, double a, double s_max,
                            std::size_t panels) {
  const double h = s_max / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double s = (static_cast<double>(i) + 0.5) * h;
    sum += 2.0 * s * f(a + s * s);
  }
  return sum * h;
}

double romberg_piece(const std::function<double(double)>& f, double a, double b,
                     std::size_t steps, const QuadratureOptions& options) {
  const double s_max = std::sqrt(b - a);
  std::vector<double> previous_row;
  double previous_best = 0.0;
  for (int level = 0; level <= options.max_refinements; ++level) {
    std::vector<double> row;
    row.push_back(substituted_midpoint(f, a, s_max, steps << level));
    double factor = 4.0;
    for (std::size_t j = 1; j <= previous_row.size(); ++j) {
      row.push_back(row[j - 1] + (row[j - 1] - previous_row[j - 1]) / (factor - 1.0));
      factor *= 4.0;
    }
    const double best = row.back();
    if (level > 0) {
      const double diff = std::abs(best - previous_best);
      if (diff <= options.relative_tolerance * std::abs(best) || diff == 0.0) return best;
    }
    if (level == options.max_refinements) throw QuadratureNonConvergence(best, previous_best);
    previous_best = best;
    previous_row = std::move(row);
  }
  return previous_best;
}

}  // namespace

double integrate(const std::function<double(double)>& density, double lo, double hi,
                 std::size_t steps, std::span<const double> breakpoints,
                 const QuadratureOptions& options) {
  if (!(hi > lo)) return 0.0;
  std::vector<double> cuts{lo};
  for (double p : breakpoints) {
    if (p > lo && p < hi) cuts.push_back(p);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(hi);

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += romberg_piece(density, cuts[i], cuts[i + 1], std::max<std::size_t>(steps, 1), options);
  }
  return total;
}

double quadrature_total_energy(const std::function<double(double)>& density, double omega_max,
                               std::size_t steps, std::span<const double> breakpoints,
                               const QuadratureOptions& options) {
  return integrate(density, 0.0, omega_max, steps, breakpoints, options);
}

std::string OracleReport::csv_row() const {
  return label + ',' + csv::format_double(reference) + ',' + csv::format_double(candidate) + ',' +
         csv::format_double(relative_deviation) + ',' + (pass ? "true" : "false");
}

OracleReport compare(std::string label, double reference, double candidate, double tolerance) {
  const double deviation = std::abs(candidate - reference) / std::max(std::abs(reference), 1e-300);
  return {std::move(label), reference, candidate, deviation, tolerance, deviation <= tolerance};
}

}  // namespace cavityrad::oracle
