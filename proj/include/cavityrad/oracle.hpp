#pragma once

// Brute-force references for the test suites. Nothing here calls into the
// enumeration, Bessel or quadrature code of the main library.

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

#include "cavityrad/geometry.hpp"
#include "cavityrad/modes.hpp"

namespace cavityrad::oracle {

/// The triple loop refuses to scan more points than this.
inline constexpr std::uint64_t kNaiveScanBudget = 1'000'000;

/// Plain triple loop over the bounding box of integer indices, sorted and
/// merged with kMergeTolerance. Throws std::length_error past the scan budget.
ModeList naive_box_count(const BoxGeometry& geom, BoundaryCondition bc, double omega_max);

class QuadratureNonConvergence : public std::runtime_error {
 public:
  QuadratureNonConvergence(double last, double previous);
  double last() const noexcept { return last_; }
  double previous() const noexcept { return previous_; }

 private:
  double last_;
  double previous_;
};

struct QuadratureOptions {
  double relative_tolerance = 1e-10;
  int max_refinements = 10;
};

/// Composite midpoint rule with Richardson extrapolation over [lo, hi].
/// The range is split at every breakpoint; on each piece [a, b] the
/// substitution w = a + s^2 regularises an inverse square root at a, so
/// rod thresholds may be passed as breakpoints.
double integrate(const std::function<double(double)>& density, double lo, double hi,
                 std::size_t steps, std::span<const double> breakpoints = {},
                 const QuadratureOptions& options = {});

/// Integral of density over [0, omega_max], J/m^3 for a spectral density.
double quadrature_total_energy(const std::function<double(double)>& density,
                               double omega_max, std::size_t steps,
                               std::span<const double> breakpoints = {},
                               const QuadratureOptions& options = {});

/// Single comparison of a candidate against a reference.
struct OracleReport {
  std::string label;
  double reference;
  double candidate;
  double relative_deviation;
  double tolerance;
  bool pass;

  /// `label,reference,candidate,rel_dev,pass`
  std::string csv_row() const;
};

/// deviation = |candidate - reference| / max(|reference|, 1e-300).
OracleReport compare(std::string label, double reference, double candidate, double tolerance);

}  // namespace cavityrad::oracle
