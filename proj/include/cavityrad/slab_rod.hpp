#pragma once

#include <cstdint>
#include <vector>

#include "cavityrad/geometry.hpp"
#include "cavityrad/physics.hpp"

namespace cavityrad {

/// Relative half-width of the window around a rod threshold inside which
/// rod_density refuses to evaluate.
inline constexpr double kThresholdGuard = 1e-9;

// Film: one confined direction.

/// Number of admitted longitudinal wavenumbers |k| < omega / c.
///   periodic      2 floor(w L / 2 pi c) + 1
///   antiperiodic  2 floor(w L / 2 pi c + 1/2)
///   Dirichlet     floor(w L / pi c)
/// Floors are right-continuous: a mode counts from the frequency it appears at.
std::uint64_t film_mode_count(double omega, const FilmGeometry& geom, BoundaryCondition bc);

/// hbar w^2 / (pi c^2 L1 (e^x - 1)) times film_mode_count.
double film_density(double omega, Temperature T, const FilmGeometry& geom, BoundaryCondition bc);

/// Frequencies below omega_max at which film_mode_count jumps.
std::vector<double> film_jump_frequencies(double omega_max, const FilmGeometry& geom,
                                          BoundaryCondition bc);

// Rod: two confined directions.

/// One admitted transverse wavevector. For antiperiodic conditions n is the
/// integer part of the half-integer index, k = 2 pi (n + 1/2) / L.
struct TransverseMode {
  std::int64_t n1;
  std::int64_t n2;
  double k1;
  double k2;

  double k_perp_squared() const noexcept { return k1 * k1 + k2 * k2; }
};

using TransverseModeSet = std::vector<TransverseMode>;

/// Every admitted (k1, k2) with k1^2 + k2^2 < (omega / c)^2, sorted by
/// k1^2 + k2^2 then (n1, n2).
TransverseModeSet rod_transverse_modes(double omega, const RodGeometry& geom,
                                       BoundaryCondition bc);

/// 2 hbar w^2 / (pi c^2 L1 L2 (e^x - 1)) * sum 1 / sqrt(w^2/c^2 - k_perp^2).
/// Throws ThresholdSingularity within kThresholdGuard of any transverse threshold.
double rod_density(double omega, Temperature T, const RodGeometry& geom, BoundaryCondition bc);

/// Exact mean of rod_density over [lo, hi]. The inverse square root at each
/// threshold is removed by the substitution w = c k cosh(t), so windows may
/// straddle thresholds.
double rod_window_average(double lo, double hi, Temperature T, const RodGeometry& geom,
                          BoundaryCondition bc);

/// Spacing of transverse thresholds along one axis of the coarser lattice
/// direction: 2 pi c / min(L1, L2) (periodic, antiperiodic) or pi c / min(L1, L2).
double rod_threshold_spacing(const RodGeometry& geom, BoundaryCondition bc);

/// Distinct threshold frequencies c |k_perp| in [0, omega_max), ascending.
std::vector<double> rod_thresholds(double omega_max, const RodGeometry& geom,
                                   BoundaryCondition bc);

}  // namespace cavityrad
