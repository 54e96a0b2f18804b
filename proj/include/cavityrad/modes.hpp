#pragma once

#include <cstdint>
#include <vector>

#include "cavityrad/geometry.hpp"

namespace cavityrad {

/// Frequencies closer than this (relative) are treated as one degenerate mode.
inline constexpr double kMergeTolerance = 1e-12;

struct Mode {
  double omega;                 // rad/s
  std::uint64_t multiplicity;   // includes the factor 2 for polarization
};

/// Discrete cavity spectrum below a cutoff. Entries are strictly increasing
/// in omega and complete up to omega_max.
struct ModeList {
  std::vector<Mode> entries;
  double omega_max = 0.0;

  /// Sum of multiplicities, N(<= omega_max).
  std::uint64_t total() const noexcept;
  bool empty() const noexcept { return entries.empty(); }
};

struct EnumerationOptions {
  /// Refuse enumerations whose cutoff encloses more lattice points than this.
  std::uint64_t max_lattice_points = 100'000'000;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Leading-order lattice count V (omega/c)^3 / (6 pi^2), the quantity the
/// resource cap is checked against.
std::uint64_t estimated_lattice_points(double volume, double omega_max);

/// Eigenfrequencies c |k| <= omega_max of a rectangular box.
///   periodic      k_i = 2 pi n_i / L_i,          n_i in Z, (0,0,0) excluded
///   antiperiodic  k_i = 2 pi (n_i + 1/2) / L_i,  n_i in Z
///   Dirichlet     k_i = pi n_i / L_i,            n_i >= 1
/// Multiplicities count lattice points and are doubled for polarization.
ModeList enumerate_box_modes(const BoxGeometry& geom, BoundaryCondition bc, double omega_max,
                             const EnumerationOptions& options = {});

/// Scalar Dirichlet spectrum of a ball: w = c x_{n,l} / R with multiplicity
/// 2 (2l + 1).
ModeList enumerate_sphere_modes(const SphereGeometry& geom, double omega_max,
                                const EnumerationOptions& options = {});

}  // namespace cavityrad
