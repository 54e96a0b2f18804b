#pragma once

#include <vector>

#include "cavityrad/geometry.hpp"
#include "cavityrad/modes.hpp"
#include "cavityrad/physics.hpp"

namespace cavityrad {

struct SpectrumBin {
  double omega_left;  // rad/s; the bin is [omega_left, omega_left + delta_omega)
  double u;           // J s / (rad m^3)
};

/// Piecewise-constant spectral density over bins anchored at zero.
struct BinnedSpectrum {
  double delta_omega = 0.0;
  std::vector<SpectrumBin> bins;
  /// True when the mode list ends inside the last bin, so its value is low.
  bool last_bin_partial = false;
};

/// Volume, surface area and integrated mean curvature of a closed cavity.
struct GeometryDescriptors {
  double volume;
  double area;
  double mean_curvature;
};

/// Box: (L1 L2 L3, 2(L1 L2 + L2 L3 + L3 L1), pi (L1 + L2 + L3)); the
/// curvature term comes from the edges, each contributing length x (pi/2) / 2.
GeometryDescriptors descriptors_for(const BoxGeometry& geom);
/// Sphere: (4 pi R^3 / 3, 4 pi R^2, 4 pi R).
GeometryDescriptors descriptors_for(const SphereGeometry& geom);

/// Sum over the modes of multiplicity * mean_oscillator_energy, in joules.
double modal_energy(const ModeList& modes, Temperature T);

/// Each mode deposits multiplicity * mean_oscillator_energy / (V delta_omega)
/// into the half-open bin [i dw, (i+1) dw) containing it.
BinnedSpectrum binned_density(const ModeList& modes, Temperature T, double delta_omega,
                              double volume);

/// Mean of the piecewise-constant spectrum over [lo, hi); bins beyond the
/// last one count as zero.
double window_average(const BinnedSpectrum& spectrum, double lo, double hi);

/// Three-term asymptotic density
///   (hbar w^3 / pi^2 c^3 - (A/V) hbar w^2 / 4 pi c^2 + (M/V) hbar w / 3 pi^2 c) / (e^x - 1).
/// Not clamped; small cavities make it negative.
double weyl_density(double omega, Temperature T, const GeometryDescriptors& desc);

/// Mean of weyl_density over [lo, hi].
double weyl_band_average(double lo, double hi, Temperature T, const GeometryDescriptors& desc);

}  // namespace cavityrad
