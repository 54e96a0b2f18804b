#include "cavityrad/binned.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cavityrad/errors.hpp"

namespace cavityrad {

GeometryDescriptors descriptors_for(const BoxGeometry& geom) {
  const double a = geom.L1, b = geom.L2, c = geom.L3;
  return {a * b * c, 2.0 * (a * b + b * c + c * a), pi * (a + b + c)};
}

GeometryDescriptors descriptors_for(const SphereGeometry& geom) {
  const double r = geom.radius();
  return {4.0 * pi * r * r * r / 3.0, 4.0 * pi * r * r, 4.0 * pi * r};
}

double modal_energy(const ModeList& modes, Temperature T) {
  double total = 0.0;
  for (const auto& m : modes.entries) {
    total += static_cast<double>(m.multiplicity) * mean_oscillator_energy(m.omega, T);
  }
  return total;
}

BinnedSpectrum binned_density(const ModeList& modes, Temperature T, double delta_omega,
                              double volume) {
  if (!std::isfinite(delta_omega) || delta_omega <= 0.0) {
    throw DomainError("delta_omega must be positive and finite");
  }
  if (!std::isfinite(volume) || volume <= 0.0) {
    throw DomainError("volume must be positive and finite");
  }

  // Enough bins to cover the cutoff, plus whatever the highest mode needs
  // when it sits exactly on a bin edge.
  auto bins = static_cast<std::size_t>(std::ceil(modes.omega_max / delta_omega));
  if (!modes.entries.empty()) {
    const auto top = static_cast<std::size_t>(std::floor(modes.entries.back().omega / delta_omega));
    bins = std::max(bins, top + 1);
  }

  std::vector<double> energy(bins, 0.0);
  for (const auto& m : modes.entries) {
    const auto index = static_cast<std::size_t>(std::floor(m.omega / delta_omega));
    energy[index] += static_cast<double>(m.multiplicity) * mean_oscillator_energy(m.omega, T);
  }

  BinnedSpectrum spectrum;
  spectrum.delta_omega = delta_omega;
  spectrum.bins.reserve(bins);
  const double norm = 1.0 / (volume * delta_omega);
  for (std::size_t i = 0; i < bins; ++i) {
    spectrum.bins.push_back({static_cast<double>(i) * delta_omega, energy[i] * norm});
  }
  spectrum.last_bin_partial =
      bins > 0 && static_cast<double>(bins) * delta_omega > modes.omega_max * (1.0 + 1e-12);
  return spectrum;
}

double window_average(const BinnedSpectrum& spectrum, double lo, double hi) {
  if (!(hi > lo) || lo < 0.0) throw DomainError("window_average needs 0 <= lo < hi");
  const double dw = spectrum.delta_omega;
  const auto first = static_cast<std::size_t>(std::floor(lo / dw));
  double sum = 0.0;
  for (std::size_t i = first; i < spectrum.bins.size(); ++i) {
    const double left = static_cast<double>(i) * dw;
    if (left >= hi) break;
    const double overlap = std::min(hi, left + dw) - std::max(lo, left);
    if (overlap > 0.0) sum += spectrum.bins[i].u * overlap;
  }
  return sum / (hi - lo);
}

double weyl_density(double omega, Temperature T, const GeometryDescriptors& desc) {
  if (!std::isfinite(omega) || omega < 0.0) {
    throw DomainError("angular frequency must be finite and >= 0, got " + std::to_string(omega));
  }
  if (omega == 0.0) return 0.0;
  constexpr double c = si::c;
  // mean energy = hbar w / (e^x - 1); factor it out of all three terms.
  const double volume_term = omega * omega / (pi * pi * c * c * c);
  const double area_term = (desc.area / desc.volume) * omega / (4.0 * pi * c * c);
  const double curvature_term = (desc.mean_curvature / desc.volume) / (3.0 * pi * pi * c);
  return (volume_term - area_term + curvature_term) * mean_oscillator_energy(omega, T);
}

double weyl_band_average(double lo, double hi, Temperature T, const GeometryDescriptors& desc) {
  if (!(hi > lo) || lo < 0.0) throw DomainError("weyl_band_average needs 0 <= lo < hi");
  using boost::math::quadrature::gauss_kronrod;
  const double integral = gauss_kronrod<double, 31>::integrate(
      [&](double w) { return weyl_density(w, T, desc); }, lo, hi, 12, 1e-12);
  return integral / (hi - lo);
}

}  // namespace cavityrad
