#pragma once

// Physical constants, the mean thermal energy of one oscillator and the
// infinite-volume (Planck) spectral energy density.
//
// Units are SI throughout. Frequencies are angular frequencies in rad/s and
// spectral densities are J s / (rad m^3).

namespace cavityrad {

namespace si {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double c = 299792458.0;         // m / s
inline constexpr double k_B = 1.380649e-23;      // J / K
}  // namespace si

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Absolute temperature in kelvin, strictly positive and finite.
class Temperature {
 public:
  explicit Temperature(double kelvin);

  double kelvin() const noexcept { return kelvin_; }
  /// k_B T in joules.
  double thermal_energy() const noexcept { return si::k_B * kelvin_; }
  /// k_B T / hbar in rad/s; the natural frequency scale of the spectrum.
  double thermal_frequency() const noexcept { return si::k_B * kelvin_ / si::hbar; }

 private:
  double kelvin_;
};

/// hbar w / (exp(hbar w / k_B T) - 1). Returns k_B T at w = 0.
double mean_oscillator_energy(double omega, Temperature T);

/// hbar w^3 / (pi^2 c^3 (exp(hbar w / k_B T) - 1)). Returns 0 at w = 0.
double planck_density(double omega, Temperature T);

/// Closed form a T^4 with a = pi^2 k_B^4 / (15 hbar^3 c^3), in J/m^3.
double stefan_boltzmann_energy(Temperature T);

/// Integral of planck_density over [0, inf) by adaptive quadrature in
/// x = hbar w / k_B T on [0, 50] plus the exact exponential-series tail.
double planck_total_energy(Temperature T);

/// Fraction of the total Planck energy carried below omega_max.
/// omega_max may be +infinity.
double planck_energy_fraction_below(double omega_max, Temperature T);

/// Mean of planck_density over [lo, hi], i.e. the Planck value a bin of
/// width hi - lo should be compared with.
double planck_band_average(double lo, double hi, Temperature T);

namespace detail {
/// Integral of x^3 / (e^x - 1) over [a, b], 0 <= a <= b, b may be +inf.
double bose_cubic_integral(double a, double b);
}  // namespace detail

}  // namespace cavityrad
