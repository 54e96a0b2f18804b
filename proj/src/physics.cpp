#include "cavityrad/physics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cavityrad/errors.hpp"

namespace cavityrad {
namespace {

// Beyond x = 50 the integrand is below 1e-16 of its peak; the remainder is
// summed exactly from the geometric series of e^{-nx}.
constexpr double kQuadratureCut = 50.0;

double require_frequency(double omega) {
  if (!std::isfinite(omega) || omega < 0.0) {
    throw DomainError("angular frequency must be finite and >= 0, got " + std::to_string(omega));
  }
  return omega;
}

double bose_cubic(double x) {
  if (x <= 0.0) return 0.0;
  return x * x * x / std::expm1(x);
}

// Integral of x^3 / (e^x - 1) over [x, inf):
//   sum_n e^{-n x} (x^3/n + 3x^2/n^2 + 6x/n^3 + 6/n^4).
double bose_cubic_tail(double x) {
  if (std::isinf(x)) return 0.0;
  double sum = 0.0;
  for (int n = 1; n < 200; ++n) {
    const double nd = n;
    const double term = std::exp(-nd * x) *
                        (x * x * x / nd + 3.0 * x * x / (nd * nd) + 6.0 * x / (nd * nd * nd) +
                         6.0 / (nd * nd * nd * nd));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double gk_integral(double a, double b) {
  if (b <= a) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(bose_cubic, a, b, 12, 1e-13);
}

}  // namespace

namespace detail {

double bose_cubic_integral(double a, double b) {
  if (!(a >= 0.0) || !(b >= a)) throw DomainError("bose_cubic_integral needs 0 <= a <= b");
  double inner = gk_integral(std::min(a, kQuadratureCut), std::min(b, kQuadratureCut));
  if (b > kQuadratureCut) {
    inner += bose_cubic_tail(std::max(a, kQuadratureCut)) - bose_cubic_tail(b);
  }
  return inner;
}

}  // namespace detail

Temperature::Temperature(double kelvin) : kelvin_(kelvin) {
  if (!std::isfinite(kelvin) || kelvin <= 0.0) {
    throw DomainError("temperature must be finite and > 0 K, got " + std::to_string(kelvin));
  }
}

double mean_oscillator_energy(double omega, Temperature T) {
  require_frequency(omega);
  const double x = omega / T.thermal_frequency();
  if (x == 0.0) return T.thermal_energy();
  return si::hbar * omega / std::expm1(x);
}

double planck_density(double omega, Temperature T) {
  require_frequency(omega);
  if (omega == 0.0) return 0.0;
  constexpr double c3 = si::c * si::c * si::c;
  return omega * omega * mean_oscillator_energy(omega, T) / (pi * pi * c3);
}

double stefan_boltzmann_energy(Temperature T) {
  constexpr double c3 = si::c * si::c * si::c;
  constexpr double h3 = si::hbar * si::hbar * si::hbar;
  const double kt = T.thermal_energy();
  return pi * pi * kt * kt * kt * kt / (15.0 * h3 * c3);
}

namespace {

// u(w) dw = (k_B T)^4 / (pi^2 c^3 hbar^3) * x^3 / (e^x - 1) dx
double planck_energy_scale(Temperature T) {
  constexpr double c3 = si::c * si::c * si::c;
  constexpr double h3 = si::hbar * si::hbar * si::hbar;
  const double kt = T.thermal_energy();
  return kt * kt * kt * kt / (pi * pi * c3 * h3);
}

}  // namespace

double planck_total_energy(Temperature T) {
  return planck_energy_scale(T) * detail::bose_cubic_integral(0.0, std::numeric_limits<double>::infinity());
}

double planck_energy_fraction_below(double omega_max, Temperature T) {
  if (std::isnan(omega_max) || omega_max < 0.0) {
    throw DomainError("omega_max must be >= 0");
  }
  if (omega_max == 0.0) return 0.0;
  const double x = omega_max / T.thermal_frequency();
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double total = detail::bose_cubic_integral(0.0, inf);
  // Past the peak, integrate the shrinking complement so the fraction stays
  // monotone as it approaches 1.
  if (x <= 3.0) return detail::bose_cubic_integral(0.0, x) / total;
  return 1.0 - detail::bose_cubic_integral(x, inf) / total;
}

double planck_band_average(double lo, double hi, Temperature T) {
  require_frequency(lo);
  require_frequency(hi);
  if (!(hi > lo)) throw DomainError("planck_band_average needs hi > lo");
  const double wt = T.thermal_frequency();
  const double integral = planck_energy_scale(T) * detail::bose_cubic_integral(lo / wt, hi / wt);
  return integral / (hi - lo);
}

}  // namespace cavityrad
