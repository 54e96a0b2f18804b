#include <doctest.h>

#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cavityrad/errors.hpp"
#include "cavityrad/oracle.hpp"
#include "cavityrad/physics.hpp"

using namespace cavityrad;

namespace {

// Golden-section search for the maximum of f on [a, b].
template <typename F>
double golden_section_max(F f, double a, double b) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  while (b - a > 1e-12 * b) {
    if (f(c) > f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - r * (b - a);
    d = a + r * (b - a);
  }
  return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("mean oscillator energy limits") {
  const Temperature T(300.0);
  CHECK(mean_oscillator_energy(0.0, T) == doctest::Approx(4.141947e-21).epsilon(1e-7));
  CHECK(mean_oscillator_energy(0.0, T) == si::k_B * 300.0);

  const double omega_one = si::k_B * 300.0 / si::hbar;  // hbar w = k_B T
  CHECK(mean_oscillator_energy(omega_one, T) ==
        doctest::Approx(si::k_B * 300.0 / (std::exp(1.0) - 1.0)).epsilon(1e-14));
}

TEST_CASE("mean oscillator energy matches 50-digit evaluation") {
  using big = boost::multiprecision::cpp_bin_float_50;
  const Temperature T(300.0);
  for (double omega : {1e10, 1e13, 1e14, 5e14, 3e15}) {
    const big hbar("1.054571817e-34");
    const big kb("1.380649e-23");
    const big w(omega);
    const big x = hbar * w / (kb * big(300));
    const big reference = hbar * w / boost::multiprecision::expm1(x);
    CHECK(mean_oscillator_energy(omega, T) ==
          doctest::Approx(reference.convert_to<double>()).epsilon(1e-14));
  }
  // The value quoted for w = 1e14 at 300 K.
  CHECK(mean_oscillator_energy(1e14, T) == doctest::Approx(8.969761069334692e-22).epsilon(1e-13));
}

TEST_CASE("planck density zero endpoint and peak") {
  const Temperature T(300.0);
  CHECK(planck_density(0.0, T) == 0.0);

  const double peak = golden_section_max([&](double w) { return planck_density(w, T); }, 1e13, 5e14);
  // Root of 3(1 - e^{-x}) = x found by bisection, scaled by k_B T / hbar.
  double lo = 2.0, hi = 3.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (3.0 * (1.0 - std::exp(-mid)) - mid > 0.0) lo = mid; else hi = mid;
  }
  const double expected = 0.5 * (lo + hi) * T.thermal_frequency();
  CHECK(peak == doctest::Approx(expected).epsilon(1e-6));
  CHECK(peak == doctest::Approx(1.108e14).epsilon(1e-3));
}

TEST_CASE("planck total energy: quadrature against the closed form") {
  for (double kelvin : {3.0, 300.0, 3000.0}) {
    const Temperature T(kelvin);
    const double closed = stefan_boltzmann_energy(T);
    CHECK(std::abs(planck_total_energy(T) / closed - 1.0) <= 1e-9);

    const double independent = oracle::quadrature_total_energy(
        [&](double w) { return planck_density(w, T); }, 50.0 * T.thermal_frequency(), 64);
    CHECK(std::abs(independent / closed - 1.0) <= 1e-9);
  }
  CHECK(stefan_boltzmann_energy(Temperature(300.0)) == doctest::Approx(6.13e-6).epsilon(1e-3));
}

TEST_CASE("energy fraction below a cutoff") {
  const Temperature T(300.0);
  CHECK(planck_energy_fraction_below(0.0, T) == 0.0);
  CHECK(planck_energy_fraction_below(std::numeric_limits<double>::infinity(), T) == 1.0);
  CHECK(planck_energy_fraction_below(1e18, T) == doctest::Approx(1.0).epsilon(1e-15));

  const double cutoff = 2.0 * pi * si::c / 3e-6;
  const double fraction = planck_energy_fraction_below(cutoff, T);
  CHECK(fraction > 0.99);

  const double below = oracle::quadrature_total_energy(
      [&](double w) { return planck_density(w, T); }, cutoff, 64);
  CHECK(fraction == doctest::Approx(below / stefan_boltzmann_energy(T)).epsilon(1e-10));
  CHECK(fraction == doctest::Approx(0.99991297289168847).epsilon(1e-11));

  double previous = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double f = planck_energy_fraction_below(i * 1e13, T);
    CHECK(f >= previous);
    previous = f;
  }
}

TEST_CASE("planck density properties") {
  SUBCASE("non-negative and increasing in temperature") {
    for (double w = 0.0; w < 5e15; w += 7.3e12) {
      double previous = -1.0;
      for (double kelvin : {1.0, 10.0, 300.0, 1000.0, 6000.0}) {
        const double u = planck_density(w, Temperature(kelvin));
        CHECK(u >= 0.0);
        if (w > 0.0 && u > 0.0) CHECK(u > previous);
        previous = u;
      }
    }
  }
  SUBCASE("scaling u(s w, s T) = s^3 u(w, T)") {
    for (double s : {2.0, 10.0}) {
      for (double w : {1e12, 3e13, 1e14, 4e14}) {
        const double base = planck_density(w, Temperature(300.0));
        const double scaled = planck_density(s * w, Temperature(s * 300.0)) / (s * s * s);
        CHECK(std::abs(scaled / base - 1.0) <= 1e-12);
      }
    }
  }
  SUBCASE("band average of Planck") {
    const Temperature T(300.0);
    const double avg = planck_band_average(1e14, 1.1e14, T);
    const double ref = oracle::integrate([&](double w) { return planck_density(w, T); }, 1e14, 1.1e14, 16) / 1e13;
    CHECK(avg == doctest::Approx(ref).epsilon(1e-11));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(Temperature(0.0), DomainError);
  CHECK_THROWS_AS(Temperature(-5.0), DomainError);
  CHECK_THROWS_AS(Temperature(std::nan("")), DomainError);
  const Temperature T(300.0);
  CHECK_THROWS_AS(mean_oscillator_energy(-1.0, T), DomainError);
  CHECK_THROWS_AS(mean_oscillator_energy(std::numeric_limits<double>::infinity(), T), DomainError);
  CHECK_THROWS_AS(planck_density(std::nan(""), T), DomainError);
  CHECK_THROWS_AS(planck_energy_fraction_below(-1.0, T), DomainError);
}
