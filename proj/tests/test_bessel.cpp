#include <doctest.h>

#include <cmath>
#include <functional>

#include <boost/math/special_functions/bessel.hpp>

#include "cavityrad/bessel.hpp"
#include "cavityrad/physics.hpp"

using namespace cavityrad;

namespace {

// Root of f in [a, b] by plain bisection on the closed forms.
double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 200 && b - a > 1e-15 * b; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("spherical Bessel values") {
  CHECK(spherical_bessel_j(0, 0.0) == 1.0);
  CHECK(spherical_bessel_j(1, 0.0) == 0.0);
  CHECK(spherical_bessel_j(5, 0.0) == 0.0);

  for (double x : {1e-4, 5e-3, 0.3, 1.0, 2.5, 7.0, 31.0, 120.0}) {
    CHECK(spherical_bessel_j(0, x) == doctest::Approx(std::sin(x) / x).epsilon(1e-13));
    CHECK(spherical_bessel_j(1, x) ==
          doctest::Approx(std::sin(x) / (x * x) - std::cos(x) / x).epsilon(1e-9));
  }

  for (unsigned l = 0; l <= 60; l += 3) {
    for (double x = 0.05; x < 200.0; x *= 1.37) {
      const double reference = boost::math::sph_bessel(l, x);
      const double scale = std::max(std::abs(reference), 1e-3 / x);
      CHECK(std::abs(spherical_bessel_j(l, x) - reference) <= 1e-11 * scale + 1e-300);
    }
  }
}

TEST_CASE("zeros of j_0 are multiples of pi") {
  const auto zeros = spherical_bessel_zeros(0, 10.0);
  REQUIRE(zeros.size() == 3);
  CHECK(zeros[0] == doctest::Approx(pi).epsilon(1e-15));
  CHECK(zeros[1] == doctest::Approx(2.0 * pi).epsilon(1e-15));
  CHECK(zeros[2] == doctest::Approx(3.0 * pi).epsilon(1e-15));
}

TEST_CASE("zeros of j_1 and j_2 against closed-form bisection") {
  const auto f1 = [](double x) { return x * std::cos(x) - std::sin(x); };
  const auto f2 = [](double x) { return (3.0 - x * x) * std::sin(x) - 3.0 * x * std::cos(x); };

  const auto z1 = spherical_bessel_zeros(1, 40.0);
  REQUIRE(z1.size() >= 11);
  CHECK(z1[0] == doctest::Approx(4.493409457909064).epsilon(1e-14));
  for (std::size_t n = 0; n < z1.size(); ++n) {
    const double lo = (n + 1) * pi;
    const double ref = bisect(f1, lo, lo + 0.5 * pi);
    CHECK(z1[n] == doctest::Approx(ref).epsilon(1e-13));
  }

  const auto z2 = spherical_bessel_zeros(2, 40.0);
  REQUIRE(!z2.empty());
  for (std::size_t n = 0; n < z2.size(); ++n) {
    const double ref = bisect(f2, z1[n], z1[n + 1]);
    CHECK(z2[n] == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("zero table is interlaced, complete and accurate") {
  const double x_max = 80.0;
  const BesselZeroTable table(x_max);
  REQUIRE(table.orders() > 50);
  CHECK(table.zeros(table.orders()).empty());

  for (unsigned l = 0; l < table.orders(); ++l) {
    const auto& z = table.zeros(l);
    REQUIRE(!z.empty());
    CHECK(z.back() <= x_max);
    for (std::size_t n = 0; n < z.size(); ++n) {
      if (n > 0) CHECK(z[n] > z[n - 1]);
      CHECK(std::abs(spherical_bessel_j(l, z[n])) < 1e-10);
      CHECK(std::abs(boost::math::sph_bessel(l, z[n])) < 1e-10);
    }
    if (l + 1 < table.orders()) {
      const auto& up = table.zeros(l + 1);
      for (std::size_t n = 0; n < up.size(); ++n) {
        CHECK(z[n] < up[n]);
        if (n + 1 < z.size()) CHECK(up[n] < z[n + 1]);
      }
    }

    // Sign changes on a fine grid bound the zero count from below.
    std::size_t changes = 0;
    double prev = boost::math::sph_bessel(l, 1e-3 + l * 0.5);
    for (double x = 1e-3 + l * 0.5; x <= x_max; x += 0.01) {
      const double v = boost::math::sph_bessel(l, x);
      if ((v < 0.0) != (prev < 0.0)) ++changes;
      prev = v;
    }
    CHECK(z.size() == changes);
  }
}
