#include "cavityrad/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cavityrad/errors.hpp"
#include "cavityrad/physics.hpp"

namespace cavityrad {
namespace {

double j0(double x) { return std::sin(x) / x; }

double j1(double x) {
  if (x < 1e-2) {
    const double x2 = x * x;
    return x * (1.0 / 3.0 - x2 * (1.0 / 30.0 - x2 / 840.0));
  }
  return std::sin(x) / (x * x) - std::cos(x) / x;
}

// x^l / (2l + 1)!!, the leading term of j_l for x -> 0.
double small_argument(unsigned l, double x) {
  double value = 1.0;
  for (unsigned k = 1; k <= l; ++k) value *= x / static_cast<double>(2 * k + 1);
  return value;
}

// Miller: recur downward from far above max(l, x), where j_n decays, then
// normalise against whichever of j_0, j_1 is larger in magnitude. Near a
// zero of j_0 the j_1 normalisation keeps full precision.
double downward_recurrence(unsigned l, double x) {
  const double scale_point = std::max(static_cast<double>(l), x);
  const auto start = static_cast<unsigned>(scale_point + 6.0 * std::cbrt(scale_point)) + 16;

  constexpr double kBig = 1e250;
  double upper = 0.0;     // f_{n+1}
  double current = 1e-30;  // f_n
  double at_l = 0.0;
  double f0 = 0.0;
  double f1 = 0.0;
  for (unsigned n = start; n >= 1; --n) {
    const double lower = (2.0 * n + 1.0) / x * current - upper;
    upper = current;
    current = lower;
    if (std::abs(current) > kBig) {
      current /= kBig;
      upper /= kBig;
      at_l /= kBig;
    }
    const unsigned index = n - 1;
    if (index == l) at_l = current;
    if (index == 1) f1 = current;
    if (index == 0) f0 = current;
  }
  const double true0 = j0(x);
  const double true1 = j1(x);
  const double scale = std::abs(true0) >= std::abs(true1) ? true0 / f0 : true1 / f1;
  return at_l * scale;
}

double bisect(unsigned l, double a, double b) {
  double fa = spherical_bessel_j(l, a);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = spherical_bessel_j(l, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Zeros of j_l are more than pi apart, so a pi/2 stride cannot step over two.
double next_zero_after(unsigned l, double start) {
  constexpr double stride = 0.5 * pi;
  double a = start;
  double fa = spherical_bessel_j(l, a);
  for (;;) {
    const double b = a + stride;
    const double fb = spherical_bessel_j(l, b);
    if (fb == 0.0) return b;
    if ((fa < 0.0) != (fb < 0.0)) return bisect(l, a, b);
    a = b;
    fa = fb;
  }
}

}  // namespace

double spherical_bessel_j(unsigned l, double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("spherical_bessel_j needs finite x >= 0, got " + std::to_string(x));
  }
  if (x == 0.0) return l == 0 ? 1.0 : 0.0;
  if (x < 1e-8) return small_argument(l, x);
  if (l == 0) return j0(x);
  if (l == 1) return j1(x);
  return downward_recurrence(l, x);
}

BesselZeroTable::BesselZeroTable(double x_max) : x_max_(x_max) {
  if (!std::isfinite(x_max) || x_max <= 0.0) {
    throw DomainError("BesselZeroTable needs a positive finite x_max");
  }
  // Each working list carries one sentinel zero beyond x_max, which brackets
  // the last zero of the next order.
  std::vector<double> previous;
  for (unsigned n = 1;; ++n) {
    const double z = pi * static_cast<double>(n);
    previous.push_back(z);
    if (z > x_max) break;
  }

  for (unsigned l = 0; previous.front() <= x_max; ++l) {
    zeros_.emplace_back(previous.begin(), previous.end() - 1);

    std::vector<double> next;
    for (std::size_t i = 0; i + 1 < previous.size(); ++i) {
      next.push_back(bisect(l + 1, previous[i], previous[i + 1]));
      if (next.back() > x_max) break;
    }
    if (next.back() <= x_max) next.push_back(next_zero_after(l + 1, previous.back()));
    previous = std::move(next);
  }
}

const std::vector<double>& BesselZeroTable::zeros(unsigned l) const {
  static const std::vector<double> none;
  return l < zeros_.size() ? zeros_[l] : none;
}

std::vector<double> spherical_bessel_zeros(unsigned l, double x_max) {
  return BesselZeroTable(x_max).zeros(l);
}

}  // namespace cavityrad
