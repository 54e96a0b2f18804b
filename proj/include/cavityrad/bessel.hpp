#pragma once

#include <vector>

namespace cavityrad {

/// Spherical Bessel function of the first kind j_l(x), x >= 0.
/// Closed forms for l <= 1; Miller downward recurrence for l >= 2.
double spherical_bessel_j(unsigned l, double x);

/// Positive zeros of j_l for every order l whose first zero lies below x_max.
///
/// Order 0 is seeded with n pi. Each higher order is bracketed by the
/// interlacing x_{n,l} < x_{n,l+1} < x_{n+1,l} and refined by bisection to
/// the resolution of a double.
class BesselZeroTable {
 public:
  explicit BesselZeroTable(double x_max);

  double x_max() const noexcept { return x_max_; }
  /// Number of orders with at least one zero in (0, x_max].
  unsigned orders() const noexcept { return static_cast<unsigned>(zeros_.size()); }
  /// Zeros of j_l in (0, x_max], ascending. Empty for l >= orders().
  const std::vector<double>& zeros(unsigned l) const;

 private:
  double x_max_;
  std::vector<std::vector<double>> zeros_;
};

/// Zeros of j_l in (0, x_max], ascending.
std::vector<double> spherical_bessel_zeros(unsigned l, double x_max);

}  // namespace cavityrad
