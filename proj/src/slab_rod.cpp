#include "cavityrad/slab_rod.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "cavityrad/errors.hpp"

namespace cavityrad {
namespace {

void require_frequency(double omega) {
  if (!std::isfinite(omega) || omega < 0.0) {
    throw DomainError("angular frequency must be finite and >= 0, got " + std::to_string(omega));
  }
}

// Non-negative representatives of the admitted 1D wavenumbers along one
// confined axis. weight counts the signed indices folded onto each entry.
struct AxisValue {
  std::int64_t n;
  double k;
  int weight;
};

std::vector<AxisValue> axis_values(double length, BoundaryCondition bc, double k_limit) {
  std::vector<AxisValue> values;
  const double two_pi_over_l = 2.0 * pi / length;
  switch (bc) {
    case BoundaryCondition::Periodic:
      for (std::int64_t n = 0;; ++n) {
        const double k = two_pi_over_l * static_cast<double>(n);
        if (k >= k_limit) break;
        values.push_back({n, k, n == 0 ? 1 : 2});
      }
      break;
    case BoundaryCondition::Antiperiodic:
      for (std::int64_t n = 0;; ++n) {
        const double k = two_pi_over_l * (static_cast<double>(n) + 0.5);
        if (k >= k_limit) break;
        values.push_back({n, k, 2});
      }
      break;
    case BoundaryCondition::Dirichlet:
      for (std::int64_t n = 1;; ++n) {
        const double k = pi * static_cast<double>(n) / length;
        if (k >= k_limit) break;
        values.push_back({n, k, 1});
      }
      break;
  }
  return values;
}

double rod_prefactor(const RodGeometry& geom) {
  return 2.0 / (pi * si::c * si::c * geom.L1 * geom.L2);
}

// omega * mean energy = hbar w^2 / (e^x - 1)
double weighted_energy(double omega, Temperature T) {
  return omega * mean_oscillator_energy(omega, T);
}

}  // namespace

std::uint64_t film_mode_count(double omega, const FilmGeometry& geom, BoundaryCondition bc) {
  require_frequency(omega);
  switch (bc) {
    case BoundaryCondition::Periodic: {
      const double z = omega * geom.L1 / (2.0 * pi * si::c);
      return 2 * static_cast<std::uint64_t>(std::floor(z)) + 1;
    }
    case BoundaryCondition::Antiperiodic: {
      const double z = omega * geom.L1 / (2.0 * pi * si::c);
      return 2 * static_cast<std::uint64_t>(std::floor(z + 0.5));
    }
    case BoundaryCondition::Dirichlet: {
      const double y = omega * geom.L1 / (pi * si::c);
      return static_cast<std::uint64_t>(std::floor(y));
    }
  }
  return 0;
}

double film_density(double omega, Temperature T, const FilmGeometry& geom, BoundaryCondition bc) {
  const auto count = film_mode_count(omega, geom, bc);
  if (omega == 0.0 || count == 0) return 0.0;
  return weighted_energy(omega, T) * static_cast<double>(count) /
         (pi * si::c * si::c * geom.L1);
}

std::vector<double> film_jump_frequencies(double omega_max, const FilmGeometry& geom,
                                          BoundaryCondition bc) {
  require_frequency(omega_max);
  const double step = pi * si::c / geom.L1;
  std::vector<double> jumps;
  for (std::int64_t n = 1;; ++n) {
    double omega = 0.0;
    switch (bc) {
      case BoundaryCondition::Periodic:
        omega = 2.0 * step * static_cast<double>(n);
        break;
      case BoundaryCondition::Antiperiodic:
        omega = step * static_cast<double>(2 * n - 1);
        break;
      case BoundaryCondition::Dirichlet:
        omega = step * static_cast<double>(n);
        break;
    }
    if (omega >= omega_max) break;
    jumps.push_back(omega);
  }
  return jumps;
}

TransverseModeSet rod_transverse_modes(double omega, const RodGeometry& geom,
                                       BoundaryCondition bc) {
  require_frequency(omega);
  const double k_max = omega / si::c;
  const double k_max_sq = k_max * k_max;

  auto wavenumber = [bc](std::int64_t n, double length) {
    switch (bc) {
      case BoundaryCondition::Periodic:
        return 2.0 * pi * static_cast<double>(n) / length;
      case BoundaryCondition::Antiperiodic:
        return 2.0 * pi * (static_cast<double>(n) + 0.5) / length;
      case BoundaryCondition::Dirichlet:
        return pi * static_cast<double>(n) / length;
    }
    return 0.0;
  };
  auto index_range = [bc, k_max](double length) -> std::pair<std::int64_t, std::int64_t> {
    if (bc == BoundaryCondition::Dirichlet) {
      return {1, static_cast<std::int64_t>(std::ceil(k_max * length / pi)) + 1};
    }
    const auto bound = static_cast<std::int64_t>(std::ceil(k_max * length / (2.0 * pi))) + 1;
    return {-bound, bound};
  };

  TransverseModeSet modes;
  const auto [lo1, hi1] = index_range(geom.L1);
  const auto [lo2, hi2] = index_range(geom.L2);
  for (std::int64_t n1 = lo1; n1 <= hi1; ++n1) {
    const double k1 = wavenumber(n1, geom.L1);
    for (std::int64_t n2 = lo2; n2 <= hi2; ++n2) {
      const double k2 = wavenumber(n2, geom.L2);
      if (k1 * k1 + k2 * k2 < k_max_sq) modes.push_back({n1, n2, k1, k2});
    }
  }
  std::sort(modes.begin(), modes.end(), [](const TransverseMode& a, const TransverseMode& b) {
    const double ka = a.k_perp_squared();
    const double kb = b.k_perp_squared();
    if (ka != kb) return ka < kb;
    if (a.n1 != b.n1) return a.n1 < b.n1;
    return a.n2 < b.n2;
  });
  return modes;
}

double rod_density(double omega, Temperature T, const RodGeometry& geom, BoundaryCondition bc) {
  require_frequency(omega);
  const double k = omega / si::c;
  const double k_guard = k * (1.0 + kThresholdGuard);
  const auto axis1 = axis_values(geom.L1, bc, k_guard);
  const auto axis2 = axis_values(geom.L2, bc, k_guard);

  // Fixed loop order keeps the sum bit-reproducible.
  double sum = 0.0;
  for (const auto& a : axis1) {
    for (const auto& b : axis2) {
      const double kp_sq = a.k * a.k + b.k * b.k;
      if (kp_sq >= k_guard * k_guard) break;
      const double kp = std::sqrt(kp_sq);
      if (std::abs(k - kp) < kThresholdGuard * k) {
        throw ThresholdSingularity(a.n, b.n, si::c * kp);
      }
      if (kp < k) sum += (a.weight * b.weight) / std::sqrt((k - kp) * (k + kp));
    }
  }
  if (sum == 0.0) return 0.0;
  return rod_prefactor(geom) * weighted_energy(omega, T) * sum;
}

double rod_window_average(double lo, double hi, Temperature T, const RodGeometry& geom,
                          BoundaryCondition bc) {
  require_frequency(lo);
  require_frequency(hi);
  if (!(hi > lo)) throw DomainError("rod_window_average needs hi > lo");

  using Rule = boost::math::quadrature::gauss<double, 8>;
  const double k_hi = hi / si::c;
  const auto axis1 = axis_values(geom.L1, bc, k_hi);
  const auto axis2 = axis_values(geom.L2, bc, k_hi);

  // Sub-windows narrow against k_B T / hbar keep the thermal factor smooth
  // enough for a fixed 8-point rule.
  const double span = hi - lo;
  const auto pieces =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span / (0.25 * T.thermal_frequency()))));

  // Shared nodes in w for modes whose threshold sits at least two piece
  // widths below the piece: there the integrand is smooth in w and the
  // thermal factor can be evaluated once per node.
  struct Node {
    double k_sq;
    double weighted;  // quadrature weight * w * mean energy
  };
  std::vector<std::vector<Node>> nodes(pieces);
  auto piece_lo = [&](std::size_t p) {
    return lo + span * static_cast<double>(p) / static_cast<double>(pieces);
  };
  auto piece_hi = [&](std::size_t p) {
    return (p + 1 == pieces) ? hi : lo + span * static_cast<double>(p + 1) / static_cast<double>(pieces);
  };
  for (std::size_t p = 0; p < pieces; ++p) {
    const double mid = 0.5 * (piece_lo(p) + piece_hi(p));
    const double half = 0.5 * (piece_hi(p) - piece_lo(p));
    const auto& x = Rule::abscissa();
    const auto& wt = Rule::weights();
    for (std::size_t j = 0; j < x.size(); ++j) {
      for (double sign : {-1.0, 1.0}) {
        const double w = mid + sign * half * x[j];
        const double k = w / si::c;
        nodes[p].push_back({k * k, half * wt[j] * weighted_energy(w, T)});
      }
    }
  }

  auto mode_integral = [&](double kp) {
    double total = 0.0;
    for (std::size_t p = 0; p < pieces; ++p) {
      const double a = piece_lo(p);
      const double b = piece_hi(p);
      const double w_th = si::c * kp;
      if (w_th >= b) continue;
      if (a - w_th >= 2.0 * (b - a)) {
        const double kp_sq = kp * kp;
        for (const auto& n : nodes[p]) total += n.weighted / std::sqrt(n.k_sq - kp_sq);
        continue;
      }
      const double t_lo = std::acosh(std::max(a, w_th) / w_th);
      const double t_hi = std::acosh(b / w_th);
      // w = c k cosh t turns dw / sqrt(w^2/c^2 - k^2) into c dt.
      total += si::c * Rule::integrate(
                           [&](double t) { return weighted_energy(w_th * std::cosh(t), T); },
                           t_lo, t_hi);
    }
    return total;
  };

  double sum = 0.0;
  for (const auto& a : axis1) {
    for (const auto& b : axis2) {
      const double kp_sq = a.k * a.k + b.k * b.k;
      if (kp_sq >= k_hi * k_hi) break;
      sum += (a.weight * b.weight) * mode_integral(std::sqrt(kp_sq));
    }
  }
  return rod_prefactor(geom) * sum / span;
}

double rod_threshold_spacing(const RodGeometry& geom, BoundaryCondition bc) {
  const double l = std::min(geom.L1, geom.L2);
  return bc == BoundaryCondition::Dirichlet ? pi * si::c / l : 2.0 * pi * si::c / l;
}

std::vector<double> rod_thresholds(double omega_max, const RodGeometry& geom,
                                   BoundaryCondition bc) {
  require_frequency(omega_max);
  const double k_max = omega_max / si::c;
  const auto axis1 = axis_values(geom.L1, bc, k_max);
  const auto axis2 = axis_values(geom.L2, bc, k_max);
  std::vector<double> thresholds;
  for (const auto& a : axis1) {
    for (const auto& b : axis2) {
      const double kp_sq = a.k * a.k + b.k * b.k;
      if (kp_sq >= k_max * k_max) break;
      thresholds.push_back(si::c * std::sqrt(kp_sq));
    }
  }
  std::sort(thresholds.begin(), thresholds.end());
  std::vector<double> distinct;
  for (double w : thresholds) {
    if (distinct.empty() || w - distinct.back() > 1e-12 * w) distinct.push_back(w);
  }
  return distinct;
}

}  // namespace cavityrad
