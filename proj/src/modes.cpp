#include "cavityrad/modes.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <utility>

#include "cavityrad/bessel.hpp"
#include "cavityrad/errors.hpp"
#include "cavityrad/physics.hpp"

namespace cavityrad {
namespace {

using WeightedFrequency = std::pair<double, std::uint64_t>;

void require_cutoff(double omega_max) {
  if (!std::isfinite(omega_max) || omega_max <= 0.0) {
    throw DomainError("omega_max must be positive and finite, got " + std::to_string(omega_max));
  }
}

void check_cap(double volume, double omega_max, const EnumerationOptions& options) {
  const auto required = estimated_lattice_points(volume, omega_max);
  if (required > options.max_lattice_points) {
    throw ResourceLimitExceeded(required, options.max_lattice_points);
  }
}

unsigned worker_count(const EnumerationOptions& options, std::size_t jobs) {
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, threads);
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

// Runs job(b) for b in [0, jobs) on a small pool. Each job writes only its own slot.
template <typename Job>
void run_jobs(std::size_t jobs, unsigned threads, Job&& job) {
  if (threads <= 1) {
    for (std::size_t b = 0; b < jobs; ++b) job(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < jobs; b = next++) job(b);
    });
  }
  for (auto& thread : pool) thread.join();
}

// Input sorted by omega. Chains of frequencies within kMergeTolerance of the
// first member collapse onto that member; multiplicities get the factor 2.
ModeList merge_sorted(const std::vector<WeightedFrequency>& sorted, double omega_max) {
  ModeList list;
  list.omega_max = omega_max;
  for (const auto& [omega, weight] : sorted) {
    if (omega > omega_max) break;
    if (!list.entries.empty()) {
      auto& last = list.entries.back();
      if (omega - last.omega <= kMergeTolerance * last.omega) {
        last.multiplicity += 2 * weight;
        continue;
      }
    }
    list.entries.push_back({omega, 2 * weight});
  }
  return list;
}

// One confined axis, folded onto non-negative indices:
//   periodic      k = (2 pi / L) v,  v = 0, 1, 2, ...   weight 1 at v = 0, else 2
//   antiperiodic  k = (pi / L) v,    v = 1, 3, 5, ...   weight 2
//   Dirichlet     k = (pi / L) v,    v = 1, 2, 3, ...   weight 1
struct Axis {
  double length;
  BoundaryCondition bc;
  double unit;  // k per unit of v

  std::int64_t v(std::size_t index) const noexcept {
    switch (bc) {
      case BoundaryCondition::Periodic:
        return static_cast<std::int64_t>(index);
      case BoundaryCondition::Antiperiodic:
        return 2 * static_cast<std::int64_t>(index) + 1;
      case BoundaryCondition::Dirichlet:
        return static_cast<std::int64_t>(index) + 1;
    }
    return 0;
  }
  std::uint64_t weight(std::size_t index) const noexcept {
    if (bc == BoundaryCondition::Dirichlet) return 1;
    if (bc == BoundaryCondition::Periodic && index == 0) return 1;
    return 2;
  }
  bool same_lattice(const Axis& other) const noexcept {
    return length == other.length && bc == other.bc;
  }
};

Axis make_axis(double length, BoundaryCondition bc) {
  const double unit = bc == BoundaryCondition::Periodic ? 2.0 * pi / length : pi / length;
  return {length, bc, unit};
}

// Number of distinct index orderings of a representative i <= j <= l for
// the axes that share a lattice.
struct Symmetry {
  bool eq01;
  bool eq12;

  std::uint64_t orbit(std::size_t i, std::size_t j, std::size_t l) const noexcept {
    if (eq01 && eq12) {
      if (i == j && j == l) return 1;
      if (i == j || j == l) return 3;
      return 6;
    }
    if (eq01) return i == j ? 1 : 2;
    if (eq12) return j == l ? 1 : 2;
    return 1;
  }
};

// Per-axis contribution to the squared wavenumber, in whatever key type the
// band walker accumulates (exact integers or doubles).
template <typename Key>
struct AxisTable {
  std::vector<Key> key;
  std::vector<std::uint64_t> weight;
};

// Visits every representative lattice point with key in [lo, hi) and
// key <= limit, calling sink(key, weight). Axis tables are ascending.
template <typename Key, typename Sink>
void walk_band(const std::array<AxisTable<Key>, 3>& axes, const Symmetry& sym, Key lo, Key hi,
               Key limit, Sink&& sink) {
  const auto& a0 = axes[0];
  const auto& a1 = axes[1];
  const auto& a2 = axes[2];
  for (std::size_t i = 0; i < a0.key.size(); ++i) {
    const Key k0 = a0.key[i];
    if (k0 >= hi || k0 > limit) break;
    for (std::size_t j = sym.eq01 ? i : 0; j < a1.key.size(); ++j) {
      const Key k01 = k0 + a1.key[j];
      if (k01 >= hi || k01 > limit) break;
      const std::size_t first = sym.eq12 ? j : 0;
      std::size_t l = first;
      if (k01 < lo) {
        const auto it = std::lower_bound(a2.key.begin() + first, a2.key.end(), lo - k01);
        l = static_cast<std::size_t>(it - a2.key.begin());
        while (l > first && k01 + a2.key[l - 1] >= lo) --l;
        while (l < a2.key.size() && k01 + a2.key[l] < lo) ++l;
      }
      const std::uint64_t w01 = a0.weight[i] * a1.weight[j];
      // Only l == j can change the orbit size along the innermost axis.
      if (l < a2.key.size() && l == j) {
        const Key key = k01 + a2.key[l];
        if (key >= hi || key > limit) continue;
        sink(key, w01 * a2.weight[l] * sym.orbit(i, j, l));
        ++l;
      }
      const std::uint64_t w_tail = w01 * sym.orbit(i, j, j + 1);
      for (; l < a2.key.size(); ++l) {
        const Key key = k01 + a2.key[l];
        if (key >= hi || key > limit) break;
        sink(key, w_tail * a2.weight[l]);
      }
    }
  }
}

template <typename Key>
AxisTable<Key> build_table(const Axis& axis, Key limit, auto&& contribution) {
  AxisTable<Key> table;
  for (std::size_t index = 0;; ++index) {
    const Key key = contribution(axis.v(index));
    if (key > limit) break;
    table.key.push_back(key);
    table.weight.push_back(axis.weight(index));
  }
  return table;
}

// Smallest multiplier m <= 64 with m * ratio_i integral for every axis, so
// that k^2 is an exact integer combination of v_i^2. 0 if none.
std::uint64_t rational_scale(const std::array<double, 3>& ratios) {
  for (std::uint64_t m = 1; m <= 64; ++m) {
    bool integral = true;
    for (double r : ratios) {
      const double scaled = static_cast<double>(m) * r;
      if (std::abs(scaled - std::round(scaled)) > 1e-12 * scaled) {
        integral = false;
        break;
      }
    }
    if (integral) return m;
  }
  return 0;
}

constexpr std::uint64_t kIntegerBandWidth = 1u << 18;
constexpr double kPointsPerBand = 2e6;

ModeList enumerate_integer_keys(const std::array<Axis, 3>& axes, const Symmetry& sym,
                                std::uint64_t scale, double omega_max,
                                const EnumerationOptions& options) {
  double unit_min = axes[0].unit;
  for (const auto& a : axes) unit_min = std::min(unit_min, a.unit);
  std::array<std::uint64_t, 3> coeff{};
  for (std::size_t d = 0; d < 3; ++d) {
    const double r = (axes[d].unit / unit_min) * (axes[d].unit / unit_min);
    coeff[d] = static_cast<std::uint64_t>(std::llround(static_cast<double>(scale) * r));
  }
  // k^2 = unit_min^2 / scale * key
  const double omega_unit = si::c * unit_min / std::sqrt(static_cast<double>(scale));
  const double ratio = omega_max / omega_unit;
  auto limit = static_cast<std::uint64_t>(std::floor(ratio * ratio));
  while (omega_unit * std::sqrt(static_cast<double>(limit + 1)) <= omega_max) ++limit;
  while (limit > 0 && omega_unit * std::sqrt(static_cast<double>(limit)) > omega_max) --limit;

  std::array<AxisTable<std::uint64_t>, 3> tables;
  for (std::size_t d = 0; d < 3; ++d) {
    const std::uint64_t c = coeff[d];
    tables[d] = build_table<std::uint64_t>(axes[d], limit, [c](std::int64_t v) {
      const auto u = static_cast<std::uint64_t>(v);
      return c * u * u;
    });
  }

  const std::size_t bands = static_cast<std::size_t>(limit / kIntegerBandWidth) + 1;
  std::vector<std::vector<WeightedFrequency>> results(bands);
  run_jobs(bands, worker_count(options, bands), [&](std::size_t b) {
    const std::uint64_t lo = b * kIntegerBandWidth;
    const std::uint64_t hi = lo + kIntegerBandWidth;
    std::vector<std::uint64_t> counts(kIntegerBandWidth, 0);
    walk_band<std::uint64_t>(tables, sym, lo, hi, limit,
                             [&](std::uint64_t key, std::uint64_t w) { counts[key - lo] += w; });
    auto& out = results[b];
    for (std::uint64_t offset = 0; offset < kIntegerBandWidth; ++offset) {
      const std::uint64_t key = lo + offset;
      if (key == 0 || counts[offset] == 0) continue;  // key 0: the periodic zero mode
      out.emplace_back(omega_unit * std::sqrt(static_cast<double>(key)), counts[offset]);
    }
  });

  std::vector<WeightedFrequency> all;
  for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
  return merge_sorted(all, omega_max);
}

ModeList enumerate_real_keys(const std::array<Axis, 3>& axes, const Symmetry& sym,
                             double omega_max, double volume, const EnumerationOptions& options) {
  const double k_max = omega_max / si::c;
  // Slack so that points whose omega rounds to exactly omega_max are kept;
  // merge_sorted applies the exact cut.
  const double limit = k_max * k_max * (1.0 + 1e-12);

  std::array<AxisTable<double>, 3> tables;
  for (std::size_t d = 0; d < 3; ++d) {
    const double unit = axes[d].unit;
    tables[d] = build_table<double>(axes[d], limit, [unit](std::int64_t v) {
      const double k = unit * static_cast<double>(v);
      return k * k;
    });
  }

  // Equal-volume bands in k^2.
  const double points = static_cast<double>(estimated_lattice_points(volume, omega_max));
  const auto bands = static_cast<std::size_t>(std::max(1.0, std::ceil(points / kPointsPerBand)));
  std::vector<double> edges(bands + 1);
  for (std::size_t b = 0; b <= bands; ++b) {
    edges[b] = limit * std::pow(static_cast<double>(b) / static_cast<double>(bands), 2.0 / 3.0);
  }
  edges.back() = std::numeric_limits<double>::infinity();

  std::vector<std::vector<WeightedFrequency>> results(bands);
  run_jobs(bands, worker_count(options, bands), [&](std::size_t b) {
    std::vector<WeightedFrequency> raw;
    walk_band<double>(tables, sym, edges[b], edges[b + 1], limit,
                      [&](double key, std::uint64_t w) { raw.emplace_back(key, w); });
    std::sort(raw.begin(), raw.end());
    auto& out = results[b];
    for (const auto& [key, w] : raw) {
      if (key == 0.0) continue;
      if (!out.empty() && out.back().first == key) {
        out.back().second += w;
      } else {
        out.emplace_back(key, w);
      }
    }
    for (auto& entry : out) entry.first = si::c * std::sqrt(entry.first);
  });

  std::vector<WeightedFrequency> all;
  for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
  return merge_sorted(all, omega_max);
}

}  // namespace

std::uint64_t ModeList::total() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& m : entries) sum += m.multiplicity;
  return sum;
}

std::uint64_t estimated_lattice_points(double volume, double omega_max) {
  const double k = omega_max / si::c;
  const double estimate = volume * k * k * k / (6.0 * pi * pi);
  if (!(estimate < 1.8e19)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(estimate));
}

ModeList enumerate_box_modes(const BoxGeometry& geom, BoundaryCondition bc, double omega_max,
                             const EnumerationOptions& options) {
  require_cutoff(omega_max);
  check_cap(geom.volume(), omega_max, options);

  // Sorting the lengths puts equal axes next to each other; the spectrum is
  // invariant under permutation of the edges.
  std::array<double, 3> lengths{geom.L1, geom.L2, geom.L3};
  std::sort(lengths.begin(), lengths.end());
  const std::array<Axis, 3> axes{make_axis(lengths[0], bc), make_axis(lengths[1], bc),
                                 make_axis(lengths[2], bc)};
  const Symmetry sym{axes[0].same_lattice(axes[1]), axes[1].same_lattice(axes[2])};

  double unit_min = axes[0].unit;
  for (const auto& a : axes) unit_min = std::min(unit_min, a.unit);
  std::array<double, 3> ratios{};
  for (std::size_t d = 0; d < 3; ++d) {
    ratios[d] = (axes[d].unit / unit_min) * (axes[d].unit / unit_min);
  }
  if (const auto scale = rational_scale(ratios); scale != 0) {
    return enumerate_integer_keys(axes, sym, scale, omega_max, options);
  }
  return enumerate_real_keys(axes, sym, omega_max, geom.volume(), options);
}

ModeList enumerate_sphere_modes(const SphereGeometry& geom, double omega_max,
                                const EnumerationOptions& options) {
  require_cutoff(omega_max);
  check_cap(geom.volume(), omega_max, options);

  const double radius = geom.radius();
  const BesselZeroTable table(omega_max * radius / si::c);
  std::vector<WeightedFrequency> all;
  for (unsigned l = 0; l < table.orders(); ++l) {
    for (double x : table.zeros(l)) all.emplace_back(si::c * x / radius, 2 * l + 1);
  }
  std::sort(all.begin(), all.end());
  return merge_sorted(all, omega_max);
}

}  // namespace cavityrad
