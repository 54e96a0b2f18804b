#include <doctest.h>

#include <charconv>
#include <cstring>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "cavityrad/csv.hpp"

using namespace cavityrad;

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint64_t> bits;
  int checked = 0;
  while (checked < 20000) {
    const auto raw = bits(rng);
    double value;
    std::memcpy(&value, &raw, sizeof value);
    if (!std::isfinite(value)) continue;
    const auto text = csv::format_double(value);
    double back = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), back);
    CHECK(ec == std::errc{});
    CHECK(ptr == text.data() + text.size());
    CHECK(back == value);
    ++checked;
  }
  for (double v : {0.0, 1.0, 1e14, 2.5e-21, std::numeric_limits<double>::min(),
                   std::numeric_limits<double>::denorm_min(), std::numeric_limits<double>::max()}) {
    double back = 0.0;
    const auto text = csv::format_double(v);
    std::from_chars(text.data(), text.data() + text.size(), back);
    CHECK(back == v);
  }
  CHECK(csv::format_double(0.1) == "0.1");
  CHECK(csv::format_double(1e14) == "1e+14");
}

TEST_CASE("tables") {
  std::ostringstream out;
  csv::write_table(out, {"a", "b"}, {{1.5, std::nullopt}, {std::nullopt, 2.0}});
  CHECK(out.str() == "a,b\n1.5,\n,2\n");

  ModeList modes;
  modes.omega_max = 1e15;
  modes.entries = {{1.25e14, 12}, {3e14, 2}};
  std::ostringstream m;
  csv::write_modes(m, modes);
  CHECK(m.str() == "omega_rad_s,multiplicity\n1.25e+14,12\n3e+14,2\n");

  ModeList none;
  std::ostringstream n;
  csv::write_modes(n, none);
  CHECK(n.str() == "omega_rad_s,multiplicity\n");

  BinnedSpectrum s;
  s.delta_omega = 1e13;
  s.bins = {{0.0, 0.0}, {1e13, 2.5e-20}};
  std::ostringstream b;
  csv::write_binned(b, s);
  CHECK(b.str() == "omega_left_rad_s,u_J_s_m3\n0,0\n1e+13,2.5e-20\n");
}
