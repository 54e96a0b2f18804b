#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cavityrad/errors.hpp"
#include "cavityrad/modes.hpp"
#include "cavityrad/oracle.hpp"
#include "cavityrad/physics.hpp"

using namespace cavityrad;

namespace {

constexpr BoundaryCondition kAll[] = {BoundaryCondition::Periodic, BoundaryCondition::Antiperiodic,
                                      BoundaryCondition::Dirichlet};

void check_same(const ModeList& got, const ModeList& expected) {
  REQUIRE(got.entries.size() == expected.entries.size());
  for (std::size_t i = 0; i < got.entries.size(); ++i) {
    CHECK(got.entries[i].omega == doctest::Approx(expected.entries[i].omega).epsilon(1e-13));
    CHECK(got.entries[i].multiplicity == expected.entries[i].multiplicity);
  }
}

// Omega enclosing roughly `points` lattice points in the box.
double omega_for(const BoxGeometry& box, double points) {
  return si::c * std::cbrt(6.0 * pi * pi * points / box.volume());
}

}  // namespace

TEST_CASE("periodic cube low shells") {
  const double L = 1e-5;
  const BoxGeometry cube(L, L, L);
  const double unit = 2.0 * pi * si::c / L;

  CHECK(enumerate_box_modes(cube, BoundaryCondition::Periodic, unit * 0.99).empty());

  const auto modes = enumerate_box_modes(cube, BoundaryCondition::Periodic, unit * 1.8);
  REQUIRE(modes.entries.size() == 3);
  CHECK(modes.entries[0].omega == doctest::Approx(unit).epsilon(1e-14));
  CHECK(modes.entries[0].multiplicity == 12);
  CHECK(modes.entries[1].omega == doctest::Approx(unit * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(modes.entries[1].multiplicity == 24);
  CHECK(modes.entries[2].omega == doctest::Approx(unit * std::sqrt(3.0)).epsilon(1e-14));
  CHECK(modes.entries[2].multiplicity == 16);
  CHECK(modes.total() == 52);
}

TEST_CASE("Dirichlet cube lowest mode") {
  const double L = 1e-5;
  const BoxGeometry cube(L, L, L);
  const double lowest = pi * si::c * std::sqrt(3.0) / L;
  CHECK(enumerate_box_modes(cube, BoundaryCondition::Dirichlet, lowest * 0.999).empty());
  const auto modes = enumerate_box_modes(cube, BoundaryCondition::Dirichlet, lowest * 1.001);
  REQUIRE(modes.entries.size() == 1);
  CHECK(modes.entries[0].omega == doctest::Approx(lowest).epsilon(1e-14));
  CHECK(modes.entries[0].multiplicity == 2);
  // Next shell (1,1,2) has three orientations.
  const auto next = enumerate_box_modes(cube, BoundaryCondition::Dirichlet, pi * si::c * std::sqrt(6.0) / L * 1.001);
  REQUIRE(next.entries.size() == 2);
  CHECK(next.entries[1].multiplicity == 6);
}

TEST_CASE("enumeration matches the naive triple loop") {
  std::mt19937_64 rng(1234);

  SUBCASE("rational edge ratios") {
    const double base = 1e-5;
    std::uniform_int_distribution<int> mult(1, 4);
    for (int trial = 0; trial < 24; ++trial) {
      const BoxGeometry box(base * mult(rng), base * mult(rng) / 2.0, base * mult(rng));
      const auto bc = kAll[trial % 3];
      const double w = omega_for(box, 2000.0 + 500.0 * trial);
      check_same(enumerate_box_modes(box, bc, w), oracle::naive_box_count(box, bc, w));
    }
  }
  SUBCASE("generic edge ratios") {
    std::uniform_real_distribution<double> len(3e-6, 3e-5);
    for (int trial = 0; trial < 24; ++trial) {
      const BoxGeometry box(len(rng), len(rng), len(rng));
      const auto bc = kAll[trial % 3];
      const double w = omega_for(box, 2000.0 + 500.0 * trial);
      check_same(enumerate_box_modes(box, bc, w), oracle::naive_box_count(box, bc, w));
    }
  }
  SUBCASE("thread count does not change the result") {
    const BoxGeometry box(1.3e-5, 2.1e-5, 0.7e-5);
    const double w = omega_for(box, 60000.0);
    for (auto bc : kAll) {
      const auto serial = enumerate_box_modes(box, bc, w, {100'000'000, 1});
      const auto parallel = enumerate_box_modes(box, bc, w, {100'000'000, 8});
      REQUIRE(serial.entries.size() == parallel.entries.size());
      for (std::size_t i = 0; i < serial.entries.size(); ++i) {
        CHECK(serial.entries[i].omega == parallel.entries[i].omega);
        CHECK(serial.entries[i].multiplicity == parallel.entries[i].multiplicity);
      }
    }
  }
}

TEST_CASE("mode list invariants") {
  const BoxGeometry box(1e-5, 1.7e-5, 2.3e-5);
  for (auto bc : kAll) {
    const double w = 3e15;
    const auto modes = enumerate_box_modes(box, bc, w);
    REQUIRE(!modes.empty());
    CHECK(modes.omega_max == w);
    CHECK(modes.entries.back().omega <= w);
    for (std::size_t i = 1; i < modes.entries.size(); ++i) {
      CHECK(modes.entries[i].omega > modes.entries[i - 1].omega * (1.0 + kMergeTolerance));
    }
    for (const auto& m : modes.entries) CHECK(m.multiplicity % 2 == 0);

    // Prefix of a larger cutoff.
    const auto larger = enumerate_box_modes(box, bc, 1.3 * w);
    REQUIRE(larger.entries.size() >= modes.entries.size());
    for (std::size_t i = 0; i < modes.entries.size(); ++i) {
      CHECK(larger.entries[i].omega == modes.entries[i].omega);
      CHECK(larger.entries[i].multiplicity == modes.entries[i].multiplicity);
    }

    // Permuting the edges gives the same spectrum.
    const auto permuted = enumerate_box_modes(BoxGeometry(box.L3, box.L1, box.L2), bc, w);
    check_same(permuted, modes);
  }
}

TEST_CASE("box mode count follows the leading Weyl term") {
  for (auto bc : kAll) {
    for (double scaled : {100.0, 200.0}) {
      const BoxGeometry box(1e-5, 1.4e-5, 0.8e-5);
      const double L = std::cbrt(box.volume());
      const double w = scaled * si::c / L;
      const double k = w / si::c;
      const double leading = box.volume() * k * k * k / (3.0 * pi * pi);
      const auto modes = enumerate_box_modes(box, bc, w);
      CHECK(std::abs(static_cast<double>(modes.total()) / leading - 1.0) <= 0.10);
    }
  }
}

TEST_CASE("resource cap") {
  const BoxGeometry box(1e-3, 1e-3, 1e-3);
  const double w = 1e15;
  const auto estimate = estimated_lattice_points(box.volume(), w);
  CHECK(estimate > 100'000'000u);
  CHECK_THROWS_AS(enumerate_box_modes(box, BoundaryCondition::Periodic, w), ResourceLimitExceeded);
  try {
    enumerate_box_modes(box, BoundaryCondition::Dirichlet, w, {1000, 0});
    FAIL("expected ResourceLimitExceeded");
  } catch (const ResourceLimitExceeded& e) {
    CHECK(e.cap() == 1000);
    CHECK(e.required() == estimate);
  }
  CHECK_THROWS_AS(enumerate_box_modes(box, BoundaryCondition::Periodic, -1.0), DomainError);
}

TEST_CASE("sphere spectrum") {
  const SphereGeometry sphere(2e-5);
  const double R = sphere.radius();
  const double lowest = pi * si::c / R;

  CHECK(enumerate_sphere_modes(sphere, lowest * 0.999).empty());
  const auto first = enumerate_sphere_modes(sphere, lowest * 1.001);
  REQUIRE(first.entries.size() == 1);
  CHECK(first.entries[0].omega == doctest::Approx(lowest).epsilon(1e-14));
  CHECK(first.entries[0].multiplicity == 2);

  // Next is the first zero of j_1 with 2 (2l + 1) = 6.
  const auto two = enumerate_sphere_modes(sphere, 4.5 * si::c / R);
  REQUIRE(two.entries.size() == 2);
  CHECK(two.entries[0].omega < two.entries[1].omega);
  CHECK(two.entries[1].omega == doctest::Approx(4.493409457909064 * si::c / R).epsilon(1e-13));
  CHECK(two.entries[1].multiplicity == 6);

  const double kR = 50.0;
  const auto modes = enumerate_sphere_modes(sphere, kR * si::c / R);
  const double leading = 4.0 * kR * kR * kR / (9.0 * pi);
  CHECK(std::abs(static_cast<double>(modes.total()) / leading - 1.0) <= 0.15);
  for (std::size_t i = 1; i < modes.entries.size(); ++i) {
    CHECK(modes.entries[i].omega > modes.entries[i - 1].omega);
  }
}
