#include "cavityrad/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "cavityrad/errors.hpp"
#include "cavityrad/physics.hpp"

namespace cavityrad {
namespace {

double require_length(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string(name) + " must be a positive finite length");
  }
  return value;
}

}  // namespace

std::string_view to_string(BoundaryCondition bc) noexcept {
  switch (bc) {
    case BoundaryCondition::Periodic:
      return "periodic";
    case BoundaryCondition::Antiperiodic:
      return "antiperiodic";
    case BoundaryCondition::Dirichlet:
      return "dirichlet";
  }
  return "unknown";
}

BoundaryCondition parse_boundary_condition(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "periodic") return BoundaryCondition::Periodic;
  if (lower == "antiperiodic") return BoundaryCondition::Antiperiodic;
  if (lower == "dirichlet") return BoundaryCondition::Dirichlet;
  throw std::invalid_argument("unknown boundary condition '" + std::string(text) + "'");
}

FilmGeometry::FilmGeometry(double l1) : L1(require_length(l1, "L1")) {}

RodGeometry::RodGeometry(double l1, double l2)
    : L1(require_length(l1, "L1")), L2(require_length(l2, "L2")) {}

BoxGeometry::BoxGeometry(double l1, double l2, double l3)
    : L1(require_length(l1, "L1")), L2(require_length(l2, "L2")), L3(require_length(l3, "L3")) {}

SphereGeometry::SphereGeometry(double d) : diameter(require_length(d, "diameter")) {}

double SphereGeometry::volume() const noexcept {
  const double r = radius();
  return 4.0 * pi * r * r * r / 3.0;
}

}  // namespace cavityrad
