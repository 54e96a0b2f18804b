#pragma once

#include <string>
#include <string_view>

namespace cavityrad {

/// Which admitted wavenumbers a confined direction carries:
/// periodic 2 pi n / L (n in Z), antiperiodic 2 pi (n + 1/2) / L (n in Z),
/// Dirichlet n pi / L (n >= 1).
enum class BoundaryCondition { Periodic, Antiperiodic, Dirichlet };

std::string_view to_string(BoundaryCondition bc) noexcept;
/// Accepts "periodic", "antiperiodic", "dirichlet" (case-insensitive).
/// Throws std::invalid_argument otherwise.
BoundaryCondition parse_boundary_condition(std::string_view text);

/// Two infinite plates a distance L1 apart.
struct FilmGeometry {
  explicit FilmGeometry(double l1);
  double L1;
};

/// Infinite rod with a rectangular L1 x L2 cross section.
struct RodGeometry {
  RodGeometry(double l1, double l2);
  double L1;
  double L2;
};

struct BoxGeometry {
  BoxGeometry(double l1, double l2, double l3);
  double L1;
  double L2;
  double L3;

  double volume() const noexcept { return L1 * L2 * L3; }
};

struct SphereGeometry {
  explicit SphereGeometry(double diameter);
  double diameter;

  double radius() const noexcept { return 0.5 * diameter; }
  double volume() const noexcept;
};

}  // namespace cavityrad
