#pragma once

#include <cstddef>
#include <string_view>

#include "paswipt/config.hpp"

namespace paswipt {

/// Waveguide placement: along y = 0 (edge), y = d_y / 2 (center) or the
/// diagonal y = k x, always at the region height.
enum class Scheme { edge, center, diagonal };

std::string_view to_string(Scheme s);  // "eds", "cds", "dds"
/// Accepts "eds"/"cds"/"dds" (case-sensitive). Throws std::invalid_argument.
Scheme parse_scheme(std::string_view name);

inline constexpr Scheme kAllSchemes[] = {Scheme::edge, Scheme::center, Scheme::diagonal};

struct DeploymentScheme {
  Scheme kind;
  RegionGeometry geometry;
};

struct UePosition {
  double x_m;
  double y_m;
};

/// Ground coordinates of the radiating point; it sits at the region height.
struct AntennaPosition {
  double x_m;
  double y_m;
};

/// Squared antenna-to-user distance in m^2. This is the random variable every
/// closed form is written in; no API hands out the unsquared distance.
class SquaredDistance {
 public:
  constexpr explicit SquaredDistance(double m2) : m2_(m2) {}
  constexpr double value() const { return m2_; }

  friend constexpr bool operator==(SquaredDistance, SquaredDistance) = default;
  friend constexpr auto operator<=>(SquaredDistance, SquaredDistance) = default;

 private:
  double m2_;
};

bool inside_region(const RegionGeometry& g, UePosition ue);

/// Closest point of the scheme's waveguide to the user. For the diagonal the
/// foot of the perpendicular always lands on the segment when the user is
/// inside the rectangle; that is asserted, not clamped.
/// Throws std::out_of_range for a user outside the rectangle.
AntennaPosition optimal_antenna_position(const DeploymentScheme& scheme, UePosition ue);

SquaredDistance squared_distance(AntennaPosition p, UePosition ue, double height_m);

/// Optimal squared distance, i.e. squared_distance at optimal_antenna_position.
SquaredDistance optimal_squared_distance(const DeploymentScheme& scheme, UePosition ue);

/// Minimum squared distance over grid_points evenly spaced antenna positions
/// x_p in [0, d_x] along the waveguide. Optimality oracle for the closed-form
/// placement. Throws std::invalid_argument if grid_points < 2.
SquaredDistance min_squared_distance_bruteforce(const DeploymentScheme& scheme, UePosition ue,
                                                std::size_t grid_points);

/// d/dx_p of the diagonal squared distance
/// (1 + k^2) x_p^2 - 2 (x_u + k y_u) x_p + (x_u^2 + y_u^2 + h^2).
double diagonal_distance_slope(const RegionGeometry& g, UePosition ue, double x_p);

}  // namespace paswipt
