#include "paswipt/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>
#include <string>

namespace paswipt {

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::edge: return "eds";
    case Scheme::center: return "cds";
    case Scheme::diagonal: return "dds";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "eds") return Scheme::edge;
  if (name == "cds") return Scheme::center;
  if (name == "dds") return Scheme::diagonal;
  throw std::invalid_argument("unknown deployment scheme '" + std::string(name) +
                              "' (expected eds, cds or dds)");
}

bool inside_region(const RegionGeometry& g, UePosition ue) {
  return ue.x_m >= 0.0 && ue.x_m <= g.d_x_m && ue.y_m >= 0.0 && ue.y_m <= g.d_y_m;
}

AntennaPosition optimal_antenna_position(const DeploymentScheme& scheme, UePosition ue) {
  const auto& g = scheme.geometry;
  if (!inside_region(g, ue)) throw std::out_of_range("user position outside the service region");

  switch (scheme.kind) {
    case Scheme::edge: return {ue.x_m, 0.0};
    case Scheme::center: return {ue.x_m, 0.5 * g.d_y_m};
    case Scheme::diagonal: break;
  }
  const double k = g.aspect_k;
  const double x_p = (ue.x_m + k * ue.y_m) / (1.0 + k * k);
  // Projection of a rectangle point onto its own diagonal stays on the
  // diagonal segment; allow a few ulps of rounding.
  assert(x_p >= -1e-12 * g.d_x_m && x_p <= g.d_x_m * (1.0 + 1e-12));
  return {x_p, k * x_p};
}

SquaredDistance squared_distance(AntennaPosition p, UePosition ue, double height_m) {
  const double dx = p.x_m - ue.x_m;
  const double dy = p.y_m - ue.y_m;
  return SquaredDistance(dx * dx + dy * dy + height_m * height_m);
}

SquaredDistance optimal_squared_distance(const DeploymentScheme& scheme, UePosition ue) {
  return squared_distance(optimal_antenna_position(scheme, ue), ue, scheme.geometry.height_m);
}

SquaredDistance min_squared_distance_bruteforce(const DeploymentScheme& scheme, UePosition ue,
                                                std::size_t grid_points) {
  if (grid_points < 2) throw std::invalid_argument("brute-force grid needs at least 2 points");
  const auto& g = scheme.geometry;
  const double step = g.d_x_m / static_cast<double>(grid_points - 1);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x_p = step * static_cast<double>(i);
    double y_p = 0.0;
    switch (scheme.kind) {
      case Scheme::edge: y_p = 0.0; break;
      case Scheme::center: y_p = 0.5 * g.d_y_m; break;
      case Scheme::diagonal: y_p = g.aspect_k * x_p; break;
    }
    best = std::min(best, squared_distance({x_p, y_p}, ue, g.height_m).value());
  }
  return SquaredDistance(best);
}

double diagonal_distance_slope(const RegionGeometry& g, UePosition ue, double x_p) {
  const double k = g.aspect_k;
  return 2.0 * (1.0 + k * k) * x_p - 2.0 * (ue.x_m + k * ue.y_m);
}

}  // namespace paswipt
