#pragma once

#include <functional>
#include <span>

#include "paswipt/geometry.hpp"
#include "paswipt/quadrature.hpp"

namespace paswipt {

/// Law of the optimal squared distance L* for a uniformly placed user.
///
/// Writing t for the in-plane offset between the user and its antenna,
/// L* = h^2 + t^2. For the edge and center waveguides t is uniform on
/// [0, d_y / w] (w = 1 edge, w = 2 center). For the diagonal, t is the
/// distance from the user to the diagonal, with CDF (2 L t - t^2) / L^2 on
/// [0, L], L the diagonal half-width d_x d_y / sqrt(d_x^2 + d_y^2).
class SquaredDistanceLaw {
 public:
  SquaredDistanceLaw(Scheme scheme, const RegionGeometry& geometry);
  explicit SquaredDistanceLaw(const DeploymentScheme& d) : SquaredDistanceLaw(d.kind, d.geometry) {}

  Scheme scheme() const { return scheme_; }
  const RegionGeometry& geometry() const { return geometry_; }

  /// Largest in-plane offset: d_y for edge, d_y / 2 for center, the diagonal
  /// half-width for diagonal.
  double max_offset_m() const { return span_; }
  double lower() const { return h2_; }
  double upper() const { return h2_ + span_ * span_; }

  /// Total: 0 below the support, 1 above.
  double cdf(double l) const;
  /// Zero outside the support. The density is unbounded at l = h^2 and that
  /// point is rejected with std::domain_error.
  double pdf(double l) const;
  /// Inverse-CDF draw. Throws std::domain_error unless 0 < u < 1.
  SquaredDistance sample(double u) const;

  /// Density of the offset t on [0, max_offset_m()]; bounded, unlike pdf().
  double offset_density(double t) const;

  /// E[f(L*)], integrated over the offset t so the integrand is smooth.
  /// Extra offsets in offset_breaks (outside (0, max) are ignored) split the
  /// integration range, e.g. at a kink or steep transition of f.
  double expectation(const std::function<double(double)>& f, const QuadratureOptions& opts = {},
                     std::span<const double> offset_breaks = {}) const;

 private:
  Scheme scheme_;
  RegionGeometry geometry_;
  double h2_;
  double span_;
};

/// CDF of the distance from a uniform user to the diagonal of the rectangle
/// (the ground projection of the optimally placed diagonal antenna).
/// (2 L x - x^2) / L^2 on [0, L], clamped to [0, 1] elsewhere.
double ground_projection_cdf(const RegionGeometry& geometry, double x);

}  // namespace paswipt
