#pragma once

#include <string_view>

#include "paswipt/config.hpp"
#include "paswipt/geometry.hpp"
#include "paswipt/quadrature.hpp"

namespace paswipt {

enum class RateMethod { closed_form, quadrature, monte_carlo };
std::string_view to_string(RateMethod m);  // "closed", "quad", "mc"

struct RateResult {
  double value_bits_per_s_per_hz;
  Scheme scheme;
  RateMethod method;
};

/// Received SNR mu * P_t / (sigma^2 L). The carrier phase has unit modulus
/// and never enters.
double snr(const SystemParams& sys, SquaredDistance l);

namespace rate_kernels {

// All integrals below use natural logs; callers convert to bits once.
// m is mu * transmit SNR in m^2.

/// Integral over t in [0, span] of ln(1 + m / (h^2 + t^2)), by parts:
///   2 sqrt(m + h^2) atan(span / sqrt(m + h^2)) - 2 h atan(span / h)
///   + span ln(1 + m / (h^2 + span^2)).
double offset_log_integral(double span_m, double height_m, double m);

/// Integral over l in [h^2, h^2 + L^2] of ln(1 + m/l) / sqrt(l - h^2).
double diagonal_i1(double halfwidth_m, double height_m, double m);

/// Integral over l in [h^2, h^2 + L^2] of ln(1 + m/l), from
/// ln(l + m) - ln(l) integrated term by term.
double diagonal_i2(double halfwidth_m, double height_m, double m);

}  // namespace rate_kernels

/// Closed-form average rate for the edge or center waveguide.
/// Throws std::invalid_argument for Scheme::diagonal.
RateResult avg_rate_edge_center_closed(const DeploymentScheme& d, const SystemParams& sys,
                                       const ProtocolParams& proto);

/// Closed-form average rate for the diagonal waveguide,
/// (1 - alpha beta) / ln 2 * (I1 / L - I2 / L^2).
RateResult avg_rate_diagonal_closed(const RegionGeometry& g, const SystemParams& sys,
                                    const ProtocolParams& proto);

/// Dispatches to the matching closed form.
RateResult avg_rate_closed(const DeploymentScheme& d, const SystemParams& sys,
                           const ProtocolParams& proto);

/// (1 - alpha beta) E[log2(1 + SNR)] by adaptive quadrature against the
/// distance law. Throws QuadratureError on non-convergence.
RateResult avg_rate_quadrature(const DeploymentScheme& d, const SystemParams& sys,
                               const ProtocolParams& proto, const QuadratureOptions& opts = {});

}  // namespace paswipt
