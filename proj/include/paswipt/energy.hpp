#pragma once

#include <string_view>

#include "paswipt/config.hpp"
#include "paswipt/geometry.hpp"
#include "paswipt/quadrature.hpp"

namespace paswipt {

enum class HarvestKind { linear, logistic };
std::string_view to_string(HarvestKind k);  // "lm", "nlm"
HarvestKind harvest_kind(const HarvestModel& m);

enum class EnergyMethod { closed_form, jensen_bound, quadrature };
std::string_view to_string(EnergyMethod m);  // "closed", "bound", "quad"

/// Average harvested power over the unit period, in watts.
struct EnergyResult {
  double value_w;
  HarvestKind model;
  EnergyMethod method;
  Scheme scheme;
};

/// Logistic rectifier output for incident power p_in_w >= 0:
/// [phi / (1 - omega) * (sigmoid(a (p - b)) - omega)]^+.
double logistic_harvest(const LogisticHarvest& model, double p_in_w);

/// E[1 / L*] in closed form:
///   edge/center  w / (h d_y) * atan(d_y / (w h))
///   diagonal     2 / (L h) * atan(L / h) - ln(1 + L^2 / h^2) / L^2
double mean_inverse_squared_distance(Scheme scheme, const RegionGeometry& g);

/// Mean incident power at the harvester, beta P_t E[1 / L*].
double mean_incident_power(const DeploymentScheme& d, const SystemParams& sys,
                           const ProtocolParams& proto);

/// Linear-model average: alpha beta eta P_t E[1 / L*].
EnergyResult avg_energy_lm_closed(const DeploymentScheme& d, const SystemParams& sys,
                                  const ProtocolParams& proto, const LinearHarvest& lm);

/// Upper bound alpha * Phi(E[P_in]) on the logistic-model average, from
/// Jensen's inequality on the concave part of the logistic.
EnergyResult avg_energy_nlm_bound(const DeploymentScheme& d, const SystemParams& sys,
                                  const ProtocolParams& proto, const LogisticHarvest& nlm);

/// Exact average of either model by adaptive quadrature against the distance
/// law. Throws QuadratureError on non-convergence.
EnergyResult avg_energy_quadrature(const DeploymentScheme& d, const SystemParams& sys,
                                   const ProtocolParams& proto, const HarvestModel& model,
                                   const QuadratureOptions& opts = {});

}  // namespace paswipt
