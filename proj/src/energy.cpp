#include "paswipt/energy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "paswipt/distance_law.hpp"

namespace paswipt {
namespace {

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// Offsets t at which beta P_t / (h^2 + t^2) sweeps through the logistic's
// transition region b +- 40/a. Outside it the harvester is flat to double
// precision, so splitting here keeps the adaptive rule from missing the step.
std::vector<double> logistic_transition_offsets(const LogisticHarvest& nlm, double scaled_power,
                                                double h2) {
  std::vector<double> out;
  for (double j : {-40.0, -10.0, 0.0, 10.0, 40.0}) {
    const double p = nlm.b_w + j / nlm.a_per_w;
    if (p <= 0.0) continue;
    const double t2 = scaled_power / p - h2;
    if (t2 > 0.0) out.push_back(std::sqrt(t2));
  }
  return out;
}

}  // namespace

std::string_view to_string(HarvestKind k) { return k == HarvestKind::linear ? "lm" : "nlm"; }

HarvestKind harvest_kind(const HarvestModel& m) {
  return std::holds_alternative<LinearHarvest>(m) ? HarvestKind::linear : HarvestKind::logistic;
}

std::string_view to_string(EnergyMethod m) {
  switch (m) {
    case EnergyMethod::closed_form: return "closed";
    case EnergyMethod::jensen_bound: return "bound";
    case EnergyMethod::quadrature: return "quad";
  }
  return "?";
}

double logistic_harvest(const LogisticHarvest& model, double p_in_w) {
  const double s = sigmoid(model.a_per_w * (p_in_w - model.b_w));
  return std::max(0.0, model.phi_w / (1.0 - model.omega) * (s - model.omega));
}

double mean_inverse_squared_distance(Scheme scheme, const RegionGeometry& g) {
  const double h = g.height_m;
  if (scheme == Scheme::diagonal) {
    const double lam = g.diagonal_halfwidth_m;
    const double r = lam / h;
    return 2.0 / (lam * h) * std::atan(r) - std::log1p(r * r) / (lam * lam);
  }
  const double w = scheme == Scheme::edge ? 1.0 : 2.0;
  return w / (h * g.d_y_m) * std::atan(g.d_y_m / (w * h));
}

double mean_incident_power(const DeploymentScheme& d, const SystemParams& sys,
                           const ProtocolParams& proto) {
  return proto.beta * sys.transmit_power_w * mean_inverse_squared_distance(d.kind, d.geometry);
}

EnergyResult avg_energy_lm_closed(const DeploymentScheme& d, const SystemParams& sys,
                                  const ProtocolParams& proto, const LinearHarvest& lm) {
  const double v = proto.alpha * lm.eta * mean_incident_power(d, sys, proto);
  return {v, HarvestKind::linear, EnergyMethod::closed_form, d.kind};
}

EnergyResult avg_energy_nlm_bound(const DeploymentScheme& d, const SystemParams& sys,
                                  const ProtocolParams& proto, const LogisticHarvest& nlm) {
  const double v = proto.alpha * logistic_harvest(nlm, mean_incident_power(d, sys, proto));
  return {v, HarvestKind::logistic, EnergyMethod::jensen_bound, d.kind};
}

EnergyResult avg_energy_quadrature(const DeploymentScheme& d, const SystemParams& sys,
                                   const ProtocolParams& proto, const HarvestModel& model,
                                   const QuadratureOptions& opts) {
  const SquaredDistanceLaw law(d);
  const double scaled_power = proto.beta * sys.transmit_power_w;

  double mean = 0.0;
  if (const auto* lm = std::get_if<LinearHarvest>(&model)) {
    mean = law.expectation([&](double l) { return lm->eta * scaled_power / l; }, opts);
  } else {
    const auto& nlm = std::get<LogisticHarvest>(model);
    const auto breaks = logistic_transition_offsets(nlm, scaled_power, law.lower());
    mean = law.expectation([&](double l) { return logistic_harvest(nlm, scaled_power / l); }, opts,
                           breaks);
  }
  return {proto.alpha * mean, harvest_kind(model), EnergyMethod::quadrature, d.kind};
}

}  // namespace paswipt
