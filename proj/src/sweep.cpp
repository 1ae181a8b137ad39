#include "paswipt/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "paswipt/rate.hpp"

namespace paswipt {
namespace {

template <typename F>
auto with_row_context(F&& f, double pt, Scheme scheme, std::string_view what) {
  try {
    return f();
  } catch (const QuadratureError& e) {
    std::ostringstream os;
    os << "sweep row pt_w=" << pt << " scheme=" << to_string(scheme) << " " << what << ": "
       << e.what();
    throw QuadratureError(os.str());
  }
}

void append_energy_rows(std::vector<PowerRow>& rows, const SweepSpec& spec, const Config& cfg,
                        const DeploymentScheme& d) {
  const double pt = cfg.system.transmit_power_w;
  for (HarvestKind kind : spec.models) {
    const HarvestModel model = kind == HarvestKind::linear ? HarvestModel{cfg.linear}
                                                           : HarvestModel{cfg.logistic};
    auto push = [&](SweepMethod m, double v) { rows.push_back({pt, d.kind, kind, m, v}); };
    if (kind == HarvestKind::linear && spec.methods.closed)
      push(SweepMethod::closed, avg_energy_lm_closed(d, cfg.system, cfg.protocol, cfg.linear).value_w);
    if (kind == HarvestKind::logistic && spec.methods.bound)
      push(SweepMethod::bound, avg_energy_nlm_bound(d, cfg.system, cfg.protocol, cfg.logistic).value_w);
    if (spec.methods.quadrature) {
      const double v = with_row_context(
          [&] { return avg_energy_quadrature(d, cfg.system, cfg.protocol, model, spec.quadrature).value_w; },
          pt, d.kind, to_string(kind));
      push(SweepMethod::quad, v);
    }
    if (spec.methods.monte_carlo) {
      const Metric metric = kind == HarvestKind::linear ? Metric::energy_lm : Metric::energy_nlm;
      push(SweepMethod::mc, estimate(metric, d, cfg, spec.mc).mean);
    }
  }
}

void append_rate_rows(std::vector<PowerRow>& rows, const SweepSpec& spec, const Config& cfg,
                      const DeploymentScheme& d) {
  const double pt = cfg.system.transmit_power_w;
  auto push = [&](SweepMethod m, double v) { rows.push_back({pt, d.kind, std::nullopt, m, v}); };
  if (spec.methods.closed)
    push(SweepMethod::closed, avg_rate_closed(d, cfg.system, cfg.protocol).value_bits_per_s_per_hz);
  if (spec.methods.quadrature) {
    const double v = with_row_context(
        [&] {
          return avg_rate_quadrature(d, cfg.system, cfg.protocol, spec.quadrature).value_bits_per_s_per_hz;
        },
        pt, d.kind, "rate");
    push(SweepMethod::quad, v);
  }
  if (spec.methods.monte_carlo) push(SweepMethod::mc, estimate(Metric::rate, d, cfg, spec.mc).mean);
}

}  // namespace

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::energy_vs_power: return "energy";
    case Experiment::rate_vs_power: return "rate";
    case Experiment::energy_rate_region: return "region";
  }
  return "?";
}

Experiment parse_experiment(std::string_view name) {
  if (name == "energy") return Experiment::energy_vs_power;
  if (name == "rate") return Experiment::rate_vs_power;
  if (name == "region") return Experiment::energy_rate_region;
  throw std::invalid_argument("unknown experiment '" + std::string(name) +
                              "' (expected energy, rate or region)");
}

std::string_view to_string(SweepMethod m) {
  switch (m) {
    case SweepMethod::closed: return "closed";
    case SweepMethod::bound: return "bound";
    case SweepMethod::quad: return "quad";
    case SweepMethod::mc: return "mc";
  }
  return "?";
}

std::string_view to_string(Protocol p) { return p == Protocol::time_switching ? "ts" : "ps"; }

std::vector<double> PowerGrid::values() const {
  std::vector<double> out(points);
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / last;
    out[i] = log_spaced ? min_w * std::pow(max_w / min_w, f) : min_w + (max_w - min_w) * f;
  }
  // pin the end points exactly
  out.front() = min_w;
  out.back() = max_w;
  return out;
}

void SweepSpec::validate() const {
  std::vector<FieldError> errs;
  if (schemes.empty()) errs.push_back({"schemes", "at least one scheme is required"});
  if (experiment == Experiment::energy_rate_region) {
    if (control_points < 2) errs.push_back({"control_points", "grid needs at least 2 points"});
    if (!base.transmit_power_w)
      errs.push_back({"transmit_power_w", "region sweep needs a fixed transmit power"});
    if (models.empty()) errs.push_back({"models", "at least one harvest model is required"});
  } else {
    if (power.points < 2) errs.push_back({"power.points", "grid needs at least 2 points"});
    if (!(power.min_w > 0.0 && power.max_w > power.min_w && std::isfinite(power.max_w)))
      errs.push_back({"power", "needs 0 < min_w < max_w"});
    if (experiment == Experiment::energy_vs_power && models.empty())
      errs.push_back({"models", "at least one harvest model is required"});
  }
  if (methods.monte_carlo && mc.samples < 2) errs.push_back({"mc.samples", "needs at least 2 samples"});

  // the scenario itself must validate at every point it will be evaluated
  ConfigInput probe = base;
  if (experiment != Experiment::energy_rate_region) probe.transmit_power_w = power.min_w;
  if (probe.transmit_power_w) {
    auto r = paswipt::validate(probe);
    errs.insert(errs.end(), r.errors.begin(), r.errors.end());
  }
  if (!errs.empty()) throw ConfigError(std::move(errs));
}

SweepSpec preset_spec(std::string_view preset, Experiment experiment, const ConfigInput& base) {
  SweepSpec spec;
  spec.experiment = experiment;
  spec.preset = std::string(preset);
  spec.base = base;
  if (preset == "s1") {
    spec.base.d_x_m = 8.0;
    spec.base.d_y_m = 8.0;
  } else if (preset == "s2") {
    spec.base.d_x_m = 15.0;
    spec.base.d_y_m = 8.0;
  } else if (preset == "c1") {
    spec.base.alpha = 0.8;
    spec.base.beta = 0.8;
  } else if (preset == "c2") {
    spec.base.alpha = 0.6;
    spec.base.beta = 0.6;
  } else if (preset == "fig4") {
    spec.base.d_x_m = 8.0;
    spec.base.d_y_m = 8.0;
    spec.base.transmit_power_w = 0.3;
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(preset) +
                                "' (expected s1, s2, c1, c2 or fig4)");
  }
  return spec;
}

std::vector<PowerRow> run_power_sweep(const SweepSpec& spec) {
  spec.validate();
  if (spec.experiment == Experiment::energy_rate_region)
    throw std::invalid_argument("run_power_sweep called with a region spec");

  std::vector<PowerRow> rows;
  for (double pt : spec.power.values()) {
    ConfigInput in = spec.base;
    in.transmit_power_w = pt;
    const Config cfg = validate_or_throw(in);
    for (Scheme s : spec.schemes) {
      const DeploymentScheme d{s, cfg.geometry};
      if (spec.experiment == Experiment::energy_vs_power)
        append_energy_rows(rows, spec, cfg, d);
      else
        append_rate_rows(rows, spec, cfg, d);
    }
  }
  auto key = [](const PowerRow& r) {
    const int model = r.model ? static_cast<int>(*r.model) : -1;
    return std::make_tuple(static_cast<int>(r.scheme), model, static_cast<int>(r.method), r.pt_w);
  };
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const PowerRow& a, const PowerRow& b) { return key(a) < key(b); });
  return rows;
}

std::vector<TradeoffPoint> run_tradeoff(const SweepSpec& spec) {
  spec.validate();
  if (spec.experiment != Experiment::energy_rate_region)
    throw std::invalid_argument("run_tradeoff needs a region spec");

  const Config base = validate_or_throw(spec.base);
  const double pt = base.system.transmit_power_w;
  const double last = static_cast<double>(spec.control_points - 1);

  std::vector<TradeoffPoint> out;
  for (Scheme s : spec.schemes) {
    const DeploymentScheme d{s, base.geometry};
    for (HarvestKind kind : spec.models) {
      for (Protocol protocol : {Protocol::time_switching, Protocol::power_splitting}) {
        for (std::size_t i = 0; i < spec.control_points; ++i) {
          const double c = i + 1 == spec.control_points ? 1.0 : static_cast<double>(i) / last;
          const Config cfg = protocol == Protocol::time_switching ? base.with_protocol(c, 1.0)
                                                                  : base.with_protocol(1.0, c);
          double energy = 0.0;
          if (kind == HarvestKind::linear) {
            energy = avg_energy_lm_closed(d, cfg.system, cfg.protocol, cfg.linear).value_w;
          } else {
            energy = with_row_context(
                [&] {
                  return avg_energy_quadrature(d, cfg.system, cfg.protocol, cfg.logistic, spec.quadrature)
                      .value_w;
                },
                pt, s, "region nlm");
          }
          const double rate = avg_rate_closed(d, cfg.system, cfg.protocol).value_bits_per_s_per_hz;
          out.push_back({protocol, c, s, kind, energy, rate});
        }
      }
    }
  }
  return out;
}

SweepResult run_sweep(const SweepSpec& spec) {
  SweepResult r{spec.experiment, {}, {}};
  if (spec.experiment == Experiment::energy_rate_region)
    r.region_points = run_tradeoff(spec);
  else
    r.power_rows = run_power_sweep(spec);
  return r;
}

}  // namespace paswipt
