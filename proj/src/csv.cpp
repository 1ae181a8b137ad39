#include "paswipt/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace paswipt {
namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << contents;
  out.flush();
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

constexpr const char* kPlotPreamble = R"(#!/usr/bin/env python3
# Generated by paswipt sweep. Usage: python3 <this file>
import csv
import os
from collections import defaultdict

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

HERE = os.path.dirname(os.path.abspath(__file__))
)";

constexpr const char* kPowerPlot = R"(
curves = defaultdict(lambda: ([], []))
with open(os.path.join(HERE, CSV)) as f:
    for row in csv.DictReader(f):
        label = " ".join(v for v in (row["scheme"], row.get("model", ""), row["method"]) if v)
        xs, ys = curves[label]
        xs.append(float(row["pt_w"]))
        ys.append(float(row[VALUE]))

fig, ax = plt.subplots(figsize=(6, 4.5))
for label, (xs, ys) in sorted(curves.items()):
    style = "o" if label.endswith(" mc") else "-"
    ax.plot(xs, ys, style, markersize=3, label=label)
ax.set_xscale("log")
ax.set_xlabel("transmit power P_t [W]")
ax.set_ylabel(YLABEL)
ax.grid(True, which="both", alpha=0.3)
ax.legend(fontsize=7)
fig.tight_layout()
fig.savefig(os.path.join(HERE, OUT), dpi=150)
)";

constexpr const char* kRegionPlot = R"(
curves = defaultdict(lambda: ([], []))
with open(os.path.join(HERE, CSV)) as f:
    for row in csv.DictReader(f):
        label = f"{row['scheme']} {row['model']} {row['protocol']}"
        xs, ys = curves[label]
        xs.append(float(row["energy_w"]))
        ys.append(float(row["rate_bits_s_hz"]))

fig, ax = plt.subplots(figsize=(6, 4.5))
for label, (xs, ys) in sorted(curves.items()):
    ax.plot(xs, ys, "--" if label.endswith("ps") else "-", label=label)
ax.set_xlabel("average harvested energy [W]")
ax.set_ylabel("average achievable rate [bit/s/Hz]")
ax.grid(True, alpha=0.3)
ax.legend(fontsize=7)
fig.tight_layout()
fig.savefig(os.path.join(HERE, OUT), dpi=150)
)";

}  // namespace

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_power_csv(std::ostream& out, Experiment experiment, std::span<const PowerRow> rows) {
  const bool energy = experiment == Experiment::energy_vs_power;
  out << (energy ? "pt_w,scheme,model,method,value_w\n" : "pt_w,scheme,method,value_bits_s_hz\n");
  for (const auto& r : rows) {
    out << format_number(r.pt_w) << ',' << to_string(r.scheme) << ',';
    if (energy) out << (r.model ? to_string(*r.model) : "") << ',';
    out << to_string(r.method) << ',' << format_number(r.value) << '\n';
  }
}

void write_region_csv(std::ostream& out, std::span<const TradeoffPoint> points) {
  out << "protocol,control,scheme,model,energy_w,rate_bits_s_hz\n";
  for (const auto& p : points) {
    out << to_string(p.protocol) << ',' << format_number(p.control) << ',' << to_string(p.scheme) << ','
        << to_string(p.model) << ',' << format_number(p.energy_w) << ','
        << format_number(p.rate_bits_s_hz) << '\n';
  }
}

void write_distribution_csv(std::ostream& out, const SquaredDistanceLaw& law, std::size_t points) {
  if (points == 0) throw std::invalid_argument("distribution grid needs at least one point");
  out << "l_m2,cdf,pdf_per_m2\n";
  const double width = law.upper() - law.lower();
  for (std::size_t i = 0; i < points; ++i) {
    const double l = law.lower() + width * (static_cast<double>(i) + 0.5) / static_cast<double>(points);
    out << format_number(l) << ',' << format_number(law.cdf(l)) << ',' << format_number(law.pdf(l))
        << '\n';
  }
}

std::string plot_script(Experiment experiment, const std::string& csv_name) {
  std::string s = kPlotPreamble;
  const std::string stem = std::string(to_string(experiment));
  s += "CSV = \"" + csv_name + "\"\n";
  s += "OUT = \"" + stem + ".png\"\n";
  switch (experiment) {
    case Experiment::energy_vs_power:
      s += "VALUE = \"value_w\"\nYLABEL = \"average harvested energy [W]\"\n";
      s += kPowerPlot;
      break;
    case Experiment::rate_vs_power:
      s += "VALUE = \"value_bits_s_hz\"\nYLABEL = \"average achievable rate [bit/s/Hz]\"\n";
      s += kPowerPlot;
      break;
    case Experiment::energy_rate_region:
      s += kRegionPlot;
      break;
  }
  return s;
}

std::vector<std::filesystem::path> emit_outputs(const SweepResult& result, const OutputOptions& opts) {
  const bool region = result.experiment == Experiment::energy_rate_region;
  if (region ? result.region_points.empty() : result.power_rows.empty())
    throw std::invalid_argument("refusing to write an empty sweep table");

  std::error_code ec;
  std::filesystem::create_directories(opts.dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + opts.dir.string() + ": " + ec.message());

  const std::string stem = std::string(to_string(result.experiment));
  std::ostringstream csv;
  if (region)
    write_region_csv(csv, result.region_points);
  else
    write_power_csv(csv, result.experiment, result.power_rows);

  std::vector<std::filesystem::path> written;
  const auto csv_path = opts.dir / (stem + ".csv");
  write_file(csv_path, csv.str());
  written.push_back(csv_path);
  if (opts.plot_script) {
    const auto py_path = opts.dir / ("plot_" + stem + ".py");
    write_file(py_path, plot_script(result.experiment, stem + ".csv"));
    written.push_back(py_path);
  }
  return written;
}

}  // namespace paswipt
