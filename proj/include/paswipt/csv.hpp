#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "paswipt/distance_law.hpp"
#include "paswipt/sweep.hpp"

namespace paswipt {

/// Shortest text that round-trips the double ("%.17g"); locale independent.
std::string format_number(double v);

// Column orders (header line included):
//   energy  pt_w,scheme,model,method,value_w
//   rate    pt_w,scheme,method,value_bits_s_hz
//   region  protocol,control,scheme,model,energy_w,rate_bits_s_hz
//   dist    l_m2,cdf,pdf_per_m2
void write_power_csv(std::ostream& out, Experiment experiment, std::span<const PowerRow> rows);
void write_region_csv(std::ostream& out, std::span<const TradeoffPoint> points);

/// l on the midpoints of `points` equal cells spanning the support (the
/// density is unbounded at the lower end, so the end point itself is skipped).
void write_distribution_csv(std::ostream& out, const SquaredDistanceLaw& law, std::size_t points = 1000);

/// Self-contained matplotlib script that reads `csv_name` from its own
/// directory and renders the corresponding figure next to it.
std::string plot_script(Experiment experiment, const std::string& csv_name);

struct OutputOptions {
  std::filesystem::path dir;
  bool plot_script = true;
};

/// Writes <experiment>.csv and, optionally, plot_<experiment>.py into
/// opts.dir (created if missing). Returns the written paths. Throws
/// std::invalid_argument for an empty table and std::runtime_error naming the
/// path on I/O failure.
std::vector<std::filesystem::path> emit_outputs(const SweepResult& result, const OutputOptions& opts);

}  // namespace paswipt
