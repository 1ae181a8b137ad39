#pragma once

namespace paswipt {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

double dbm_to_watts(double p_dbm);
double watts_to_dbm(double p_w);

inline constexpr double ghz_to_hz(double f_ghz) { return f_ghz * 1e9; }
inline constexpr double mw_to_watts(double p_mw) { return p_mw * 1e-3; }
inline constexpr double uw_to_watts(double p_uw) { return p_uw * 1e-6; }
// "per microwatt" to "per watt"
inline constexpr double per_uw_to_per_watt(double a) { return a * 1e6; }

}  // namespace paswipt
