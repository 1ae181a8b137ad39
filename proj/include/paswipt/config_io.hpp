#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "paswipt/config.hpp"

namespace paswipt {

// Config file layout (JSON). Every key is optional and falls back to the
// ConfigInput default; unknown keys are rejected.
//
//   {
//     "system":   { "carrier_frequency_ghz": 28, "noise_power_dbm": -90,
//                   "transmit_power_w": 0.3 },
//     "protocol": { "alpha": 0.8, "beta": 0.8 },
//     "geometry": { "d_x_m": 15, "d_y_m": 10, "height_m": 3 },
//     "harvest":  { "eta": 1.0, "phi_mw": 20, "a_per_uw": 100, "b_uw": 2.9 }
//   }
//
// Values are converted to SI on load. Throws ConfigError listing every
// malformed or unknown key.
ConfigInput config_input_from_json(const nlohmann::json& doc);
ConfigInput load_config_input(const std::filesystem::path& path);

/// Inverse of config_input_from_json (units converted back to file units).
nlohmann::json config_input_to_json(const ConfigInput& input);

}  // namespace paswipt
