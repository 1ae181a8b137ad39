#include "paswipt/config_io.hpp"

#include <fstream>
#include <functional>
#include <map>

#include "paswipt/units.hpp"

namespace paswipt {
namespace {

using nlohmann::json;
using Setter = std::function<void(ConfigInput&, double)>;
using Section = std::map<std::string, Setter>;

const std::map<std::string, Section>& schema() {
  static const std::map<std::string, Section> s = {
      {"system",
       {{"carrier_frequency_ghz", [](ConfigInput& c, double v) { c.carrier_frequency_hz = ghz_to_hz(v); }},
        {"noise_power_dbm", [](ConfigInput& c, double v) { c.noise_power_w = dbm_to_watts(v); }},
        {"transmit_power_w", [](ConfigInput& c, double v) { c.transmit_power_w = v; }}}},
      {"protocol",
       {{"alpha", [](ConfigInput& c, double v) { c.alpha = v; }},
        {"beta", [](ConfigInput& c, double v) { c.beta = v; }}}},
      {"geometry",
       {{"d_x_m", [](ConfigInput& c, double v) { c.d_x_m = v; }},
        {"d_y_m", [](ConfigInput& c, double v) { c.d_y_m = v; }},
        {"height_m", [](ConfigInput& c, double v) { c.height_m = v; }}}},
      {"harvest",
       {{"eta", [](ConfigInput& c, double v) { c.eta = v; }},
        {"phi_mw", [](ConfigInput& c, double v) { c.phi_w = mw_to_watts(v); }},
        {"a_per_uw", [](ConfigInput& c, double v) { c.a_per_w = per_uw_to_per_watt(v); }},
        {"b_uw", [](ConfigInput& c, double v) { c.b_w = uw_to_watts(v); }}}},
  };
  return s;
}

}  // namespace

ConfigInput config_input_from_json(const json& doc) {
  ConfigInput out;
  std::vector<FieldError> errs;
  if (!doc.is_object()) throw ConfigError(std::vector<FieldError>{{"<root>", "config must be a JSON object"}});

  for (const auto& [section_name, section] : doc.items()) {
    auto sec = schema().find(section_name);
    if (sec == schema().end()) {
      errs.push_back({section_name, "unknown section"});
      continue;
    }
    if (!section.is_object()) {
      errs.push_back({section_name, "section must be an object"});
      continue;
    }
    for (const auto& [key, value] : section.items()) {
      const std::string field = section_name + "." + key;
      auto setter = sec->second.find(key);
      if (setter == sec->second.end()) {
        errs.push_back({field, "unknown key"});
      } else if (!value.is_number()) {
        errs.push_back({field, "must be a number"});
      } else {
        setter->second(out, value.get<double>());
      }
    }
  }
  if (!errs.empty()) {
    // report range violations of the well-formed keys in the same pass
    for (auto& e : validate(out).errors)
      if (e.field != "transmit_power_w" || out.transmit_power_w) errs.push_back(std::move(e));
    throw ConfigError(std::move(errs));
  }
  return out;
}

ConfigInput load_config_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("cannot parse config file " + path.string() + ": " + e.what());
  }
  return config_input_from_json(doc);
}

json config_input_to_json(const ConfigInput& c) {
  json system = {{"carrier_frequency_ghz", c.carrier_frequency_hz / 1e9},
                 {"noise_power_dbm", watts_to_dbm(c.noise_power_w)}};
  if (c.transmit_power_w) system["transmit_power_w"] = *c.transmit_power_w;
  return json{
      {"system", system},
      {"protocol", {{"alpha", c.alpha}, {"beta", c.beta}}},
      {"geometry", {{"d_x_m", c.d_x_m}, {"d_y_m", c.d_y_m}, {"height_m", c.height_m}}},
      {"harvest",
       {{"eta", c.eta}, {"phi_mw", c.phi_w * 1e3}, {"a_per_uw", c.a_per_w * 1e-6}, {"b_uw", c.b_w * 1e6}}},
  };
}

}  // namespace paswipt
