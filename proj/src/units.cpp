#include "paswipt/units.hpp"

#include <cmath>

namespace paswipt {

double dbm_to_watts(double p_dbm) { return std::pow(10.0, (p_dbm - 30.0) / 10.0); }

double watts_to_dbm(double p_w) { return 10.0 * std::log10(p_w) + 30.0; }

}  // namespace paswipt
