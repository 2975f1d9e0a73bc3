#pragma once

#include <string>

#include "hforest/forest.hpp"
#include "hforest/visibility.hpp"

namespace hf {

/// Forest JSON object: {"dim", "side", "corner": [decimal strings],
/// "distance": float, "modulus": string?, "gcd_grid": [[string]]?}. Integers
/// cross as decimal strings, never floats (values exceed 2^53). gcd_grid is
/// emitted for 2-D forests, indexed [x-offset][y-offset].
std::string forest_to_json(const Forest& f, bool include_gcd_grid = true);
Forest forest_from_json(const std::string& text);

std::string density_report_to_json(const DensityReport& r);

}  // namespace hf
