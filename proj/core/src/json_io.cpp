#include "hforest/json_io.hpp"

#include <json.hpp>

#include "hforest/arith.hpp"
#include "hforest/errors.hpp"

namespace hf {

std::string forest_to_json(const Forest& f, bool include_gcd_grid) {
  nlohmann::json j;
  j["dim"] = f.dimension;
  j["side"] = f.side;
  auto corner = nlohmann::json::array();
  for (const auto& c : f.corner) corner.push_back(str(c));
  j["corner"] = std::move(corner);
  j["distance"] = f.distance();
  if (f.modulus) j["modulus"] = str(*f.modulus);
  if (include_gcd_grid && f.dimension == 2) {
    auto grid = nlohmann::json::array();
    for (std::size_t i = 0; i < f.side; ++i) {
      auto col = nlohmann::json::array();
      for (std::size_t j2 = 0; j2 < f.side; ++j2) {
        col.push_back(str(gcd(f.corner[0] + Natural(static_cast<unsigned long>(i)),
                              f.corner[1] + Natural(static_cast<unsigned long>(j2)))));
      }
      grid.push_back(std::move(col));
    }
    j["gcd_grid"] = std::move(grid);
  }
  return j.dump();
}

Forest forest_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed forest JSON: ") + e.what());
  }
  Forest f;
  f.dimension = j.at("dim").get<unsigned>();
  f.side = j.at("side").get<std::size_t>();
  for (const auto& c : j.at("corner")) {
    f.corner.emplace_back(c.get<std::string>());
  }
  if (f.corner.size() != f.dimension) {
    throw Error("forest JSON: corner length does not match dim");
  }
  if (j.contains("modulus") && !j["modulus"].is_null()) {
    f.modulus = Natural(j["modulus"].get<std::string>());
  }
  return f;
}

std::string density_report_to_json(const DensityReport& r) {
  nlohmann::json j;
  j["box_side"] = r.box_side;
  j["dimension"] = r.dimension;
  j["visible_count"] = str(r.visible_count);
  j["total_count"] = str(r.total_count);
  j["ratio"] = r.ratio();
  j["reference"] = r.reference;
  j["abs_error"] = r.abs_error();
  return j.dump();
}

}  // namespace hf
