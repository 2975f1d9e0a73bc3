#include "hforest/checkpoint.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "hforest/errors.hpp"
#include "hforest/json_io.hpp"

namespace hf {

void write_checkpoint(const std::string& path, const SearchCheckpoint& cp) {
  nlohmann::json j;
  j["campaign"] = cp.campaign;
  j["cursor"] = str(cp.cursor);
  j["best"] = cp.best ? nlohmann::json::parse(forest_to_json(*cp.best, false))
                      : nlohmann::json(nullptr);

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write checkpoint file " + tmp);
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw Error("short write to checkpoint file " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot rename checkpoint into place: " + ec.message());
}

std::optional<SearchCheckpoint> read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed checkpoint: ") + e.what());
  }
  SearchCheckpoint cp;
  cp.campaign = j.at("campaign").get<std::string>();
  cp.cursor = Natural(j.at("cursor").get<std::string>());
  if (!j.at("best").is_null()) {
    cp.best = forest_from_json(j.at("best").dump());
  }
  return cp;
}

}  // namespace hf
