#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hforest/forest.hpp"
#include "hforest/natural.hpp"

namespace hf {

/// Resumable campaign state. Resuming from a checkpoint yields the same final
/// result as an uninterrupted run.
struct SearchCheckpoint {
  std::string campaign;
  Natural cursor;  // last fully processed y-value / window / enumeration index
  std::optional<Forest> best;
};

/// Write as a single JSON object, atomically (write-temp-then-rename).
void write_checkpoint(const std::string& path, const SearchCheckpoint& cp);

/// Returns nullopt if the file does not exist.
std::optional<SearchCheckpoint> read_checkpoint(const std::string& path);

}  // namespace hf
