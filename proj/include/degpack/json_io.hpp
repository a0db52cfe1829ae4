#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include <json.hpp>

#include "degpack/audit.hpp"
#include "degpack/engine.hpp"
#include "degpack/prepare.hpp"

namespace degpack {

nlohmann::json to_json(const AuditEntry& entry);
nlohmann::json to_json(const CoverReport& report);
nlohmann::json to_json(const FailureRecord& record);

struct ResultJsonOptions {
  bool include_colors = false;  // colors and reservoir mask are O(e(H))
  double gamma = 0.0;           // recorded so the split can be replayed
  std::uint64_t rng_seed = 0;
};

/// PackingResult plus the prepared guests (positional edge lists), so that
/// the file can be checked against the host alone.
nlohmann::json packing_result_to_json(const PackingResult& result,
                                      std::span<const PreparedGuest> guests,
                                      const ResultJsonOptions& options);

struct LoadedPacking {
  std::vector<PreparedGuest> guests;
  PackingResult result;
};

/// Rebuilds guests and the result from packing_result_to_json output. When
/// colors are absent they are re-derived from the maps; when the reservoir
/// mask is absent the split is replayed from the recorded gamma and seed.
/// Throws std::runtime_error on malformed input, including non-injective
/// maps.
LoadedPacking packing_result_from_json(const nlohmann::json& doc, const Graph& hhat);

/// Colors as little-endian uint32 values in host edge order.
void write_colors_binary(const std::filesystem::path& path, std::span<const std::uint32_t> colors);
std::vector<std::uint32_t> read_colors_binary(const std::filesystem::path& path);

}  // namespace degpack
