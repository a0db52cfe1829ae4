#include "degpack/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace degpack {

using nlohmann::json;

namespace {

json number_or_null(double value) { return std::isfinite(value) ? json(value) : json(nullptr); }

}  // namespace

json to_json(const AuditEntry& entry) {
  json out{{"condition", entry.condition},
           {"deviation", number_or_null(entry.deviation)},
           {"witness", entry.witness},
           {"sets_tested", entry.sets_tested},
           {"density", entry.density},
           {"excluded", entry.excluded}};
  if (entry.density_star) {
    out["density_star"] = *entry.density_star;
    out["witness_r"] = entry.witness_first;
  }
  return out;
}

json to_json(const CoverReport& report) {
  return json{{"condition", "cover"},
              {"deviation", report.beta},
              {"worst_vertex", report.worst_vertex == kNoVertex ? json(nullptr)
                                                                : json(report.worst_vertex)},
              {"worst_degree", report.worst_degree},
              {"window", {report.window_begin, report.window_end}},
              {"density", report.density},
              {"stratum_sizes", report.stratum_sizes}};
}

json to_json(const FailureRecord& record) {
  json out{{"stage", record.stage},
           {"phase", to_string(record.phase)},
           {"image_size", record.image_size}};
  if (record.phase == Phase::kEmbedding) {
    out["position"] = record.position;
  } else {
    out["hall_set"] = record.hall_set;
    out["hall_neighborhood"] = record.hall_neighborhood;
  }
  return out;
}

json packing_result_to_json(const PackingResult& result, std::span<const PreparedGuest> guests,
                            const ResultJsonOptions& options) {
  json doc;
  doc["format"] = "degpack-result-1";
  doc["success"] = result.success;
  doc["host_vertices"] = result.host_vertices;
  doc["gamma"] = options.gamma;
  doc["rng_seed"] = options.rng_seed;
  doc["uncovered"] = result.uncovered;
  json guest_list = json::array();
  for (const PreparedGuest& g : guests) {
    json edges = json::array();
    for (const Edge& e : g.graph().edges()) edges.push_back({e.u, e.v});
    guest_list.push_back({{"n", g.size()}, {"tail_len", g.tail_len()}, {"edges", edges}});
  }
  doc["guests"] = guest_list;
  json maps = json::array();
  for (const Embedding& e : result.embeddings) {
    json forward = json::array();
    for (Vertex v : e.forward()) forward.push_back(v == kNoVertex ? json(nullptr) : json(v));
    maps.push_back(forward);
  }
  doc["embeddings"] = maps;
  if (result.failure) doc["failure"] = to_json(*result.failure);
  json skipped = json::array();
  for (const auto& r : result.skipped_completions) skipped.push_back(to_json(r));
  doc["skipped_completions"] = skipped;
  json stages = json::array();
  for (const auto& s : result.stages) {
    stages.push_back({{"stage", s.stage},
                      {"bulk_edges", s.bulk_edges},
                      {"reservoir_edges", s.reservoir_edges},
                      {"max_reservoir_drain", s.max_reservoir_drain},
                      {"completed", s.completed}});
  }
  doc["stages"] = stages;
  json audits = json::array();
  for (const auto& a : result.audits) {
    audits.push_back({{"stage", a.stage},
                      {"bulk", to_json(a.bulk)},
                      {"bulk_reservoir", to_json(a.bulk_reservoir)}});
  }
  doc["audits"] = audits;
  doc["warnings"] = result.warnings;
  if (options.include_colors) {
    doc["colors"] = result.colors;
    std::vector<std::size_t> reservoir;
    for (std::size_t i = 0; i < result.in_reservoir.size(); ++i) {
      if (result.in_reservoir[i]) reservoir.push_back(i);
    }
    doc["reservoir_edges"] = reservoir;
  }
  return doc;
}

LoadedPacking packing_result_from_json(const json& doc, const Graph& hhat) {
  LoadedPacking out;
  try {
    const std::size_t n = doc.at("host_vertices").get<std::size_t>();
    if (n != hhat.num_vertices()) {
      throw std::runtime_error("result is for a host on " + std::to_string(n) +
                               " vertices, host file has " +
                               std::to_string(hhat.num_vertices()));
    }
    for (const json& g : doc.at("guests")) {
      std::vector<Edge> edges;
      for (const json& e : g.at("edges")) edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
      out.guests.push_back(PreparedGuest::from_positional(
          Graph::from_edges(g.at("n").get<std::size_t>(), edges),
          g.at("tail_len").get<std::size_t>()));
    }
    PackingResult& result = out.result;
    result.success = doc.at("success").get<bool>();
    result.host_vertices = n;
    result.uncovered = doc.at("uncovered").get<std::size_t>();
    const json& maps = doc.at("embeddings");
    for (std::size_t s = 0; s < maps.size(); ++s) {
      Embedding e(maps[s].size(), n);
      for (std::size_t t = 0; t < maps[s].size(); ++t) {
        if (maps[s][t].is_null()) continue;
        const auto v = maps[s][t].get<std::size_t>();
        if (v >= n) throw std::runtime_error("embedding " + std::to_string(s + 1) + " maps outside the host");
        try {
          e.assign(t, static_cast<Vertex>(v));
        } catch (const PreconditionError& err) {
          throw std::runtime_error("embedding " + std::to_string(s + 1) + ": " + err.what());
        }
      }
      result.embeddings.push_back(std::move(e));
    }
    if (doc.contains("colors")) {
      result.colors = doc.at("colors").get<std::vector<std::uint32_t>>();
    } else {
      result.colors.assign(hhat.num_edges(), 0);
      for (std::size_t s = 0; s < result.embeddings.size() && s < out.guests.size(); ++s) {
        const Embedding& e = result.embeddings[s];
        for (const Edge& ge : out.guests[s].graph().edges()) {
          if (!e.assigned(ge.u) || !e.assigned(ge.v)) continue;
          const std::size_t idx = hhat.edge_index(e.at(ge.u), e.at(ge.v));
          if (idx < hhat.num_edges() && result.colors[idx] == 0) {
            result.colors[idx] = static_cast<std::uint32_t>(s + 1);
          }
        }
      }
    }
    if (doc.contains("reservoir_edges")) {
      result.in_reservoir.assign(hhat.num_edges(), false);
      for (const json& idx : doc.at("reservoir_edges")) {
        const auto i = idx.get<std::size_t>();
        if (i >= hhat.num_edges()) throw std::runtime_error("reservoir edge index out of range");
        result.in_reservoir[i] = true;
      }
    } else {
      Rng rng = substream(doc.at("rng_seed").get<std::uint64_t>(), 0);
      result.in_reservoir =
          split_bulk_reservoir(hhat, doc.at("gamma").get<double>(), rng).in_reservoir;
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed result JSON: ") + e.what());
  } catch (const GraphError& e) {
    throw std::runtime_error(std::string("invalid guest in result JSON: ") + e.what());
  }
  return out;
}

void write_colors_binary(const std::filesystem::path& path, std::span<const std::uint32_t> colors) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (std::uint32_t c : colors) {
    const unsigned char bytes[4] = {static_cast<unsigned char>(c & 0xff),
                                    static_cast<unsigned char>((c >> 8) & 0xff),
                                    static_cast<unsigned char>((c >> 16) & 0xff),
                                    static_cast<unsigned char>((c >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(bytes), 4);
  }
}

std::vector<std::uint32_t> read_colors_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::uint32_t> colors;
  unsigned char bytes[4];
  while (in.read(reinterpret_cast<char*>(bytes), 4)) {
    colors.push_back(static_cast<std::uint32_t>(bytes[0]) |
                     (static_cast<std::uint32_t>(bytes[1]) << 8) |
                     (static_cast<std::uint32_t>(bytes[2]) << 16) |
                     (static_cast<std::uint32_t>(bytes[3]) << 24));
  }
  if (in.gcount() != 0) throw std::runtime_error("truncated color file " + path.string());
  return colors;
}

}  // namespace degpack
