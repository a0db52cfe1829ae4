#include "degpack/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <queue>

#include "degpack/edge_list.hpp"

namespace degpack {

Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence) {
  if (n == 0) throw std::invalid_argument("tree needs at least one vertex");
  if (n == 1) return Graph(1);
  if (sequence.size() != n - 2) {
    throw std::invalid_argument("Prüfer sequence must have length n-2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw std::invalid_argument("Prüfer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : sequence) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, v});
    if (--degree[v] == 1) leaves.push(v);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Graph::from_edges(n, edges);
}

Graph random_tree(std::size_t n, Rng& rng) {
  std::vector<Vertex> sequence(n > 2 ? n - 2 : 0);
  for (Vertex& v : sequence) v = static_cast<Vertex>(uniform_index(rng, n));
  return tree_from_pruefer(n, sequence);
}

Graph random_degenerate(std::size_t n, std::size_t D, std::size_t max_degree, Rng& rng) {
  if (max_degree < D) throw std::invalid_argument("degen: max_degree must be at least D");
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  std::vector<Vertex> eligible;
  std::vector<std::size_t> picked;
  for (Vertex v = 0; v < n; ++v) {
    eligible.clear();
    for (Vertex u = 0; u < v; ++u) {
      if (degree[u] < max_degree) eligible.push_back(u);
    }
    const std::size_t k = std::min(D, eligible.size());
    // Floyd's sampling over indices into `eligible`.
    picked.clear();
    for (std::size_t j = eligible.size() - k; j < eligible.size(); ++j) {
      const std::size_t t = uniform_index(rng, j + 1);
      picked.push_back(std::find(picked.begin(), picked.end(), t) == picked.end() ? t : j);
    }
    std::sort(picked.begin(), picked.end());
    for (std::size_t index : picked) {
      const Vertex u = eligible[index];
      edges.push_back({u, v});
      ++degree[u];
      ++degree[v];
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gnp(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: p must lie in [0, 1]");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(n, edges);
}

std::vector<Graph> gyarfas_family(std::size_t n, Rng& rng) {
  std::vector<Graph> family;
  family.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) family.push_back(random_tree(i, rng));
  return family;
}

std::vector<Graph> truncate_to_budget(std::vector<Graph> family, std::size_t max_edges) {
  std::size_t total = 0;
  for (const Graph& g : family) total += g.num_edges();
  std::vector<std::size_t> by_size(family.size());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(), [&family](std::size_t a, std::size_t b) {
    if (family[a].num_edges() != family[b].num_edges()) {
      return family[a].num_edges() > family[b].num_edges();
    }
    return a > b;
  });
  std::vector<bool> keep(family.size(), true);
  for (std::size_t idx : by_size) {
    if (total <= max_edges) break;
    keep[idx] = false;
    total -= family[idx].num_edges();
  }
  std::vector<Graph> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (keep[i]) out.push_back(std::move(family[i]));
  }
  return out;
}

std::vector<Graph> ringel_family(std::size_t m, Rng& rng) {
  const Graph tree = random_tree(m + 1, rng);
  return std::vector<Graph>(2 * m + 1, tree);
}

SpecError::SpecError(std::size_t position, const std::string& what)
    : std::invalid_argument("spec error at position " + std::to_string(position) + ": " + what),
      position_(position),
      detail_(what) {}

namespace {

std::size_t parse_size_value(const SpecParam& param, const std::string& key) {
  std::size_t value = 0;
  const char* begin = param.value.data();
  const char* end = begin + param.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || param.value.empty()) {
    throw SpecError(param.position, "'" + key + "' expects a non-negative integer, got '" +
                                        param.value + "'");
  }
  return value;
}

double parse_double_value(const SpecParam& param, const std::string& key) {
  try {
    std::size_t used = 0;
    const double value = std::stod(param.value, &used);
    if (used == param.value.size()) return value;
  } catch (const std::exception&) {
  }
  throw SpecError(param.position, "'" + key + "' expects a number, got '" + param.value + "'");
}

}  // namespace

std::size_t ParsedSpec::get_size(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw SpecError(text.size(), kind + " requires '" + key + "'");
  return parse_size_value(it->second, key);
}

std::size_t ParsedSpec::get_size(const std::string& key, std::size_t fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : parse_size_value(it->second, key);
}

double ParsedSpec::get_double(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw SpecError(text.size(), kind + " requires '" + key + "'");
  return parse_double_value(it->second, key);
}

double ParsedSpec::get_double(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : parse_double_value(it->second, key);
}

void ParsedSpec::expect_keys(std::initializer_list<std::string_view> allowed) const {
  for (const auto& [key, param] : params) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw SpecError(param.position, "unknown key '" + key + "' for " + kind);
    }
  }
}

ParsedSpec parse_spec(std::string_view text) {
  ParsedSpec spec;
  spec.text = std::string(text);
  const auto colon = text.find(':');
  spec.kind = std::string(text.substr(0, colon));
  if (spec.kind.empty()) throw SpecError(0, "missing kind");
  if (colon == std::string_view::npos) return spec;
  std::size_t pos = colon + 1;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw SpecError(pos, "expected key=value");
    }
    std::string key(item.substr(0, eq));
    if (spec.params.count(key) != 0) throw SpecError(pos, "duplicate key '" + key + "'");
    spec.params[key] = SpecParam{std::string(item.substr(eq + 1)), pos};
    pos = comma + 1;
  }
  return spec;
}

GuestSpec GuestSpec::parse(std::string_view text) {
  GuestSpec out{parse_spec(text)};
  const ParsedSpec& s = out.spec;
  if (s.kind == "tree" || s.kind == "star" || s.kind == "path") {
    s.expect_keys({"n", "count"});
    if (s.get_size("n") == 0) throw SpecError(s.params.at("n").position, "n must be positive");
  } else if (s.kind == "degen") {
    s.expect_keys({"n", "D", "maxdeg", "count"});
    const std::size_t D = s.get_size("D");
    if (s.get_size("maxdeg", s.get_size("n")) < D) {
      throw SpecError(s.params.at("D").position, "maxdeg must be at least D");
    }
  } else if (s.kind == "gyarfas") {
    s.expect_keys({"n", "budget", "count"});
    if (s.get_size("n") < 2) throw SpecError(s.params.at("n").position, "n must be at least 2");
    const double budget = s.get_double("budget", 1.0);
    if (!(budget >= 0.0 && budget <= 1.0)) {
      throw SpecError(s.params.at("budget").position, "budget must lie in [0, 1]");
    }
  } else if (s.kind == "ringel") {
    s.expect_keys({"m", "count"});
    s.get_size("m");
  } else {
    throw SpecError(0, "unknown guest kind '" + s.kind + "'");
  }
  s.get_size("count", 1);
  return out;
}

std::vector<Graph> GuestSpec::generate(Rng& rng) const {
  const std::size_t count = spec.get_size("count", 1);
  std::vector<Graph> out;
  for (std::size_t c = 0; c < count; ++c) {
    if (spec.kind == "tree") {
      out.push_back(random_tree(spec.get_size("n"), rng));
    } else if (spec.kind == "star") {
      out.push_back(star_graph(spec.get_size("n")));
    } else if (spec.kind == "path") {
      out.push_back(path_graph(spec.get_size("n")));
    } else if (spec.kind == "degen") {
      const std::size_t n = spec.get_size("n");
      out.push_back(random_degenerate(n, spec.get_size("D"), spec.get_size("maxdeg", n), rng));
    } else if (spec.kind == "gyarfas") {
      const std::size_t n = spec.get_size("n");
      const double budget = spec.get_double("budget", 1.0);
      const auto max_edges = static_cast<std::size_t>(
          std::floor(budget * static_cast<double>(n * (n - 1) / 2) + 1e-9));
      for (Graph& g : truncate_to_budget(gyarfas_family(n, rng), max_edges)) {
        out.push_back(std::move(g));
      }
    } else if (spec.kind == "ringel") {
      for (Graph& g : ringel_family(spec.get_size("m"), rng)) out.push_back(std::move(g));
    }
  }
  return out;
}

std::size_t GuestSpec::degeneracy_bound() const {
  if (spec.kind == "degen") return spec.get_size("D");
  return 1;
}

HostSpec HostSpec::parse(std::string_view text) {
  HostSpec out{parse_spec(text)};
  const ParsedSpec& s = out.spec;
  if (s.kind == "complete") {
    s.expect_keys({"n"});
    s.get_size("n");
  } else if (s.kind == "gnp") {
    s.expect_keys({"n", "p"});
    s.get_size("n");
    const double p = s.get_double("p");
    if (!(p >= 0.0 && p <= 1.0)) throw SpecError(s.params.at("p").position, "p must lie in [0, 1]");
  } else if (s.kind == "file") {
    s.expect_keys({"path"});
    if (!s.has("path")) throw SpecError(s.text.size(), "file requires 'path'");
  } else {
    throw SpecError(0, "unknown host kind '" + s.kind + "'");
  }
  return out;
}

Graph HostSpec::generate(Rng& rng) const {
  if (spec.kind == "complete") return complete_graph(spec.get_size("n"));
  if (spec.kind == "gnp") return gnp(spec.get_size("n"), spec.get_double("p"), rng);
  return read_edge_list(std::filesystem::path(spec.params.at("path").value));
}

std::vector<GuestSpec> parse_guest_specs(std::string_view text) {
  std::vector<GuestSpec> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto semi = text.find(';', pos);
    if (semi == std::string_view::npos) semi = text.size();
    const std::string_view item = text.substr(pos, semi - pos);
    if (!item.empty()) {
      try {
        out.push_back(GuestSpec::parse(item));
      } catch (const SpecError& e) {
        throw SpecError(pos + e.position(), e.detail());
      }
    }
    pos = semi + 1;
  }
  return out;
}

}  // namespace degpack
