#include "degpack/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace degpack {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError(1, "missing header");
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  std::string extra;
  if (!(header >> n >> m) || n < 0 || m < 0 || (header >> extra)) {
    throw ParseError(lineno, "expected header \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno)) {
      throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                       " edges, found " + std::to_string(i));
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v) || (row >> extra)) {
      throw ParseError(lineno, "expected \"u v\"");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(lineno, "vertex id out of range");
    }
    if (u >= v) throw ParseError(lineno, "edge must satisfy u < v");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_content_line(in, line, lineno)) {
    throw ParseError(lineno, "trailing content after " + std::to_string(m) + " edges");
  }
  try {
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError(lineno, e.what());
  }
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g);
}

VertexSet read_vertex_set(const std::filesystem::path& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  VertexSet out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream row(line);
    long long v = 0;
    while (row >> v) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw ParseError(lineno, "vertex id out of range");
      }
      out.push_back(static_cast<Vertex>(v));
    }
    if (!row.eof()) throw ParseError(lineno, "expected vertex ids");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace degpack
