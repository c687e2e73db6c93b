#include "trinion/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace trinion {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

bool parse_id(std::string_view token, std::size_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

TrivalentGraph TrivalentGraph::validate(std::size_t vertex_count, std::vector<Edge> edges) {
  std::vector<std::size_t> degree(vertex_count, 0);
  for (const auto& e : edges) {
    const std::size_t hi = std::max(e.u, e.v);
    if (hi >= vertex_count) {
      throw GraphError(GraphError::Kind::VertexOutOfRange,
                       "vertex " + std::to_string(hi) + " out of range", hi);
    }
    degree[e.u] += 1;
    degree[e.v] += 1;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (degree[v] != 3) {
      throw GraphError(GraphError::Kind::DegreeViolation,
                       "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]) +
                           ", expected 3",
                       v, degree[v]);
    }
  }

  std::vector<std::size_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t components = vertex_count;
  for (const auto& e : edges) {
    const std::size_t a = find_root(parent, e.u);
    const std::size_t b = find_root(parent, e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components > 1) throw GraphError(GraphError::Kind::Disconnected, "graph is disconnected");

  // 2|E| = 3|V| here, so the subtraction cannot underflow.
  const std::size_t g = edges.size() + 1 - vertex_count;
  if (g < 2) {
    throw GraphError(GraphError::Kind::GenusTooSmall, "genus " + std::to_string(g) + " < 2");
  }
  return TrivalentGraph(vertex_count, std::move(edges), g);
}

std::size_t genus(const TrivalentGraph& graph) { return graph.genus(); }

TrivalentGraph multi_theta(int g) {
  if (g < 2) throw std::invalid_argument("multi_theta: genus must be >= 2");
  const auto column = static_cast<std::size_t>(g - 1);
  auto left = [](std::size_t i) { return i; };
  auto right = [column](std::size_t i) { return column + i; };
  auto edge = [](std::size_t a, std::size_t b) { return Edge{std::min(a, b), std::max(a, b)}; };

  std::vector<Edge> edges;
  edges.reserve(3 * column);
  // Oval: down the left column, across the bottom, up the right, across the top.
  for (std::size_t i = 0; i + 1 < column; ++i) edges.push_back(edge(left(i), left(i + 1)));
  edges.push_back(edge(left(column - 1), right(column - 1)));
  for (std::size_t i = column - 1; i > 0; --i) edges.push_back(edge(right(i), right(i - 1)));
  edges.push_back(edge(right(0), left(0)));
  for (std::size_t i = 0; i < column; ++i) edges.push_back(edge(left(i), right(i)));

  return TrivalentGraph::validate(2 * column, std::move(edges));
}

std::vector<TrinionTriple> trinion_triples(const TrivalentGraph& graph) {
  std::vector<std::vector<std::size_t>> incident(graph.vertex_count());
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    const Edge& e = graph.edges()[i];
    incident[e.u].push_back(i);
    incident[e.v].push_back(i);
  }
  std::vector<TrinionTriple> triples;
  triples.reserve(graph.vertex_count());
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    auto& idx = incident[v];
    std::sort(idx.begin(), idx.end());
    triples.push_back({v, {idx[0], idx[1], idx[2]}});
  }
  return triples;
}

bool is_loop_free(const TrivalentGraph& graph) {
  return std::none_of(graph.edges().begin(), graph.edges().end(), [](const Edge& e) { return e.is_loop(); });
}

TrivalentGraph parse_graph(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t vertex_count = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    std::size_t u = 0;
    std::size_t v = 0;
    if (tokens.size() != 2 || !parse_id(tokens[0], u) || !parse_id(tokens[1], v)) {
      throw GraphError(GraphError::Kind::Syntax,
                       "line " + std::to_string(line_no) + ": expected two non-negative integers", 0, 0,
                       line_no);
    }
    edges.push_back({u, v});
    vertex_count = std::max(vertex_count, std::max(u, v) + 1);
  }
  return TrivalentGraph::validate(vertex_count, std::move(edges));
}

std::string serialize_graph(const TrivalentGraph& graph) {
  std::string out;
  for (const auto& e : graph.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

TrivalentGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const std::filesystem::path& path, const TrivalentGraph& graph) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_graph(graph);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace trinion
