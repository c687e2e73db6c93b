#pragma once

// Trivalent graphs with loops and multi-edges. Each vertex stands for a
// trinion (pair of pants), each edge for one of the 3g-3 gluing circles.

#include <array>
#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trinion {

struct Edge {
  std::size_t u;
  std::size_t v;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  enum class Kind { Syntax, VertexOutOfRange, DegreeViolation, Disconnected, GenusTooSmall };

  GraphError(Kind kind, std::string message, std::size_t vertex = 0, std::size_t degree = 0,
             std::size_t line = 0)
      : std::runtime_error(std::move(message)), kind_(kind), vertex_(vertex), degree_(degree), line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t vertex() const { return vertex_; }
  std::size_t degree() const { return degree_; }
  /// 1-based source line for Syntax errors.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t vertex_;
  std::size_t degree_;
  std::size_t line_;
};

/// A connected trivalent graph of genus >= 2. Immutable once validated; the
/// only way to obtain one is through validate() or the helpers below.
class TrivalentGraph {
 public:
  /// Checks degrees (a loop counts twice), connectivity, and genus >= 2.
  static TrivalentGraph validate(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t genus() const { return genus_; }

  friend bool operator==(const TrivalentGraph&, const TrivalentGraph&) = default;

 private:
  TrivalentGraph(std::size_t vertex_count, std::vector<Edge> edges, std::size_t genus)
      : vertex_count_(vertex_count), edges_(std::move(edges)), genus_(genus) {}

  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::size_t genus_;
};

/// |E| - |V| + 1.
std::size_t genus(const TrivalentGraph& graph);

/// The multi-theta graph: an oval through 2g-2 vertices crossed by g-1
/// horizontal chords. Vertices 0..g-2 are the left column top-down, g-1..2g-3
/// the right column top-down; oval edges come first, then the chords.
/// Throws std::invalid_argument for g < 2.
TrivalentGraph multi_theta(int g);

/// Edge indices of the three boundary circles of one trinion, ascending,
/// with a loop's index listed twice.
struct TrinionTriple {
  std::size_t vertex;
  std::array<std::size_t, 3> edges;

  friend bool operator==(const TrinionTriple&, const TrinionTriple&) = default;
};

std::vector<TrinionTriple> trinion_triples(const TrivalentGraph& graph);

bool is_loop_free(const TrivalentGraph& graph);

/// One edge per line, two non-negative endpoint ids; '#' starts a comment,
/// blank lines are skipped. Throws GraphError.
TrivalentGraph parse_graph(std::string_view text);
std::string serialize_graph(const TrivalentGraph& graph);

TrivalentGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const TrivalentGraph& graph);

}  // namespace trinion
