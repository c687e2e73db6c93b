#pragma once

// Named graphs and random generators shared by the test binaries.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "trinion/graph.hpp"
#include "trinion/polytope.hpp"

namespace trinion::testing {

/// Complete graph on four vertices (genus 3, loop-free, no multi-edges).
inline TrivalentGraph k4() {
  return TrivalentGraph::validate(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

/// Two loops joined by a bridge: edges [loop@0, bridge, loop@1].
inline TrivalentGraph dumbbell() { return TrivalentGraph::validate(2, {{0, 0}, {0, 1}, {1, 1}}); }

/// Configuration-model trivalent multigraph of genus g (loops allowed unless
/// loop_free), resampled until connected.
inline TrivalentGraph random_trivalent_graph(std::mt19937& rng, std::size_t g, bool loop_free = false) {
  const std::size_t vertices = 2 * g - 2;
  std::vector<std::size_t> stubs;
  for (std::size_t v = 0; v < vertices; ++v) stubs.insert(stubs.end(), 3, v);
  while (true) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    bool has_loop = false;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      edges.push_back({stubs[i], stubs[i + 1]});
      has_loop = has_loop || stubs[i] == stubs[i + 1];
    }
    if (loop_free && has_loop) continue;
    try {
      return TrivalentGraph::validate(vertices, std::move(edges));
    } catch (const GraphError&) {
    }
  }
}

/// Relabels edge i as perm[i].
inline TrivalentGraph permute_edges(const TrivalentGraph& g, const std::vector<std::size_t>& perm) {
  std::vector<Edge> edges(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) edges[perm[i]] = g.edges()[i];
  return TrivalentGraph::validate(g.vertex_count(), std::move(edges));
}

inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// The unit cube [0,1]^n as 2n rows.
inline std::vector<Inequality> unit_cube_rows(std::size_t n) {
  std::vector<Inequality> rows;
  for (std::size_t i = 0; i < n; ++i) {
    ZVector up(n), down(n);
    up[i] = 1;
    down[i] = -1;
    rows.push_back({up, 1});
    rows.push_back({down, 0});
  }
  return rows;
}

/// A few random rows with coefficients in {-2..2}, intersected with [0,1]^n.
inline HPolytope random_box_system(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> bound(-1, 3);
  std::uniform_int_distribution<std::size_t> count(1, 2 * n);
  auto rows = unit_cube_rows(n);
  const std::size_t extra = count(rng);
  for (std::size_t k = 0; k < extra; ++k) {
    ZVector a(n);
    bool nonzero = false;
    for (auto& x : a) {
      x = coeff(rng);
      nonzero = nonzero || x != 0;
    }
    if (!nonzero) a[0] = 1;
    rows.push_back({a, bound(rng)});
  }
  return HPolytope(n, rows);
}

}  // namespace trinion::testing
