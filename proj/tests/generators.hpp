#pragma once

// Hand-rolled random instance generators for property tests.

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "oracle/oracle.hpp"
#include "zb/graph.hpp"
#include "zb/vertex_set.hpp"

namespace gen {

struct Instance {
  zb::Graph graph;
  oracle::Graph reference;
  std::vector<std::pair<int, int>> edges;
};

// G(n, p) with n drawn from [lo, hi].
inline Instance random_graph(std::mt19937_64& rng, int lo, int hi) {
  int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
  std::bernoulli_distribution coin(p);
  Instance inst;
  std::vector<zb::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        edges.emplace_back(static_cast<zb::VertexId>(u), static_cast<zb::VertexId>(v));
        inst.edges.emplace_back(u, v);
      }
    }
  }
  inst.graph = zb::Graph::from_edges(static_cast<std::size_t>(n), edges);
  inst.reference = oracle::from_edges(n, inst.edges);
  return inst;
}

inline zb::VertexSet random_subset(std::mt19937_64& rng, std::size_t universe, double density) {
  std::bernoulli_distribution coin(density);
  zb::VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) {
    if (coin(rng)) s.insert(static_cast<zb::VertexId>(v));
  }
  return s;
}

inline std::vector<char> to_flags(const zb::VertexSet& s) {
  std::vector<char> out(s.universe(), 0);
  for (zb::VertexId v : s.members()) out[v] = 1;
  return out;
}

// Uniform random relabelling of a graph's vertices.
inline std::pair<zb::Graph, std::vector<zb::VertexId>> relabel(std::mt19937_64& rng, const zb::Graph& g) {
  std::vector<zb::VertexId> perm(g.vertex_count());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<zb::VertexId>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<zb::Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return {zb::Graph::from_edges(g.vertex_count(), edges), perm};
}

}  // namespace gen
