#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zb/geometry.hpp"
#include "zb/vertex_set.hpp"

namespace zb {

/// G_{m,n}: m rows (y = 1..m), n columns (x = 1..n).
/// Corners X=(1,1), Y=(n,1), Z=(1,m), W=(n,m).
struct GridSpec {
  int m = 0;
  int n = 0;

  bool contains(std::int64_t x, std::int64_t y) const { return 1 <= x && x <= n && 1 <= y && y <= m; }
  // Row-major, x is the column: index = (y-1)*n + (x-1).
  VertexId index(std::int64_t x, std::int64_t y) const {
    return static_cast<VertexId>((y - 1) * n + (x - 1));
  }
  int x_of(VertexId v) const { return static_cast<int>(v % static_cast<VertexId>(n)) + 1; }
  int y_of(VertexId v) const { return static_cast<int>(v / static_cast<VertexId>(n)) + 1; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// A grid vertex by coordinates.
struct Cell {
  int x = 0;
  int y = 0;

  HalfPoint point() const { return HalfPoint::lattice(x, y); }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph. Neighbor lists are sorted; graphs with at most
/// 64 vertices also carry one 64-bit neighbor mask per vertex for the bit-parallel
/// closure used by the exact solvers.
class Graph {
 public:
  static constexpr std::size_t kDefaultVertexLimit = 1'000'000;

  Graph() = default;

  // Deduplicates; throws InputError on self-loops or ids out of range.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                          std::size_t vertex_limit = kDefaultVertexLimit);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

  bool has_masks() const { return !masks_.empty() || vertex_count() == 0; }
  std::uint64_t neighbor_mask(VertexId v) const { return masks_[v]; }
  // All vertices as a mask; requires has_masks().
  std::uint64_t full_mask() const;

  const std::optional<GridSpec>& grid() const { return grid_; }

  // Edges with u < v, ascending.
  std::vector<Edge> edges() const;

 private:
  friend Graph grid_graph(int m, int n, std::size_t vertex_limit);

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<std::uint64_t> masks_;
  std::optional<GridSpec> grid_;
};

/// G_{m,n} with 4-neighbour adjacency and a GridSpec attached.
Graph grid_graph(int m, int n, std::size_t vertex_limit = Graph::kDefaultVertexLimit);

/// Edge-list text: "p <V> <E>" then E lines "e <u> <v>", 1-based. Lines starting with
/// 'c' and blank lines are skipped.
Graph parse_graph(std::string_view text, std::size_t vertex_limit = Graph::kDefaultVertexLimit);

/// Inverse of parse_graph: header plus one "e u v" line per edge (u < v, ascending),
/// LF line endings.
std::string format_graph(const Graph& g);

// Grid coordinate mapping. Both throw InputError on non-grid graphs or out-of-range input.
HalfPoint coords(const Graph& g, VertexId v);
VertexId vertex_at(const Graph& g, const HalfPoint& p);

Cell cell_of(const GridSpec& grid, VertexId v);
VertexSet cells_to_set(const GridSpec& grid, std::span<const Cell> cells);
std::vector<Cell> set_to_cells(const GridSpec& grid, const VertexSet& set);

}  // namespace zb
