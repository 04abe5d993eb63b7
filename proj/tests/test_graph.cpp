#include <algorithm>

#include "doctest.h"
#include "zb/error.hpp"
#include "zb/graph.hpp"
#include "zb/vertex_set.hpp"

using namespace zb;

TEST_CASE("grid_graph sizes") {
  Graph c4 = grid_graph(2, 2);
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);

  Graph p4 = grid_graph(1, 4);
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edge_count() == 3);

  Graph g = grid_graph(6, 11);
  CHECK(g.vertex_count() == 66);
  CHECK(g.edge_count() == 115);
  CHECK_FALSE(g.has_masks());
  CHECK(grid_graph(8, 8).has_masks());

  Graph big = grid_graph(9, 9);
  CHECK_FALSE(big.has_masks());
  CHECK(big.edge_count() == 144);

  CHECK_THROWS_AS(grid_graph(0, 3), InputError);
  CHECK_THROWS_AS(grid_graph(1000, 1001), LimitError);
}

TEST_CASE("grid adjacency is the four-neighbourhood") {
  Graph g = grid_graph(3, 4);
  GridSpec s = *g.grid();
  for (VertexId u = 0; u < 12; ++u) {
    for (VertexId v = 0; v < 12; ++v) {
      int d = std::abs(s.x_of(u) - s.x_of(v)) + std::abs(s.y_of(u) - s.y_of(v));
      CHECK(g.adjacent(u, v) == (d == 1));
    }
  }
  CHECK(g.degree(s.index(1, 1)) == 2);
  CHECK(g.degree(s.index(2, 1)) == 3);
  CHECK(g.degree(s.index(2, 2)) == 4);
}

TEST_CASE("parse_graph") {
  Graph p3 = parse_graph("p 3 2\ne 1 2\ne 2 3\n");
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.adjacent(0, 1));
  CHECK_FALSE(p3.adjacent(0, 2));

  CHECK_THROWS_AS(parse_graph("p 2 1\ne 1 1\n"), InputError);
  CHECK_THROWS_AS(parse_graph("p 2 1\ne 1 3\n"), InputError);
  CHECK_THROWS_AS(parse_graph("e 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_graph("p 2 1\np 2 1\ne 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_graph("p 3 2\ne 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_graph("p 3 1\nq 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_graph(""), InputError);

  Graph commented = parse_graph("c a comment\n\np 2 1\nc another\ne 2 1\n");
  CHECK(commented.edge_count() == 1);
}

TEST_CASE("C4 from an edge list matches grid_graph(2,2)") {
  Graph c4 = parse_graph("p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
  Graph grid = grid_graph(2, 2);
  // 1 -> (1,1), 2 -> (2,1), 3 -> (2,2), 4 -> (1,2)
  const VertexId to_grid[] = {0, 1, 3, 2};
  for (VertexId u = 0; u < 4; ++u) {
    CHECK(c4.degree(u) == 2);
    for (VertexId v = 0; v < 4; ++v) CHECK(c4.adjacent(u, v) == grid.adjacent(to_grid[u], to_grid[v]));
  }
}

TEST_CASE("format_graph round trips") {
  Graph g = grid_graph(3, 5);
  Graph back = parse_graph(format_graph(g));
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
  CHECK(format_graph(parse_graph("p 3 2\ne 2 1\ne 3 2\n")) == "p 3 2\ne 1 2\ne 2 3\n");
}

TEST_CASE("coordinates and indices") {
  Graph g = grid_graph(6, 11);
  CHECK(vertex_at(g, HalfPoint::lattice(1, 1)) == 0);
  CHECK(coords(g, vertex_at(g, HalfPoint::lattice(11, 6))) == HalfPoint::lattice(11, 6));
  Graph h = grid_graph(3, 15);
  CHECK(vertex_at(h, HalfPoint::lattice(5, 3)) == 34);
  CHECK_THROWS_AS(vertex_at(h, HalfPoint::lattice(16, 1)), InputError);
  CHECK_THROWS_AS(vertex_at(h, HalfPoint::doubled(3, 2)), InputError);
  CHECK_THROWS_AS(coords(parse_graph("p 2 1\ne 1 2\n"), 0), InputError);
}

TEST_CASE("cell sets") {
  GridSpec s{3, 4};
  std::vector<Cell> cells = {{4, 2}, {1, 1}, {3, 3}};
  VertexSet set = cells_to_set(s, cells);
  CHECK(set.count() == 3);
  std::vector<Cell> back = set_to_cells(s, set);
  std::vector<Cell> sorted = {{1, 1}, {3, 3}, {4, 2}};
  CHECK(back == sorted);
  std::vector<Cell> outside = {{5, 1}};
  CHECK_THROWS_AS(cells_to_set(s, outside), InputError);
}

TEST_CASE("vertex sets") {
  VertexSet a = VertexSet::from_members(70, {0, 5, 69});
  CHECK(a.count() == 3);
  CHECK(a.contains(69));
  VertexSet c = a.complement();
  CHECK(c.count() == 67);
  CHECK_FALSE(c.contains(5));
  CHECK(a.is_subset_of(VertexSet::full(70)));
  CHECK(VertexSet::full(70).is_full());
  VertexSet m = VertexSet::from_mask(10, 0b1010);
  CHECK(m.members() == std::vector<VertexId>{1, 3});
  CHECK(m.to_mask() == 0b1010);
  CHECK(lex_less(VertexSet::from_members(5, {0, 3}), VertexSet::from_members(5, {1, 2})));
  CHECK_FALSE(lex_less(VertexSet::from_members(5, {1, 2}), VertexSet::from_members(5, {1, 2})));
}
