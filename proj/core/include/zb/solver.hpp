#pragma once

// Exact B(G), F(G), Z(G) by ascending-size subset search over graphs with at most
// 64 vertices (practically ~30).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zb/graph.hpp"
#include "zb/vertex_set.hpp"

namespace zb {

struct SearchBudget {
  std::uint64_t max_subsets = 100'000'000;  // closure calls
  double max_seconds = 300.0;
  std::size_t witness_cap = 1;
  unsigned workers = 1;

  // Defaults, with ZB_DEFAULT_BUDGET_SECS overriding max_seconds when set.
  static SearchBudget defaults();
};

struct SolveResult {
  std::optional<int> value;
  std::vector<VertexSet> witnesses;  // ascending search order, at most witness_cap
  std::uint64_t nodes_explored = 0;  // closure calls
  // True when the search ran to completion; false means the budget was hit and
  // value is empty.
  bool exhausted = false;
};

/// Smallest zero blocking set by plain ascending-size search. No graph-specific pruning.
SolveResult min_blocking_number(const Graph& g, const SearchBudget& budget);

/// Same contract on G_{m,n}, 2 <= m <= n, with candidate pruning: partial sets that
/// cannot meet every column/row-pair covering condition of minimum blocking sets are
/// cut, candidates whose whites miss a required North/South/East/West neighbourhood
/// are discarded, and only one representative per dihedral orbit reaches the closure.
SolveResult min_blocking_grid(int m, int n, const SearchBudget& budget);

struct Enumeration {
  std::vector<VertexSet> sets;  // sorted in search order
  bool cap_reached = false;
  bool exhausted = true;  // false when the budget ran out first
};

/// All blocking sets of exactly `size` vertices, up to `cap`. Grids are searched one
/// dihedral orbit at a time and the orbits re-expanded; no other pruning is applied.
Enumeration enumerate_min_blocking_sets(const Graph& g, int size, std::size_t cap,
                                        const SearchBudget& budget = SearchBudget::defaults());

/// |V| - B(G). Throws LimitError if the budget is hit.
int failed_zero_forcing_number(const Graph& g, const SearchBudget& budget);

/// Smallest zero forcing set; the witness is a black set.
SolveResult zero_forcing_search(const Graph& g, const SearchBudget& budget);
/// Z(G). Throws LimitError if the budget is hit.
int zero_forcing_number(const Graph& g, const SearchBudget& budget);

/// Vertex permutations realising the symmetries of the m x n grid rectangle
/// (4 when m != n, 8 when m == n). The identity comes first.
std::vector<std::vector<VertexId>> grid_symmetries(const GridSpec& grid);

}  // namespace zb
