#pragma once

#include <cstdint>
#include <vector>

#include "zb/graph.hpp"
#include "zb/vertex_set.hpp"

namespace zb {

struct Force {
  VertexId forcer;
  VertexId forced;

  friend bool operator==(const Force&, const Force&) = default;
};

using ForceTrace = std::vector<Force>;

struct ClosureResult {
  VertexSet black;   // the stalled fixed point
  ForceTrace trace;  // one valid order of forces reaching it
};

/// Applies the colour-change rule until no black vertex has exactly one white
/// neighbour. Always performs the force of the smallest eligible forcer index next.
ClosureResult closure(const Graph& g, const VertexSet& initial_black);

/// Same fixed point, forces applied in a seeded random order.
ClosureResult closure_random_order(const Graph& g, const VertexSet& initial_black, std::uint64_t seed);

/// Bit-parallel closure for graphs with at most 64 vertices; returns the final black mask.
std::uint64_t closure_mask(const Graph& g, std::uint64_t black);

bool is_zero_forcing_set(const Graph& g, const VertexSet& black);
/// White set whose complement fails to force the whole graph.
bool is_blocking_set(const Graph& g, const VertexSet& white);
/// No black vertex has exactly one white neighbour.
bool is_stalled(const Graph& g, const VertexSet& black);

}  // namespace zb
