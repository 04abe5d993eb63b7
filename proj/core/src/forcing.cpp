#include "zb/forcing.hpp"

#include <bit>
#include <functional>
#include <queue>
#include <random>

#include "zb/error.hpp"

namespace zb {
namespace {

// Per-vertex white-neighbour counters plus the colouring; shared by both orders.
class ForcingState {
 public:
  ForcingState(const Graph& g, const VertexSet& initial_black) : g_(g), black_(initial_black) {
    if (initial_black.universe() != g.vertex_count()) throw InputError("colour state does not match graph size");
    white_count_.assign(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (VertexId u : g.neighbors(v)) {
        if (!black_.contains(u)) ++white_count_[v];
      }
    }
  }

  bool can_force(VertexId v) const { return black_.contains(v) && white_count_[v] == 1; }

  VertexId unique_white_neighbor(VertexId v) const {
    for (VertexId u : g_.neighbors(v)) {
      if (!black_.contains(u)) return u;
    }
    throw InternalError("forcer has no white neighbour");
  }

  // Blackens w and reports every vertex that became an eligible forcer.
  template <class OnEligible>
  void blacken(VertexId w, OnEligible&& on_eligible) {
    black_.insert(w);
    for (VertexId u : g_.neighbors(w)) {
      --white_count_[u];
      if (can_force(u)) on_eligible(u);
    }
    if (can_force(w)) on_eligible(w);
  }

  VertexSet take_black() { return std::move(black_); }

 private:
  const Graph& g_;
  VertexSet black_;
  std::vector<std::uint32_t> white_count_;
};

}  // namespace

ClosureResult closure(const Graph& g, const VertexSet& initial_black) {
  ForcingState state(g, initial_black);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (state.can_force(v)) ready.push(v);
  }
  ForceTrace trace;
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    // Counters only decrease, so a stale entry is one whose count dropped to zero.
    if (!state.can_force(v)) continue;
    VertexId w = state.unique_white_neighbor(v);
    trace.push_back({v, w});
    state.blacken(w, [&](VertexId u) { ready.push(u); });
  }
  return {state.take_black(), std::move(trace)};
}

ClosureResult closure_random_order(const Graph& g, const VertexSet& initial_black, std::uint64_t seed) {
  ForcingState state(g, initial_black);
  std::mt19937_64 rng(seed);
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (state.can_force(v)) ready.push_back(v);
  }
  ForceTrace trace;
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    std::size_t i = pick(rng);
    VertexId v = ready[i];
    ready[i] = ready.back();
    ready.pop_back();
    if (!state.can_force(v)) continue;
    VertexId w = state.unique_white_neighbor(v);
    trace.push_back({v, w});
    state.blacken(w, [&](VertexId u) { ready.push_back(u); });
  }
  return {state.take_black(), std::move(trace)};
}

std::uint64_t closure_mask(const Graph& g, std::uint64_t black) {
  if (!g.has_masks()) throw LimitError("closure_mask needs a graph with at most 64 vertices");
  const std::uint64_t all = g.full_mask();
  bool changed = true;
  while (changed && black != all) {
    changed = false;
    std::uint64_t scan = black;
    while (scan) {
      auto v = static_cast<VertexId>(std::countr_zero(scan));
      scan &= scan - 1;
      std::uint64_t white_nb = g.neighbor_mask(v) & ~black;
      // Exactly one bit set.
      if (white_nb && !(white_nb & (white_nb - 1))) {
        black |= white_nb;
        changed = true;
      }
    }
  }
  return black;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& black) { return closure(g, black).black.is_full(); }

bool is_blocking_set(const Graph& g, const VertexSet& white) {
  return !closure(g, white.complement()).black.is_full();
}

bool is_stalled(const Graph& g, const VertexSet& black) {
  for (VertexId v : black.members()) {
    std::size_t whites = 0;
    for (VertexId u : g.neighbors(v)) whites += black.contains(u) ? 0 : 1;
    if (whites == 1) return false;
  }
  return true;
}

}  // namespace zb
