#include "zb/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <string>
#include <thread>

#include "zb/error.hpp"
#include "zb/forcing.hpp"

namespace zb {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

class BudgetTracker {
 public:
  explicit BudgetTracker(const SearchBudget& b)
      : max_subsets_(b.max_subsets),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(b.max_seconds))) {}

  // Accounts for one closure call. Returns false once the budget is gone.
  bool charge() {
    std::uint64_t k = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (k > max_subsets_) stopped_.store(true, std::memory_order_relaxed);
    if ((k & 1023) == 0) check_clock();
    return !stopped();
  }

  // Cheap periodic clock check for long stretches of pruned nodes.
  void tick(std::uint64_t& local) {
    if ((++local & 4095) == 0) check_clock();
  }

  bool stopped() const { return stopped_.load(std::memory_order_relaxed); }

 private:
  void check_clock() {
    if (Clock::now() > deadline_) stopped_.store(true, std::memory_order_relaxed);
  }

  std::uint64_t max_subsets_;
  Clock::time_point deadline_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> stopped_{false};
};

// Covering conditions every minimum blocking set of a grid satisfies: each column
// pair / row pair and both boundary columns / rows contain a white vertex; each white
// A meets North(A) when y_A < m (South, East, West likewise).
class GridPruner {
 public:
  explicit GridPruner(const GridSpec& grid) : m_(grid.m), n_(grid.n), count_(grid.m * grid.n) {
    col_.resize(static_cast<std::size_t>(count_));
    row_.resize(static_cast<std::size_t>(count_));
    sides_.resize(static_cast<std::size_t>(count_));
    for (int v = 0; v < count_; ++v) {
      Cell c = cell_of(grid, static_cast<VertexId>(v));
      col_[static_cast<std::size_t>(v)] = c.x;
      row_[static_cast<std::size_t>(v)] = c.y;
      auto add_side = [&](Side side) {
        SideRequirement req;
        for (const HalfPoint& p : neighborhood_set(c.point(), side)) {
          if (!grid.contains(p.x(), p.y())) continue;
          int idx = static_cast<int>(grid.index(p.x(), p.y()));
          req.mask |= bit(idx);
          req.max_index = std::max(req.max_index, idx);
        }
        sides_[static_cast<std::size_t>(v)].push_back(req);
      };
      if (c.y < m_) add_side(Side::North);
      if (c.y > 1) add_side(Side::South);
      if (c.x < n_) add_side(Side::East);
      if (c.x > 1) add_side(Side::West);
    }
  }

  // True when no completion of `mask` using `remaining` more vertices, all with index
  // greater than `last`, can satisfy the covering conditions.
  bool cut(std::uint64_t mask, int last, int remaining) const {
    std::uint64_t cols = 0;
    std::uint64_t rows = 0;
    for (std::uint64_t s = mask; s; s &= s - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(s));
      cols |= bit(col_[v] - 1);
      rows |= bit(row_[v] - 1);
    }
    int first_free_row = last + 1 < count_ ? row_[static_cast<std::size_t>(last + 1)] : m_ + 1;
    int col_picks = picks_needed(cols, n_, 1);
    if (col_picks < 0 || col_picks > remaining) return true;
    int row_picks = picks_needed(rows, m_, first_free_row);
    if (row_picks < 0 || row_picks > remaining) return true;

    for (std::uint64_t s = mask; s; s &= s - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(s));
      for (const SideRequirement& req : sides_[v]) {
        if (req.max_index <= last && (mask & req.mask) == 0) return true;
      }
    }
    return false;
  }

  bool accept(std::uint64_t mask) const { return !cut(mask, count_ - 1, 0); }

 private:
  struct SideRequirement {
    std::uint64_t mask = 0;
    int max_index = -1;
  };

  // Minimum number of extra lines (columns or rows, 1-based in [1, len]) so that
  // {1}, {len} and every {j, j+1} is hit, using only lines >= first_free. Interval
  // stabbing by right endpoint, which is optimal. -1 if impossible.
  static int picks_needed(std::uint64_t have, int len, int first_free) {
    auto hit = [&](int l, int r) { return (have >> (l - 1)) & ((bit(r - l + 1)) - 1); };
    int picks = 0;
    int last_pick = INT_MIN;
    auto need = [&](int l, int r) {
      if (hit(l, r) || last_pick >= l) return true;
      if (r < first_free) return false;
      ++picks;
      last_pick = r;
      return true;
    };
    if (!need(1, 1)) return -1;
    for (int r = 2; r <= len; ++r) {
      if (!need(r - 1, r)) return -1;
    }
    if (!need(len, len)) return -1;
    return picks;
  }

  int m_;
  int n_;
  int count_;
  std::vector<int> col_;
  std::vector<int> row_;
  std::vector<std::vector<SideRequirement>> sides_;
};

class Symmetry {
 public:
  explicit Symmetry(std::vector<std::vector<VertexId>> perms) : perms_(std::move(perms)) {}

  std::uint64_t image(std::uint64_t mask, std::size_t which) const {
    std::uint64_t out = 0;
    const auto& p = perms_[which];
    for (std::uint64_t s = mask; s; s &= s - 1) out |= bit(static_cast<int>(p[static_cast<std::size_t>(std::countr_zero(s))]));
    return out;
  }

  bool is_canonical(std::uint64_t mask) const {
    for (std::size_t i = 1; i < perms_.size(); ++i) {
      if (image(mask, i) < mask) return false;
    }
    return true;
  }

  std::vector<std::uint64_t> orbit(std::uint64_t mask) const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < perms_.size(); ++i) out.push_back(image(mask, i));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::vector<std::vector<VertexId>> perms_;
};

enum class Goal { Blocking, Forcing };

struct LayerConfig {
  const Graph* graph = nullptr;
  int universe = 0;
  int size = 0;
  Goal goal = Goal::Blocking;
  const GridPruner* pruner = nullptr;
  const Symmetry* symmetry = nullptr;
  std::size_t cap = 1;    // per-block and overall witness cap
  bool early_exit = true; // value mode: blocks past a finished block may be abandoned
};

struct BlockResult {
  std::vector<std::uint64_t> found;
  std::uint64_t nodes = 0;
};

struct LayerOutcome {
  std::vector<std::uint64_t> found;  // merged in block order, truncated to cap
  std::uint64_t nodes = 0;
  bool truncated = false;
  bool complete = true;
};

class LayerSearch {
 public:
  LayerSearch(const LayerConfig& cfg, BudgetTracker& budget) : cfg_(cfg), budget_(budget) {
    full_ = cfg.graph->full_mask();
  }

  LayerOutcome run(unsigned workers) {
    int leads = cfg_.universe - cfg_.size + 1;
    blocks_.assign(static_cast<std::size_t>(std::max(leads, 0)), {});
    if (leads > 0) {
      unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(leads)));
      if (threads == 1) {
        worker();
      } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back([this] { worker(); });
      }
    }
    return merge();
  }

 private:
  void worker() {
    std::uint64_t ticks = 0;
    int leads = static_cast<int>(blocks_.size());
    for (;;) {
      int lead = next_lead_.fetch_add(1);
      if (lead >= leads || budget_.stopped()) return;
      if (cfg_.early_exit && lead > best_lead_.load()) continue;
      BlockResult& block = blocks_[static_cast<std::size_t>(lead)];
      std::uint64_t mask = bit(lead);
      if (!(cfg_.pruner && cfg_.pruner->cut(mask, lead, cfg_.size - 1))) {
        dfs(block, lead, mask, lead, cfg_.size - 1, ticks);
      }
      if (block.found.size() >= cfg_.cap) {
        int cur = best_lead_.load();
        while (lead < cur && !best_lead_.compare_exchange_weak(cur, lead)) {
        }
      }
    }
  }

  bool abandon(const BlockResult& block, int lead) const {
    if (budget_.stopped()) return true;
    if (block.found.size() >= cfg_.cap) return true;
    return cfg_.early_exit && lead > best_lead_.load(std::memory_order_relaxed);
  }

  void dfs(BlockResult& block, int lead, std::uint64_t mask, int last, int remaining, std::uint64_t& ticks) {
    budget_.tick(ticks);
    if (remaining == 0) {
      leaf(block, mask);
      return;
    }
    for (int v = last + 1; v <= cfg_.universe - remaining; ++v) {
      if (abandon(block, lead)) return;
      std::uint64_t next = mask | bit(v);
      if (cfg_.pruner && cfg_.pruner->cut(next, v, remaining - 1)) continue;
      dfs(block, lead, next, v, remaining - 1, ticks);
    }
  }

  void leaf(BlockResult& block, std::uint64_t mask) {
    if (cfg_.pruner && !cfg_.pruner->accept(mask)) return;
    if (cfg_.symmetry && !cfg_.symmetry->is_canonical(mask)) return;
    if (!budget_.charge()) return;
    ++block.nodes;
    bool hit = false;
    if (cfg_.goal == Goal::Blocking) {
      hit = closure_mask(*cfg_.graph, full_ & ~mask) != full_;
    } else {
      hit = closure_mask(*cfg_.graph, mask) == full_;
    }
    if (hit) block.found.push_back(mask);
  }

  LayerOutcome merge() {
    LayerOutcome out;
    out.complete = !budget_.stopped();
    for (const BlockResult& block : blocks_) {
      out.nodes += block.nodes;
      for (std::uint64_t f : block.found) {
        if (out.found.size() < cfg_.cap) {
          out.found.push_back(f);
        } else {
          out.truncated = true;
        }
      }
      if (out.found.size() >= cfg_.cap) {
        if (&block != &blocks_.back()) out.truncated = true;
        break;
      }
    }
    return out;
  }

  const LayerConfig& cfg_;
  BudgetTracker& budget_;
  std::uint64_t full_ = 0;
  std::vector<BlockResult> blocks_;
  std::atomic<int> next_lead_{0};
  std::atomic<int> best_lead_{INT_MAX};
};

void require_mask_graph(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("graph has no vertices");
  if (!g.has_masks()) {
    throw LimitError("exact search supports at most 64 vertices, graph has " + std::to_string(g.vertex_count()));
  }
}

VertexSet to_set(const Graph& g, std::uint64_t mask) { return VertexSet::from_mask(g.vertex_count(), mask); }

SolveResult ascending_search(const Graph& g, Goal goal, const GridPruner* pruner, const Symmetry* symmetry,
                             const SearchBudget& budget) {
  require_mask_graph(g);
  if (budget.witness_cap == 0 || budget.max_subsets == 0 || budget.max_seconds <= 0 || budget.workers == 0) {
    throw InputError("search budget values must be positive");
  }
  BudgetTracker tracker(budget);
  SolveResult result;
  int universe = static_cast<int>(g.vertex_count());
  for (int size = 1; size <= universe; ++size) {
    LayerConfig cfg;
    cfg.graph = &g;
    cfg.universe = universe;
    cfg.size = size;
    cfg.goal = goal;
    cfg.pruner = pruner;
    cfg.symmetry = symmetry;
    cfg.cap = budget.witness_cap;
    cfg.early_exit = true;
    LayerSearch layer(cfg, tracker);
    LayerOutcome out = layer.run(budget.workers);
    result.nodes_explored += out.nodes;
    if (!out.complete && out.found.empty()) {
      result.exhausted = false;
      return result;
    }
    if (!out.found.empty()) {
      result.value = size;
      for (std::uint64_t f : out.found) result.witnesses.push_back(to_set(g, f));
      result.exhausted = true;
      return result;
    }
  }
  result.exhausted = true;
  return result;
}

}  // namespace

SearchBudget SearchBudget::defaults() {
  SearchBudget b;
  if (const char* env = std::getenv("ZB_DEFAULT_BUDGET_SECS")) {
    char* end = nullptr;
    double secs = std::strtod(env, &end);
    if (end != env && secs > 0) b.max_seconds = secs;
  }
  return b;
}

std::vector<std::vector<VertexId>> grid_symmetries(const GridSpec& grid) {
  const int m = grid.m;
  const int n = grid.n;
  using Map = std::pair<int, int> (*)(int, int, int, int);
  std::vector<Map> maps = {
      [](int x, int y, int, int) { return std::pair{x, y}; },
      [](int x, int y, int, int n) { return std::pair{n + 1 - x, y}; },
      [](int x, int y, int m, int) { return std::pair{x, m + 1 - y}; },
      [](int x, int y, int m, int n) { return std::pair{n + 1 - x, m + 1 - y}; },
  };
  if (m == n) {
    maps.push_back([](int x, int y, int, int) { return std::pair{y, x}; });
    maps.push_back([](int x, int y, int m, int n) { return std::pair{n + 1 - y, m + 1 - x}; });
    maps.push_back([](int x, int y, int, int n) { return std::pair{n + 1 - y, x}; });
    maps.push_back([](int x, int y, int m, int) { return std::pair{y, m + 1 - x}; });
  }
  std::vector<std::vector<VertexId>> perms;
  for (Map f : maps) {
    std::vector<VertexId> p(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (int y = 1; y <= m; ++y) {
      for (int x = 1; x <= n; ++x) {
        auto [x2, y2] = f(x, y, m, n);
        p[grid.index(x, y)] = grid.index(x2, y2);
      }
    }
    perms.push_back(std::move(p));
  }
  return perms;
}

SolveResult min_blocking_number(const Graph& g, const SearchBudget& budget) {
  return ascending_search(g, Goal::Blocking, nullptr, nullptr, budget);
}

SolveResult min_blocking_grid(int m, int n, const SearchBudget& budget) {
  if (m < 2 || n < 2) throw InputError("grid search needs at least 2 rows and 2 columns");
  if (m > n) {
    SolveResult r = min_blocking_grid(n, m, budget);
    GridSpec from{n, m};
    GridSpec to{m, n};
    for (VertexSet& w : r.witnesses) {
      VertexSet t(w.universe());
      for (VertexId v : w.members()) t.insert(to.index(from.y_of(v), from.x_of(v)));
      w = t;
    }
    return r;
  }
  Graph g = grid_graph(m, n);
  require_mask_graph(g);
  GridPruner pruner(*g.grid());
  Symmetry symmetry(grid_symmetries(*g.grid()));
  return ascending_search(g, Goal::Blocking, &pruner, &symmetry, budget);
}

Enumeration enumerate_min_blocking_sets(const Graph& g, int size, std::size_t cap, const SearchBudget& budget) {
  require_mask_graph(g);
  if (cap == 0) throw InputError("enumeration cap must be positive");
  if (size < 1 || size > static_cast<int>(g.vertex_count())) throw InputError("set size out of range");
  BudgetTracker tracker(budget);
  std::optional<Symmetry> symmetry;
  if (g.grid()) symmetry.emplace(grid_symmetries(*g.grid()));

  LayerConfig cfg;
  cfg.graph = &g;
  cfg.universe = static_cast<int>(g.vertex_count());
  cfg.size = size;
  cfg.goal = Goal::Blocking;
  cfg.symmetry = symmetry ? &*symmetry : nullptr;
  // Every orbit contributes at least one set, so one representative past `cap`
  // proves the cap was reached.
  cfg.cap = cap + 1;
  cfg.early_exit = false;
  LayerSearch layer(cfg, tracker);
  LayerOutcome out = layer.run(budget.workers);

  std::vector<std::uint64_t> masks;
  if (symmetry) {
    for (std::uint64_t rep : out.found) {
      for (std::uint64_t img : symmetry->orbit(rep)) masks.push_back(img);
    }
  } else {
    masks = out.found;
  }
  Enumeration e;
  e.exhausted = out.complete;
  for (std::uint64_t mk : masks) e.sets.push_back(to_set(g, mk));
  std::sort(e.sets.begin(), e.sets.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
  e.sets.erase(std::unique(e.sets.begin(), e.sets.end()), e.sets.end());
  e.cap_reached = out.truncated || e.sets.size() > cap;
  if (e.sets.size() > cap) e.sets.resize(cap);
  return e;
}

int failed_zero_forcing_number(const Graph& g, const SearchBudget& budget) {
  SolveResult r = min_blocking_number(g, budget);
  if (!r.exhausted || !r.value) throw LimitError("search budget exhausted before B(G) was found");
  return static_cast<int>(g.vertex_count()) - *r.value;
}

SolveResult zero_forcing_search(const Graph& g, const SearchBudget& budget) {
  return ascending_search(g, Goal::Forcing, nullptr, nullptr, budget);
}

int zero_forcing_number(const Graph& g, const SearchBudget& budget) {
  SolveResult r = zero_forcing_search(g, budget);
  if (!r.exhausted || !r.value) throw LimitError("search budget exhausted before Z(G) was found");
  return *r.value;
}

}  // namespace zb
