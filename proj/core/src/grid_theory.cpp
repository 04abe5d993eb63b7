#include "zb/grid_theory.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "zb/error.hpp"
#include "zb/forcing.hpp"
#include "zb/solver.hpp"

namespace zb {
namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Gap n - m split as s segments of width m-1 or m: needs ceil(R/m) <= s <= floor(R/(m-1)).
bool representable_without_c(std::int64_t rest, std::int64_t m) {
  if (rest == 0) return true;
  return ceil_div(rest, m) <= rest / (m - 1);
}

std::vector<Cell> transpose(const std::vector<Cell>& cells) {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const Cell& c : cells) out.push_back(Cell{c.y, c.x});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FormulaParams qr_params(std::int64_t m, std::int64_t n) {
  if (m > n) std::swap(m, n);
  if (m < 2) throw InputError("closed forms need at least 2 rows and 2 columns; use the solver for paths");
  if (n > kMaxFormulaN) throw InputError("grid dimension exceeds 1e9");
  FormulaParams p;
  p.m = m;
  p.n = n;
  p.q = ceil_div(n - m, m + 1);
  p.r = p.q * (m + 1) - (n - m);
  p.tight_branch = p.r <= 2 * p.q;
  return p;
}

std::int64_t blocking_number_formula(std::int64_t m, std::int64_t n) {
  FormulaParams p = qr_params(m, n);
  if (p.tight_branch) return p.n - p.q + (p.r + 1) / 2;
  return p.n - p.q + p.m - 1;
}

std::int64_t upper_bound_bcc(std::int64_t m, std::int64_t n) {
  FormulaParams p = qr_params(m, n);
  std::int64_t gap = p.n - p.m;
  if (ceil_div(gap, p.m + 1) <= gap / (p.m - 1)) return p.m * (p.q + 1) - p.r / 2;
  return p.n + p.m - gap / (p.m + 1) - 2;
}

std::optional<std::int64_t> lemma8_max_c(std::int64_t m, std::int64_t n) {
  FormulaParams p = qr_params(m, n);
  std::int64_t gap = p.n - p.m;
  for (std::int64_t c = gap / (p.m + 1); c >= 0; --c) {
    if (!representable_without_c(gap - c * (p.m + 1), p.m)) continue;
    if (c > p.q - (p.r + 1) / 2 || p.r > 2 * p.q) {
      throw InternalError("gap decomposition with c=" + std::to_string(c) + " exceeds q - ceil(r/2) for m=" +
                          std::to_string(p.m) + " n=" + std::to_string(p.n));
    }
    return c;
  }
  return std::nullopt;
}

std::vector<GapDecomposition> gap_decompositions(std::int64_t m, std::int64_t n) {
  FormulaParams p = qr_params(m, n);
  std::int64_t gap = p.n - p.m;
  std::vector<GapDecomposition> out;
  for (std::int64_t c = 0; c * (p.m + 1) <= gap; ++c) {
    for (std::int64_t b = 0; c * (p.m + 1) + b * p.m <= gap; ++b) {
      std::int64_t rest = gap - c * (p.m + 1) - b * p.m;
      if (rest % (p.m - 1) == 0) out.push_back({rest / (p.m - 1), b, c});
    }
  }
  return out;
}

std::vector<Cell> billiard_path(int m, int n, const std::vector<Turn>& turns, std::vector<Cell>* bounces,
                                std::vector<Cell>* holes) {
  if (m < 2 || n < 2) throw InputError("billiard paths need at least 2 rows and 2 columns");
  std::vector<Cell> path{{1, 1}};
  std::set<Cell> seen{{1, 1}};
  int x = 1;
  int y = 1;
  int dx = 1;
  int dy = 1;
  std::size_t next_turn = 0;
  auto is_corner = [&](int cx, int cy) { return (cx == 1 || cx == n) && (cy == 1 || cy == m); };

  const std::size_t max_steps = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  for (std::size_t step = 0; step < max_steps; ++step) {
    int nx = x + dx;
    int ny = y + dy;
    if (ny > m || ny < 1) {
      Turn t = next_turn < turns.size() ? turns[next_turn] : Turn::Sharp;
      ++next_turn;
      if (bounces) bounces->push_back({x, y});
      if (t == Turn::Hole && holes) holes->push_back({x + dx, y + dy});
      dy = -dy;
      switch (t) {
        case Turn::Sharp: nx = x + dx; ny = y + dy; break;
        case Turn::Flat: nx = x + dx; ny = y; break;
        case Turn::Hole: nx = x + 2 * dx; ny = y; break;
      }
    }
    if (nx > n || nx < 1) {
      dx = -dx;
      nx = x + dx;
    }
    if (ny > m || ny < 1 || nx > n || nx < 1) break;
    if (!seen.insert({nx, ny}).second) break;
    path.push_back({nx, ny});
    x = nx;
    y = ny;
    if (is_corner(x, y)) break;
  }
  std::sort(path.begin(), path.end());
  return path;
}

std::vector<Turn> canonical_turns(int m, int n) {
  FormulaParams p = qr_params(m, n);
  std::vector<Turn> turns;
  if (p.tight_branch) {
    std::int64_t holes = p.q - (p.r + 1) / 2;
    turns.assign(static_cast<std::size_t>(holes), Turn::Hole);
    if (p.r % 2 == 1) turns.push_back(Turn::Flat);
  } else {
    turns.assign(static_cast<std::size_t>(p.q - 1), Turn::Hole);
  }
  return turns;
}

bool verify_witness(int m, int n, const std::vector<Cell>& white) {
  Graph g = grid_graph(m, n);
  VertexSet w = cells_to_set(*g.grid(), white);
  if (static_cast<std::int64_t>(w.count()) != blocking_number_formula(m, n)) return false;
  ClosureResult res = closure(g, w.complement());
  return res.trace.empty() && !res.black.is_full();
}

Witness build_witness(int m, int n) {
  if (m > n) {
    Witness w = build_witness(n, m);
    w.m = m;
    w.n = n;
    w.white = transpose(w.white);
    for (Cell& c : w.bounces) std::swap(c.x, c.y);
    for (Cell& c : w.holes) std::swap(c.x, c.y);
    return w;
  }
  qr_params(m, n);  // validates

  Witness w;
  w.m = m;
  w.n = n;
  auto attempt = [&](const std::vector<Turn>& turns) {
    std::vector<Cell> bounces;
    std::vector<Cell> holes;
    std::vector<Cell> cells = billiard_path(m, n, turns, &bounces, &holes);
    if (!verify_witness(m, n, cells)) return false;
    w.white = std::move(cells);
    w.bounces = std::move(bounces);
    w.holes = std::move(holes);
    w.method = "billiard";
    return true;
  };

  std::vector<Turn> turns = canonical_turns(m, n);
  bool ok = false;
  // Fewest non-sharp turns first: on two-row grids the trailing flat is often unneeded.
  if (!turns.empty() && turns.back() == Turn::Flat) {
    ok = attempt(std::vector<Turn>(turns.begin(), turns.end() - 1));
  }
  if (!ok) ok = attempt(turns);
  if (!ok) {
    // Same turn multiset, other orders.
    std::sort(turns.begin(), turns.end());
    do {
      ok = attempt(turns);
    } while (!ok && std::next_permutation(turns.begin(), turns.end()));
  }
  if (!ok && m * n <= 30) {
    SearchBudget budget = SearchBudget::defaults();
    SolveResult r = min_blocking_grid(m, n, budget);
    if (r.value && !r.witnesses.empty()) {
      std::vector<Cell> cells = set_to_cells(GridSpec{m, n}, r.witnesses.front());
      if (verify_witness(m, n, cells)) {
        w.white = std::move(cells);
        w.method = "search";
        ok = true;
      }
    }
  }
  if (!ok) {
    throw InternalError("no verified witness for G_{" + std::to_string(m) + "," + std::to_string(n) + "}");
  }
  w.size = static_cast<std::int64_t>(w.white.size());
  w.verified = true;
  return w;
}

}  // namespace zb
