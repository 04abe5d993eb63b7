#pragma once

// Closed-form zero blocking numbers of grid graphs G_{m,n} and a constructive,
// machine-verified witness attaining them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zb/graph.hpp"

namespace zb {

/// n - m = q(m+1) - r with 0 <= r <= m; the tight branch is r <= 2q.
struct FormulaParams {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  bool tight_branch = false;
};

/// n - m = a(m-1) + b*m + c(m+1) with a, b, c >= 0.
struct GapDecomposition {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
};

constexpr std::int64_t kMaxFormulaN = 1'000'000'000;

// Inputs with m > n are transposed first; m < 2 (after transposing) or n > 1e9 throw InputError.
FormulaParams qr_params(std::int64_t m, std::int64_t n);

/// Exact B(G_{m,n}): n - q + ceil(r/2) when r <= 2q, else n - q + m - 1.
std::int64_t blocking_number_formula(std::int64_t m, std::int64_t n);

/// The two-branch upper bound m(q+1) - floor(r/2) / n + m - floor((n-m)/(m+1)) - 2,
/// branch chosen by comparing ceil((n-m)/(m+1)) with floor((n-m)/(m-1)).
std::int64_t upper_bound_bcc(std::int64_t m, std::int64_t n);

/// Largest c over all gap decompositions of n - m, or nullopt when none exists.
std::optional<std::int64_t> lemma8_max_c(std::int64_t m, std::int64_t n);

/// Every decomposition, ascending in c then b. For sweeps and tests; O((n/m)^2).
std::vector<GapDecomposition> gap_decompositions(std::int64_t m, std::int64_t n);

enum class Turn { Sharp, Flat, Hole };

struct Witness {
  int m = 0;
  int n = 0;
  std::vector<Cell> white;  // ascending (x, then y)
  std::int64_t size = 0;
  bool verified = false;
  // Bounce columns on the top/bottom rows in path order, and hole positions (as
  // virtual lattice points just outside the grid).
  std::vector<Cell> bounces;
  std::vector<Cell> holes;
  std::string method;  // "billiard" or "search"
};

/// White cells of the diagonal billiard path from corner (1,1). Each top/bottom bounce
/// consumes the next turn from `turns` (Sharp once they run out); side walls reflect
/// sharply. The walk stops at a corner or when it would revisit a white cell.
std::vector<Cell> billiard_path(int m, int n, const std::vector<Turn>& turns,
                                std::vector<Cell>* bounces = nullptr, std::vector<Cell>* holes = nullptr);

/// The turn sequence used for G_{m,n}: c = q - ceil(r/2) holes then one flat if r is
/// odd on the tight branch; q - 1 holes on the other.
std::vector<Turn> canonical_turns(int m, int n);

/// A verified minimum zero blocking set of G_{m,n}, 2 <= m, n (m > n is handled by
/// transposing). Candidates, in order: the canonical turns without a trailing flat,
/// the canonical turns, their other orderings, then search on grids of at most 30
/// vertices. Throws InternalError if no verified witness is produced.
Witness build_witness(int m, int n);

/// Engine check used by build_witness: the set blocks, the complement stalls
/// immediately (empty force trace), and the size equals the formula.
bool verify_witness(int m, int n, const std::vector<Cell>& white);

}  // namespace zb
