#pragma once

// Staircase certificates for zero blocking sets of grids.
//
// Everything is computed in a "frame": the grid rotated/reflected so the chosen
// boundary line is the bottom row y = 1 and window rays point north-east. Results
// carry their frame; counterexamples in reports are mapped back to grid coordinates.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zb/geometry.hpp"
#include "zb/graph.hpp"

namespace zb {

/// Boundary line named by its corners: XY bottom row, ZW top row, XZ left column,
/// YW right column.
enum class Boundary { XY, ZW, XZ, YW };
enum class RayDir { NE, NW };

inline constexpr Boundary kAllBoundaries[] = {Boundary::XY, Boundary::ZW, Boundary::XZ, Boundary::YW};

const char* to_string(Boundary b);
std::optional<Boundary> parse_boundary(std::string_view s);

/// Grid symmetry taking `side` to the bottom row, composed with x -> cols+1-x for NW.
class Frame {
 public:
  Frame() = default;
  static Frame make(int m, int n, Boundary side, RayDir dir = RayDir::NE);

  int rows() const { return transpose_ ? n_ : m_; }
  int cols() const { return transpose_ ? m_ : n_; }

  HalfPoint to_frame(const HalfPoint& p) const;
  HalfPoint to_grid(const HalfPoint& p) const;

 private:
  int m_ = 0;
  int n_ = 0;
  bool transpose_ = false;
  bool flip_x_ = false;
  bool flip_y_ = false;
};

/// White cells of a grid seen through a frame.
class Board {
 public:
  Board(int m, int n, std::span<const Cell> white, const Frame& frame);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool inside(const HalfPoint& p) const {
    return p.is_lattice() && 1 <= p.x() && p.x() <= cols_ && 1 <= p.y() && p.y() <= rows_;
  }
  bool white(const HalfPoint& p) const {
    return inside(p) && cells_[static_cast<std::size_t>((p.y() - 1) * cols_ + (p.x() - 1))];
  }

 private:
  int rows_;
  int cols_;
  std::vector<char> cells_;
};

struct Staircase {
  Boundary side = Boundary::XY;
  Frame frame;
  std::vector<HalfPoint> anchors;  // A_1..A_k, frame coordinates, ascending x
  std::vector<HalfPoint> peaks;    // B_0..B_k
  Polyline polyline;               // B_0 A_1 B_1 ... A_k B_k

  bool is_interior_peak(const HalfPoint& p) const;
};

/// Throws InputError when no white cell lies on the boundary line.
Staircase build_staircase(int m, int n, std::span<const Cell> white, Boundary side, RayDir dir = RayDir::NE);

struct Window {
  Boundary side = Boundary::XY;
  RayDir direction = RayDir::NE;
  Frame frame;
  HalfPoint base;  // A (frame)
  HalfPoint tip;   // B on the NE ray of A (frame)
  std::vector<HalfPoint> members;                            // W, sorted
  std::vector<HalfPoint> holes;                              // H, ascending x
  std::vector<std::pair<HalfPoint, HalfPoint>> promotions;   // B_i -> B_i'
  std::vector<std::pair<HalfPoint, std::string>> issues;     // construction failures

  // [AB]
  std::int64_t base_count() const;
};

/// The window of the staircase on `side` between white anchor `base` (grid
/// coordinates, on the boundary line) and the point at distance `tip` along its NE
/// (or NW) ray. Among several whites in North(C_i) the first of NW, N, NE, N2 wins.
Window compute_window(int m, int n, std::span<const Cell> white, Boundary side, RayDir dir, const Cell& base,
                      Distance tip);

struct CheckEntry {
  std::string check;  // prop4 .. prop7, lemma2, lemma3
  std::optional<Boundary> side;
  bool pass = true;
  std::optional<HalfPoint> at;  // grid coordinates
  std::string detail;
};

struct CertificateReport {
  std::vector<CheckEntry> entries;
  std::vector<std::string> notes;

  bool passed() const;
  const CheckEntry* first_failure() const;
};

// Individual checks. Staircase/window checks report counterexamples in grid coordinates.
CheckEntry check_prop4(int m, int n, std::span<const Cell> white, const Staircase& s);
CheckEntry check_prop5(const Staircase& s);
CheckEntry check_prop6(const Window& w);
CheckEntry check_prop7(const Window& w);
CheckEntry check_lemma2(int m, int n, std::span<const Cell> white);
CheckEntry check_lemma3(int m, int n, std::span<const Cell> white);

struct CertifyOptions {
  std::vector<Boundary> sides{Boundary::XY, Boundary::ZW, Boundary::XZ, Boundary::YW};
  bool windows = true;  // run prop6/prop7 over every anchored window
};

/// lemma2, lemma3, then prop4..prop7 per side. Prop 6/7 are aggregated over every
/// window: each white anchor on the side, both ray directions, and every tip at a
/// half-integer distance that keeps x_B within the grid. Never throws on bad sets.
CertificateReport certify(int m, int n, std::span<const Cell> white, const CertifyOptions& options = {});

}  // namespace zb
