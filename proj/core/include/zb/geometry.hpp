#pragma once

// Exact planar primitives on the half-integer lattice.
//
// Every coordinate is stored doubled, so (2.5, 1) is HalfPoint{5, 2}. Midpoints
// of lattice points and half steps along a diagonal stay in integer arithmetic.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace zb {

/// A distance along a ray, in half units. Distance::whole(1) is one lattice step.
struct Distance {
  std::int64_t halves = 0;

  static constexpr Distance whole(std::int64_t d) { return Distance{2 * d}; }
  static constexpr Distance half(std::int64_t h) { return Distance{h}; }

  friend constexpr Distance operator+(Distance a, Distance b) { return Distance{a.halves + b.halves}; }
  friend constexpr auto operator<=>(Distance, Distance) = default;
};

struct HalfPoint {
  std::int64_t dx = 0;  // 2 * x
  std::int64_t dy = 0;  // 2 * y

  static constexpr HalfPoint lattice(std::int64_t x, std::int64_t y) { return HalfPoint{2 * x, 2 * y}; }
  static constexpr HalfPoint doubled(std::int64_t dx, std::int64_t dy) { return HalfPoint{dx, dy}; }

  constexpr bool is_lattice() const { return dx % 2 == 0 && dy % 2 == 0; }
  // Only meaningful when is_lattice().
  constexpr std::int64_t x() const { return dx / 2; }
  constexpr std::int64_t y() const { return dy / 2; }

  friend constexpr auto operator<=>(const HalfPoint&, const HalfPoint&) = default;
};

// "(5.5,3.5)" / "(3,1)"
std::string to_string(const HalfPoint& p);

enum class Direction { N, NE, E, SE, S, SW, W, NW };

enum class Side { North, South, East, West };

HalfPoint offset(const HalfPoint& a, Direction dir, Distance d);

// Unit offsets have a convenience overload: offset(A, NE) == offset(A, NE, whole(1)).
inline HalfPoint offset(const HalfPoint& a, Direction dir) { return offset(a, dir, Distance::whole(1)); }

/// North(A) = {NW(A,1), N(A,1), NE(A,1), N(A,2)} and its three rotations, in that order
/// (for East: NE, E, SE, E2; South: SW, S, SE, S2; West: NW, W, SW, W2).
std::array<HalfPoint, 4> neighborhood_set(const HalfPoint& a, Side side);

enum class SlopeClass { Horizontal, Vertical, DiagUp, DiagDown };

class Segment {
 public:
  // Throws InputError unless a-b is horizontal, vertical or of slope +-1.
  static Segment make(const HalfPoint& a, const HalfPoint& b);

  const HalfPoint& a() const { return a_; }
  const HalfPoint& b() const { return b_; }
  SlopeClass slope() const { return slope_; }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Segment(HalfPoint a, HalfPoint b, SlopeClass s) : a_(a), b_(b), slope_(s) {}
  HalfPoint a_;
  HalfPoint b_;
  SlopeClass slope_;
};

enum class ExtendSign { Plus, Minus };

/// AB+ = A..NE(B,1/2), AB- = A..SW(B,1/2). B must lie on the NE ray of A.
Segment half_extend(const HalfPoint& a, const HalfPoint& b, ExtendSign sign);

/// Number of lattice points on the closed segment.
std::int64_t lattice_count(const Segment& s);

/// Chain of segments. Consecutive vertices must form valid segments and x must be
/// non-decreasing along the chain; repeated vertices are allowed and ignored.
class Polyline {
 public:
  Polyline() = default;
  explicit Polyline(std::vector<HalfPoint> vertices);

  const std::vector<HalfPoint>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }

  // Doubled x-span of the chain.
  std::int64_t min_dx() const { return vertices_.front().dx; }
  std::int64_t max_dx() const { return vertices_.back().dx; }

  // Range [lo, hi] of doubled y values of the chain at doubled abscissa dx.
  // Returns false if dx lies outside the span.
  bool y_range_at(std::int64_t dx, std::int64_t& lo, std::int64_t& hi) const;

  // Lattice points on the chain, ascending in x, without duplicates.
  std::vector<HalfPoint> lattice_points() const;

 private:
  std::vector<HalfPoint> vertices_;
};

enum class Relation { StrictlyBelow, On, Below, Above, StrictlyAbove, Incomparable };

/// Position of A relative to P at the abscissa x_A.
///
/// StrictlyBelow / StrictlyAbove: A is off the chain, under / over it.
/// On: A is the (unique) chain point at x_A.
/// Below / Above: A lies on a vertical leg of the chain and some chain point at x_A
/// is above / only below it.
/// Incomparable: no chain point shares x_A.
Relation relation(const HalfPoint& a, const Polyline& p);

// "A is below P" in the non-strict sense: some B in P has x_B = x_A and y_A <= y_B.
inline bool is_below(Relation r) {
  return r == Relation::StrictlyBelow || r == Relation::On || r == Relation::Below || r == Relation::Above;
}
inline bool is_strictly_below(Relation r) { return r == Relation::StrictlyBelow || r == Relation::Below; }

const char* to_string(Relation r);

}  // namespace zb
