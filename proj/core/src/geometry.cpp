#include "zb/geometry.hpp"

#include <algorithm>
#include <cstdlib>

#include "zb/error.hpp"

namespace zb {
namespace {

std::string half_to_string(std::int64_t doubled) {
  std::string s = std::to_string(doubled / 2);
  if (doubled % 2 != 0) {
    // -1/2 is "-0.5", not "0.5".
    if (doubled < 0 && doubled / 2 == 0) s = "-0";
    s += ".5";
  }
  return s;
}

struct Step {
  std::int64_t x;
  std::int64_t y;
};

Step unit_step(Direction dir) {
  switch (dir) {
    case Direction::N: return {0, 1};
    case Direction::NE: return {1, 1};
    case Direction::E: return {1, 0};
    case Direction::SE: return {1, -1};
    case Direction::S: return {0, -1};
    case Direction::SW: return {-1, -1};
    case Direction::W: return {-1, 0};
    case Direction::NW: return {-1, 1};
  }
  throw InternalError("unknown direction");
}

std::int64_t sign(std::int64_t v) { return (v > 0) - (v < 0); }

// Count of integers k in [0, len] with k = parity (mod 2).
std::int64_t count_with_parity(std::int64_t len, std::int64_t parity) {
  return parity == 0 ? len / 2 + 1 : (len + 1) / 2;
}

std::int64_t mod2(std::int64_t v) { return ((v % 2) + 2) % 2; }

}  // namespace

std::string to_string(const HalfPoint& p) {
  return "(" + half_to_string(p.dx) + "," + half_to_string(p.dy) + ")";
}

HalfPoint offset(const HalfPoint& a, Direction dir, Distance d) {
  if (d.halves < 0) throw InputError("offset distance must be non-negative");
  Step s = unit_step(dir);
  return HalfPoint{a.dx + s.x * d.halves, a.dy + s.y * d.halves};
}

std::array<HalfPoint, 4> neighborhood_set(const HalfPoint& a, Side side) {
  using D = Direction;
  switch (side) {
    case Side::North:
      return {offset(a, D::NW), offset(a, D::N), offset(a, D::NE), offset(a, D::N, Distance::whole(2))};
    case Side::South:
      return {offset(a, D::SW), offset(a, D::S), offset(a, D::SE), offset(a, D::S, Distance::whole(2))};
    case Side::East:
      return {offset(a, D::NE), offset(a, D::E), offset(a, D::SE), offset(a, D::E, Distance::whole(2))};
    case Side::West:
      return {offset(a, D::NW), offset(a, D::W), offset(a, D::SW), offset(a, D::W, Distance::whole(2))};
  }
  throw InternalError("unknown side");
}

Segment Segment::make(const HalfPoint& a, const HalfPoint& b) {
  std::int64_t ddx = b.dx - a.dx;
  std::int64_t ddy = b.dy - a.dy;
  if (ddy == 0) return Segment(a, b, SlopeClass::Horizontal);
  if (ddx == 0) return Segment(a, b, SlopeClass::Vertical);
  if (ddy == ddx) return Segment(a, b, SlopeClass::DiagUp);
  if (ddy == -ddx) return Segment(a, b, SlopeClass::DiagDown);
  throw InputError("segment " + to_string(a) + "-" + to_string(b) + " is not axis-parallel or diagonal");
}

Segment half_extend(const HalfPoint& a, const HalfPoint& b, ExtendSign sign) {
  std::int64_t ddx = b.dx - a.dx;
  if (ddx < 0 || b.dy - a.dy != ddx) {
    throw InputError(to_string(b) + " is not on the northeast ray of " + to_string(a));
  }
  Direction dir = sign == ExtendSign::Plus ? Direction::NE : Direction::SW;
  return Segment::make(a, offset(b, dir, Distance::half(1)));
}

std::int64_t lattice_count(const Segment& s) {
  const HalfPoint& a = s.a();
  const HalfPoint& b = s.b();
  std::int64_t len = std::max(std::llabs(b.dx - a.dx), std::llabs(b.dy - a.dy));
  switch (s.slope()) {
    case SlopeClass::Horizontal:
      if (mod2(a.dy) != 0) return 0;
      return count_with_parity(len, mod2(a.dx));
    case SlopeClass::Vertical:
      if (mod2(a.dx) != 0) return 0;
      return count_with_parity(len, mod2(a.dy));
    case SlopeClass::DiagUp:
    case SlopeClass::DiagDown:
      // Points a + k(1, +-1) in doubled units are lattice iff both coordinates are even,
      // which needs dx and dy of a to share parity.
      if (mod2(a.dx) != mod2(a.dy)) return 0;
      return count_with_parity(len, mod2(a.dx));
  }
  throw InternalError("unknown slope class");
}

Polyline::Polyline(std::vector<HalfPoint> vertices) {
  for (const auto& v : vertices) {
    if (!vertices_.empty() && vertices_.back() == v) continue;
    if (!vertices_.empty()) {
      Segment::make(vertices_.back(), v);  // validates slope
      if (v.dx < vertices_.back().dx) throw InputError("polyline must be non-decreasing in x");
    }
    vertices_.push_back(v);
  }
}

bool Polyline::y_range_at(std::int64_t dx, std::int64_t& lo, std::int64_t& hi) const {
  bool found = false;
  auto take = [&](std::int64_t y) {
    if (!found) {
      lo = hi = y;
      found = true;
    } else {
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
  };
  if (vertices_.size() == 1) {
    if (vertices_[0].dx == dx) take(vertices_[0].dy);
    return found;
  }
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const HalfPoint& a = vertices_[i];
    const HalfPoint& b = vertices_[i + 1];
    if (dx < a.dx || dx > b.dx) continue;
    if (a.dx == b.dx) {
      take(a.dy);
      take(b.dy);
    } else {
      std::int64_t slope = sign(b.dy - a.dy);
      take(a.dy + slope * (dx - a.dx));
    }
  }
  return found;
}

std::vector<HalfPoint> Polyline::lattice_points() const {
  std::vector<HalfPoint> out;
  auto visit_segment = [&](const HalfPoint& a, const HalfPoint& b) {
    std::int64_t sx = sign(b.dx - a.dx);
    std::int64_t sy = sign(b.dy - a.dy);
    std::int64_t len = std::max(std::llabs(b.dx - a.dx), std::llabs(b.dy - a.dy));
    for (std::int64_t k = 0; k <= len; ++k) {
      HalfPoint p{a.dx + sx * k, a.dy + sy * k};
      if (p.is_lattice()) out.push_back(p);
    }
  };
  if (vertices_.size() == 1) visit_segment(vertices_[0], vertices_[0]);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) visit_segment(vertices_[i], vertices_[i + 1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Relation relation(const HalfPoint& a, const Polyline& p) {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  if (p.empty() || !p.y_range_at(a.dx, lo, hi)) return Relation::Incomparable;
  if (a.dy < lo) return Relation::StrictlyBelow;
  if (a.dy > hi) return Relation::StrictlyAbove;
  if (lo == hi) return Relation::On;
  return a.dy < hi ? Relation::Below : Relation::Above;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::StrictlyBelow: return "strictlyBelow";
    case Relation::On: return "on";
    case Relation::Below: return "below";
    case Relation::Above: return "above";
    case Relation::StrictlyAbove: return "strictlyAbove";
    case Relation::Incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace zb
