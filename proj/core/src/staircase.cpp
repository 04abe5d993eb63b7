#include "zb/staircase.hpp"

#include <algorithm>
#include <set>

#include "zb/error.hpp"

namespace zb {
namespace {

using D = Direction;

CheckEntry pass_entry(std::string check, std::optional<Boundary> side) {
  CheckEntry e;
  e.check = std::move(check);
  e.side = side;
  return e;
}

void fail(CheckEntry& e, std::optional<HalfPoint> at, std::string detail) {
  if (!e.pass) return;  // keep the first counterexample
  e.pass = false;
  e.at = at;
  e.detail = std::move(detail);
}

HalfPoint reflect_axis(const HalfPoint& p, bool flip_x, bool flip_y, int cols, int rows) {
  HalfPoint q = p;
  if (flip_x) q.dx = 2 * (cols + 1) - q.dx;
  if (flip_y) q.dy = 2 * (rows + 1) - q.dy;
  return q;
}

std::string window_label(const Window& w) {
  return std::string(to_string(w.side)) + (w.direction == RayDir::NE ? "/NE" : "/NW") + " A=" +
         to_string(w.frame.to_grid(w.base)) + " B=" + to_string(w.frame.to_grid(w.tip));
}

}  // namespace

const char* to_string(Boundary b) {
  switch (b) {
    case Boundary::XY: return "xy";
    case Boundary::ZW: return "zw";
    case Boundary::XZ: return "xz";
    case Boundary::YW: return "yw";
  }
  return "?";
}

std::optional<Boundary> parse_boundary(std::string_view s) {
  for (Boundary b : kAllBoundaries) {
    if (s == to_string(b)) return b;
  }
  return std::nullopt;
}

Frame Frame::make(int m, int n, Boundary side, RayDir dir) {
  Frame f;
  f.m_ = m;
  f.n_ = n;
  switch (side) {
    case Boundary::XY: break;
    case Boundary::ZW: f.flip_y_ = true; break;
    case Boundary::XZ: f.transpose_ = true; break;
    case Boundary::YW: f.transpose_ = true; f.flip_y_ = true; break;
  }
  if (dir == RayDir::NW) f.flip_x_ = true;
  return f;
}

HalfPoint Frame::to_frame(const HalfPoint& p) const {
  HalfPoint q = transpose_ ? HalfPoint{p.dy, p.dx} : p;
  return reflect_axis(q, flip_x_, flip_y_, cols(), rows());
}

HalfPoint Frame::to_grid(const HalfPoint& p) const {
  HalfPoint q = reflect_axis(p, flip_x_, flip_y_, cols(), rows());
  return transpose_ ? HalfPoint{q.dy, q.dx} : q;
}

Board::Board(int m, int n, std::span<const Cell> white, const Frame& frame)
    : rows_(frame.rows()), cols_(frame.cols()), cells_(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0) {
  for (const Cell& c : white) {
    if (c.x < 1 || c.x > n || c.y < 1 || c.y > m) {
      throw InputError("white cell " + to_string(c.point()) + " is outside the grid");
    }
    HalfPoint p = frame.to_frame(c.point());
    cells_[static_cast<std::size_t>((p.y() - 1) * cols_ + (p.x() - 1))] = 1;
  }
}

bool Staircase::is_interior_peak(const HalfPoint& p) const {
  if (peaks.size() < 3) return false;
  return std::find(peaks.begin() + 1, peaks.end() - 1, p) != peaks.end() - 1;
}

Staircase build_staircase(int m, int n, std::span<const Cell> white, Boundary side, RayDir dir) {
  Staircase s;
  s.side = side;
  s.frame = Frame::make(m, n, side, dir);
  Board board(m, n, white, s.frame);
  const int cols = board.cols();
  for (int x = 1; x <= cols; ++x) {
    if (board.white(HalfPoint::lattice(x, 1))) s.anchors.push_back(HalfPoint::lattice(x, 1));
  }
  if (s.anchors.empty()) {
    throw InputError(std::string("no white vertex on boundary ") + to_string(side));
  }
  const auto& a = s.anchors;
  s.peaks.push_back(HalfPoint::lattice(1, a.front().x()));
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    // ((x_i + x_{i+1}) / 2, (x_{i+1} - x_i) / 2 + 1), doubled.
    s.peaks.push_back(HalfPoint::doubled(a[i].x() + a[i + 1].x(), a[i + 1].x() - a[i].x() + 2));
  }
  s.peaks.push_back(HalfPoint::lattice(cols, cols + 1 - a.back().x()));

  std::vector<HalfPoint> chain;
  chain.push_back(s.peaks[0]);
  for (std::size_t i = 0; i < a.size(); ++i) {
    chain.push_back(a[i]);
    chain.push_back(s.peaks[i + 1]);
  }
  s.polyline = Polyline(std::move(chain));
  return s;
}

std::int64_t Window::base_count() const { return lattice_count(Segment::make(base, tip)); }

Window compute_window(int m, int n, std::span<const Cell> white, Boundary side, RayDir dir, const Cell& base,
                      Distance tip) {
  Staircase s = build_staircase(m, n, white, side, dir);
  Board board(m, n, white, s.frame);
  Window w;
  w.side = side;
  w.direction = dir;
  w.frame = s.frame;
  w.base = s.frame.to_frame(base.point());
  if (w.base.y() != 1 || !board.white(w.base)) {
    throw InputError("window base " + to_string(base.point()) + " is not a white vertex on boundary " +
                     to_string(side));
  }
  if (tip.halves < 0) throw InputError("window tip distance must be non-negative");
  w.tip = offset(w.base, D::NE, tip);
  const int rows = board.rows();
  const int cols = board.cols();
  if (w.tip.dx > 2 * cols) throw InputError("window tip lies beyond the last column");

  auto in_window = [&](const HalfPoint& p) { return w.base.dx <= p.dx && p.dx <= w.tip.dx; };
  auto on_staircase = [&](const HalfPoint& p) { return relation(p, s.polyline) == Relation::On; };

  std::set<HalfPoint> members;
  for (const HalfPoint& p : s.polyline.lattice_points()) {
    if (in_window(p) && board.white(p)) members.insert(p);
  }

  for (std::size_t i = 0; i < s.peaks.size(); ++i) {
    const HalfPoint& peak = s.peaks[i];
    if (!peak.is_lattice() || !in_window(peak) || board.white(peak)) continue;
    if (i == 0 || i + 1 == s.peaks.size()) {
      w.issues.emplace_back(peak, "boundary peak is not white");
      continue;
    }
    HalfPoint below = offset(peak, D::SE);
    if (!board.white(below)) {
      w.issues.emplace_back(below, "SE(B_i,1) is not white");
      continue;
    }
    if (below.dx > w.tip.dx) {
      w.promotions.emplace_back(peak, below);
      continue;
    }
    // Longest north-east climb from SE(B_i,1) through white staircase points.
    HalfPoint climb = below;
    for (HalfPoint p = below; p.dx <= w.tip.dx; p = offset(p, D::NE)) {
      if (on_staircase(p) && board.white(p)) climb = p;
    }
    if (climb.y() == rows) {
      w.holes.push_back(peak);
      continue;
    }
    std::optional<HalfPoint> promoted;
    for (const HalfPoint& q : neighborhood_set(climb, Side::North)) {
      if (board.white(q)) {
        promoted = q;
        break;
      }
    }
    if (!promoted) {
      w.issues.emplace_back(climb, "North(C_i) has no white vertex");
      continue;
    }
    w.promotions.emplace_back(peak, *promoted);
  }
  for (const auto& pr : w.promotions) members.insert(pr.second);
  w.members.assign(members.begin(), members.end());
  return w;
}

bool CertificateReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

const CheckEntry* CertificateReport::first_failure() const {
  for (const CheckEntry& e : entries) {
    if (!e.pass) return &e;
  }
  return nullptr;
}

CheckEntry check_prop4(int m, int n, std::span<const Cell> white, const Staircase& s) {
  CheckEntry e = pass_entry("prop4", s.side);
  Board board(m, n, white, s.frame);
  for (int y = 1; y <= board.rows() && e.pass; ++y) {
    for (int x = 1; x <= board.cols(); ++x) {
      HalfPoint p = HalfPoint::lattice(x, y);
      if (board.white(p) && is_strictly_below(relation(p, s.polyline))) {
        fail(e, s.frame.to_grid(p), "white vertex strictly below the staircase");
        break;
      }
    }
  }
  if (!e.pass) return e;
  for (const HalfPoint& p : s.polyline.lattice_points()) {
    if (s.is_interior_peak(p)) continue;
    if (!board.white(p)) {
      fail(e, s.frame.to_grid(p),
           board.inside(p) ? "staircase vertex is not white" : "staircase lattice point lies outside the grid");
      break;
    }
  }
  return e;
}

CheckEntry check_prop5(const Staircase& s) {
  CheckEntry e = pass_entry("prop5", s.side);
  const std::int64_t rows = s.frame.rows();
  for (std::size_t i = 0; i < s.peaks.size(); ++i) {
    bool end = i == 0 || i + 1 == s.peaks.size();
    std::int64_t limit = end ? rows : rows + 1;
    if (s.peaks[i].dy > 2 * limit) {
      fail(e, s.frame.to_grid(s.peaks[i]),
           "peak B_" + std::to_string(i) + " is higher than " + std::to_string(limit));
      break;
    }
  }
  return e;
}

CheckEntry check_prop6(const Window& w) {
  CheckEntry e = pass_entry("prop6", w.side);
  if (!w.issues.empty()) {
    fail(e, w.frame.to_grid(w.issues.front().first), w.issues.front().second + " in " + window_label(w));
    return e;
  }
  std::int64_t expected = w.base_count() - static_cast<std::int64_t>(w.holes.size());
  if (static_cast<std::int64_t>(w.members.size()) != expected) {
    fail(e, w.frame.to_grid(w.base),
         "|W| = " + std::to_string(w.members.size()) + " but [AB] - |H| = " + std::to_string(expected) + " in " +
             window_label(w));
    return e;
  }
  Polyline roof({w.base, w.tip, offset(w.tip, D::SE)});
  for (const HalfPoint& p : w.members) {
    if (!is_below(relation(p, roof))) {
      fail(e, w.frame.to_grid(p), "member not below A B SE(B,1) in " + window_label(w));
      return e;
    }
  }
  // Holes at height 2 fence the members under NW(NW(H,1)) and NE(SE(H,1)).
  for (const HalfPoint& h : w.holes) {
    if (h.y() != 2) continue;
    for (const HalfPoint& p : w.members) {
      std::int64_t x = p.x();
      std::int64_t y = p.y();
      bool left = x <= h.x() - 1 && y <= (h.y() + 1) + (h.x() - 1 - x);
      bool right = x >= h.x() + 1 && y <= (h.y() - 1) + (x - h.x() - 1);
      if (!left && !right) {
        fail(e, w.frame.to_grid(p), "member not fenced by hole " + to_string(w.frame.to_grid(h)) + " in " +
                                        window_label(w));
        return e;
      }
    }
  }
  return e;
}

CheckEntry check_prop7(const Window& w) {
  CheckEntry e = pass_entry("prop7", w.side);
  const std::int64_t rows = w.frame.rows();
  const std::int64_t cols = w.frame.cols();
  const std::int64_t xa = w.base.x();
  for (const HalfPoint& h : w.holes) {
    if (!(h.y() == 2 || h.y() == rows + 1)) {
      fail(e, w.frame.to_grid(h), "hole height is not 2 or m+1 in " + window_label(w));
      return e;
    }
    if (h.x() > cols - rows) {
      fail(e, w.frame.to_grid(h), "hole beyond column n-m in " + window_label(w));
      return e;
    }
  }
  for (std::size_t i = 0; i < w.holes.size(); ++i) {
    for (std::size_t j = i + 1; j < w.holes.size(); ++j) {
      if (std::llabs(w.holes[i].x() - w.holes[j].x()) < rows + 1) {
        fail(e, w.frame.to_grid(w.holes[j]), "holes closer than m+1 columns in " + window_label(w));
        return e;
      }
    }
  }
  int near = 0;
  for (const HalfPoint& h : w.holes) {
    if (xa < h.x() && h.x() < xa + rows) {
      ++near;
      if (near > 1 || h.y() != 2) {
        fail(e, w.frame.to_grid(h), "hole within m columns of A breaks uniqueness/height in " + window_label(w));
        return e;
      }
    }
  }
  if (w.tip.dx < 2 * (xa + rows + 1) && !w.holes.empty()) {
    fail(e, w.frame.to_grid(w.holes.front()), "short window contains a hole: " + window_label(w));
  }
  return e;
}

CheckEntry check_lemma2(int m, int n, std::span<const Cell> white) {
  CheckEntry e = pass_entry("lemma2", std::nullopt);
  std::set<Cell> ws(white.begin(), white.end());
  auto meets = [&](const Cell& c, Side side) {
    for (const HalfPoint& p : neighborhood_set(c.point(), side)) {
      if (ws.count(Cell{static_cast<int>(p.x()), static_cast<int>(p.y())})) return true;
    }
    return false;
  };
  for (const Cell& c : white) {
    struct Req {
      bool applies;
      Side side;
      const char* name;
    };
    const Req reqs[] = {{c.y < m, Side::North, "North"},
                        {c.y > 1, Side::South, "South"},
                        {c.x < n, Side::East, "East"},
                        {c.x > 1, Side::West, "West"}};
    for (const Req& r : reqs) {
      if (r.applies && !meets(c, r.side)) {
        fail(e, c.point(), std::string(r.name) + "(A) contains no white vertex");
        return e;
      }
    }
  }
  return e;
}

CheckEntry check_lemma3(int m, int n, std::span<const Cell> white) {
  CheckEntry e = pass_entry("lemma3", std::nullopt);
  std::vector<char> col(static_cast<std::size_t>(n) + 2, 0);
  std::vector<char> row(static_cast<std::size_t>(m) + 2, 0);
  for (const Cell& c : white) {
    col[static_cast<std::size_t>(c.x)] = 1;
    row[static_cast<std::size_t>(c.y)] = 1;
  }
  auto lines = [&](const std::vector<char>& hit, int len, bool columns) {
    const char* what = columns ? "column" : "row";
    auto at = [&](int i) { return columns ? HalfPoint::lattice(i, 1) : HalfPoint::lattice(1, i); };
    if (!hit[1]) return fail(e, at(1), std::string("first ") + what + " has no white vertex");
    if (!hit[static_cast<std::size_t>(len)]) return fail(e, at(len), std::string("last ") + what + " has no white vertex");
    for (int i = 1; i < len; ++i) {
      if (!hit[static_cast<std::size_t>(i)] && !hit[static_cast<std::size_t>(i) + 1]) {
        return fail(e, at(i), std::string(what) + "s " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                  " have no white vertex");
      }
    }
  };
  lines(col, n, true);
  if (e.pass) lines(row, m, false);
  return e;
}

CertificateReport certify(int m, int n, std::span<const Cell> white, const CertifyOptions& options) {
  CertificateReport report;
  report.notes.push_back("NW windows are NE windows of the mirror image x -> n+1-x on the same boundary");
  report.entries.push_back(check_lemma2(m, n, white));
  report.entries.push_back(check_lemma3(m, n, white));

  for (Boundary side : options.sides) {
    std::optional<Staircase> s;
    try {
      s = build_staircase(m, n, white, side);
    } catch (const InputError& err) {
      for (const char* name : {"prop4", "prop5", "prop6", "prop7"}) {
        if (!options.windows && (name[4] == '6' || name[4] == '7')) break;
        CheckEntry e = pass_entry(name, side);
        fail(e, std::nullopt, err.what());
        report.entries.push_back(std::move(e));
      }
      continue;
    }
    report.entries.push_back(check_prop4(m, n, white, *s));
    report.entries.push_back(check_prop5(*s));
    if (!options.windows) continue;

    CheckEntry p6 = pass_entry("prop6", side);
    CheckEntry p7 = pass_entry("prop7", side);
    for (RayDir dir : {RayDir::NE, RayDir::NW}) {
      Frame frame = Frame::make(m, n, side, dir);
      for (const HalfPoint& a_frame : build_staircase(m, n, white, side, dir).anchors) {
        HalfPoint a_grid = frame.to_grid(a_frame);
        Cell base{static_cast<int>(a_grid.x()), static_cast<int>(a_grid.y())};
        std::int64_t max_halves = 2 * (frame.cols() - a_frame.x());
        for (std::int64_t h = 0; h <= max_halves && (p6.pass || p7.pass); ++h) {
          Window w = compute_window(m, n, white, side, dir, base, Distance::half(h));
          CheckEntry r6 = check_prop6(w);
          CheckEntry r7 = check_prop7(w);
          if (!r6.pass) fail(p6, r6.at, r6.detail);
          if (!r7.pass) fail(p7, r7.at, r7.detail);
        }
      }
    }
    report.entries.push_back(std::move(p6));
    report.entries.push_back(std::move(p7));
  }
  return report;
}

}  // namespace zb
