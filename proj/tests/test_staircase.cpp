#include <algorithm>
#include <set>

#include "doctest.h"
#include "zb/error.hpp"
#include "zb/grid_theory.hpp"
#include "zb/solver.hpp"
#include "zb/staircase.hpp"

using namespace zb;

namespace {

HalfPoint P(double x, double y) {
  return HalfPoint::doubled(static_cast<std::int64_t>(x * 2), static_cast<std::int64_t>(y * 2));
}

// Whites on the staircase of G_{6,11} over bottom whites 3, 8, 10, minus the
// lattice interior peak (9,2).
const std::vector<Cell> kSixByEleven = {{1, 3}, {2, 2}, {3, 1}, {4, 2}, {5, 3}, {6, 3}, {7, 2}, {8, 1}, {10, 1}, {11, 2}};

// G_{3,15} with one hole and one promotion on its bottom staircase.
const std::vector<Cell> kThreeByFifteen = {{1, 2},  {2, 1},  {3, 2},  {4, 3},  {6, 3},  {7, 2}, {8, 1},
                                 {9, 1},  {11, 1}, {12, 2}, {13, 1}, {13, 3}, {15, 1}};

std::vector<std::vector<Cell>> minimum_sets(int m, int n, std::size_t cap = 500) {
  Graph g = grid_graph(m, n);
  int b = static_cast<int>(blocking_number_formula(m, n));
  std::vector<std::vector<Cell>> out;
  for (const VertexSet& s : enumerate_min_blocking_sets(g, b, cap).sets) out.push_back(set_to_cells(*g.grid(), s));
  return out;
}

Cell cell(const HalfPoint& p) { return Cell{static_cast<int>(p.x()), static_cast<int>(p.y())}; }

}  // namespace

TEST_CASE("frames map each side to the bottom row") {
  const int m = 3;
  const int n = 5;
  for (Boundary side : kAllBoundaries) {
    for (RayDir dir : {RayDir::NE, RayDir::NW}) {
      Frame f = Frame::make(m, n, side, dir);
      for (int y = 1; y <= m; ++y) {
        for (int x = 1; x <= n; ++x) {
          HalfPoint p = HalfPoint::lattice(x, y);
          HalfPoint q = f.to_frame(p);
          CHECK(f.to_grid(q) == p);
          CHECK(1 <= q.x());
          CHECK(q.x() <= f.cols());
          CHECK(1 <= q.y());
          CHECK(q.y() <= f.rows());
        }
      }
    }
  }
  CHECK(Frame::make(m, n, Boundary::XY).to_frame(P(4, 1)) == P(4, 1));
  CHECK(Frame::make(m, n, Boundary::ZW).to_frame(P(4, 3)) == P(4, 1));
  CHECK(Frame::make(m, n, Boundary::XZ).to_frame(P(1, 2)) == P(2, 1));
  CHECK(Frame::make(m, n, Boundary::YW).to_frame(P(5, 2)) == P(2, 1));
  CHECK(Frame::make(m, n, Boundary::XY, RayDir::NW).to_frame(P(1, 1)) == P(5, 1));
  CHECK(Frame::make(m, n, Boundary::XZ).rows() == n);
  CHECK(Frame::make(m, n, Boundary::XZ).cols() == m);
}

TEST_CASE("build_staircase peaks on two worked configurations") {
  std::vector<Cell> bottom = {{3, 1}, {8, 1}, {10, 1}};
  Staircase s1 = build_staircase(6, 11, bottom, Boundary::XY);
  std::vector<HalfPoint> peaks1 = {P(1, 3), P(5.5, 3.5), P(9, 2), P(11, 2)};
  CHECK(s1.peaks == peaks1);
  CHECK(s1.anchors.size() == 3);

  Staircase s2 = build_staircase(3, 15, kThreeByFifteen, Boundary::XY);
  REQUIRE(s2.peaks.size() == 7);
  CHECK(s2.peaks[1] == P(5, 4));
  CHECK(s2.peaks[2] == P(8.5, 1.5));
  CHECK(s2.peaks[4] == P(12, 2));
  CHECK(s2.peaks[6] == P(15, 1));

  for (int n : {4, 9, 17}) {
    std::vector<Cell> one = {{1, 1}};
    Staircase s = build_staircase(3, n, one, Boundary::XY);
    std::vector<HalfPoint> expected = {P(1, 1), P(n, n)};
    CHECK(s.peaks == expected);
  }

  std::vector<Cell> none = {{2, 2}};
  CHECK_THROWS_AS(build_staircase(3, 3, none, Boundary::XY), InputError);
  std::vector<Cell> outside = {{4, 1}};
  CHECK_THROWS_AS(build_staircase(3, 3, outside, Boundary::XY), InputError);
}

TEST_CASE("peaks sit on both neighbouring rays") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 7}, {4, 5}, {2, 10}, {5, 3}}) {
    for (const auto& white : minimum_sets(m, n)) {
      for (Boundary side : kAllBoundaries) {
        Staircase s = build_staircase(m, n, white, side);
        for (std::size_t i = 0; i + 1 < s.anchors.size(); ++i) {
          Distance d = Distance::half(s.anchors[i + 1].x() - s.anchors[i].x());
          CHECK(offset(s.anchors[i], Direction::NE, d) == s.peaks[i + 1]);
          CHECK(offset(s.anchors[i + 1], Direction::NW, d) == s.peaks[i + 1]);
        }
      }
    }
  }
}

TEST_CASE("check_prop4") {
  Staircase s = build_staircase(6, 11, kSixByEleven, Boundary::XY);
  CHECK(check_prop4(6, 11, kSixByEleven, s).pass);

  std::vector<Cell> extra = kSixByEleven;
  extra.push_back({4, 1});
  CheckEntry e = check_prop4(6, 11, extra, s);
  CHECK_FALSE(e.pass);
  REQUIRE(e.at);
  CHECK(*e.at == P(4, 1));

  std::vector<Cell> missing = kSixByEleven;
  missing.erase(std::find(missing.begin(), missing.end(), Cell{6, 3}));
  CheckEntry gap = check_prop4(6, 11, missing, build_staircase(6, 11, missing, Boundary::XY));
  CHECK_FALSE(gap.pass);
  REQUIRE(gap.at);
  CHECK(*gap.at == P(6, 3));

  Witness w = build_witness(2, 5);
  for (Boundary side : kAllBoundaries) {
    CHECK(check_prop4(2, 5, w.white, build_staircase(2, 5, w.white, side)).pass);
  }
}

TEST_CASE("check_prop5") {
  CHECK(check_prop5(build_staircase(3, 15, kThreeByFifteen, Boundary::XY)).pass);
  CHECK(check_prop5(build_staircase(6, 11, kSixByEleven, Boundary::XY)).pass);
  std::vector<Cell> lone = {{5, 1}};
  CheckEntry e = check_prop5(build_staircase(2, 9, lone, Boundary::XY));
  CHECK_FALSE(e.pass);
  REQUIRE(e.at);
  CHECK(*e.at == P(1, 5));
}

TEST_CASE("compute_window with a hole and a promotion") {
  Window w = compute_window(3, 15, kThreeByFifteen, Boundary::XY, RayDir::NE, Cell{2, 1}, Distance::whole(11));
  CHECK(w.tip == P(13, 12));
  CHECK(w.issues.empty());
  std::vector<HalfPoint> holes = {P(5, 4)};
  CHECK(w.holes == holes);
  REQUIRE(w.promotions.size() == 1);
  CHECK(w.promotions[0].first == P(10, 2));
  CHECK(w.promotions[0].second == P(13, 3));
  CHECK(w.base_count() == 12);
  CHECK(w.members.size() == 11);
  CHECK(check_prop6(w).pass);
  CHECK(check_prop7(w).pass);

  // With the tip at x = 10 the peak B_3 is promoted straight down to SE(B_3,1).
  Window near = compute_window(3, 15, kThreeByFifteen, Boundary::XY, RayDir::NE, Cell{2, 1}, Distance::whole(8));
  REQUIRE(near.promotions.size() == 1);
  CHECK(near.promotions[0].second == P(11, 1));
  CHECK(check_prop6(near).pass);
}

TEST_CASE("zero-length and short windows") {
  Window w = compute_window(3, 15, kThreeByFifteen, Boundary::XY, RayDir::NE, Cell{2, 1}, Distance::whole(0));
  std::vector<HalfPoint> only_a = {P(2, 1)};
  CHECK(w.members == only_a);
  CHECK(w.holes.empty());
  CHECK(w.base_count() == 1);
  CHECK(check_prop6(w).pass);

  // x_B = x_A + m: the first peak is too close to be a hole.
  Window short_w = compute_window(3, 15, kThreeByFifteen, Boundary::XY, RayDir::NE, Cell{2, 1}, Distance::whole(3));
  CHECK(short_w.holes.empty());
  CHECK(check_prop7(short_w).pass);
}

TEST_CASE("compute_window rejects bad anchors") {
  CHECK_THROWS_AS(compute_window(3, 15, kThreeByFifteen, Boundary::XY, RayDir::NE, Cell{3, 1}, Distance::whole(1)),
                  InputError);
  CHECK_THROWS_AS(compute_window(3, 15, kThreeByFifteen, Boundary::XY, RayDir::NE, Cell{3, 2}, Distance::whole(1)),
                  InputError);
  CHECK_THROWS_AS(compute_window(3, 15, kThreeByFifteen, Boundary::XY, RayDir::NE, Cell{2, 1}, Distance::whole(14)),
                  InputError);
  CHECK_THROWS_AS(compute_window(3, 15, kThreeByFifteen, Boundary::XY, RayDir::NE, Cell{2, 1}, Distance::half(-1)),
                  InputError);
}

TEST_CASE("check_prop7 spacing") {
  Window w;
  w.side = Boundary::XY;
  w.frame = Frame::make(3, 15, Boundary::XY);
  w.base = P(1, 1);
  w.tip = P(14, 14);
  w.holes = {P(5, 2), P(7, 2)};
  CheckEntry e = check_prop7(w);
  CHECK_FALSE(e.pass);
  CHECK(e.detail.find("closer than m+1") != std::string::npos);

  w.holes = {P(5, 2), P(9, 2)};
  CHECK(check_prop7(w).pass);
  w.holes = {P(5, 3)};
  CHECK_FALSE(check_prop7(w).pass);
  w.holes = {P(13, 2)};
  CHECK_FALSE(check_prop7(w).pass);
  w.holes = {P(3, 4)};
  CHECK_FALSE(check_prop7(w).pass);
  w.holes = {P(3, 2)};
  CHECK(check_prop7(w).pass);
  w.tip = P(4, 4);
  CHECK_FALSE(check_prop7(w).pass);
}

TEST_CASE("check_prop6 failures") {
  Window w = compute_window(3, 15, kThreeByFifteen, Boundary::XY, RayDir::NE, Cell{2, 1}, Distance::whole(11));
  Window dropped = w;
  dropped.members.pop_back();
  CHECK_FALSE(check_prop6(dropped).pass);

  Window high = w;
  high.members.back() = P(13, 13);
  CHECK_FALSE(check_prop6(high).pass);

  Window issue = w;
  issue.issues.emplace_back(P(6, 3), "North(C_i) has no white vertex");
  CheckEntry e = check_prop6(issue);
  CHECK_FALSE(e.pass);
  CHECK(*e.at == P(6, 3));
}

TEST_CASE("lemma checks") {
  Witness w = build_witness(2, 4);
  CHECK(check_lemma3(2, 4, w.white).pass);
  CHECK(check_lemma2(2, 4, w.white).pass);

  std::vector<Cell> diag = {{1, 1}, {2, 2}};
  CHECK(check_lemma2(2, 2, diag).pass);

  std::vector<Cell> lone = {{1, 1}};
  CheckEntry e = check_lemma2(3, 3, lone);
  CHECK_FALSE(e.pass);
  CHECK(*e.at == P(1, 1));

  std::vector<Cell> gap = {{1, 1}, {4, 1}, {1, 2}, {4, 2}};
  CheckEntry cols = check_lemma3(2, 4, gap);
  CHECK_FALSE(cols.pass);
  CHECK(*cols.at == P(2, 1));
  std::vector<Cell> no_top = {{1, 1}, {2, 1}, {3, 1}};
  CHECK_FALSE(check_lemma3(3, 3, no_top).pass);
}

TEST_CASE("every check passes on minimum sets, all sides and windows") {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 2; m * n <= 18; ++n) {
      for (const auto& white : minimum_sets(m, n)) {
        CertificateReport r = certify(m, n, white);
        CHECK(r.entries.size() == 18);
        const CheckEntry* f = r.first_failure();
        if (f) FAIL_CHECK(m << "x" << n << " " << f->check << " " << f->detail);
      }
    }
  }
}

TEST_CASE("full-length windows from the leftmost bottom white") {
  for (const auto& white : minimum_sets(3, 7)) {
    std::vector<Cell> bottom;
    for (const Cell& c : white) {
      if (c.y == 1) bottom.push_back(c);
    }
    REQUIRE_FALSE(bottom.empty());
    Cell a = *std::min_element(bottom.begin(), bottom.end());
    Window w = compute_window(3, 7, white, Boundary::XY, RayDir::NE, a, Distance::whole(7 - a.x));
    CHECK(check_prop6(w).pass);
    CHECK(check_prop7(w).pass);
  }
}

TEST_CASE("promotions are injective and land outside the window's own whites") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 7}, {2, 10}, {4, 5}, {3, 6}, {5, 4}}) {
    for (const auto& white : minimum_sets(m, n)) {
      for (Boundary side : kAllBoundaries) {
        for (RayDir dir : {RayDir::NE, RayDir::NW}) {
          Staircase s = build_staircase(m, n, white, side, dir);
          Board board(m, n, white, s.frame);
          for (const HalfPoint& a : s.anchors) {
            Cell base = cell(s.frame.to_grid(a));
            for (std::int64_t h = 0; h <= 2 * (board.cols() - a.x()); ++h) {
              Window w = compute_window(m, n, white, side, dir, base, Distance::half(h));
              std::set<HalfPoint> own;
              for (const HalfPoint& p : s.polyline.lattice_points()) {
                if (a.dx <= p.dx && p.dx <= w.tip.dx && board.white(p)) own.insert(p);
              }
              std::set<HalfPoint> targets;
              for (const auto& [peak, target] : w.promotions) {
                CHECK(board.white(target));
                CHECK_FALSE(own.count(target));
                CHECK(targets.insert(target).second);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("certify reports without throwing on broken sets") {
  std::vector<Cell> centre = {{2, 2}};
  CertificateReport r = certify(3, 3, centre);
  CHECK_FALSE(r.passed());
  CHECK(r.entries.size() == 18);
  int failing = 0;
  for (const CheckEntry& e : r.entries) failing += e.pass ? 0 : 1;
  CHECK(failing >= 17);
  CHECK_FALSE(r.notes.empty());

  CertifyOptions only_xy;
  only_xy.sides = {Boundary::XY};
  only_xy.windows = false;
  CHECK(certify(3, 3, centre, only_xy).entries.size() == 4);
}

TEST_CASE("check_prop4 catches any white inserted strictly below a passing staircase") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 7}, {4, 5}, {3, 5}, {5, 4}, {2, 9}}) {
    for (const auto& white : minimum_sets(m, n)) {
      for (Boundary side : kAllBoundaries) {
        Staircase s = build_staircase(m, n, white, side);
        REQUIRE(check_prop4(m, n, white, s).pass);
        for (int y = 1; y <= m; ++y) {
          for (int x = 1; x <= n; ++x) {
            HalfPoint p = HalfPoint::lattice(x, y);
            if (!is_strictly_below(relation(s.frame.to_frame(p), s.polyline))) continue;
            std::vector<Cell> mutant = white;
            mutant.push_back({x, y});
            CheckEntry e = check_prop4(m, n, mutant, s);
            CHECK_FALSE(e.pass);
            REQUIRE(e.at);
            CHECK(*e.at == p);
          }
        }
      }
    }
  }
}
