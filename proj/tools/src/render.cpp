#include "zb_cli/render.hpp"

#include <set>
#include <sstream>

#include "zb/error.hpp"
#include "zb/staircase.hpp"

namespace zb::cli {
namespace {

constexpr double kCell = 40.0;
constexpr double kMargin = 30.0;

struct Canvas {
  int m;
  int n;
  double px(double x) const { return kMargin + (x - 1.0) * kCell; }
  double py(double y) const { return kMargin + (m - y) * kCell; }
};

const char* side_color(Boundary b) {
  switch (b) {
    case Boundary::XY: return "#c0392b";
    case Boundary::ZW: return "#2471a3";
    case Boundary::XZ: return "#229954";
    case Boundary::YW: return "#b9770e";
  }
  return "black";
}

}  // namespace

std::string render_ascii(int m, int n, std::span<const Cell> white) {
  std::set<Cell> ws(white.begin(), white.end());
  std::string out;
  out.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n + 1));
  for (int y = m; y >= 1; --y) {
    for (int x = 1; x <= n; ++x) out.push_back(ws.count(Cell{x, y}) ? 'W' : '.');
    out.push_back('\n');
  }
  return out;
}

std::string render_svg(int m, int n, std::span<const Cell> white, bool overlay) {
  Canvas c{m, n};
  std::set<Cell> ws(white.begin(), white.end());
  double width = 2 * kMargin + (n - 1) * kCell;
  double height = 2 * kMargin + (m - 1) * kCell;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<g stroke=\"#bbbbbb\" stroke-width=\"3\">\n";
  for (int x = 1; x <= n; ++x) {
    s << "<line x1=\"" << c.px(x) << "\" y1=\"" << c.py(1) << "\" x2=\"" << c.px(x) << "\" y2=\"" << c.py(m)
      << "\"/>\n";
  }
  for (int y = 1; y <= m; ++y) {
    s << "<line x1=\"" << c.px(1) << "\" y1=\"" << c.py(y) << "\" x2=\"" << c.px(n) << "\" y2=\"" << c.py(y)
      << "\"/>\n";
  }
  s << "</g>\n";

  if (overlay) {
    for (Boundary side : kAllBoundaries) {
      Staircase st;
      try {
        st = build_staircase(m, n, white, side);
      } catch (const InputError&) {
        continue;
      }
      s << "<polyline fill=\"none\" stroke=\"" << side_color(side) << "\" stroke-width=\"3\" points=\"";
      bool first = true;
      for (const HalfPoint& p : st.polyline.vertices()) {
        HalfPoint g = st.frame.to_grid(p);
        if (!first) s << ' ';
        first = false;
        s << c.px(static_cast<double>(g.dx) / 2.0) << ',' << c.py(static_cast<double>(g.dy) / 2.0);
      }
      s << "\"><title>" << to_string(side) << "</title></polyline>\n";
    }
  }

  for (int y = 1; y <= m; ++y) {
    for (int x = 1; x <= n; ++x) {
      bool w = ws.count(Cell{x, y}) > 0;
      s << "<circle cx=\"" << c.px(x) << "\" cy=\"" << c.py(y) << "\" r=\"7\" stroke=\"black\" stroke-width=\"2\" fill=\""
        << (w ? "white" : "black") << "\"/>\n";
    }
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace zb::cli
