#include "zb/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "zb/error.hpp"

namespace zb {
namespace {

void check_limit(std::size_t vertex_count, std::size_t vertex_limit) {
  if (vertex_count > vertex_limit) {
    throw LimitError("graph has " + std::to_string(vertex_count) + " vertices, limit is " +
                     std::to_string(vertex_limit));
  }
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line_no) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges, std::size_t vertex_limit) {
  check_limit(vertex_count, vertex_limit);
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u + 1));
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (auto [u, v] : norm) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < vertex_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.neighbors_.resize(norm.size() * 2);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : norm) {
    g.neighbors_[fill[u]++] = v;
    g.neighbors_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < vertex_count; ++i) {
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  }
  if (vertex_count <= 64) {
    g.masks_.assign(vertex_count, 0);
    for (auto [u, v] : norm) {
      g.masks_[u] |= std::uint64_t{1} << v;
      g.masks_[v] |= std::uint64_t{1} << u;
    }
  }
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t Graph::full_mask() const {
  std::size_t n = vertex_count();
  if (n > 64) throw LimitError("graph is too large for mask operations");
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph grid_graph(int m, int n, std::size_t vertex_limit) {
  if (m < 1 || n < 1) throw InputError("grid dimensions must be at least 1");
  std::size_t count = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  check_limit(count, vertex_limit);
  GridSpec spec{m, n};
  std::vector<Edge> edges;
  edges.reserve(2 * count);
  for (int y = 1; y <= m; ++y) {
    for (int x = 1; x <= n; ++x) {
      if (x < n) edges.emplace_back(spec.index(x, y), spec.index(x + 1, y));
      if (y < m) edges.emplace_back(spec.index(x, y), spec.index(x, y + 1));
    }
  }
  Graph g = Graph::from_edges(count, edges, vertex_limit);
  g.grid_ = spec;
  return g;
}

Graph parse_graph(std::string_view text, std::size_t vertex_limit) {
  std::size_t line_no = 0;
  std::optional<std::size_t> vertex_count;
  std::size_t declared_edges = 0;
  std::vector<Edge> edges;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (vertex_count) throw InputError("line " + std::to_string(line_no) + ": duplicate 'p' header");
      if (tok.size() != 3) throw InputError("line " + std::to_string(line_no) + ": expected 'p <vertices> <edges>'");
      vertex_count = parse_count(tok[1], line_no);
      declared_edges = parse_count(tok[2], line_no);
      check_limit(*vertex_count, vertex_limit);
    } else if (tok[0] == "e") {
      if (!vertex_count) throw InputError("line " + std::to_string(line_no) + ": edge before 'p' header");
      if (tok.size() != 3) throw InputError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      std::size_t u = parse_count(tok[1], line_no);
      std::size_t v = parse_count(tok[2], line_no);
      if (u < 1 || v < 1 || u > *vertex_count || v > *vertex_count) {
        throw InputError("line " + std::to_string(line_no) + ": vertex id out of range");
      }
      if (u == v) throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    } else {
      throw InputError("line " + std::to_string(line_no) + ": unrecognised line '" + std::string(line) + "'");
    }
  }
  if (!vertex_count) throw InputError("missing 'p <vertices> <edges>' header");
  if (edges.size() != declared_edges) {
    throw InputError("header declares " + std::to_string(declared_edges) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph::from_edges(*vertex_count, edges, vertex_limit);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p " << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

HalfPoint coords(const Graph& g, VertexId v) {
  if (!g.grid()) throw InputError("graph has no grid coordinates");
  if (v >= g.vertex_count()) throw InputError("vertex id out of range");
  return cell_of(*g.grid(), v).point();
}

VertexId vertex_at(const Graph& g, const HalfPoint& p) {
  if (!g.grid()) throw InputError("graph has no grid coordinates");
  if (!p.is_lattice() || !g.grid()->contains(p.x(), p.y())) {
    throw InputError("point " + to_string(p) + " is not a vertex of the grid");
  }
  return g.grid()->index(p.x(), p.y());
}

Cell cell_of(const GridSpec& grid, VertexId v) { return Cell{grid.x_of(v), grid.y_of(v)}; }

VertexSet cells_to_set(const GridSpec& grid, std::span<const Cell> cells) {
  VertexSet s(static_cast<std::size_t>(grid.m) * static_cast<std::size_t>(grid.n));
  for (const Cell& c : cells) {
    if (!grid.contains(c.x, c.y)) throw InputError("point " + to_string(c.point()) + " is outside the grid");
    s.insert(grid.index(c.x, c.y));
  }
  return s;
}

std::vector<Cell> set_to_cells(const GridSpec& grid, const VertexSet& set) {
  std::vector<Cell> out;
  for (VertexId v : set.members()) out.push_back(cell_of(grid, v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zb
