#include "zb/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "json.hpp"
#include "zb/error.hpp"

namespace zb {
namespace {

using nlohmann::json;

json vertex_json(const Graph& g, VertexId v) {
  if (g.grid()) {
    Cell c = cell_of(*g.grid(), v);
    return json::array({c.x, c.y});
  }
  return json(v + 1);
}

json point_json(const HalfPoint& p) {
  if (p.is_lattice()) return json::array({p.x(), p.y()});
  return json::array({static_cast<double>(p.dx) / 2.0, static_cast<double>(p.dy) / 2.0});
}

json set_json(const Graph& g, const VertexSet& s) {
  json out = json::array();
  if (g.grid()) {
    for (const Cell& c : set_to_cells(*g.grid(), s)) out.push_back(json::array({c.x, c.y}));
  } else {
    for (VertexId v : s.members()) out.push_back(v + 1);
  }
  return out;
}

int read_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string("witness JSON: ") + what + " must be an integer");
  auto v = j.get<std::int64_t>();
  if (v < 1 || v > 1'000'000) throw InputError(std::string("witness JSON: ") + what + " out of range");
  return static_cast<int>(v);
}

}  // namespace

std::string trace_to_json(const Graph& g, const ForceTrace& trace) {
  json out = json::array();
  for (const Force& f : trace) out.push_back(json::array({vertex_json(g, f.forcer), vertex_json(g, f.forced)}));
  return out.dump();
}

std::string solve_result_to_json(const Graph& g, const SolveResult& result) {
  json out;
  out["value"] = result.value ? json(*result.value) : json(nullptr);
  out["witnesses"] = json::array();
  for (const VertexSet& w : result.witnesses) out["witnesses"].push_back(set_json(g, w));
  out["exhausted"] = result.exhausted;
  out["nodes"] = result.nodes_explored;
  return out.dump();
}

std::string witness_to_json(int m, int n, std::vector<Cell> white) {
  std::sort(white.begin(), white.end());
  json out;
  out["m"] = m;
  out["n"] = n;
  out["white"] = json::array();
  for (const Cell& c : white) out["white"].push_back(json::array({c.x, c.y}));
  return out.dump();
}

std::string report_to_json(int m, int n, const CertificateReport& report) {
  json out;
  out["m"] = m;
  out["n"] = n;
  out["passed"] = report.passed();
  out["checks"] = json::array();
  for (const CheckEntry& e : report.entries) {
    json j;
    j["check"] = e.check;
    j["side"] = e.side ? json(to_string(*e.side)) : json(nullptr);
    j["pass"] = e.pass;
    j["at"] = e.at ? point_json(*e.at) : json(nullptr);
    if (!e.detail.empty()) j["detail"] = e.detail;
    out["checks"].push_back(std::move(j));
  }
  out["notes"] = report.notes;
  return out.dump();
}

std::string formula_to_json(std::int64_t m, std::int64_t n) {
  FormulaParams p = qr_params(m, n);
  json out;
  out["m"] = m;
  out["n"] = n;
  out["q"] = p.q;
  out["r"] = p.r;
  out["branch"] = p.tight_branch ? "tight" : "loose";
  out["B"] = blocking_number_formula(m, n);
  out["bound"] = upper_bound_bcc(m, n);
  return out.dump();
}

WitnessDoc parse_witness_json(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw InputError("witness JSON: not a JSON object");
  if (!doc.contains("m") || !doc.contains("n") || !doc.contains("white")) {
    throw InputError("witness JSON: expected keys m, n, white");
  }
  WitnessDoc w;
  w.m = read_int(doc["m"], "m");
  w.n = read_int(doc["n"], "n");
  if (!doc["white"].is_array()) throw InputError("witness JSON: white must be an array");
  for (const json& c : doc["white"]) {
    if (!c.is_array() || c.size() != 2) throw InputError("witness JSON: each white entry must be [x, y]");
    Cell cell{read_int(c[0], "x"), read_int(c[1], "y")};
    if (cell.x > w.n || cell.y > w.m) {
      throw InputError("witness JSON: " + to_string(cell.point()) + " lies outside the grid");
    }
    w.white.push_back(cell);
  }
  std::sort(w.white.begin(), w.white.end());
  if (std::adjacent_find(w.white.begin(), w.white.end()) != w.white.end()) {
    throw InputError("witness JSON: duplicate white cell");
  }
  return w;
}

std::vector<Cell> parse_cell_list(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  std::vector<Cell> out;
  std::size_t i = 0;
  auto number = [&](char stop) {
    std::size_t end = s.find(stop, i);
    if (end == std::string::npos) throw InputError("cell list: expected '" + std::string(1, stop) + "'");
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + end, v);
    if (ec != std::errc() || ptr != s.data() + end) throw InputError("cell list: bad number near '" + s.substr(i) + "'");
    i = end + 1;
    return v;
  };
  while (i < s.size()) {
    if (s[i] != '(') throw InputError("cell list: expected '(' near '" + s.substr(i) + "'");
    ++i;
    int x = number(',');
    int y = number(')');
    out.push_back(Cell{x, y});
    if (i < s.size()) {
      if (s[i] != ',') throw InputError("cell list: expected ',' between cells");
      ++i;
      if (i == s.size()) throw InputError("cell list: trailing ','");
    }
  }
  return out;
}

}  // namespace zb
