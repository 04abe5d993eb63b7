#include "zb_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zb/error.hpp"
#include "zb/forcing.hpp"
#include "zb/grid_theory.hpp"
#include "zb/serialize.hpp"
#include "zb/solver.hpp"
#include "zb/staircase.hpp"
#include "zb_cli/render.hpp"

namespace zb::cli {
namespace {

constexpr std::int64_t kMaxTableRows = 1'000'000;

struct GridDims {
  int m = 0;
  int n = 0;
};

int parse_positive(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
    throw InputError(std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

GridDims parse_grid(const std::string& s) {
  auto x = s.find_first_of("xX");
  if (x == std::string::npos) throw InputError("grid must look like MxN, got '" + s + "'");
  return {parse_positive(std::string_view(s).substr(0, x), "row count"),
          parse_positive(std::string_view(s).substr(x + 1), "column count")};
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = parse_positive(s, "range");
    return {v, v};
  }
  int lo = parse_positive(std::string_view(s).substr(0, dots), "range start");
  int hi = parse_positive(std::string_view(s).substr(dots + 2), "range end");
  if (lo > hi) throw InputError("empty range '" + s + "'");
  return {lo, hi};
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot read '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

std::string cells_text(const std::vector<Cell>& cells) {
  std::string s;
  for (const Cell& c : cells) {
    if (!s.empty()) s.push_back(' ');
    s += to_string(c.point());
  }
  return s;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// Options shared by the subcommands. Only the fields a subcommand registers are read.
struct Options {
  std::string grid;
  std::string graph_file;
  std::string set_file;
  std::string white;
  bool json = false;

  double budget_secs = 0;
  std::uint64_t max_subsets = 0;
  unsigned workers = 1;
  std::size_t enumerate = 0;

  std::string output;
  std::string side = "all";
  bool no_windows = false;
  std::optional<std::uint64_t> order;
  std::string m_range;
  std::string n_range;
  std::optional<int> check_solver;
  std::string svg;
  bool overlay = false;
};

struct Loaded {
  GridDims grid;
  std::vector<Cell> white;
};

// Grid and white set from --grid plus --set or --white. The file's own m, n fill in a
// missing --grid and must agree with a given one.
Loaded load_grid_set(const Options& o, std::istream& in) {
  Loaded l;
  std::optional<GridDims> grid;
  if (!o.grid.empty()) grid = parse_grid(o.grid);
  if (!o.set_file.empty()) {
    WitnessDoc doc = parse_witness_json(read_source(o.set_file, in));
    if (grid && (grid->m != doc.m || grid->n != doc.n)) {
      throw InputError("--set describes a " + std::to_string(doc.m) + "x" + std::to_string(doc.n) +
                       " grid but --grid is " + o.grid);
    }
    grid = GridDims{doc.m, doc.n};
    l.white = std::move(doc.white);
  } else {
    l.white = parse_cell_list(o.white);
  }
  if (!grid) throw InputError("--grid is required");
  l.grid = *grid;
  GridSpec spec{l.grid.m, l.grid.n};
  for (const Cell& c : l.white) {
    if (!spec.contains(c.x, c.y)) throw InputError("cell " + to_string(c.point()) + " is outside the grid");
  }
  std::sort(l.white.begin(), l.white.end());
  if (std::adjacent_find(l.white.begin(), l.white.end()) != l.white.end()) {
    throw InputError("duplicate white cell");
  }
  return l;
}

SearchBudget budget_from(const Options& o) {
  SearchBudget b = SearchBudget::defaults();
  if (o.budget_secs > 0) b.max_seconds = o.budget_secs;
  if (o.max_subsets > 0) b.max_subsets = o.max_subsets;
  b.workers = o.workers;
  return b;
}

int cmd_formula(const Options& o, std::ostream& out) {
  GridDims g = parse_grid(o.grid);
  if (o.json) {
    out << formula_to_json(g.m, g.n) << '\n';
    return kOk;
  }
  FormulaParams p = qr_params(g.m, g.n);
  out << "q=" << p.q << " r=" << p.r << " branch=" << (p.tight_branch ? "tight" : "loose")
      << " B=" << blocking_number_formula(g.m, g.n) << " bound=" << upper_bound_bcc(g.m, g.n) << '\n';
  return kOk;
}

int cmd_solve(const Options& o, std::istream& in, std::ostream& out) {
  SearchBudget budget = budget_from(o);
  std::optional<Graph> g;
  SolveResult r;
  if (!o.grid.empty()) {
    GridDims d = parse_grid(o.grid);
    g = grid_graph(d.m, d.n);
    r = (d.m >= 2 && d.n >= 2) ? min_blocking_grid(d.m, d.n, budget) : min_blocking_number(*g, budget);
  } else {
    g = parse_graph(read_source(o.graph_file, in));
    r = min_blocking_number(*g, budget);
  }
  bool cap_reached = false;
  if (o.enumerate > 0 && r.value) {
    Enumeration e = enumerate_min_blocking_sets(*g, *r.value, o.enumerate, budget);
    r.witnesses = std::move(e.sets);
    r.exhausted = e.exhausted;
    cap_reached = e.cap_reached;
  }
  if (o.json) {
    out << solve_result_to_json(*g, r) << '\n';
  } else {
    out << "value=" << (r.value ? std::to_string(*r.value) : std::string("unknown"))
        << " exhausted=" << yes_no(r.exhausted) << " nodes=" << r.nodes_explored;
    if (o.enumerate > 0) out << " witnesses=" << r.witnesses.size() << " cap_reached=" << yes_no(cap_reached);
    out << '\n';
    for (const VertexSet& w : r.witnesses) {
      if (g->grid()) {
        out << "white " << cells_text(set_to_cells(*g->grid(), w)) << '\n';
      } else {
        out << "white";
        for (VertexId v : w.members()) out << ' ' << v + 1;
        out << '\n';
      }
    }
  }
  if (!r.value || (o.enumerate > 0 && !r.exhausted)) return kLimit;
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  GridDims g = parse_grid(o.grid);
  Witness w = build_witness(g.m, g.n);
  std::string doc = witness_to_json(w.m, w.n, w.white) + "\n";
  if (o.output.empty()) {
    out << doc;
  } else {
    write_file(o.output, doc);
  }
  return kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  Loaded l = load_grid_set(o, in);
  Graph g = grid_graph(l.grid.m, l.grid.n);
  VertexSet white = cells_to_set(*g.grid(), l.white);
  bool blocking = is_blocking_set(g, white);
  bool stalled = is_stalled(g, white.complement());
  std::optional<std::int64_t> formula;
  if (std::min(l.grid.m, l.grid.n) >= 2) formula = blocking_number_formula(l.grid.m, l.grid.n);
  if (o.json) {
    nlohmann::json j;
    j["blocking"] = blocking;
    j["stalled"] = stalled;
    j["size"] = white.count();
    j["formula"] = formula ? nlohmann::json(*formula) : nlohmann::json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << "blocking=" << yes_no(blocking) << " stalled=" << yes_no(stalled) << " size=" << white.count()
        << " formula=" << (formula ? std::to_string(*formula) : std::string("-")) << '\n';
  }
  return blocking ? kOk : kCheckFailed;
}

int cmd_certify(const Options& o, std::istream& in, std::ostream& out) {
  Loaded l = load_grid_set(o, in);
  if (std::min(l.grid.m, l.grid.n) < 2) throw InputError("certify needs at least 2 rows and 2 columns");
  CertifyOptions opts;
  if (o.side != "all") {
    auto b = parse_boundary(o.side);
    if (!b) throw InputError("--side must be xy, zw, xz, yw or all");
    opts.sides = {*b};
  }
  opts.windows = !o.no_windows;
  CertificateReport report = certify(l.grid.m, l.grid.n, l.white, opts);
  if (o.json) {
    out << report_to_json(l.grid.m, l.grid.n, report) << '\n';
  } else {
    for (const CheckEntry& e : report.entries) {
      out << e.check;
      if (e.side) out << ' ' << to_string(*e.side);
      if (e.pass) {
        out << " pass\n";
        continue;
      }
      out << " FAIL";
      if (e.at) out << " at " << to_string(*e.at);
      out << ": " << e.detail << '\n';
    }
    out << "result=" << (report.passed() ? "pass" : "fail") << '\n';
  }
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_trace(const Options& o, std::istream& in, std::ostream& out) {
  Loaded l = load_grid_set(o, in);
  Graph g = grid_graph(l.grid.m, l.grid.n);
  VertexSet black = cells_to_set(*g.grid(), l.white).complement();
  ClosureResult r = o.order ? closure_random_order(g, black, *o.order) : closure(g, black);
  out << trace_to_json(g, r.trace) << '\n';
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  auto [m_lo, m_hi] = parse_range(o.m_range);
  auto [n_lo, n_hi] = parse_range(o.n_range);
  if (static_cast<std::int64_t>(m_hi - m_lo + 1) * (n_hi - n_lo + 1) > kMaxTableRows) {
    throw LimitError("table would exceed " + std::to_string(kMaxTableRows) + " rows");
  }
  SearchBudget budget = budget_from(o);
  bool disagree = false;
  bool incomplete = false;
  nlohmann::json rows = nlohmann::json::array();
  if (!o.json) {
    out << "m\tn\tq\tr\tB\tbound";
    if (o.check_solver) out << "\tsolver";
    out << '\n';
  }
  for (int m = std::max(m_lo, 2); m <= m_hi; ++m) {
    for (int n = std::max(n_lo, m); n <= n_hi; ++n) {
      FormulaParams p = qr_params(m, n);
      std::int64_t value = blocking_number_formula(m, n);
      std::int64_t bound = upper_bound_bcc(m, n);
      std::optional<int> solver;
      bool ran = o.check_solver && static_cast<std::int64_t>(m) * n <= *o.check_solver;
      if (ran) {
        SolveResult r = min_blocking_grid(m, n, budget);
        solver = r.value;
        if (!r.value) incomplete = true;
        if (r.value && *r.value != value) disagree = true;
      }
      if (o.json) {
        nlohmann::json j = {{"m", m}, {"n", n}, {"q", p.q}, {"r", p.r}, {"B", value}, {"bound", bound}};
        if (o.check_solver) j["solver"] = solver ? nlohmann::json(*solver) : nlohmann::json(nullptr);
        rows.push_back(std::move(j));
      } else {
        out << m << '\t' << n << '\t' << p.q << '\t' << p.r << '\t' << value << '\t' << bound;
        if (o.check_solver) out << '\t' << (solver ? std::to_string(*solver) : std::string("-"));
        out << '\n';
      }
    }
  }
  if (o.json) out << rows.dump() << '\n';
  if (disagree) return kCheckFailed;
  return incomplete ? kLimit : kOk;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out) {
  Loaded l = load_grid_set(o, in);
  if (o.overlay && o.svg.empty()) throw InputError("--certify-overlay needs --svg");
  out << render_ascii(l.grid.m, l.grid.n, l.white);
  if (!o.svg.empty()) write_file(o.svg, render_svg(l.grid.m, l.grid.n, l.white, o.overlay));
  return kOk;
}

void add_set_options(CLI::App* sub, Options& o, bool grid_required) {
  auto* grid = sub->add_option("--grid", o.grid, "Grid as MxN (m rows, n columns)");
  if (grid_required) grid->required();
  auto* set = sub->add_option("--set", o.set_file, "Witness JSON file ('-' for stdin)");
  auto* white = sub->add_option("--white", o.white, "Inline white cells, e.g. \"(1,1),(2,2)\"");
  set->excludes(white);
  sub->add_flag("--json", o.json, "JSON output");
  sub->callback([set, white] {
    if (set->count() == 0 && white->count() == 0) throw CLI::RequiredError("--set or --white");
  });
}

void add_budget_options(CLI::App* sub, Options& o) {
  sub->add_option("--budget-secs", o.budget_secs, "Wall-clock limit for the search")->check(CLI::PositiveNumber);
  sub->add_option("--max-subsets", o.max_subsets, "Limit on closure evaluations")->check(CLI::PositiveNumber);
  sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero blocking numbers of graphs and grids", "zb"};
  app.require_subcommand(1);
  Options o;

  auto* formula = app.add_subcommand("formula", "Closed form, (q, r) and the upper bound for a grid");
  formula->add_option("--grid", o.grid, "Grid as MxN")->required();
  formula->add_flag("--json", o.json, "JSON output");

  auto* solve = app.add_subcommand("solve", "Exact zero blocking number by search");
  auto* sg = solve->add_option("--grid", o.grid, "Grid as MxN");
  auto* sf = solve->add_option("--graph", o.graph_file, "Edge-list file ('-' for stdin)");
  sg->excludes(sf);
  solve->add_option("--enumerate", o.enumerate, "List up to CAP minimum blocking sets")->check(CLI::PositiveNumber);
  solve->add_flag("--json", o.json, "JSON output");
  add_budget_options(solve, o);
  solve->callback([sg, sf] {
    if (sg->count() == 0 && sf->count() == 0) throw CLI::RequiredError("--grid or --graph");
  });

  auto* witness = app.add_subcommand("witness", "Verified minimum zero blocking set of a grid");
  witness->add_option("--grid", o.grid, "Grid as MxN")->required();
  witness->add_option("-o,--output", o.output, "Write the witness JSON to a file");
  witness->add_flag("--json", o.json, "JSON output (always on)");

  auto* verify = app.add_subcommand("verify", "Check that a white set blocks and stalls");
  add_set_options(verify, o, false);

  auto* certify_cmd = app.add_subcommand("certify", "Run the staircase certificate checks");
  add_set_options(certify_cmd, o, false);
  certify_cmd->add_option("--side", o.side, "xy, zw, xz, yw or all");
  certify_cmd->add_flag("--no-windows", o.no_windows, "Skip the per-window checks");

  auto* trace = app.add_subcommand("trace", "Force-by-force JSON trace from the complement of a white set");
  add_set_options(trace, o, false);
  trace->add_option("--order", o.order, "Seed for a random forcing order");

  auto* table = app.add_subcommand("table", "TSV of formula values over a range of grids");
  table->add_option("--m-range", o.m_range, "Rows, A..B")->required();
  table->add_option("--n-range", o.n_range, "Columns, C..D")->required();
  table->add_option("--check-solver", o.check_solver, "Also run the solver when m*n <= LIMIT")
      ->check(CLI::Range(1, 64));
  table->add_flag("--json", o.json, "JSON output");
  add_budget_options(table, o);

  auto* render = app.add_subcommand("render", "ASCII picture of a white set");
  add_set_options(render, o, false);
  render->add_option("--svg", o.svg, "Also write an SVG snapshot");
  render->add_flag("--certify-overlay", o.overlay, "Draw the staircases in the SVG");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInvalidInput;
  }

  try {
    if (formula->parsed()) return cmd_formula(o, out);
    if (solve->parsed()) return cmd_solve(o, in, out);
    if (witness->parsed()) return cmd_witness(o, out);
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (certify_cmd->parsed()) return cmd_certify(o, in, out);
    if (trace->parsed()) return cmd_trace(o, in, out);
    if (table->parsed()) return cmd_table(o, out);
    if (render->parsed()) return cmd_render(o, in, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const LimitError& e) {
    err << "limit: " << e.what() << '\n';
    return kLimit;
  } catch (const InternalError& e) {
    err << "internal: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::bad_alloc&) {
    err << "limit: out of memory\n";
    return kLimit;
  }
  return kInvalidInput;
}

}  // namespace zb::cli
