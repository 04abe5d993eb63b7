#pragma once

// JSON documents for traces, solver results, witnesses and certificate reports.
// Vertex ids are 1-based; grid vertices are written as [x, y].

#include <string>
#include <string_view>
#include <vector>

#include "zb/forcing.hpp"
#include "zb/graph.hpp"
#include "zb/grid_theory.hpp"
#include "zb/solver.hpp"
#include "zb/staircase.hpp"

namespace zb {

struct WitnessDoc {
  int m = 0;
  int n = 0;
  std::vector<Cell> white;
};

std::string trace_to_json(const Graph& g, const ForceTrace& trace);
std::string solve_result_to_json(const Graph& g, const SolveResult& result);
std::string witness_to_json(int m, int n, std::vector<Cell> white);
std::string report_to_json(int m, int n, const CertificateReport& report);
std::string formula_to_json(std::int64_t m, std::int64_t n);

// Throws InputError on malformed documents or coordinates outside the stated grid.
WitnessDoc parse_witness_json(std::string_view text);

// "(1,1),(2,2)" -> cells; whitespace is ignored. Throws InputError.
std::vector<Cell> parse_cell_list(std::string_view text);

}  // namespace zb
