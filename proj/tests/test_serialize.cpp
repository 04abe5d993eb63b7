#include "doctest.h"
#include "json.hpp"
#include "zb/error.hpp"
#include "zb/serialize.hpp"

using namespace zb;
using nlohmann::json;

TEST_CASE("formula document") {
  json j = json::parse(formula_to_json(6, 11));
  CHECK(j["q"] == 1);
  CHECK(j["r"] == 2);
  CHECK(j["branch"] == "tight");
  CHECK(j["B"] == 11);
  CHECK(j["bound"] == 11);
  CHECK(json::parse(formula_to_json(3, 4))["branch"] == "loose");
}

TEST_CASE("witness documents round trip") {
  Witness w = build_witness(6, 11);
  std::string text = witness_to_json(6, 11, w.white);
  WitnessDoc back = parse_witness_json(text);
  CHECK(back.m == 6);
  CHECK(back.n == 11);
  CHECK(back.white == w.white);

  std::vector<Cell> unsorted = {{2, 2}, {1, 1}};
  json j = json::parse(witness_to_json(2, 2, unsorted));
  CHECK(j["white"] == json::parse("[[1,1],[2,2]]"));
  CHECK(witness_to_json(2, 2, unsorted) == witness_to_json(2, 2, {{1, 1}, {2, 2}}));
}

TEST_CASE("parse_witness_json rejects bad documents") {
  CHECK_THROWS_AS(parse_witness_json("not json"), InputError);
  CHECK_THROWS_AS(parse_witness_json("[1,2]"), InputError);
  CHECK_THROWS_AS(parse_witness_json(R"({"m":2,"n":2})"), InputError);
  CHECK_THROWS_AS(parse_witness_json(R"({"m":2,"n":2,"white":[[3,1]]})"), InputError);
  CHECK_THROWS_AS(parse_witness_json(R"({"m":2,"n":2,"white":[[1,3]]})"), InputError);
  CHECK_THROWS_AS(parse_witness_json(R"({"m":2,"n":2,"white":[[0,1]]})"), InputError);
  CHECK_THROWS_AS(parse_witness_json(R"({"m":2,"n":2,"white":[[1,1],[1,1]]})"), InputError);
  CHECK_THROWS_AS(parse_witness_json(R"({"m":2,"n":2,"white":[[1]]})"), InputError);
  CHECK_THROWS_AS(parse_witness_json(R"({"m":2.5,"n":2,"white":[]})"), InputError);
  CHECK_THROWS_AS(parse_witness_json(R"({"m":2,"n":2,"white":{}})"), InputError);
  WitnessDoc empty = parse_witness_json(R"({"m":2,"n":3,"white":[]})");
  CHECK(empty.white.empty());
}

TEST_CASE("parse_cell_list") {
  std::vector<Cell> expected = {{1, 1}, {2, 2}, {10, 3}};
  CHECK(parse_cell_list("(1,1),(2,2),(10,3)") == expected);
  CHECK(parse_cell_list(" ( 1 , 1 ) , (2,2),(10, 3) ") == expected);
  CHECK(parse_cell_list("").empty());
  CHECK_THROWS_AS(parse_cell_list("(1,1),"), InputError);
  CHECK_THROWS_AS(parse_cell_list("(1,1)(2,2)"), InputError);
  CHECK_THROWS_AS(parse_cell_list("(1;1)"), InputError);
  CHECK_THROWS_AS(parse_cell_list("(a,1)"), InputError);
  CHECK_THROWS_AS(parse_cell_list("1,1"), InputError);
}

TEST_CASE("trace and solver documents") {
  Graph g = grid_graph(2, 2);
  ClosureResult r = closure(g, VertexSet::from_members(4, {0, 1}));
  json t = json::parse(trace_to_json(g, r.trace));
  REQUIRE(t.size() == 2);
  CHECK(t[0] == json::parse("[[1,1],[1,2]]"));

  Graph p3 = parse_graph("p 3 2\ne 1 2\ne 2 3\n");
  json tp = json::parse(trace_to_json(p3, closure(p3, VertexSet::from_members(3, {0})).trace));
  CHECK(tp == json::parse("[[1,2],[2,3]]"));

  SearchBudget budget;
  budget.witness_cap = 4;
  json s = json::parse(solve_result_to_json(g, min_blocking_number(g, budget)));
  CHECK(s["value"] == 2);
  CHECK(s["exhausted"] == true);
  CHECK(s["witnesses"] == json::parse("[[[1,1],[2,2]],[[1,2],[2,1]]]"));

  SolveResult missing;
  CHECK(json::parse(solve_result_to_json(g, missing))["value"].is_null());
}

TEST_CASE("report document") {
  std::vector<Cell> centre = {{2, 2}};
  json bad = json::parse(report_to_json(3, 3, certify(3, 3, centre)));
  CHECK(bad["passed"] == false);
  CHECK(bad["checks"].size() == 18);
  CHECK(bad["checks"][0]["check"] == "lemma2");
  CHECK(bad["checks"][0]["side"].is_null());
  CHECK(bad["checks"][2]["side"] == "xy");
  CHECK(bad["checks"][2].contains("detail"));

  Witness w = build_witness(3, 7);
  json good = json::parse(report_to_json(3, 7, certify(3, 7, w.white)));
  CHECK(good["passed"] == true);
  for (const json& c : good["checks"]) {
    CHECK(c["pass"] == true);
    CHECK(c["at"].is_null());
  }
  CHECK(good["notes"].is_array());
}
