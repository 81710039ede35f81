#include "mil/problem.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "mil/report.hpp"

using namespace mil;

TEST_CASE("problem loading and validation") {
  Problem p = load_problem_text(bundled_problem_text("a3"));
  CHECK(p.name == "a3");
  CHECK(p.ring->n() == 3);
  CHECK(p.act().group.order() == 3);
  CHECK(p.hsop_polys.size() == 3);
  CHECK(p.invariant_generators.size() == 4);
  CHECK(p.relations.size() == 1);
  REQUIRE(p.presentation);
  CHECK(p.presentation->n() == 3);
  CHECK(p.window_from == -8);
  CHECK(p.window_to == -3);

  CHECK_THROWS_AS(load_problem_text("not json"), Error);
  CHECK_THROWS_AS(load_problem_text(R"({"variables": ["x"]})"), Error);  // no field
  // hsop validation failure: not invariant under the swap
  CHECK_THROWS_AS(load_problem_text(R"({
    "field": {"char": 3},
    "variables": ["x", "y"],
    "generators": [[["0","1"],["1","0"]]],
    "hsop": ["x", "y"]
  })"),
                  Error);
  // extension generator name collision
  CHECK_THROWS_AS(load_problem_text(R"({
    "field": {"char": 3, "degree": 2},
    "variables": ["a", "y"],
    "generators": [[["1","0"],["0","1"]]]
  })"),
                  Error);
}

TEST_CASE("classification report") {
  Problem p = load_problem_text(bundled_problem_text("braun"));
  Json doc = cmd_classify(p);
  CHECK(doc["group"]["order"] == 12);
  CHECK(doc["group"]["in_sl"] == true);
  CHECK(doc["group"]["has_transvection"] == true);
  CHECK(doc["group"]["transvections"].size() == 2);
  CHECK(doc["group"]["elements"].size() == 12);
}

TEST_CASE("report JSON round trips") {
  Problem p = load_problem_text(bundled_problem_text("s2"));
  for (const Json& doc : {cmd_classify(p), cmd_lc(p, -3, -2), cmd_a_invariant(p, {})}) {
    Json reparsed = Json::parse(doc.dump(2));
    CHECK(reparsed == doc);
    CHECK(reparsed.dump(2) == doc.dump(2));
  }
}

TEST_CASE("reports are deterministic across problem reloads") {
  Problem p1 = load_problem_text(bundled_problem_text("s2"));
  Problem p2 = load_problem_text(bundled_problem_text("s2"));
  CHECK(cmd_lc(p1, -4, -2).dump() == cmd_lc(p2, -4, -2).dump());
  CHECK(cmd_classify(p1).dump() == cmd_classify(p2).dump());
}

TEST_CASE("lc report shape") {
  Problem p = load_problem_text(bundled_problem_text("klein6"));
  Json doc = cmd_lc(p, {}, {});  // window from the problem file
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["k"] == -6);
  CHECK(doc["rows"][0]["dim_v"] == 1);
  CHECK(doc["rows"][0]["rank_h"] == 1);
  CHECK(doc["rows"][1]["k"] == -7);
  CHECK(doc["rows"][1]["dim_v"] == 6);
  CHECK(doc["rows"][1]["rank_h"] == 2);
  CHECK(doc["rows"][1]["rank_fixed"] == 4);
  CHECK(doc["a_invariant"] == -6);
  // the not-split note fires: a = -n in the modular case
  REQUIRE(doc.contains("notes"));
  CHECK(doc["notes"].size() == 1);
}

TEST_CASE("lc report with transvections suppresses the cokernel column") {
  Problem p = load_problem_text(bundled_problem_text("s2@2"));
  Json doc = cmd_lc(p, -2, -2);
  CHECK(doc["has_transvection"] == true);
  CHECK(doc["rows"][0]["rank_h"].is_null());
  REQUIRE(doc.contains("markers"));
  CHECK(doc["markers"][0] == "TransvectionsPresent");
  // the a-invariant still comes from the presentation
  CHECK(doc["a_invariant"] == -3);
  CHECK(doc["a_route"] == "presentation");
}

TEST_CASE("a-invariant command refuses without a route") {
  Json braun = Json::parse(bundled_problem_text("braun"));
  Problem p = load_problem(braun);
  bool refused = false;
  try {
    cmd_a_invariant(p, {});
  } catch (const Error& e) {
    refused = e.code() == Errc::transvections_present;
  }
  CHECK(refused);
}

TEST_CASE("invariants command") {
  Problem p = load_problem_text(bundled_problem_text("klein6"));
  Json doc = cmd_invariants(p, 2);
  CHECK(doc["hilbert"] == Json::array({1, 2, 9}));
  CHECK(doc["generators"].size() == 8);
  CHECK(doc["relations_hold"] == Json::array({true, true}));
}

TEST_CASE("invariant dimensions match the presented Hilbert function up to degree 4") {
  Problem p = load_problem_text(bundled_problem_text("klein6"));
  auto presented = quotient_hilbert(p.presentation->power_basis(0), 0, 4);
  for (int d = 0; d <= 4; ++d) {
    int dim = d == 0 ? 1 : static_cast<int>(invariant_space(p.act(), d).basis.size());
    CHECK(dim == presented[static_cast<size_t>(d)]);
  }
}

TEST_CASE("verify command on bundled problems") {
  for (const char* id : {"s2", "zeta_sl2"}) {
    Problem p = load_problem_text(bundled_problem_text(id));
    Json doc = cmd_verify(p);
    INFO(doc.dump(2));
    CHECK(report_ok(doc));
  }
}

TEST_CASE("unknown example id") {
  CHECK_THROWS_AS(cmd_reproduce("nope"), Error);
}
