// Exercises the shared library through the C header only.
#include "mil.h"

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "json.hpp"

using Json = nlohmann::ordered_json;

static int failures = 0;

#define CHECK(cond)                                                       \
  do {                                                                    \
    if (!(cond)) {                                                        \
      std::printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);         \
      ++failures;                                                         \
    }                                                                     \
  } while (0)

static Json take(char* text) {
  CHECK(text != nullptr);
  Json doc = Json::parse(text);
  mil_string_free(text);
  return doc;
}

int main() {
  CHECK(mil_api_version() == MIL_API_VERSION);
  CHECK(std::strlen(mil_version()) > 0);
  CHECK(std::string(mil_bundled_ids()).find("klein6") != std::string::npos);

  // load a bundled problem through the C surface and classify it
  char* text = nullptr;
  CHECK(mil_bundled_problem_json("s2", &text) == MIL_OK);
  std::string s2_json(text);
  mil_string_free(text);

  mil_problem* p = nullptr;
  CHECK(mil_problem_from_json(s2_json.c_str(), &p) == MIL_OK);
  CHECK(p != nullptr);

  text = nullptr;
  CHECK(mil_classify(p, &text) == MIL_OK);
  Json classify = take(text);
  CHECK(classify["group"]["order"] == 2);
  CHECK(classify["group"]["has_pseudoreflection"] == true);

  text = nullptr;
  CHECK(mil_local_cohomology(p, -3, -2, 0, &text) == MIL_OK);
  Json lc = take(text);
  CHECK(lc["rows"].size() == 2);
  CHECK(lc["rows"][1]["k"] == -3);
  CHECK(lc["a_invariant"] == -3);

  text = nullptr;
  CHECK(mil_a_invariant(p, nullptr, &text) == MIL_OK);
  Json ainv = take(text);
  CHECK(ainv["a_invariant"] == -3);
  CHECK(ainv["route"] == "cokernel");

  text = nullptr;
  CHECK(mil_invariants(p, 2, &text) == MIL_OK);
  Json inv = take(text);
  CHECK(inv["hilbert"] == Json::array({1, 1, 2}));

  text = nullptr;
  CHECK(mil_verify(p, &text) == MIL_OK);
  Json verify = take(text);
  CHECK(verify["failed"] == 0);

  CHECK(mil_problem_set_pair_budget(p, 100000) == MIL_OK);
  CHECK(mil_problem_set_pair_budget(p, 0) == MIL_ERROR_PARSE);
  mil_problem_free(p);

  // parse errors surface through the status and the thread-local message
  p = nullptr;
  CHECK(mil_problem_from_json("{ not json", &p) == MIL_ERROR_PARSE);
  CHECK(p == nullptr);
  CHECK(std::strlen(mil_last_error()) > 0);

  // refusal: a-invariant of a transvection group without a presentation
  CHECK(mil_bundled_problem_json("braun", &text) == MIL_OK);
  std::string braun_json(text);
  mil_string_free(text);
  CHECK(mil_problem_from_json(braun_json.c_str(), &p) == MIL_OK);
  text = nullptr;
  CHECK(mil_a_invariant(p, nullptr, &text) == MIL_ERROR_REFUSED);
  mil_problem_free(p);

  CHECK(mil_reproduce("unknown-id", &text) == MIL_ERROR_PARSE);

  // a fast bundled example end to end
  text = nullptr;
  CHECK(mil_reproduce("s2", &text) == MIL_OK);
  Json rep = take(text);
  CHECK(rep["status"] == "PASS");
  CHECK(rep["failed"] == 0);

  if (failures == 0) std::printf("capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
