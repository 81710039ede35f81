#pragma once

#include "mil/problem.hpp"

namespace mil {

Json cmd_classify(const Problem& p);
Json cmd_invariants(const Problem& p, std::optional<int> max_degree = {});
Json cmd_lc(const Problem& p, std::optional<int> k_from = {}, std::optional<int> k_to = {});
Json cmd_a_invariant(const Problem& p, std::optional<int> search_floor = {});
// Property cross-checks applicable to the given problem.
Json cmd_verify(const Problem& p);
// Runs a bundled example and compares against its embedded expected values.
Json cmd_reproduce(const std::string& example_id);

std::vector<std::string> reproduce_ids();
const std::string& bundled_problem_text(const std::string& id);

// All checks in a verify/reproduce report passed.
bool report_ok(const Json& report);

}  // namespace mil
