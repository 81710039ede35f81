#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "mil/local_cohomology.hpp"

namespace mil {

using Json = nlohmann::ordered_json;

// A parsed and validated problem description: the field, the acting group,
// and the optional hsop / generator / presentation blocks.
struct Problem {
  std::string name;
  FieldPtr field;
  RingPtr ring;
  std::optional<Action> action;
  GroebnerOptions gopts;

  std::vector<Poly> hsop_polys;                       // empty when absent
  std::vector<Poly> invariant_generators;             // empty when absent
  std::vector<Poly> relations;                        // in formal variables, over invariant_generators
  std::shared_ptr<PresentedAlgebra> presentation;

  std::optional<int> window_from, window_to;          // lc degree window
  std::optional<int> max_degree;                      // generator scan bound
  std::optional<int> a_floor;

  const Action& act() const {
    if (!action) fail(Errc::invalid_argument, "problem has no group action");
    return *action;
  }
  // Lazily built verified hsop.
  const Hsop& hsop() const;

  // Applies to subsequent hsop/strand/generator computations.
  void set_pair_budget(long budget) {
    gopts.pair_budget = budget;
    hsop_.reset();
  }

 private:
  mutable std::shared_ptr<Hsop> hsop_;
};

Problem load_problem(const Json& doc);
Problem load_problem_text(const std::string& text);
Problem load_problem_file(const std::string& path);

}  // namespace mil
