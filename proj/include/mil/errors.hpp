#pragma once

#include <stdexcept>
#include <string>

namespace mil {

// Failure classes surfaced through the library API. Each value maps onto a
// process exit-code class: parse/validation (2), refusal (3), resource cap (5).
enum class Errc {
  division_by_zero,
  no_such_root,
  context_mismatch,
  dimension_mismatch,
  zero_polynomial,
  pair_budget_exceeded,
  non_homogeneous_input,
  not_invertible,
  order_cap_exceeded,
  modular_case,
  not_h_invariant,
  not_invariant,
  wrong_count,
  arity_mismatch,
  stabilization_failure,
  power_budget_exceeded,
  transvections_present,
  cm_not_asserted,
  search_floor_reached,
  parse_error,
  unknown_example,
  invalid_argument,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::no_such_root: return "NoSuchRoot";
    case Errc::context_mismatch: return "ContextMismatch";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::pair_budget_exceeded: return "PairBudgetExceeded";
    case Errc::non_homogeneous_input: return "NonHomogeneousInput";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::order_cap_exceeded: return "OrderCapExceeded";
    case Errc::modular_case: return "ModularCase";
    case Errc::not_h_invariant: return "NotHInvariant";
    case Errc::not_invariant: return "NotInvariant";
    case Errc::wrong_count: return "WrongCount";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::stabilization_failure: return "StabilizationFailure";
    case Errc::power_budget_exceeded: return "PowerBudgetExceeded";
    case Errc::transvections_present: return "TransvectionsPresent";
    case Errc::cm_not_asserted: return "CMNotAsserted";
    case Errc::search_floor_reached: return "SearchFloorReached";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_example: return "UnknownExample";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

// Exit-code class used by the command-line front end and the C API.
inline int errc_exit_code(Errc c) {
  switch (c) {
    case Errc::transvections_present:
    case Errc::cm_not_asserted:
    case Errc::modular_case:
      return 3;  // computation refused
    case Errc::pair_budget_exceeded:
    case Errc::order_cap_exceeded:
    case Errc::power_budget_exceeded:
    case Errc::search_floor_reached:
      return 5;  // resource cap
    case Errc::internal:
    case Errc::stabilization_failure:
      return 1;
    default:
      return 2;  // parse / validation
  }
}

}  // namespace mil
