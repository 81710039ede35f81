#pragma once

#include <string_view>

#include "mil/poly.hpp"

namespace mil {

// Parses an ASCII polynomial expression in the ring's variable names plus the
// extension generator "a": operators + - * ^, parentheses, integer literals.
// Multiplication is always explicit.
Poly parse_poly(const RingPtr& ring, std::string_view text);

// Parses a scalar expression ("2", "a+1", "a^2") over the given field.
Scalar parse_scalar(const FieldPtr& field, std::string_view text);

}  // namespace mil
