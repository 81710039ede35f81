#pragma once

#include <optional>
#include <vector>

#include "mil/poly.hpp"

namespace mil {

struct GroebnerOptions {
  long pair_budget = 200000;
};

// Reduced Groebner basis: auto-reduced, monic, deterministically ordered by
// leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Poly> generators)
      : ring_(std::move(ring)), gens_(std::move(generators)) {}

  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
};

GroebnerBasis buchberger(const std::vector<Poly>& gens, const GroebnerOptions& opts = {});

// Unique remainder: no term of the result is divisible by any leading term.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

bool ideal_member(const Poly& f, const GroebnerBasis& gb);
bool ideal_member(const Poly& f, const std::vector<Poly>& gens, const GroebnerOptions& opts = {});

// Every variable has a pure power among the leading terms.
bool is_zero_dimensional(const GroebnerBasis& gb);

struct QuotientSlice {
  int degree = 0;
  std::vector<Monomial> monomials;  // descending ring order
};

// Degree-d monomials outside the leading-term ideal (weighted degree).
QuotientSlice standard_monomials(const GroebnerBasis& gb, int degree);

// Hilbert function of the quotient on [from, to].
std::vector<int> quotient_hilbert(const GroebnerBasis& gb, int from, int to);

// All standard monomials of a zero-dimensional quotient.
std::vector<Monomial> all_standard_monomials(const GroebnerBasis& gb);

struct SubalgebraResult {
  bool member = false;
  // Certifying expression in tag variables t1..tm when member.
  std::optional<Poly> expression;
};

// Membership of homogeneous f in the subalgebra generated by homogeneous gens,
// via tag-variable elimination.
SubalgebraResult subalgebra_member(const Poly& f, const std::vector<Poly>& gens,
                                   const GroebnerOptions& opts = {});

}  // namespace mil
