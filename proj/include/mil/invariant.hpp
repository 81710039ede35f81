#pragma once

#include <utility>
#include <vector>

#include "mil/groebner.hpp"
#include "mil/matrix_group.hpp"
#include "mil/poly.hpp"

namespace mil {

// A finite matrix group together with the standard-graded polynomial ring it
// acts on by linear substitution of the variables.
struct Action {
  MatrixGroup group;
  RingPtr ring;

  Action(MatrixGroup g, RingPtr r) : group(std::move(g)), ring(std::move(r)) {
    if (group.dim() != ring->n())
      fail(Errc::dimension_mismatch, "matrix size does not match variable count");
    if (!ring->standard_graded())
      fail(Errc::invalid_argument, "group actions live on standard-graded rings");
  }
};

Poly act(const Action& a, const Mat& g, const Poly& f);
Poly act(const Action& a, int element_index, const Poly& f);

// Orbit sum over the whole group; lands in the invariant ring.
Poly transfer(const Action& a, const Poly& f);

// Relative transfer R^H -> R^G along the given left-coset representatives.
// Inputs are element indices; f must be fixed by every element of H.
Poly transfer_coset(const Action& a, const Poly& f, const std::vector<int>& subgroup,
                    const std::vector<int>& coset_reps);

// Averaging projection onto the invariants; needs |G| invertible in K.
Poly reynolds(const Action& a, const Poly& f);

struct InvariantSlice {
  int degree = 0;
  std::vector<Poly> basis;  // canonical (reduced row echelon) basis of (R_d)^G
};

InvariantSlice invariant_space(const Action& a, int degree);

// All degree-d monomials of the ring, descending order; shared helper.
std::vector<Monomial> monomial_basis(const Ring& ring, int degree);

// Degree-ascending greedy generating set for the invariants up to max_degree.
std::vector<std::pair<Poly, int>> algebra_generators_up_to(const Action& a, int max_degree,
                                                           const GroebnerOptions& opts = {});

// n homogeneous invariant elements generating an ideal with radical the
// irrelevant ideal; throws WrongCount / NotInvariant on malformed input.
bool verify_hsop(const Action& a, const std::vector<Poly>& ys, const GroebnerOptions& opts = {});

// Substitutes gens into a relation written in formal variables and expands.
bool verify_relation(const Poly& relation, const std::vector<Poly>& gens);

// Span of the degree-d slice of the subalgebra generated by gens, as a row
// space over the monomial basis (used for graded span comparisons).
Mat subalgebra_slice(const Action& a, const std::vector<Poly>& gens, int degree);

}  // namespace mil
