#include "mil/invariant.hpp"

#include <algorithm>
#include <set>

namespace mil {

Poly act(const Action& a, const Mat& g, const Poly& f) {
  if (!f.ring().compatible(*a.ring)) fail(Errc::context_mismatch, "polynomial from a different ring");
  return f.substitute_linear(g);
}

Poly act(const Action& a, int element_index, const Poly& f) {
  return act(a, a.group.element(element_index), f);
}

Poly transfer(const Action& a, const Poly& f) {
  Poly out(a.ring);
  for (const Mat& g : a.group.elements()) out = out + act(a, g, f);
  return out;
}

Poly transfer_coset(const Action& a, const Poly& f, const std::vector<int>& subgroup,
                    const std::vector<int>& coset_reps) {
  const long order = a.group.order();
  std::set<int> sub(subgroup.begin(), subgroup.end());
  if (sub.empty() || !sub.count(0))
    fail(Errc::invalid_argument, "subgroup must contain the identity (element 0)");
  if (order % static_cast<long>(sub.size()) != 0)
    fail(Errc::invalid_argument, "subgroup size does not divide the group order");
  for (int h : subgroup)
    if (!(act(a, h, f) == f)) fail(Errc::not_h_invariant, "input is not fixed by the subgroup");

  // the translates rep*H must partition the group
  if (coset_reps.size() * sub.size() != static_cast<size_t>(order))
    fail(Errc::invalid_argument, "wrong number of coset representatives");
  std::set<int> covered;
  for (int rep : coset_reps) {
    const Mat& r = a.group.element(rep);
    for (int h : sub) {
      auto idx = a.group.find(r * a.group.element(h));
      if (!idx) fail(Errc::internal, "group not closed");
      covered.insert(*idx);
    }
  }
  if (covered.size() != static_cast<size_t>(order))
    fail(Errc::invalid_argument, "representatives do not cover all cosets");

  Poly out(a.ring);
  for (int rep : coset_reps) out = out + act(a, rep, f);
  return out;
}

Poly reynolds(const Action& a, const Poly& f) {
  const Field& k = a.ring->field();
  Scalar order = k.from_int(a.group.order());
  if (k.is_zero(order))
    fail(Errc::modular_case, "the characteristic divides the group order; no averaging operator");
  return transfer(a, f).scaled(k.inv(order));
}

std::vector<Monomial> monomial_basis(const Ring& ring, int degree) {
  std::vector<Monomial> out;
  Monomial cur;
  // standard grading: plain compositions of `degree` into n parts
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == ring.n()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur.e[var] = static_cast<uint16_t>(e);
      self(self, var + 1, remaining - e);
    }
    cur.e[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& x, const Monomial& y) { return ring.term_before(x, y); });
  return out;
}

InvariantSlice invariant_space(const Action& a, int degree) {
  InvariantSlice slice;
  slice.degree = degree;
  const Ring& ring = *a.ring;
  const Field& k = ring.field();
  auto basis = monomial_basis(ring, degree);
  const int dim = static_cast<int>(basis.size());
  if (dim == 0) return slice;

  std::map<Monomial, int, Poly::TermCmp> index((Poly::TermCmp{a.ring}));
  for (int j = 0; j < dim; ++j) index.emplace(basis[j], j);

  const auto& gens = a.group.generators();
  Mat stacked(ring.field_ptr(), dim * static_cast<int>(gens.size()), dim);
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    for (int j = 0; j < dim; ++j) {
      Poly image = act(a, gens[gi], Poly::term(a.ring, basis[j], k.one()));
      // column j of (act(g) - id) in rows [gi*dim, (gi+1)*dim)
      for (const auto& [m, c] : image.terms()) stacked.at(static_cast<int>(gi) * dim + index.at(m), j) = c;
      int jj = static_cast<int>(gi) * dim + j;
      stacked.at(jj, j) = k.sub(stacked.at(jj, j), k.one());
    }
  }

  for (const auto& vec : kernel_basis(stacked)) {
    Poly f(a.ring);
    for (int j = 0; j < dim; ++j) f.add_term(basis[j], vec[j]);
    slice.basis.push_back(std::move(f));
  }
  // normalize: leading coefficient one, deterministic order by leading monomial
  for (auto& f : slice.basis) f = f.scaled(k.inv(f.leading_coeff()));
  std::sort(slice.basis.begin(), slice.basis.end(), [&](const Poly& x, const Poly& y) {
    return ring.term_before(x.leading_monomial(), y.leading_monomial());
  });
  return slice;
}

std::vector<std::pair<Poly, int>> algebra_generators_up_to(const Action& a, int max_degree,
                                                           const GroebnerOptions& opts) {
  if (max_degree < 1) fail(Errc::invalid_argument, "max degree must be at least 1");
  std::vector<std::pair<Poly, int>> out;
  std::vector<Poly> gens;
  for (int d = 1; d <= max_degree; ++d) {
    for (const Poly& f : invariant_space(a, d).basis) {
      if (subalgebra_member(f, gens, opts).member) continue;
      gens.push_back(f);
      out.emplace_back(f, d);
    }
  }
  return out;
}

bool verify_hsop(const Action& a, const std::vector<Poly>& ys, const GroebnerOptions& opts) {
  if (static_cast<int>(ys.size()) != a.ring->n())
    fail(Errc::wrong_count, "a homogeneous system of parameters needs exactly n elements");
  for (const Poly& y : ys) {
    if (y.is_zero() || !y.homogeneous())
      fail(Errc::non_homogeneous_input, "system elements must be nonzero and homogeneous");
    for (const Mat& g : a.group.generators())
      if (!(act(a, g, y) == y)) fail(Errc::not_invariant, "system element is not invariant");
  }
  return is_zero_dimensional(buchberger(ys, opts));
}

bool verify_relation(const Poly& relation, const std::vector<Poly>& gens) {
  if (relation.ring().n() != static_cast<int>(gens.size()))
    fail(Errc::arity_mismatch, "relation arity does not match generator count");
  if (relation.is_zero()) return true;
  return relation.evaluate_at(gens).is_zero();
}

Mat subalgebra_slice(const Action& a, const std::vector<Poly>& gens, int degree) {
  const Ring& ring = *a.ring;
  const Field& k = ring.field();
  for (const Poly& g : gens)
    if (g.is_zero() || !g.homogeneous() || g.degree() < 1)
      fail(Errc::non_homogeneous_input, "slice generators must be homogeneous of positive degree");
  auto basis = monomial_basis(ring, degree);
  std::map<Monomial, int, Poly::TermCmp> index((Poly::TermCmp{a.ring}));
  for (size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], static_cast<int>(j));

  // all products of generators of total degree `degree`
  std::vector<Poly> products;
  Poly one = Poly::constant(a.ring, k.one());
  auto rec = [&](auto&& self, size_t i, int remaining, const Poly& acc) -> void {
    if (remaining == 0) {
      products.push_back(acc);
      return;
    }
    if (i == gens.size()) return;
    int d = gens[i].degree();
    Poly cur = acc;
    for (int times = 0; times * d <= remaining; ++times) {
      self(self, i + 1, remaining - times * d, cur);
      cur = cur * gens[i];
    }
  };
  rec(rec, 0, degree, one);

  Mat rows(ring.field_ptr(), static_cast<int>(products.size()), static_cast<int>(basis.size()));
  for (size_t i = 0; i < products.size(); ++i)
    for (const auto& [m, c] : products[i].terms()) rows.at(static_cast<int>(i), index.at(m)) = c;
  rref(rows);
  return rows;
}

}  // namespace mil
