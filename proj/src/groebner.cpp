#include "mil/groebner.hpp"

#include <algorithm>
#include <set>

namespace mil {
namespace {

// Reduce f by the current basis, rewriting every reducible term (full normal
// form). Deterministic: always rewrites the largest reducible term with the
// first matching divisor.
Poly reduce_full(Poly f, const std::vector<Poly>& basis) {
  if (basis.empty()) return f;
  const RingPtr& ring = f.ring_ptr();
  const Field& k = ring->field();
  Poly remainder(ring);
  while (!f.is_zero()) {
    const Monomial lm = f.leading_monomial();
    const Scalar lc = f.leading_coeff();
    bool reduced = false;
    for (const Poly& g : basis) {
      const Monomial& glm = g.leading_monomial();
      if (!glm.divides(lm)) continue;
      Scalar factor = k.div(lc, g.leading_coeff());
      f = f - g.times_term(lm.over(glm), factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      f = f - Poly::term(ring, lm, lc);
    }
  }
  return remainder;
}

Poly spoly(const Poly& f, const Poly& g) {
  const Field& k = f.ring().field();
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = f.times_term(l.over(f.leading_monomial()), k.inv(f.leading_coeff()));
  Poly b = g.times_term(l.over(g.leading_monomial()), k.inv(g.leading_coeff()));
  return a - b;
}

struct Pair {
  int deg;     // order-degree of the lcm, for the normal selection strategy
  Monomial lcm;
  int i, j;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens, const GroebnerOptions& opts) {
  if (gens.empty()) fail(Errc::invalid_argument, "empty generating set");
  RingPtr ring = gens.front().ring_ptr();
  for (const Poly& g : gens)
    if (!g.ring().compatible(*ring)) fail(Errc::context_mismatch, "generators from different rings");

  std::vector<Poly> basis;
  for (const Poly& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(g);
  }
  if (basis.empty()) fail(Errc::invalid_argument, "all generators are zero");

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (!(a.lcm == b.lcm)) return ring->term_before(b.lcm, a.lcm);  // smaller lcm first
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> queue;
  auto push_pair = [&](int i, int j) {
    Monomial l = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
    queue.push_back(Pair{ring->degree(l), l, i, j});
    std::push_heap(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) { return pair_less(b, a); });
  };
  auto pop_pair = [&]() {
    std::pop_heap(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) { return pair_less(b, a); });
    Pair p = queue.back();
    queue.pop_back();
    return p;
  };

  std::set<std::pair<int, int>> done;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) push_pair(static_cast<int>(i), static_cast<int>(j));

  long budget = opts.pair_budget;
  while (!queue.empty()) {
    if (--budget < 0)
      fail(Errc::pair_budget_exceeded,
           "Groebner pair budget of " + std::to_string(opts.pair_budget) + " exceeded");
    Pair p = pop_pair();
    done.insert({p.i, p.j});

    const Monomial& li = basis[p.i].leading_monomial();
    const Monomial& lj = basis[p.j].leading_monomial();
    // first Buchberger criterion: coprime leading terms
    if (li.coprime_with(lj)) continue;
    // chain criterion: some k with LT_k | lcm and both pairs already treated
    bool skip = false;
    for (size_t t = 0; t < basis.size(); ++t) {
      int k = static_cast<int>(t);
      if (k == p.i || k == p.j) continue;
      if (!basis[t].leading_monomial().divides(p.lcm)) continue;
      auto key_ik = std::minmax(p.i, k);
      auto key_jk = std::minmax(p.j, k);
      if (done.count({key_ik.first, key_ik.second}) && done.count({key_jk.first, key_jk.second})) {
        skip = true;
        break;
      }
    }
    if (skip) continue;

    Poly r = reduce_full(spoly(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r);
    int nw = static_cast<int>(basis.size()) - 1;
    for (int i = 0; i < nw; ++i) push_pair(i, nw);
  }

  // minimize: drop elements whose leading term is divisible by another's
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& lj = basis[j].leading_monomial();
      const Monomial& li = basis[i].leading_monomial();
      if (lj.divides(li) && (!(li == lj) || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // reduce each element against the others and normalize to monic
  const Field& k = ring->field();
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = others.empty() ? minimal[i] : reduce_full(minimal[i], others);
    reduced.push_back(r.scaled(k.inv(r.leading_coeff())));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return ring->term_before(b.leading_monomial(), a.leading_monomial());  // ascending
  });
  return GroebnerBasis(ring, std::move(reduced));
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  if (!f.ring().compatible(*gb.ring_ptr())) fail(Errc::context_mismatch, "normal form in wrong ring");
  return reduce_full(f, gb.generators());
}

bool ideal_member(const Poly& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

bool ideal_member(const Poly& f, const std::vector<Poly>& gens, const GroebnerOptions& opts) {
  return ideal_member(f, buchberger(gens, opts));
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
  const int n = gb.ring_ptr()->n();
  for (int i = 0; i < n; ++i) {
    bool covered = false;
    for (const Poly& g : gb.generators()) {
      const Monomial& lm = g.leading_monomial();
      bool pure = lm.e[i] > 0;
      for (int j = 0; pure && j < n; ++j)
        if (j != i && lm.e[j] > 0) pure = false;
      if (pure) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

namespace {

// Enumerate weighted-degree-d monomials outside the leading-term ideal.
void enumerate_slice(const Ring& ring, const std::vector<Monomial>& lts, int var, int remaining,
                     Monomial& cur, std::vector<Monomial>& out) {
  const int n = ring.n();
  if (var == n) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  // prune: a leading term supported on already-assigned variables divides cur
  for (const Monomial& lt : lts) {
    bool support_ok = true;
    bool divides = true;
    for (int i = 0; i < n; ++i) {
      if (i >= var && lt.e[i] > 0) support_ok = false;
      if (i < var && lt.e[i] > cur.e[i]) divides = false;
    }
    if (support_ok && divides) return;
  }
  const int w = ring.weights()[var];
  for (int e = 0; e * w <= remaining; ++e) {
    cur.e[var] = static_cast<uint16_t>(e);
    enumerate_slice(ring, lts, var + 1, remaining - e * w, cur, out);
  }
  cur.e[var] = 0;
}

std::vector<Monomial> leading_terms(const GroebnerBasis& gb) {
  std::vector<Monomial> lts;
  lts.reserve(gb.generators().size());
  for (const Poly& g : gb.generators()) lts.push_back(g.leading_monomial());
  return lts;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& lts) {
  for (const Monomial& lt : lts)
    if (lt.divides(m)) return true;
  return false;
}

}  // namespace

QuotientSlice standard_monomials(const GroebnerBasis& gb, int degree) {
  QuotientSlice slice;
  slice.degree = degree;
  if (degree < 0) return slice;
  const Ring& ring = *gb.ring_ptr();
  auto lts = leading_terms(gb);
  Monomial cur;
  std::vector<Monomial> all;
  enumerate_slice(ring, lts, 0, degree, cur, all);
  std::vector<Monomial> keep;
  for (const Monomial& m : all)
    if (!divisible_by_any(m, lts)) keep.push_back(m);
  std::sort(keep.begin(), keep.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.term_before(a, b); });
  slice.monomials = std::move(keep);
  return slice;
}

std::vector<int> quotient_hilbert(const GroebnerBasis& gb, int from, int to) {
  std::vector<int> out;
  for (int d = from; d <= to; ++d) out.push_back(static_cast<int>(standard_monomials(gb, d).monomials.size()));
  return out;
}

std::vector<Monomial> all_standard_monomials(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb)) fail(Errc::invalid_argument, "quotient is not finite-dimensional");
  const Ring& ring = *gb.ring_ptr();
  auto lts = leading_terms(gb);
  // pure-power leading terms bound the exponent of each variable
  int max_degree = 0;
  for (int i = 0; i < ring.n(); ++i) {
    int bound = 0;
    for (const Monomial& lt : lts) {
      bool pure = lt.e[i] > 0;
      for (int j = 0; pure && j < ring.n(); ++j)
        if (j != i && lt.e[j] > 0) pure = false;
      if (pure) bound = bound == 0 ? lt.e[i] : std::min(bound, static_cast<int>(lt.e[i]));
    }
    max_degree += (bound - 1) * ring.weights()[i];
  }
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto slice = standard_monomials(gb, d);
    out.insert(out.end(), slice.monomials.begin(), slice.monomials.end());
  }
  return out;
}

SubalgebraResult subalgebra_member(const Poly& f, const std::vector<Poly>& gens,
                                   const GroebnerOptions& opts) {
  if (!f.homogeneous()) fail(Errc::non_homogeneous_input, "subalgebra membership needs homogeneous input");
  for (const Poly& g : gens) {
    if (!g.homogeneous() || g.is_zero())
      fail(Errc::non_homogeneous_input, "subalgebra generators must be nonzero and homogeneous");
    if (!g.ring().compatible(f.ring())) fail(Errc::context_mismatch, "generators from different rings");
  }

  const RingPtr& base = f.ring_ptr();
  const int n = base->n();
  const int m = static_cast<int>(gens.size());

  // tag-variable ring used for the certifying expression
  std::vector<std::string> tag_names;
  std::vector<int> tag_weights;
  for (int t = 0; t < m; ++t) {
    std::string name = "t" + std::to_string(t + 1);
    while (std::find(base->variables().begin(), base->variables().end(), name) !=
           base->variables().end())
      name = "_" + name;
    tag_names.push_back(name);
    tag_weights.push_back(gens[static_cast<size_t>(t)].degree());
  }
  RingPtr tag_ring = make_ring(base->field_ptr(), tag_names, {}, tag_weights);

  if (m == 0) {
    // the subalgebra is the coefficient field
    SubalgebraResult res;
    res.member = f.is_zero();
    if (res.member) res.expression = Poly::zero(tag_ring);
    return res;
  }
  if (n + m > kMaxVars) fail(Errc::invalid_argument, "too many variables for elimination");

  // elimination ring: original variables dominate tag variables
  std::vector<std::string> names = base->variables();
  std::vector<int> weights = base->weights();
  names.insert(names.end(), tag_names.begin(), tag_names.end());
  weights.insert(weights.end(), tag_weights.begin(), tag_weights.end());
  RingPtr elim = make_ring(base->field_ptr(), names, MonomialOrder{OrderKind::block_elim, n}, weights);

  auto embed = [&](const Poly& p) {
    Poly out(elim);
    for (const auto& [mono, c] : p.terms()) out.add_term(mono, c);
    return out;
  };

  std::vector<Poly> ideal;
  for (int t = 0; t < m; ++t)
    ideal.push_back(Poly::variable(elim, n + t) - embed(gens[static_cast<size_t>(t)]));
  GroebnerBasis gb = buchberger(ideal, opts);
  Poly nf = normal_form(embed(f), gb);

  SubalgebraResult res;
  for (const auto& [mono, c] : nf.terms())
    for (int i = 0; i < n; ++i)
      if (mono.e[i] > 0) return res;  // remainder touches original variables
  res.member = true;
  Poly expr(tag_ring);
  for (const auto& [mono, c] : nf.terms()) {
    Monomial shifted;
    for (int t = 0; t < m; ++t) shifted.e[t] = mono.e[n + t];
    expr.add_term(shifted, c);
  }
  res.expression = std::move(expr);
  return res;
}

}  // namespace mil
