#include "mil/local_cohomology.hpp"

#include <algorithm>
#include <future>

namespace mil {

Hsop::Hsop(Action action, std::vector<Poly> ys, GroebnerOptions opts)
    : action_(std::move(action)), ys_(std::move(ys)), opts_(opts) {
  if (!verify_hsop(action_, ys_, opts_))
    fail(Errc::invalid_argument, "parameters do not cut out a finite-dimensional quotient");
  for (const Poly& y : ys_) degrees_.push_back(y.degree());
  for (int d : degrees_) sigma_ += d;
  group_class_ = classify_group(action_.group);
}

const GroebnerBasis& Hsop::power_basis(int d) const {
  if (d < 1) fail(Errc::invalid_argument, "power must be positive");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = bases_.find(d);
  if (it == bases_.end()) {
    std::vector<Poly> powered;
    powered.reserve(ys_.size());
    for (const Poly& y : ys_) powered.push_back(y.pow(d));
    it = bases_.emplace(d, buchberger(powered, opts_)).first;
  }
  return it->second;
}

Poly Hsop::product_power(int t) const {
  if (t < 0) fail(Errc::invalid_argument, "negative power");
  std::lock_guard<std::mutex> lock(mu_);
  if (products_.empty()) products_.push_back(Poly::constant(action_.ring, action_.ring->field().one()));
  while (static_cast<int>(products_.size()) <= t) {
    Poly next = products_.back();
    for (const Poly& y : ys_) next = next * y;
    products_.push_back(std::move(next));
  }
  return products_[static_cast<size_t>(t)];
}

CechClass make_cech_class(const Hsop& h, Poly numerator, const std::vector<int>& powers) {
  if (static_cast<int>(powers.size()) != h.n())
    fail(Errc::dimension_mismatch, "one power per parameter required");
  int d = 1;
  for (int p : powers) {
    if (p < 1) fail(Errc::invalid_argument, "powers must be positive");
    d = std::max(d, p);
  }
  for (int i = 0; i < h.n(); ++i)
    if (powers[static_cast<size_t>(i)] < d)
      numerator = numerator * h.ys()[static_cast<size_t>(i)].pow(d - powers[static_cast<size_t>(i)]);
  if (!numerator.is_zero() && !numerator.homogeneous())
    fail(Errc::non_homogeneous_input, "class numerator must be homogeneous");
  return CechClass{std::move(numerator), d};
}

bool class_is_zero(const Hsop& h, const CechClass& c) {
  if (c.numerator.is_zero()) return true;
  // y_1, ..., y_n is a regular sequence on R, so the membership quantifier
  // collapses to the given power.
  return ideal_member(c.numerator, h.power_basis(c.power));
}

CechClass transfer_class(const Hsop& h, const CechClass& c) {
  return CechClass{transfer(h.action(), c.numerator), c.power};
}

uint64_t binomial(int top, int bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  uint64_t r = 1;
  for (int i = 1; i <= bottom; ++i) r = r * static_cast<uint64_t>(top - bottom + i) / static_cast<uint64_t>(i);
  return r;
}

uint64_t strand_dim_closed_form(int n, int k) {
  if (k > -n) return 0;
  return binomial(-k - 1, n - 1);
}

Strand build_strand(const Hsop& h, int k, int min_power, int power_budget) {
  Strand s;
  s.k = k;
  const int n = h.n();
  if (k > -n) return s;  // strands above -n vanish for the polynomial ring

  const uint64_t target = strand_dim_closed_form(n, k);
  for (int d = std::max(1, min_power); d <= power_budget; ++d) {
    int internal = k + d * h.sigma();
    if (internal < 0) continue;
    // the slice sits at or below the socle degree of the parameter quotient
    if (internal > d * h.sigma() - n)
      fail(Errc::stabilization_failure, "internal degree above the socle bound");
    auto slice = standard_monomials(h.power_basis(d), internal);
    uint64_t dim = slice.monomials.size();
    if (dim > target)
      fail(Errc::stabilization_failure, "strand dimension exceeds the closed form");
    if (dim == target) {
      s.power = d;
      s.internal_degree = internal;
      s.basis = std::move(slice.monomials);
      return s;
    }
  }
  fail(Errc::power_budget_exceeded,
       "strand at degree " + std::to_string(k) + " did not stabilize within the power budget");
}

std::vector<Scalar> strand_coords(const Hsop& h, const Strand& s, const Poly& numerator) {
  const Field& f = h.ring()->field();
  if (!numerator.is_zero() &&
      (!numerator.homogeneous() || numerator.degree() != s.internal_degree))
    fail(Errc::dimension_mismatch, "representative degree does not match the strand");
  Poly nf = normal_form(numerator, h.power_basis(s.power));
  std::vector<Scalar> coords(s.basis.size(), f.zero());
  std::map<Monomial, int, Poly::TermCmp> index((Poly::TermCmp{h.ring()}));
  for (size_t i = 0; i < s.basis.size(); ++i) index.emplace(s.basis[i], static_cast<int>(i));
  for (const auto& [m, c] : nf.terms()) {
    auto it = index.find(m);
    if (it == index.end()) fail(Errc::internal, "normal form escaped the strand basis");
    coords[static_cast<size_t>(it->second)] = c;
  }
  return coords;
}

std::vector<Scalar> class_coords(const Hsop& h, const Strand& s, const CechClass& c) {
  if (c.power > s.power)
    fail(Errc::invalid_argument, "strand power too small for the class; rebuild with min_power");
  if (!c.numerator.is_zero() && c.degree(h) != s.k)
    fail(Errc::dimension_mismatch, "class degree does not match the strand");
  Poly lifted = c.numerator * h.product_power(s.power - c.power);
  return strand_coords(h, s, lifted);
}

Poly strand_element(const Hsop& h, const Strand& s, const std::vector<Scalar>& coords) {
  if (coords.size() != s.basis.size()) fail(Errc::dimension_mismatch, "coordinate length mismatch");
  Poly out(h.ring());
  for (size_t i = 0; i < coords.size(); ++i) out.add_term(s.basis[i], coords[i]);
  return out;
}

Mat act_on_strand(const Hsop& h, const Strand& s, const Mat& g) {
  const Field& f = h.ring()->field();
  const int dim = s.dim();
  Mat out(h.ring()->field_ptr(), dim, dim);
  for (int j = 0; j < dim; ++j) {
    Poly image = act(h.action(), g, Poly::term(h.ring(), s.basis[static_cast<size_t>(j)], f.one()));
    auto coords = strand_coords(h, s, image);
    for (int i = 0; i < dim; ++i) out.at(i, j) = coords[static_cast<size_t>(i)];
  }
  return out;
}

Mat act_on_strand(const Hsop& h, const Strand& s, int element_index) {
  return act_on_strand(h, s, h.action().group.element(element_index));
}

StrandReport strand_report(const Hsop& h, int k) {
  StrandReport rep;
  rep.k = k;
  Strand s = build_strand(h, k);
  rep.power = s.power;
  rep.dim_v = s.dim();
  if (rep.dim_v == 0) {
    rep.rank_h = h.group_class().has_transvection ? std::optional<int>() : std::optional<int>(0);
    return rep;
  }

  const auto& gen_idx = h.action().group.generator_indices();
  const int dim = rep.dim_v;
  Mat id = Mat::identity(h.ring()->field_ptr(), dim);

  // columns of all (1 - g) side by side: their column space is W
  Mat wide(h.ring()->field_ptr(), dim, dim * static_cast<int>(gen_idx.size()));
  // rows of all (1 - g) stacked: kernel is the fixed subspace
  Mat tall(h.ring()->field_ptr(), dim * static_cast<int>(gen_idx.size()), dim);
  for (size_t t = 0; t < gen_idx.size(); ++t) {
    Mat diff = id - act_on_strand(h, s, gen_idx[t]);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        wide.at(i, static_cast<int>(t) * dim + j) = diff.at(i, j);
        tall.at(static_cast<int>(t) * dim + i, j) = diff.at(i, j);
      }
  }
  rep.dim_w = rank(wide);
  rep.rank_fixed = dim - rank(tall);
  if (!h.group_class().has_transvection) rep.rank_h = rep.dim_v - rep.dim_w;
  return rep;
}

std::vector<StrandReport> hilbert_of_h(const Hsop& h, int k_from, int k_to) {
  if (k_from > k_to) std::swap(k_from, k_to);
  // strands are independent; the shared Groebner caches synchronize internally
  std::vector<std::future<StrandReport>> pending;
  for (int k = k_to; k >= k_from; --k)
    pending.push_back(std::async(std::launch::async, [&h, k] { return strand_report(h, k); }));
  std::vector<StrandReport> out;
  out.reserve(pending.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

int a_invariant(const Hsop& h, std::optional<int> search_floor) {
  if (h.group_class().has_transvection)
    fail(Errc::transvections_present,
         "the cokernel description needs a group without transvections");
  const int n = h.n();
  int floor = search_floor.value_or(-n * static_cast<int>(h.action().group.order()) - n);
  if (floor > -n) fail(Errc::invalid_argument, "search floor must be at most -n");
  for (int k = -n; k >= floor; --k) {
    StrandReport rep = strand_report(h, k);
    if (rep.rank_h.value() > 0) return k;
  }
  fail(Errc::search_floor_reached,
       "no nonzero strand found above the search floor " + std::to_string(floor));
}

namespace {

// Determinant of the decomposition matrix A with y_i = sum_j A_ij x_j, each
// monomial of y_i assigned to the column picked by the split rule.
Poly kunz_determinant(const Hsop& h, SplitRule rule) {
  const RingPtr& ring = h.ring();
  const int n = h.n();
  std::vector<Poly> entries(static_cast<size_t>(n) * n, Poly::zero(ring));
  for (int i = 0; i < n; ++i) {
    for (const auto& [m, c] : h.ys()[static_cast<size_t>(i)].terms()) {
      int col = -1;
      if (rule == SplitRule::smallest_index) {
        for (int j = 0; j < ring->n(); ++j)
          if (m.e[j] > 0) {
            col = j;
            break;
          }
      } else {
        for (int j = ring->n(); j-- > 0;)
          if (m.e[j] > 0) {
            col = j;
            break;
          }
      }
      if (col < 0) fail(Errc::internal, "constant term in a parameter");
      Monomial rest = m;
      rest.e[col] = static_cast<uint16_t>(rest.e[col] - 1);
      entries[static_cast<size_t>(i) * n + col].add_term(rest, c);
    }
  }

  const Field& k = ring->field();
  // Laplace expansion along first columns; n and entry sizes are tiny.
  auto rec = [&](auto&& self, const std::vector<int>& rows, const std::vector<int>& cols) -> Poly {
    if (rows.size() == 1)
      return entries[static_cast<size_t>(rows[0]) * n + cols[0]];
    Poly acc = Poly::zero(ring);
    for (size_t r = 0; r < rows.size(); ++r) {
      const Poly& cell = entries[static_cast<size_t>(rows[r]) * n + cols[0]];
      if (cell.is_zero()) continue;
      std::vector<int> sub_rows;
      for (size_t t = 0; t < rows.size(); ++t)
        if (t != r) sub_rows.push_back(rows[t]);
      std::vector<int> sub_cols(cols.begin() + 1, cols.end());
      Poly term = cell * self(self, sub_rows, sub_cols);
      if (r % 2 == 1) term = term.scaled(k.neg(k.one()));
      acc = acc + term;
    }
    return acc;
  };
  std::vector<int> all(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
  return rec(rec, all, all);
}

}  // namespace

CechClass socle_class(const Hsop& h, SplitRule rule) {
  return CechClass{kunz_determinant(h, rule), 1};
}

Scalar socle_action_scalar(const Hsop& h, int element_index, SplitRule rule) {
  const Field& f = h.ring()->field();
  CechClass eta = socle_class(h, rule);
  Strand s = build_strand(h, -h.n());
  auto base = class_coords(h, s, eta);
  CechClass moved{act(h.action(), element_index, eta.numerator), eta.power};
  auto image = class_coords(h, s, moved);
  // the degree -n strand is one-dimensional
  for (size_t i = 0; i < base.size(); ++i) {
    if (!f.is_zero(base[i])) return f.div(image[i], base[i]);
  }
  fail(Errc::internal, "socle class vanished");
}

PresentedAlgebra::PresentedAlgebra(RingPtr ambient, std::vector<Poly> relations,
                                   std::vector<Poly> hsop, bool cm_asserted, GroebnerOptions opts)
    : ring_(std::move(ambient)),
      relations_(std::move(relations)),
      hsop_(std::move(hsop)),
      cm_(cm_asserted),
      opts_(opts) {
  for (const Poly& r : relations_)
    if (r.is_zero() || !r.homogeneous())
      fail(Errc::non_homogeneous_input, "relations must be nonzero and homogeneous");
  if (hsop_.empty()) fail(Errc::wrong_count, "presented algebra needs parameters");
  for (const Poly& y : hsop_) {
    if (y.is_zero() || !y.homogeneous())
      fail(Errc::non_homogeneous_input, "parameters must be nonzero and homogeneous");
    sigma_ += y.degree();
  }
  if (!is_zero_dimensional(power_basis(1)))
    fail(Errc::invalid_argument, "parameters are not a system of parameters modulo the relations");
}

const GroebnerBasis& PresentedAlgebra::power_basis(int d) const {
  if (d < 0) fail(Errc::invalid_argument, "negative power");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = bases_.find(d);
  if (it == bases_.end()) {
    std::vector<Poly> gens = relations_;
    if (d > 0)
      for (const Poly& y : hsop_) gens.push_back(y.pow(d));
    // d = 0 with no relations is the zero ideal
    it = bases_.emplace(d, gens.empty() ? GroebnerBasis(ring_, {}) : buchberger(gens, opts_)).first;
  }
  return it->second;
}

int PresentedAlgebra::top_reduction_degree() const {
  auto all = all_standard_monomials(power_basis(1));
  int top = 0;
  for (const Monomial& m : all) top = std::max(top, ring_->degree(m));
  return top;
}

int direct_strand_rank(const PresentedAlgebra& pa, int k) {
  if (!pa.cm_asserted())
    fail(Errc::cm_not_asserted,
         "direct strand computation needs the Cohen-Macaulay assertion for the presentation");
  // With the parameters a regular sequence, reducing the canonical module
  // modulo them identifies it (up to the shift by sigma) with the graded dual
  // of the Artinian reduction A = S/(y)S. At the Hilbert-series level:
  //   rank [H^n(S)]_k = sum_j dim[A]_j * c(j - k - sigma),
  // where c(m) counts representations of m as a nonnegative integer
  // combination of the parameter degrees.
  std::map<int, int> artinian;
  int top = 0;
  for (const Monomial& m : all_standard_monomials(pa.power_basis(1))) {
    int d = pa.ring()->degree(m);
    ++artinian[d];
    top = std::max(top, d);
  }
  const int c_max = top - k - pa.sigma();
  if (c_max < 0) return 0;
  std::vector<long> c(static_cast<size_t>(c_max) + 1, 0);
  c[0] = 1;
  for (const Poly& y : pa.hsop()) {
    int d = y.degree();
    for (int m = d; m <= c_max; ++m) c[static_cast<size_t>(m)] += c[static_cast<size_t>(m - d)];
  }
  long rank = 0;
  for (const auto& [j, dim] : artinian) {
    int idx = j - k - pa.sigma();
    if (idx >= 0 && idx <= c_max) rank += dim * c[static_cast<size_t>(idx)];
  }
  return static_cast<int>(rank);
}

int a_invariant_presented(const PresentedAlgebra& pa, std::optional<int> search_floor) {
  int k_top = pa.top_reduction_degree() - pa.sigma();
  int floor = search_floor.value_or(k_top - 4 * pa.sigma() - pa.n());
  for (int k = k_top; k >= floor; --k) {
    if (direct_strand_rank(pa, k) > 0) return k;
  }
  fail(Errc::search_floor_reached,
       "no nonzero strand found above the search floor " + std::to_string(floor));
}

}  // namespace mil
