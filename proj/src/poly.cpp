#include "mil/poly.hpp"

#include <algorithm>

#include "mil/linalg.hpp"

namespace mil {

Ring::Ring(FieldPtr field, std::vector<std::string> variables, MonomialOrder order,
           std::vector<int> weights)
    : field_(std::move(field)), vars_(std::move(variables)), order_(order) {
  if (!field_) fail(Errc::invalid_argument, "ring requires a field");
  if (static_cast<int>(vars_.size()) > kMaxVars)
    fail(Errc::invalid_argument, "too many variables (max " + std::to_string(kMaxVars) + ")");
  for (size_t i = 0; i < vars_.size(); ++i)
    for (size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) fail(Errc::parse_error, "duplicate variable name " + vars_[i]);
  if (weights.empty()) {
    weights_.assign(vars_.size(), 1);
  } else {
    if (weights.size() != vars_.size())
      fail(Errc::dimension_mismatch, "weight vector length must match variable count");
    weights_ = std::move(weights);
    for (int w : weights_)
      if (w < 1) fail(Errc::parse_error, "variable degrees must be positive");
  }
  standard_ = std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
  if (order_.kind == OrderKind::block_elim && (order_.split <= 0 || order_.split >= n()))
    fail(Errc::invalid_argument, "block order split out of range");
}

int Ring::degree(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < n(); ++i) d += weights_[i] * m.e[i];
  return d;
}

int Ring::cmp_block(const Monomial& a, const Monomial& b, int lo, int hi) const {
  // weighted grevlex on the variable window [lo, hi)
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += weights_[i] * a.e[i];
    db += weights_[i] * b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi; i-- > lo;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

bool Ring::term_before(const Monomial& a, const Monomial& b) const {
  switch (order_.kind) {
    case OrderKind::lex:
      for (int i = 0; i < n(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
      return false;
    case OrderKind::grevlex:
      return cmp_block(a, b, 0, n()) > 0;
    case OrderKind::block_elim: {
      int c = cmp_block(a, b, 0, order_.split);
      if (c != 0) return c > 0;
      return cmp_block(a, b, order_.split, n()) > 0;
    }
  }
  return false;
}

bool Ring::compatible(const Ring& other) const {
  return field_->spec() == other.field_->spec() && vars_ == other.vars_ &&
         weights_ == other.weights_ && order_.kind == other.order_.kind &&
         order_.split == other.order_.split;
}

std::string Ring::monomial_string(const Monomial& m) const {
  std::string out;
  for (int i = 0; i < n(); ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars_[i];
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out.empty() ? "1" : out;
}

RingPtr make_ring(FieldPtr field, std::vector<std::string> variables, MonomialOrder order,
                  std::vector<int> weights) {
  return std::make_shared<Ring>(std::move(field), std::move(variables), order, std::move(weights));
}

Poly Poly::constant(RingPtr ring, Scalar c) {
  Poly p(std::move(ring));
  if (!p.ring().field().is_zero(c)) p.terms_.emplace(Monomial::unit(), c);
  return p;
}

Poly Poly::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->n()) fail(Errc::dimension_mismatch, "variable index out of range");
  Monomial m;
  m.e[index] = 1;
  Poly p(std::move(ring));
  p.terms_.emplace(m, p.ring().field().one());
  return p;
}

Poly Poly::term(RingPtr ring, Monomial m, Scalar c) {
  Poly p(std::move(ring));
  if (!p.ring().field().is_zero(c)) p.terms_.emplace(m, c);
  return p;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) fail(Errc::zero_polynomial, "zero polynomial has no leading term");
  return terms_.begin()->first;
}

Scalar Poly::leading_coeff() const {
  if (terms_.empty()) fail(Errc::zero_polynomial, "zero polynomial has no leading term");
  return terms_.begin()->second;
}

Scalar Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ring().field().zero() : it->second;
}

void Poly::add_term(const Monomial& m, Scalar c) {
  const Field& f = ring().field();
  if (f.is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) terms_.erase(it);
  }
}

void Poly::check_same_ring(const Poly& other) const {
  if (ring_ == other.ring_) return;
  if (!ring().compatible(other.ring())) fail(Errc::context_mismatch, "polynomials from different rings");
}

Poly Poly::operator-() const {
  Poly out(ring_);
  const Field& f = ring().field();
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, f.neg(c));
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  Poly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  Poly out = a;
  const Field& f = a.ring().field();
  for (const auto& [m, c] : b.terms_) out.add_term(m, f.neg(c));
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  Poly out(a.ring_ptr());
  const Field& f = a.ring().field();
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), f.mul(ca, cb));
  return out;
}

Poly Poly::scaled(Scalar c) const {
  Poly out(ring_);
  const Field& f = ring().field();
  if (f.is_zero(c)) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, f.mul(v, c));
  return out;
}

Poly Poly::times_term(const Monomial& m, Scalar c) const {
  Poly out(ring_);
  const Field& f = ring().field();
  if (f.is_zero(c)) return out;
  for (const auto& [mm, v] : terms_) out.terms_.emplace(mm.times(m), f.mul(v, c));
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) fail(Errc::invalid_argument, "negative polynomial power");
  Poly out = Poly::constant(ring_, ring().field().one());
  Poly base = *this;
  while (e) {
    if (e & 1) out = out * base;
    if (e >>= 1) base = base * base;
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
  return true;
}

int Poly::degree() const {
  if (terms_.empty()) fail(Errc::zero_polynomial, "degree of the zero polynomial");
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, ring().degree(m));
  return d;
}

bool Poly::homogeneous() const {
  if (terms_.empty()) return true;
  int d = ring().degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (ring().degree(m) != d) return false;
  return true;
}

std::vector<std::pair<int, Poly>> Poly::homogeneous_components() const {
  std::map<int, Poly> parts;
  for (const auto& [m, c] : terms_) {
    int d = ring().degree(m);
    auto it = parts.find(d);
    if (it == parts.end()) it = parts.emplace(d, Poly(ring_)).first;
    it->second.add_term(m, c);
  }
  std::vector<std::pair<int, Poly>> out;
  out.reserve(parts.size());
  for (auto& [d, p] : parts) out.emplace_back(d, std::move(p));
  return out;
}

Poly Poly::substitute_linear(const Mat& mat) const {
  const int n = ring().n();
  if (mat.rows() != n || mat.cols() != n)
    fail(Errc::dimension_mismatch, "substitution matrix must be n-by-n");
  const Field& f = ring().field();

  std::vector<Poly> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    Poly li(ring_);
    for (int j = 0; j < n; ++j) li.add_term(Poly::variable(ring_, j).leading_monomial(), mat.at(i, j));
    images.push_back(std::move(li));
  }

  // power cache per variable, built on demand
  std::vector<std::vector<Poly>> powers(n);
  auto image_power = [&](int i, int e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(ring_, f.one()));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Poly out(ring_);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(ring_, c);
    for (int i = 0; i < n; ++i)
      if (m.e[i]) t = t * image_power(i, m.e[i]);
    out = out + t;
  }
  return out;
}

Poly Poly::evaluate_at(const std::vector<Poly>& args) const {
  if (static_cast<int>(args.size()) != ring().n())
    fail(Errc::arity_mismatch, "argument count does not match variable count");
  if (args.empty()) fail(Errc::arity_mismatch, "evaluation needs at least one argument");
  RingPtr target = args.front().ring_ptr();
  for (const auto& a : args)
    if (!a.ring().compatible(*target)) fail(Errc::context_mismatch, "evaluation arguments from different rings");
  const Field& f = target->field();

  std::vector<std::vector<Poly>> powers(args.size());
  auto arg_power = [&](size_t i, int e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, f.one()));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * args[i]);
    return cache[e];
  };

  Poly out(target);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(target, c);
    for (int i = 0; i < ring().n(); ++i)
      if (m.e[i]) t = t * arg_power(i, m.e[i]);
    out = out + t;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const Field& f = ring().field();
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string cs = f.to_string(c);
    if (m.is_unit()) {
      out += cs;
      continue;
    }
    if (cs != "1") {
      bool needs_parens = cs.find('+') != std::string::npos;
      out += needs_parens ? "(" + cs + ")*" : cs + "*";
    }
    out += ring().monomial_string(m);
  }
  return out;
}

}  // namespace mil
