#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mil/field.hpp"

namespace mil {

// Hard cap on ambient variables; user-facing rings are validated to n <= 16,
// internal elimination rings may use the headroom for tag variables.
inline constexpr int kMaxVars = 24;
inline constexpr int kMaxUserVars = 16;

struct Monomial {
  std::array<uint16_t, kMaxVars> e{};

  static Monomial unit() { return {}; }
  bool is_unit() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  bool divides(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  Monomial times(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] + m.e[i]);
    return r;
  }
  // Exact quotient; caller guarantees divisibility.
  Monomial over(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] - m.e[i]);
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  bool coprime_with(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && m.e[i]) return false;
    return true;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class OrderKind { grevlex, lex, block_elim };

struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  // block_elim: variables [0, split) dominate [split, n); weighted grevlex
  // within each block.
  int split = 0;
};

// Immutable polynomial-ring context: coefficient field, named variables with
// positive degrees (weights), and the monomial order. Held by shared_ptr;
// polynomials over compatible contexts interoperate.
class Ring {
 public:
  Ring(FieldPtr field, std::vector<std::string> variables, MonomialOrder order = {},
       std::vector<int> weights = {});

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  int n() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_graded() const { return standard_; }
  const MonomialOrder& order() const { return order_; }

  int degree(const Monomial& m) const;
  // true when a precedes b in descending term order (a is the larger term)
  bool term_before(const Monomial& a, const Monomial& b) const;

  bool compatible(const Ring& other) const;

  std::string monomial_string(const Monomial& m) const;

 private:
  int cmp_block(const Monomial& a, const Monomial& b, int lo, int hi) const;

  FieldPtr field_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  bool standard_ = true;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(FieldPtr field, std::vector<std::string> variables, MonomialOrder order = {},
                  std::vector<int> weights = {});

class Mat;  // linalg.hpp

// Multivariate polynomial in canonical form: term map sorted descending by the
// ring order, no zero coefficients stored. Value type; all ops return fresh
// canonical polynomials.
class Poly {
 public:
  struct TermCmp {
    RingPtr ring;
    bool operator()(const Monomial& a, const Monomial& b) const { return ring->term_before(a, b); }
  };
  using TermMap = std::map<Monomial, Scalar, TermCmp>;

  explicit Poly(RingPtr ring) : ring_(std::move(ring)), terms_(TermCmp{ring_}) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, Scalar c);
  static Poly variable(RingPtr ring, int index);
  static Poly term(RingPtr ring, Monomial m, Scalar c);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  Scalar leading_coeff() const;

  Scalar coeff(const Monomial& m) const;
  void add_term(const Monomial& m, Scalar c);  // accumulating insert

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Scalar c) const;
  Poly times_term(const Monomial& m, Scalar c) const;
  Poly pow(int e) const;

  friend bool operator==(const Poly& a, const Poly& b);

  // Total (weighted) degree; throws ZeroPolynomial on 0.
  int degree() const;
  bool homogeneous() const;
  // Degree-indexed parts, ascending; they sum back to the polynomial.
  std::vector<std::pair<int, Poly>> homogeneous_components() const;

  // x_i |-> sum_j M[i][j] x_j; M is an n-by-n matrix over the ring's field.
  Poly substitute_linear(const Mat& m) const;

  // Evaluation at polynomial arguments in another ring (one per variable).
  Poly evaluate_at(const std::vector<Poly>& args) const;

  std::string to_string() const;

 private:
  void check_same_ring(const Poly& other) const;

  RingPtr ring_;
  TermMap terms_;
};

}  // namespace mil
