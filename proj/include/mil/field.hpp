#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mil/errors.hpp"

namespace mil {

// Element of a finite field, stored as the packed base-p digit string of its
// coordinate vector with respect to 1, a, ..., a^{k-1}. The packing is a
// bijection, so code equality is canonical-form equality.
struct Scalar {
  uint32_t code = 0;
  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend auto operator<=>(const Scalar&, const Scalar&) = default;
};

// Description of F_{p^k} as F_p[a]/(m(a)); modulus coefficients constant-first,
// monic of degree k. For k = 1 the modulus is the placeholder {0, 1}.
struct FieldSpec {
  uint32_t p = 2;
  uint32_t k = 1;
  std::vector<uint32_t> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Exact arithmetic in F_{p^k}, p^k <= 2^16. Multiplicative structure runs on
// discrete log/exp tables built once at construction; additive structure works
// on packed digits. Immutable and freely shareable.
class Field {
 public:
  explicit Field(FieldSpec spec);

  // Built-in moduli for F_4, F_8, F_9; k = 1 needs none.
  static FieldSpec default_spec(uint32_t p, uint32_t k);

  const FieldSpec& spec() const { return spec_; }
  uint32_t characteristic() const { return spec_.p; }
  uint32_t extension_degree() const { return spec_.k; }
  uint32_t order() const { return q_; }

  Scalar zero() const { return {0}; }
  Scalar one() const { return {1}; }
  // Canonical image of an integer (reduces mod p; negatives allowed).
  Scalar from_int(int64_t v) const;
  // The residue of the extension generator a; requires k > 1.
  Scalar generator() const;

  bool is_zero(Scalar x) const { return x.code == 0; }

  Scalar add(Scalar x, Scalar y) const;
  Scalar sub(Scalar x, Scalar y) const;
  Scalar neg(Scalar x) const;
  Scalar mul(Scalar x, Scalar y) const;
  Scalar inv(Scalar x) const;
  Scalar div(Scalar x, Scalar y) const { return mul(x, inv(y)); }
  Scalar pow(Scalar x, int64_t e) const;

  // Least m >= 1 with x^m = 1; throws DivisionByZero on x = 0.
  int unit_order(Scalar x) const;
  // Element of multiplicative order exactly m, smallest in the fixed code
  // enumeration; throws NoSuchRoot when m does not divide p^k - 1.
  Scalar root_of_unity(int m) const;

  std::vector<uint32_t> coords(Scalar x) const;
  Scalar from_coords(const std::vector<uint32_t>& c) const;

  // Rendering in the generator variable "a", e.g. "a^2+2*a+1".
  std::string to_string(Scalar x) const;

  // Elements in enumeration order (codes 0..q-1).
  Scalar element(uint32_t index) const { return {index}; }

  friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }

 private:
  Scalar mul_raw(Scalar x, Scalar y) const;  // table-free schoolbook product

  FieldSpec spec_;
  uint32_t q_ = 0;
  std::vector<uint32_t> exp_;  // exponent -> code of g^exponent
  std::vector<uint32_t> log_;  // code -> exponent (log_[0] unused)
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime_u32(uint32_t n);

}  // namespace mil
