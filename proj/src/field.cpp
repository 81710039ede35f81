#include "mil/field.hpp"

#include <algorithm>
#include <numeric>

namespace mil {
namespace {

constexpr uint32_t kMaxOrder = 1u << 16;

// Dense F_p[a] arithmetic on coefficient vectors, used only while building the
// field tables and for the irreducibility check.
using FpPoly = std::vector<uint32_t>;

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly mod_poly(FpPoly f, const FpPoly& m, uint32_t p) {
  trim(f);
  const size_t dm = m.size() - 1;
  while (f.size() > dm) {
    // m is monic, so the reduction step needs no inverse.
    uint32_t lead = f.back();
    size_t shift = f.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) {
      uint64_t t = f[shift + i] + static_cast<uint64_t>(lead) * (p - m[i] % p);
      f[shift + i] = static_cast<uint32_t>(t % p);
    }
    trim(f);
  }
  return f;
}

FpPoly mul_mod(const FpPoly& f, const FpPoly& g, const FpPoly& m, uint32_t p) {
  if (f.empty() || g.empty()) return {};
  FpPoly r(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(f[i]) * g[j]) % p);
  return mod_poly(std::move(r), m, p);
}

// Remainder of f by an arbitrary monic divisor d over F_p.
FpPoly rem_by_monic(FpPoly f, const FpPoly& d, uint32_t p) { return mod_poly(std::move(f), d, p); }

bool divides(const FpPoly& d, const FpPoly& f, uint32_t p) {
  return rem_by_monic(f, d, p).empty();
}

// Exhaustive trial division by monic polynomials of degree 1..k/2.
bool irreducible(const FpPoly& m, uint32_t p) {
  const size_t k = m.size() - 1;
  if (k == 1) return true;
  for (size_t d = 1; 2 * d <= k; ++d) {
    // enumerate monic degree-d candidates by their lower coefficients
    uint64_t total = 1;
    for (size_t i = 0; i < d; ++i) total *= p;
    for (uint64_t idx = 0; idx < total; ++idx) {
      FpPoly cand(d + 1, 0);
      uint64_t t = idx;
      for (size_t i = 0; i < d; ++i) {
        cand[i] = static_cast<uint32_t>(t % p);
        t /= p;
      }
      cand[d] = 1;
      if (divides(cand, m, p)) return false;
    }
  }
  return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec Field::default_spec(uint32_t p, uint32_t k) {
  if (k == 1) return FieldSpec{p, 1, {0, 1}};
  if (p == 2 && k == 2) return FieldSpec{2, 2, {1, 1, 1}};        // a^2+a+1
  if (p == 2 && k == 3) return FieldSpec{2, 3, {1, 1, 0, 1}};     // a^3+a+1
  if (p == 3 && k == 2) return FieldSpec{3, 2, {1, 0, 1}};        // a^2+1
  fail(Errc::parse_error,
       "no built-in modulus for F_" + std::to_string(p) + "^" + std::to_string(k) +
           "; supply one explicitly");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const uint32_t p = spec_.p;
  const uint32_t k = spec_.k;
  if (!is_prime_u32(p)) fail(Errc::parse_error, "characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) fail(Errc::parse_error, "extension degree must be >= 1");

  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(Errc::parse_error, "field order exceeds 2^16");
  }
  q_ = static_cast<uint32_t>(q);

  if (k == 1) {
    spec_.modulus = {0, 1};
  } else {
    if (spec_.modulus.size() != k + 1)
      fail(Errc::parse_error, "modulus must have degree equal to the extension degree");
    for (auto& c : spec_.modulus) c %= p;
    if (spec_.modulus.back() != 1) fail(Errc::parse_error, "modulus must be monic");
    if (!irreducible(spec_.modulus, p)) fail(Errc::parse_error, "modulus is reducible over F_p");
  }

  if (q_ == 2) {
    exp_ = {1};
    log_ = {0, 0};
    return;
  }

  // Find a primitive element: order q-1 checked against the prime factors.
  const uint32_t m = q_ - 1;
  auto factors = prime_factors(m);
  auto pow_raw = [&](Scalar x, uint32_t e) {
    Scalar r = one();
    while (e) {
      if (e & 1) r = mul_raw(r, x);
      x = mul_raw(x, x);
      e >>= 1;
    }
    return r;
  };
  uint32_t gen_code = 0;
  for (uint32_t c = 1; c < q_; ++c) {
    bool primitive = true;
    for (uint32_t f : factors) {
      if (pow_raw(Scalar{c}, m / f).code == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen_code = c;
      break;
    }
  }
  if (gen_code == 0) fail(Errc::internal, "no primitive element found");

  exp_.assign(m, 0);
  log_.assign(q_, 0);
  Scalar cur = one();
  for (uint32_t e = 0; e < m; ++e) {
    exp_[e] = cur.code;
    log_[cur.code] = e;
    cur = mul_raw(cur, Scalar{gen_code});
  }
}

Scalar Field::mul_raw(Scalar x, Scalar y) const {
  const uint32_t p = spec_.p;
  const uint32_t k = spec_.k;
  if (k == 1) return {static_cast<uint32_t>((static_cast<uint64_t>(x.code) * y.code) % p)};
  FpPoly a = [&] {
    FpPoly f(k);
    uint32_t c = x.code;
    for (uint32_t i = 0; i < k; ++i) {
      f[i] = c % p;
      c /= p;
    }
    return f;
  }();
  FpPoly b(k);
  {
    uint32_t c = y.code;
    for (uint32_t i = 0; i < k; ++i) {
      b[i] = c % p;
      c /= p;
    }
  }
  FpPoly r = mul_mod(a, b, spec_.modulus, p);
  uint32_t code = 0;
  for (size_t i = r.size(); i-- > 0;) code = code * p + r[i];
  return {code};
}

Scalar Field::from_int(int64_t v) const {
  int64_t r = v % spec_.p;
  if (r < 0) r += spec_.p;
  return {static_cast<uint32_t>(r)};
}

Scalar Field::generator() const {
  if (spec_.k < 2) fail(Errc::invalid_argument, "prime field has no extension generator");
  return {spec_.p};  // digit string (0,1,0,...)
}

Scalar Field::add(Scalar x, Scalar y) const {
  const uint32_t p = spec_.p;
  if (spec_.k == 1) {
    uint32_t s = x.code + y.code;
    return {s >= p ? s - p : s};
  }
  uint32_t out = 0, mult = 1;
  uint32_t a = x.code, b = y.code;
  for (uint32_t i = 0; i < spec_.k; ++i) {
    uint32_t s = a % p + b % p;
    if (s >= p) s -= p;
    out += s * mult;
    mult *= p;
    a /= p;
    b /= p;
  }
  return {out};
}

Scalar Field::neg(Scalar x) const {
  const uint32_t p = spec_.p;
  if (spec_.k == 1) return {x.code == 0 ? 0 : p - x.code};
  uint32_t out = 0, mult = 1;
  uint32_t a = x.code;
  for (uint32_t i = 0; i < spec_.k; ++i) {
    uint32_t d = a % p;
    out += (d == 0 ? 0 : p - d) * mult;
    mult *= p;
    a /= p;
  }
  return {out};
}

Scalar Field::sub(Scalar x, Scalar y) const { return add(x, neg(y)); }

Scalar Field::mul(Scalar x, Scalar y) const {
  if (x.code == 0 || y.code == 0) return zero();
  if (q_ == 2) return one();
  uint32_t e = log_[x.code] + log_[y.code];
  const uint32_t m = q_ - 1;
  if (e >= m) e -= m;
  return {exp_[e]};
}

Scalar Field::inv(Scalar x) const {
  if (x.code == 0) fail(Errc::division_by_zero, "inverse of zero");
  if (q_ == 2) return one();
  const uint32_t m = q_ - 1;
  uint32_t e = log_[x.code];
  return {exp_[(m - e) % m]};
}

Scalar Field::pow(Scalar x, int64_t e) const {
  if (e == 0) return one();
  if (x.code == 0) {
    if (e < 0) fail(Errc::division_by_zero, "negative power of zero");
    return zero();
  }
  if (q_ == 2) return one();
  const int64_t m = q_ - 1;
  int64_t r = (static_cast<int64_t>(log_[x.code]) * (e % m)) % m;
  if (r < 0) r += m;
  return {exp_[r]};
}

int Field::unit_order(Scalar x) const {
  if (x.code == 0) fail(Errc::division_by_zero, "multiplicative order of zero");
  if (x.code == 1) return 1;
  const uint32_t m = q_ - 1;
  uint32_t e = log_[x.code];
  return static_cast<int>(m / std::gcd(m, e));
}

Scalar Field::root_of_unity(int m) const {
  if (m < 1 || (q_ - 1) % static_cast<uint32_t>(m) != 0)
    fail(Errc::no_such_root, "no element of order " + std::to_string(m) + " in F_" + std::to_string(q_));
  for (uint32_t c = 1; c < q_; ++c)
    if (unit_order(Scalar{c}) == m) return {c};
  fail(Errc::internal, "root-of-unity search exhausted");
}

std::vector<uint32_t> Field::coords(Scalar x) const {
  std::vector<uint32_t> out(spec_.k);
  uint32_t c = x.code;
  for (uint32_t i = 0; i < spec_.k; ++i) {
    out[i] = c % spec_.p;
    c /= spec_.p;
  }
  return out;
}

Scalar Field::from_coords(const std::vector<uint32_t>& c) const {
  if (c.size() != spec_.k) fail(Errc::dimension_mismatch, "coordinate vector has wrong length");
  uint32_t code = 0;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] >= spec_.p) fail(Errc::invalid_argument, "coordinate out of range");
    code = code * spec_.p + c[i];
  }
  return {code};
}

std::string Field::to_string(Scalar x) const {
  if (x.code == 0) return "0";
  auto c = coords(x);
  std::string out;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace mil
