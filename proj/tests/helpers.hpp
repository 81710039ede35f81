#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "mil/field.hpp"
#include "mil/parse.hpp"
#include "mil/poly.hpp"

namespace miltest {

inline mil::FieldPtr F(uint32_t p, uint32_t k = 1) {
  return std::make_shared<mil::Field>(mil::Field::default_spec(p, k));
}

inline mil::RingPtr ring(mil::FieldPtr f, std::vector<std::string> vars) {
  return mil::make_ring(std::move(f), std::move(vars));
}

inline mil::Poly P(const mil::RingPtr& r, const std::string& text) {
  return mil::parse_poly(r, text);
}

// Deterministic small random polynomial: up to `terms` terms of degree <= maxdeg.
inline mil::Poly random_poly(const mil::RingPtr& r, std::mt19937& rng, int maxdeg = 3,
                             int terms = 4) {
  mil::Poly out(r);
  std::uniform_int_distribution<int> coef(0, static_cast<int>(r->field().order()) - 1);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  for (int t = 0; t < terms; ++t) {
    mil::Monomial m;
    int budget = deg(rng);
    for (int i = 0; i < r->n() && budget > 0; ++i) {
      std::uniform_int_distribution<int> e(0, budget);
      int ei = e(rng);
      m.e[i] = static_cast<uint16_t>(ei);
      budget -= ei;
    }
    out.add_term(m, mil::Scalar{static_cast<uint32_t>(coef(rng))});
  }
  return out;
}

}  // namespace miltest
