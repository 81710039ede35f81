#include "mil/poly.hpp"

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mil/linalg.hpp"
#include "mil/parse.hpp"

using namespace mil;
using miltest::F;
using miltest::P;

namespace {

Mat mat_from(const FieldPtr& f, const std::vector<std::vector<int>>& rows) {
  Mat m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = f->from_int(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("ring basics and canonical form") {
  auto r = miltest::ring(F(3), {"x", "y", "z"});
  Poly f = P(r, "x + 2*y - x");
  CHECK(f == P(r, "2*y"));
  CHECK(P(r, "x - x").is_zero());
  CHECK(P(r, "3*x").is_zero());
  CHECK(P(r, "x*y + 1").to_string() == "x*y + 1");
}

TEST_CASE("char-2 Frobenius square") {
  auto r = miltest::ring(F(2), {"x", "y"});
  CHECK(P(r, "(x+y)^2") == P(r, "x^2 + y^2"));
}

TEST_CASE("elementary symmetric product expansion") {
  auto r = miltest::ring(F(3), {"x", "y", "z"});
  Poly e1 = P(r, "x+y+z");
  Poly e2 = P(r, "x*y+y*z+z*x");
  // direct expansion: (x+y+z)(xy+yz+zx) = sum_{i != j} x_i^2 x_j + 3xyz, and 3 = 0
  Poly expected = P(r, "x^2*y + x^2*z + x*y^2 + y^2*z + y*z^2 + x*z^2");
  CHECK(e1 * e2 == expected);
}

TEST_CASE("multiplication by zero") {
  auto r = miltest::ring(F(3), {"x", "y"});
  CHECK((P(r, "x^2+x*y+2") * Poly::zero(r)).is_zero());
}

TEST_CASE("degrees and homogeneous components") {
  auto r = miltest::ring(F(3), {"x", "y", "z"});
  CHECK(P(r, "x^2*y").degree() == 3);
  CHECK(P(r, "x^2*y").homogeneous_components().size() == 1);

  auto parts = P(r, "x + x*y").homogeneous_components();
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 1);
  CHECK(parts[0].second == P(r, "x"));
  CHECK(parts[1].first == 2);
  CHECK(parts[1].second == P(r, "x*y"));

  Poly e1 = P(r, "x+y+z");
  Poly e3 = P(r, "x*y*z");
  CHECK((e1.pow(3) * e3).degree() == 6);

  CHECK_THROWS_AS(Poly::zero(r).degree(), Error);
}

TEST_CASE("linear substitution") {
  auto f3 = F(3);
  auto r2 = miltest::ring(f3, {"x", "y"});
  Mat swap = mat_from(f3, {{0, 1}, {1, 0}});
  CHECK(P(r2, "x+y").substitute_linear(swap) == P(r2, "x+y"));

  Mat upper = mat_from(f3, {{1, 1}, {0, 1}});
  CHECK(P(r2, "x").substitute_linear(upper) == P(r2, "x+y"));

  auto r3 = miltest::ring(f3, {"x", "y", "z"});
  Mat cycle = mat_from(f3, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  Poly delta = P(r3, "x^2*y + y^2*z + z^2*x");
  CHECK(delta.substitute_linear(cycle) == delta);

  Mat identity = Mat::identity(f3, 3);
  CHECK(delta.substitute_linear(identity) == delta);

  CHECK_THROWS_AS(P(r2, "x").substitute_linear(identity), Error);
}

TEST_CASE("substitution composes contravariantly and is a ring map") {
  auto f3 = F(3);
  auto r = miltest::ring(f3, {"x", "y", "z"});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(0, 2);
  for (int trial = 0; trial < 10; ++trial) {
    Mat m(f3, 3, 3), n(f3, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        m.at(i, j) = f3->from_int(entry(rng));
        n.at(i, j) = f3->from_int(entry(rng));
      }
    Poly f = miltest::random_poly(r, rng);
    Poly g = miltest::random_poly(r, rng);
    CHECK(f.substitute_linear(n).substitute_linear(m) == f.substitute_linear(n * m));
    CHECK((f + g).substitute_linear(m) == f.substitute_linear(m) + g.substitute_linear(m));
    CHECK((f * g).substitute_linear(m) == f.substitute_linear(m) * g.substitute_linear(m));
  }
}

TEST_CASE("weighted grading") {
  auto r = make_ring(F(2), {"w", "q1", "q2"}, {}, {1, 2, 2});
  CHECK(P(r, "q1*q2").degree() == 4);
  CHECK(P(r, "w^2 + q1").homogeneous());
  CHECK_FALSE(P(r, "w + q1").homogeneous());
}

TEST_CASE("parse and print round trip") {
  auto f9 = F(3, 2);
  auto r = make_ring(f9, {"x", "y"});
  for (const char* text : {"x^2*y + 2*x + (a+1)*y", "a^2", "x - y", "(x+y)*(x-y)"}) {
    Poly f = P(r, text);
    CHECK(P(r, f.to_string()) == f);
  }
  CHECK(P(r, "a^2") == Poly::constant(r, f9->from_int(-1)));
  CHECK_THROWS_AS(P(r, "x*"), Error);
  CHECK_THROWS_AS(P(r, "b+1"), Error);
  CHECK_THROWS_AS(P(r, "x y"), Error);
}

TEST_CASE("operations reject mixed contexts") {
  auto r1 = miltest::ring(F(3), {"x", "y"});
  auto r2 = miltest::ring(F(3), {"x", "y", "z"});
  auto r3 = miltest::ring(F(2), {"x", "y"});
  CHECK_THROWS_AS(P(r1, "x") + P(r2, "x"), Error);
  CHECK_THROWS_AS(P(r1, "x") * P(r3, "x"), Error);
  // same content in a separately built context is fine
  auto r1b = miltest::ring(F(3), {"x", "y"});
  CHECK(P(r1, "x+y") == P(r1b, "x+y"));
}

TEST_CASE("evaluate at polynomials in another ring") {
  auto f3 = F(3);
  auto formal = make_ring(f3, {"t1", "t2"});
  auto r = miltest::ring(f3, {"x", "y"});
  Poly rel = P(formal, "t1^2 - t2");
  Poly value = rel.evaluate_at({P(r, "x+y"), P(r, "x^2 + 2*x*y + y^2")});
  CHECK(value.is_zero());
}
