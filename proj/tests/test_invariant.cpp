#include "mil/invariant.hpp"

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mil/parse.hpp"

using namespace mil;
using miltest::F;
using miltest::P;

namespace {

Mat M(const FieldPtr& f, const std::vector<std::vector<const char*>>& rows) {
  Mat m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = parse_scalar(f, rows[i][j]);
  return m;
}

Action s2_action(uint32_t p) {
  auto f = F(p);
  auto r = miltest::ring(f, {"x", "y"});
  return Action(MatrixGroup::closure(f, {M(f, {{"0", "1"}, {"1", "0"}})}), r);
}

Action a3_action() {
  auto f = F(3);
  auto r = miltest::ring(f, {"x", "y", "z"});
  return Action(
      MatrixGroup::closure(f, {M(f, {{"0", "1", "0"}, {"0", "0", "1"}, {"1", "0", "0"}})}), r);
}

Action klein6_action() {
  auto f2 = F(2);
  auto r = miltest::ring(f2, {"u", "v", "w", "x", "y", "z"});
  Mat g = M(f2, {{"1", "0", "0", "0", "0", "0"},
                 {"0", "1", "1", "0", "0", "0"},
                 {"0", "0", "1", "0", "0", "0"},
                 {"0", "0", "0", "1", "0", "0"},
                 {"0", "0", "0", "0", "1", "1"},
                 {"0", "0", "0", "0", "0", "1"}});
  Mat h = M(f2, {{"1", "0", "1", "0", "0", "0"},
                 {"0", "1", "0", "0", "0", "0"},
                 {"0", "0", "1", "0", "0", "0"},
                 {"0", "0", "0", "1", "0", "1"},
                 {"0", "0", "0", "0", "1", "0"},
                 {"0", "0", "0", "0", "0", "1"}});
  return Action(MatrixGroup::closure(f2, {g, h}), r);
}

}  // namespace

TEST_CASE("action on one-forms matches the matrix rows") {
  Action a = klein6_action();
  auto r = a.ring;
  CHECK(act(a, a.group.generators()[0], P(r, "u")) == P(r, "u"));
  CHECK(act(a, a.group.generators()[0], P(r, "v")) == P(r, "v + w"));
  CHECK(act(a, 0, P(r, "u*v*x")) == P(r, "u*v*x"));  // identity element
}

TEST_CASE("transfer is the orbit sum") {
  Action s2 = s2_action(3);
  CHECK(transfer(s2, P(s2.ring, "x")) == P(s2.ring, "x + y"));

  Action a3 = a3_action();
  CHECK(transfer(a3, P(a3.ring, "x^2*y")) == P(a3.ring, "x^2*y + y^2*z + z^2*x"));

  // invariant input: multiplication by |G|; here |G| = 2 over F_3
  Poly s = P(s2.ring, "x*y");
  CHECK(transfer(s2, s) == s.scaled(s2.ring->field().from_int(2)));
}

TEST_CASE("transfer properties on random polynomials") {
  Action a3 = a3_action();
  std::mt19937 rng(5);
  Poly e2 = P(a3.ring, "x*y + y*z + z*x");
  for (int t = 0; t < 10; ++t) {
    Poly f = miltest::random_poly(a3.ring, rng);
    Poly tr = transfer(a3, f);
    for (const Mat& g : a3.group.generators()) CHECK(act(a3, g, tr) == tr);
    CHECK(transfer(a3, e2 * f) == e2 * tr);
  }
}

TEST_CASE("coset transfer") {
  Action k6 = klein6_action();
  const auto& gi = k6.group.generator_indices();
  // H = <g>; representatives identity and h
  std::vector<int> H = {0, gi[0]};
  std::vector<int> reps = {0, gi[1]};
  Poly f = P(k6.ring, "u^2 + u*w");  // invariant, in particular fixed by H
  Poly out = transfer_coset(k6, f, H, reps);
  CHECK(out == f + act(k6, gi[1], f));

  // independent of the representative choice: {g, h g} gives the same map
  auto hg = k6.group.find(k6.group.element(gi[1]) * k6.group.element(gi[0]));
  REQUIRE(hg.has_value());
  std::vector<int> reps2 = {gi[0], *hg};
  CHECK(transfer_coset(k6, f, H, reps2) == out);

  // H = G: identity on invariants
  std::vector<int> all = {0, gi[0], gi[1], 3};
  CHECK(transfer_coset(k6, f, all, {0}) == f);

  // trivial H: plain transfer
  CHECK(transfer_coset(k6, P(k6.ring, "u"), {0}, all) == transfer(k6, P(k6.ring, "u")));

  CHECK_THROWS_AS(transfer_coset(k6, P(k6.ring, "v"), H, reps), Error);  // g moves v
}

TEST_CASE("reynolds operator") {
  Action s2 = s2_action(3);
  // |G|^{-1} = 2 over F_3
  CHECK(reynolds(s2, P(s2.ring, "x")) == P(s2.ring, "2*x + 2*y"));
  Poly inv = P(s2.ring, "x*y");
  CHECK(reynolds(s2, inv) == inv);
  std::mt19937 rng(17);
  for (int t = 0; t < 8; ++t) {
    Poly f = miltest::random_poly(s2.ring, rng);
    CHECK(reynolds(s2, reynolds(s2, f)) == reynolds(s2, f));
  }

  Action a3 = a3_action();
  CHECK_THROWS_AS(reynolds(a3, P(a3.ring, "x")), Error);  // 3 divides |G|
}

TEST_CASE("reynolds image spans exactly the invariants") {
  Action s2 = s2_action(3);
  const Field& f = s2.ring->field();
  for (int d = 1; d <= 4; ++d) {
    auto basis = monomial_basis(*s2.ring, d);
    std::map<Monomial, int, Poly::TermCmp> index((Poly::TermCmp{s2.ring}));
    for (size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], static_cast<int>(j));
    Mat images(s2.ring->field_ptr(), static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
      Poly r = reynolds(s2, Poly::term(s2.ring, basis[j], f.one()));
      for (const auto& [m, c] : r.terms()) images.at(static_cast<int>(j), index.at(m)) = c;
    }
    CHECK(rank(images) == static_cast<int>(invariant_space(s2, d).basis.size()));
  }
}

TEST_CASE("invariant spaces") {
  Action a3 = a3_action();
  auto s1 = invariant_space(a3, 1);
  REQUIRE(s1.basis.size() == 1);
  CHECK(s1.basis[0] == P(a3.ring, "x+y+z"));

  Action k6 = klein6_action();
  auto k1 = invariant_space(k6, 1);
  REQUIRE(k1.basis.size() == 2);
  CHECK(k1.basis[0] == P(k6.ring, "w"));
  CHECK(k1.basis[1] == P(k6.ring, "z"));

  auto k0 = invariant_space(k6, 0);
  REQUIRE(k0.basis.size() == 1);
  CHECK(k0.basis[0] == P(k6.ring, "1"));

  // dimensions match the presented invariant ring's Hilbert function 1, 2, 9, 14
  CHECK(invariant_space(k6, 2).basis.size() == 9);
}

TEST_CASE("nonmodular coset transfer surjects onto invariants") {
  // scalar group of order 4 over F_9 with subgroup {1, -1}: index 2 invertible
  auto f9 = F(3, 2);
  auto r = miltest::ring(f9, {"x", "y"});
  Action a(MatrixGroup::closure(f9, {M(f9, {{"a", "0"}, {"0", "a"}})}), r);
  auto minus = a.group.find(a.group.element(1) * a.group.element(1));
  REQUIRE(minus.has_value());
  std::vector<int> H = {0, *minus};
  std::vector<int> reps = {0, 1};
  for (int d = 2; d <= 4; d += 2) {
    // span of the coset-transfer images of the H-invariant slice
    auto basis = monomial_basis(*r, d);
    std::map<Monomial, int, Poly::TermCmp> index((Poly::TermCmp{r}));
    for (size_t j = 0; j < basis.size(); ++j) index.emplace(basis[j], static_cast<int>(j));
    std::vector<std::vector<Scalar>> images;
    for (const Monomial& m : basis) {
      Poly f = Poly::term(r, m, f9->one());
      bool h_fixed = true;
      for (int h : H) h_fixed = h_fixed && act(a, h, f) == f;
      if (!h_fixed) continue;
      Poly out = transfer_coset(a, f, H, reps);
      std::vector<Scalar> row(basis.size(), f9->zero());
      for (const auto& [mm, c] : out.terms()) row[static_cast<size_t>(index.at(mm))] = c;
      images.push_back(std::move(row));
    }
    Mat span(f9, static_cast<int>(images.size()), static_cast<int>(basis.size()));
    for (size_t i = 0; i < images.size(); ++i)
      for (size_t j = 0; j < basis.size(); ++j) span.at(static_cast<int>(i), static_cast<int>(j)) = images[i][j];
    auto pivots = rref(span);
    for (const Poly& f : invariant_space(a, d).basis) {
      std::vector<Scalar> row(basis.size(), f9->zero());
      for (const auto& [mm, c] : f.terms()) row[static_cast<size_t>(index.at(mm))] = c;
      CHECK(in_row_space(span, pivots, row));
    }
  }
}

TEST_CASE("generator discovery") {
  Action a3 = a3_action();
  auto gens = algebra_generators_up_to(a3, 3);
  REQUIRE(gens.size() == 4);
  CHECK(gens[0].second == 1);
  CHECK(gens[1].second == 2);
  CHECK(gens[2].second == 3);
  CHECK(gens[3].second == 3);
  std::vector<Poly> found;
  for (auto& [g, d] : gens) found.push_back(g);
  std::vector<Poly> expected = {P(a3.ring, "x+y+z"), P(a3.ring, "x*y+y*z+z*x"),
                                P(a3.ring, "x*y*z"), P(a3.ring, "x^2*y+y^2*z+z^2*x")};
  for (int d = 1; d <= 3; ++d) {
    Mat l = subalgebra_slice(a3, found, d);
    Mat r = subalgebra_slice(a3, expected, d);
    CHECK(rank(l) == rank(r));
  }
  for (const Poly& e : expected) CHECK(subalgebra_member(e, found).member);
  for (const Poly& g : found) CHECK(subalgebra_member(g, expected).member);

  // three-variable klein group: polynomial invariant ring F_2[z, x^2+xz, y^2+yz]
  auto f2 = F(2);
  auto r3 = miltest::ring(f2, {"x", "y", "z"});
  Action k3(MatrixGroup::closure(f2, {M(f2, {{"1", "0", "0"}, {"0", "1", "1"}, {"0", "0", "1"}}),
                                      M(f2, {{"1", "0", "1"}, {"0", "1", "0"}, {"0", "0", "1"}})}),
            r3);
  auto kgens = algebra_generators_up_to(k3, 2);
  REQUIRE(kgens.size() == 3);
  CHECK(kgens[0].second == 1);
  CHECK(kgens[1].second == 2);
  CHECK(kgens[2].second == 2);
  std::vector<Poly> kfound;
  for (auto& [g, d] : kgens) kfound.push_back(g);
  std::vector<Poly> kexp = {P(r3, "z"), P(r3, "x^2+x*z"), P(r3, "y^2+y*z")};
  for (const Poly& e : kexp) CHECK(subalgebra_member(e, kfound).member);
  for (const Poly& g : kfound) CHECK(subalgebra_member(g, kexp).member);

  // trivial group: the variables themselves
  auto f3 = F(3);
  auto r2 = miltest::ring(f3, {"x", "y"});
  Action trivial(MatrixGroup::closure(f3, {Mat::identity(f3, 2)}), r2);
  auto tgens = algebra_generators_up_to(trivial, 1);
  REQUIRE(tgens.size() == 2);
  CHECK(tgens[0].first == P(r2, "x"));
  CHECK(tgens[1].first == P(r2, "y"));
}

TEST_CASE("hsop verification") {
  Action a3 = a3_action();
  CHECK(verify_hsop(a3, {P(a3.ring, "x+y+z"), P(a3.ring, "x*y+y*z+z*x"), P(a3.ring, "x*y*z")}));

  Action k6 = klein6_action();
  CHECK(verify_hsop(k6, {P(k6.ring, "w^2"), P(k6.ring, "z^2"), P(k6.ring, "u^2+u*w"),
                         P(k6.ring, "v^2+v*w"), P(k6.ring, "x^2+x*z"), P(k6.ring, "y^2+y*z")}));

  CHECK_THROWS_AS(verify_hsop(a3, {P(a3.ring, "x+y+z"), P(a3.ring, "x*y+y*z+z*x")}), Error);
  CHECK_THROWS_AS(verify_hsop(a3, {P(a3.ring, "x"), P(a3.ring, "y"), P(a3.ring, "z")}), Error);
}

TEST_CASE("relation verification") {
  Action a3 = a3_action();
  auto f3 = F(3);
  auto formal = make_ring(f3, {"t1", "t2", "t3", "t4"}, {}, {1, 2, 3, 3});
  Poly rel = P(formal, "t4^2 - t1*t2*t4 + t2^3 + t1^3*t3");
  std::vector<Poly> gens = {P(a3.ring, "x+y+z"), P(a3.ring, "x*y+y*z+z*x"), P(a3.ring, "x*y*z"),
                            P(a3.ring, "x^2*y+y^2*z+z^2*x")};
  CHECK(verify_relation(rel, gens));

  Action k6 = klein6_action();
  auto f2 = F(2);
  auto formal8 = make_ring(f2, {"t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8"}, {},
                           {1, 1, 2, 2, 2, 2, 2, 2});
  std::vector<Poly> kgens = {P(k6.ring, "w"),         P(k6.ring, "z"),
                             P(k6.ring, "u^2+u*w"),   P(k6.ring, "v^2+v*w"),
                             P(k6.ring, "x^2+x*z"),   P(k6.ring, "y^2+y*z"),
                             P(k6.ring, "u*z+w*x"),   P(k6.ring, "v*z+w*y")};
  CHECK(verify_relation(P(formal8, "t7^2 + t7*t1*t2 + t3*t2^2 + t5*t1^2"), kgens));
  CHECK(verify_relation(P(formal8, "t8^2 + t8*t1*t2 + t4*t2^2 + t6*t1^2"), kgens));

  auto formal1 = make_ring(f3, {"t1"});
  CHECK_FALSE(verify_relation(P(formal1, "t1"), {P(a3.ring, "x")}));
  CHECK_THROWS_AS(verify_relation(P(formal1, "t1"), gens), Error);
}
