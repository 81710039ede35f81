#include "mil/matrix_group.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "mil/parse.hpp"

using namespace mil;
using miltest::F;

namespace {

Mat M(const FieldPtr& f, const std::vector<std::vector<const char*>>& rows) {
  Mat m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = parse_scalar(f, rows[i][j]);
  return m;
}

MatrixGroup klein6(const FieldPtr& f2) {
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
  return MatrixGroup::closure(f2, {g, h});
}

}  // namespace

TEST_CASE("closure of a swap") {
  auto f3 = F(3);
  auto g = MatrixGroup::closure(f3, {M(f3, {{"0", "1"}, {"1", "0"}})});
  CHECK(g.order() == 2);
}

TEST_CASE("klein group from the six-variable generators") {
  auto f2 = F(2);
  auto g = klein6(f2);
  CHECK(g.order() == 4);
  GroupClass gc = classify_group(g);
  CHECK(gc.in_sl);
  CHECK_FALSE(gc.has_pseudoreflection);
  CHECK(gc.modular);
  CHECK_FALSE(gc.cyclic_generator.has_value());  // all non-identity elements have order 2
}

TEST_CASE("the order-12 group generated by a diagonal and a unipotent") {
  auto f9 = F(3, 2);
  Mat d = M(f9, {{"a", "0"}, {"0", "2*a"}});
  Mat u = M(f9, {{"1", "1"}, {"0", "1"}});

  // oracle: the twelve products u^i d^j enumerate the closure
  std::vector<Mat> listed;
  Mat ui = Mat::identity(f9, 2);
  for (int i = 0; i < 3; ++i) {
    Mat dj = Mat::identity(f9, 2);
    for (int j = 0; j < 4; ++j) {
      listed.push_back(ui * dj);
      dj = dj * d;
    }
    ui = ui * u;
  }
  std::sort(listed.begin(), listed.end(), [](const Mat& x, const Mat& y) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (!(x.at(i, j) == y.at(i, j))) return x.at(i, j).code < y.at(i, j).code;
    return false;
  });
  listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
  CHECK(listed.size() == 12);

  auto g = MatrixGroup::closure(f9, {d, u});
  CHECK(g.order() == 12);
  CHECK(g.order() % 4 == 0);
  CHECK(g.order() % 3 == 0);
  GroupClass gc = classify_group(g);
  CHECK(gc.in_sl);
  CHECK(gc.has_transvection);
  CHECK(gc.modular);
}

TEST_CASE("element classification") {
  auto f3 = F(3);
  ElementClass swap3 = classify_element(M(f3, {{"0", "1"}, {"1", "0"}}));
  CHECK(swap3.pseudoreflection);
  CHECK_FALSE(swap3.transvection);
  CHECK(swap3.order == 2);
  CHECK(swap3.det == f3->from_int(-1));

  auto f2 = F(2);
  ElementClass swap2 = classify_element(M(f2, {{"0", "1"}, {"1", "0"}}));
  CHECK(swap2.pseudoreflection);
  CHECK(swap2.transvection);

  auto g6 = klein6(f2);
  ElementClass kg = classify_element(g6.generators()[0]);
  CHECK(kg.rank_one_minus_g == 2);
  CHECK_FALSE(kg.pseudoreflection);
}

TEST_CASE("height of the difference ideal") {
  auto f3 = F(3);
  CHECK(one_minus_g_height(Mat::identity(f3, 3)) == 0);
  CHECK(one_minus_g_height(M(f3, {{"0", "1"}, {"1", "0"}})) == 1);
  auto f2 = F(2);
  CHECK(one_minus_g_height(klein6(f2).generators()[1]) == 2);

  // height one is exactly the pseudoreflection condition
  auto g = MatrixGroup::closure(f3, {M(f3, {{"0", "1", "0"}, {"0", "0", "1"}, {"1", "0", "0"}}),
                                     M(f3, {{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "1"}})});
  for (const Mat& e : g.elements()) {
    ElementClass c = classify_element(e);
    CHECK((one_minus_g_height(e) == 1) == c.pseudoreflection);
  }
}

TEST_CASE("group classification on the three-cycle") {
  auto f3 = F(3);
  auto g = MatrixGroup::closure(f3, {M(f3, {{"0", "1", "0"}, {"0", "0", "1"}, {"1", "0", "0"}})});
  GroupClass gc = classify_group(g);
  CHECK(gc.order == 3);
  CHECK(gc.in_sl);
  CHECK_FALSE(gc.has_pseudoreflection);
  CHECK(gc.modular);
  CHECK(gc.cyclic_generator.has_value());
}

TEST_CASE("trivial group") {
  auto f3 = F(3);
  auto g = MatrixGroup::closure(f3, {Mat::identity(f3, 2)});
  GroupClass gc = classify_group(g);
  CHECK(gc.order == 1);
  CHECK(gc.in_sl);
  CHECK_FALSE(gc.modular);
  CHECK(gc.cyclic_generator.has_value());
}

TEST_CASE("determinant is multiplicative over the element table") {
  auto f9 = F(3, 2);
  auto g = MatrixGroup::closure(f9, {M(f9, {{"a", "0"}, {"0", "2*a"}}), M(f9, {{"1", "1"}, {"0", "1"}})});
  for (const Mat& x : g.elements())
    for (const Mat& y : g.elements()) CHECK(det(x * y) == f9->mul(det(x), det(y)));
}

TEST_CASE("element table is closed with orders dividing the group order") {
  auto f9 = F(3, 2);
  auto g = MatrixGroup::closure(f9, {M(f9, {{"a", "0"}, {"0", "2*a"}}), M(f9, {{"1", "1"}, {"0", "1"}})});
  for (const Mat& x : g.elements()) {
    CHECK(g.order() % element_order(*f9, x) == 0);
    auto inv_x = inverse(x);
    REQUIRE(inv_x.has_value());
    CHECK(g.find(*inv_x).has_value());
    for (const Mat& y : g.generators()) CHECK(g.find(x * y).has_value());
  }
}

TEST_CASE("transvections have order p and cyclic generators have full order") {
  auto f9 = F(3, 2);
  auto f2 = F(2);
  std::vector<MatrixGroup> groups;
  groups.push_back(MatrixGroup::closure(
      f9, {M(f9, {{"a", "0"}, {"0", "2*a"}}), M(f9, {{"1", "1"}, {"0", "1"}})}));
  groups.push_back(klein6(f2));
  groups.push_back(MatrixGroup::closure(f2, {M(f2, {{"0", "1"}, {"1", "0"}})}));
  for (const auto& g : groups) {
    uint32_t p = g.field().characteristic();
    for (const Mat& e : g.elements()) {
      ElementClass c = classify_element(e);
      if (c.transvection) CHECK(c.order == static_cast<int>(p));
    }
    GroupClass gc = classify_group(g);
    if (gc.cyclic_generator)
      CHECK(classify_element(g.element(*gc.cyclic_generator)).order == gc.order);
  }
}

TEST_CASE("nonmodular groups have no transvections") {
  auto f3 = F(3);
  auto g = MatrixGroup::closure(f3, {M(f3, {{"0", "1"}, {"1", "0"}})});
  GroupClass gc = classify_group(g);
  CHECK_FALSE(gc.modular);
  CHECK_FALSE(gc.has_transvection);
}

TEST_CASE("closure caps and singular generators are rejected") {
  auto f3 = F(3);
  Mat sing(f3, 2, 2);
  sing.at(0, 0) = f3->one();
  CHECK_THROWS_AS(MatrixGroup::closure(f3, {sing}), Error);
  CHECK_THROWS_AS(MatrixGroup::closure(f3, {M(f3, {{"0", "1"}, {"1", "0"}})}, 1), Error);
}
