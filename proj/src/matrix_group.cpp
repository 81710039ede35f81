#include "mil/matrix_group.hpp"

#include <map>

#include "mil/errors.hpp"

namespace mil {
namespace {

std::vector<uint32_t> key_of(const Mat& m) {
  std::vector<uint32_t> key;
  key.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) key.push_back(m.at(i, j).code);
  return key;
}

}  // namespace

MatrixGroup MatrixGroup::closure(FieldPtr field, std::vector<Mat> generators, long cap) {
  if (generators.empty()) fail(Errc::invalid_argument, "group needs at least one generator");
  const int n = generators.front().rows();
  for (const Mat& g : generators) {
    if (g.rows() != n || g.cols() != n) fail(Errc::dimension_mismatch, "generators of mixed sizes");
    if (!inverse(g)) fail(Errc::not_invertible, "generator matrix is singular");
  }

  MatrixGroup group(field, n);
  group.generators_ = generators;

  std::map<std::vector<uint32_t>, int> seen;
  auto push = [&](const Mat& m) {
    auto key = key_of(m);
    if (seen.count(key)) return;
    seen.emplace(std::move(key), static_cast<int>(group.elements_.size()));
    group.elements_.push_back(m);
    if (static_cast<long>(group.elements_.size()) > cap)
      fail(Errc::order_cap_exceeded, "group order exceeds cap " + std::to_string(cap));
  };

  push(Mat::identity(field, n));
  for (const Mat& g : generators) push(g);

  // breadth-first products; closure under inverse follows from finiteness
  for (size_t head = 0; head < group.elements_.size(); ++head)
    for (const Mat& g : generators) push(group.elements_[head] * g);

  for (const Mat& g : generators) group.generator_indices_.push_back(*group.find(g));
  return group;
}

std::optional<int> MatrixGroup::find(const Mat& m) const {
  auto key = key_of(m);
  for (size_t i = 0; i < elements_.size(); ++i)
    if (key_of(elements_[i]) == key) return static_cast<int>(i);
  return std::nullopt;
}

int element_order(const Field& f, const Mat& g, long cap) {
  Mat id = Mat::identity(g.field_ptr(), g.rows());
  Mat cur = g;
  long ord = 1;
  while (!(cur == id)) {
    cur = cur * g;
    if (++ord > cap) fail(Errc::order_cap_exceeded, "element order exceeds cap");
  }
  (void)f;
  return static_cast<int>(ord);
}

ElementClass classify_element(const Mat& g) {
  if (g.rows() != g.cols()) fail(Errc::dimension_mismatch, "group element must be square");
  ElementClass out;
  out.order = element_order(g.field(), g);
  out.det = det(g);
  Mat gi = g - Mat::identity(g.field_ptr(), g.rows());
  out.rank_one_minus_g = rank(gi);
  out.pseudoreflection = out.rank_one_minus_g == 1;
  out.transvection = out.pseudoreflection && (gi * gi).is_zero();
  return out;
}

int one_minus_g_height(const Mat& g) {
  return rank(Mat::identity(g.field_ptr(), g.rows()) - g);
}

GroupClass classify_group(const MatrixGroup& g) {
  GroupClass out;
  out.order = g.order();
  out.modular = out.order % g.field().characteristic() == 0;
  for (int i = 0; i < g.order(); ++i) {
    ElementClass e = classify_element(g.element(i));
    if (!(e.det == g.field().one())) out.in_sl = false;
    if (e.pseudoreflection) out.has_pseudoreflection = true;
    if (e.transvection) out.has_transvection = true;
    if (!out.cyclic_generator && e.order == out.order) out.cyclic_generator = i;
  }
  return out;
}

}  // namespace mil
