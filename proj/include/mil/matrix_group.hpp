#pragma once

#include <optional>
#include <vector>

#include "mil/linalg.hpp"

namespace mil {

struct ElementClass {
  int order = 1;
  Scalar det;
  int rank_one_minus_g = 0;
  bool pseudoreflection = false;
  bool transvection = false;
};

struct GroupClass {
  long order = 1;
  bool in_sl = true;
  bool has_pseudoreflection = false;
  bool has_transvection = false;
  bool modular = false;  // characteristic divides the group order
  std::optional<int> cyclic_generator;
};

// Finite subgroup of GL_n over a small field; complete element table in
// deterministic breadth-first insertion order.
class MatrixGroup {
 public:
  static MatrixGroup closure(FieldPtr field, std::vector<Mat> generators, long cap = 10000);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  int dim() const { return n_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<Mat>& generators() const { return generators_; }
  const std::vector<Mat>& elements() const { return elements_; }
  const Mat& element(int i) const { return elements_[static_cast<size_t>(i)]; }
  // Indices of the generators inside the element table.
  const std::vector<int>& generator_indices() const { return generator_indices_; }

  std::optional<int> find(const Mat& m) const;

 private:
  MatrixGroup(FieldPtr field, int n) : field_(std::move(field)), n_(n) {}

  FieldPtr field_;
  int n_;
  std::vector<Mat> generators_;
  std::vector<Mat> elements_;
  std::vector<int> generator_indices_;
};

int element_order(const Field& f, const Mat& g, long cap = 1 << 20);
ElementClass classify_element(const Mat& g);
// Height of the ideal generated by the (1-g)-images of the variables.
int one_minus_g_height(const Mat& g);
GroupClass classify_group(const MatrixGroup& g);

}  // namespace mil
