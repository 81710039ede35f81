#pragma once

#include <optional>
#include <vector>

#include "mil/field.hpp"

namespace mil {

// Dense matrix over a finite field; row-major storage.
class Mat {
 public:
  Mat(FieldPtr field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(FieldPtr field, int n);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

  Mat transposed() const;
  bool is_zero() const;

 private:
  FieldPtr field_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(Mat& m);
int rank(Mat m);
Scalar det(Mat m);
// Inverse, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);
// Basis of the right kernel {x : m x = 0}, canonical (from RREF free columns).
std::vector<std::vector<Scalar>> kernel_basis(const Mat& m);
// One solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b);

// Row-space membership: does v lie in the span of the rows of rref_m (already
// in RREF with the given pivots)?
bool in_row_space(const Mat& rref_m, const std::vector<int>& pivots, const std::vector<Scalar>& v);

}  // namespace mil
