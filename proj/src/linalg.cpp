#include "mil/linalg.hpp"

#include "mil/errors.hpp"

namespace mil {

Mat Mat::identity(FieldPtr field, int n) {
  Mat m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) fail(Errc::dimension_mismatch, "matrix product shape mismatch");
  const Field& f = a.field();
  Mat out(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      Scalar aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (int j = 0; j < b.cols_; ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Errc::dimension_mismatch, "matrix sum shape mismatch");
  const Field& f = a.field();
  Mat out(a.field_, a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = f.add(a.a_[i], b.a_[i]);
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Errc::dimension_mismatch, "matrix difference shape mismatch");
  const Field& f = a.field();
  Mat out(a.field_, a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = f.sub(a.a_[i], b.a_[i]);
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Mat Mat::transposed() const {
  Mat out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (x.code) return false;
  return true;
}

std::vector<int> rref(Mat& m) {
  const Field& f = m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!f.is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
    Scalar s = f.inv(m.at(row, col));
    for (int c = col; c < m.cols(); ++c) m.at(row, c) = f.mul(m.at(row, c), s);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      Scalar t = m.at(r, col);
      if (f.is_zero(t)) continue;
      for (int c = col; c < m.cols(); ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(t, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

Scalar det(Mat m) {
  if (m.rows() != m.cols()) fail(Errc::dimension_mismatch, "determinant of non-square matrix");
  const Field& f = m.field();
  Scalar d = f.one();
  int n = m.rows();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!f.is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return f.zero();
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(col, c));
      d = f.neg(d);
    }
    d = f.mul(d, m.at(col, col));
    Scalar s = f.inv(m.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      Scalar t = f.mul(m.at(r, col), s);
      if (f.is_zero(t)) continue;
      for (int c = col; c < n; ++c) m.at(r, c) = f.sub(m.at(r, c), f.mul(t, m.at(col, c)));
    }
  }
  return d;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) fail(Errc::dimension_mismatch, "inverse of non-square matrix");
  int n = m.rows();
  Mat aug(m.field_ptr(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.field().one();
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  Mat out(m.field_ptr(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

std::vector<std::vector<Scalar>> kernel_basis(const Mat& m) {
  Mat r = m;
  auto pivots = rref(r);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), f.zero());
    v[free] = f.one();
    for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = f.neg(r.at(static_cast<int>(pi), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != m.rows()) fail(Errc::dimension_mismatch, "rhs length mismatch");
  const Field& f = m.field();
  Mat aug(m.field_ptr(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(m.cols(), f.zero());
  for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(static_cast<int>(pi), m.cols());
  return x;
}

bool in_row_space(const Mat& rref_m, const std::vector<int>& pivots, const std::vector<Scalar>& v) {
  const Field& f = rref_m.field();
  if (static_cast<int>(v.size()) != rref_m.cols()) fail(Errc::dimension_mismatch, "vector length mismatch");
  std::vector<Scalar> w = v;
  for (size_t pi = 0; pi < pivots.size(); ++pi) {
    Scalar c = w[pivots[pi]];
    if (f.is_zero(c)) continue;
    for (int j = 0; j < rref_m.cols(); ++j)
      w[j] = f.sub(w[j], f.mul(c, rref_m.at(static_cast<int>(pi), j)));
  }
  for (const auto& x : w)
    if (x.code) return false;
  return true;
}

}  // namespace mil
