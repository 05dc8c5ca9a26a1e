#include "liegc/matrix.hpp"

#include <stdexcept>

#include "liegc/errors.hpp"

namespace liegc {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::initializer_list<Vec> rows) {
  Mat m;
  for (const Vec& r : rows) m.append_row(r);
  return m;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Mat::set_row(int i, const Vec& v) {
  if (int(v.size()) != cols_) throw DimensionMismatchError("set_row: width mismatch");
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Mat::append_row(const Vec& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = int(v.size());
  if (int(v.size()) != cols_) throw DimensionMismatchError("append_row: width mismatch");
  a_.insert(a_.end(), v.begin(), v.end());
  ++rows_;
}

void Mat::append_rows(const Mat& m) {
  if (m.rows_ == 0) return;
  if (rows_ == 0 && cols_ == 0) cols_ = m.cols_;
  if (m.cols_ != cols_) throw DimensionMismatchError("append_rows: width mismatch");
  a_.insert(a_.end(), m.a_.begin(), m.a_.end());
  rows_ += m.rows_;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::conj_entries() const {
  Mat c(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) c.at(i, j) = at(i, j).conj();
  return c;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatchError("Mat +: shape mismatch");
  Mat c(a.rows_, a.cols_);
  for (size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] + b.a_[k];
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatchError("Mat -: shape mismatch");
  Mat c(a.rows_, a.cols_);
  for (size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] - b.a_[k];
  return c;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatchError("Mat *: shape mismatch");
  Mat c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const GaussRat& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const GaussRat& bkj = b.at(k, j);
        if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
      }
    }
  return c;
}

Mat Mat::scaled(const GaussRat& c) const {
  Mat m(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * c;
  return m;
}

int rref_inplace(Mat& m, std::vector<int>* pivots) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
    GaussRat inv = m.at(rank, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(rank, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, col).is_zero()) continue;
      GaussRat f = m.at(r, col);
      for (int j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

Mat rowspace(const Mat& m) {
  Mat r = m;
  int rk = rref_inplace(r);
  Mat out(0, m.cols());
  for (int i = 0; i < rk; ++i) out.append_row(r.row(i));
  return out;
}

Mat kernel(const Mat& m) {
  Mat r = m;
  std::vector<int> pivots;
  int rk = rref_inplace(r, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  Mat out(0, m.cols());
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (int i = 0; i < rk; ++i) v[pivots[i]] = -r.at(i, free);
    out.append_row(v);
  }
  return rowspace(out);
}

int rank(const Mat& m) {
  Mat r = m;
  return rref_inplace(r);
}

Mat rowspace_sum(const Mat& a, const Mat& b) {
  Mat s = a;
  s.append_rows(b);
  return rowspace(s);
}

Mat rowspace_intersect(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw DimensionMismatchError("intersect: width mismatch");
  // Ann(RS(m)) under the standard bilinear dot is kernel(m); intersecting row
  // spaces is annihilating the union of annihilators.
  Mat constraints = kernel(a);
  constraints.append_rows(kernel(b));
  return kernel(constraints);
}

bool rowspace_contains(const Mat& a, const Vec& x) {
  Mat r = a;
  std::vector<int> pivots;
  int rk = rref_inplace(r, &pivots);
  Vec v = x;
  for (int i = 0; i < rk; ++i) {
    GaussRat c = v[pivots[i]];
    if (c.is_zero()) continue;
    for (int j = 0; j < a.cols(); ++j) {
      const GaussRat& rj = r.at(i, j);
      if (!rj.is_zero()) v[j] -= c * rj;
    }
  }
  return vec_is_zero(v);
}

bool rowspace_contains_all(const Mat& a, const Mat& b) {
  Mat s = a;
  s.append_rows(b);
  return rank(s) == rank(a);
}

bool rowspace_equal(const Mat& a, const Mat& b) { return rowspace(a) == rowspace(b); }

std::optional<Vec> coords_in_rowspace(const Mat& basis, const Vec& x) {
  // u * basis = x  <=>  basis^T u^T = x^T.
  return solve(basis.transpose(), x);
}

std::optional<Vec> solve(const Mat& a, const Vec& rhs) {
  if (int(rhs.size()) != a.rows()) throw DimensionMismatchError("solve: rhs size");
  Mat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = rhs[i];
  }
  std::vector<int> pivots;
  int rk = rref_inplace(aug, &pivots);
  for (int i = 0; i < rk; ++i)
    if (pivots[i] == a.cols()) return std::nullopt;  // inconsistent
  Vec x(a.cols());
  for (int i = 0; i < rk; ++i) x[pivots[i]] = aug.at(i, a.cols());
  return x;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("vec_add");
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("vec_sub");
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vec vec_scale(const GaussRat& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

GaussRat vec_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("vec_dot");
  GaussRat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Vec mat_apply(const Mat& m, const Vec& x) {
  if (int(x.size()) != m.cols()) throw DimensionMismatchError("mat_apply");
  Vec y(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) y[i] += m.at(i, j) * x[j];
  return y;
}

Vec row_apply(const Vec& x, const Mat& m) {
  if (int(x.size()) != m.rows()) throw DimensionMismatchError("row_apply");
  Vec y(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) y[j] += x[i] * m.at(i, j);
  }
  return y;
}

}  // namespace liegc
