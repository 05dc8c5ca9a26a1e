#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "liegc/scalar.hpp"

namespace liegc {

using Vec = std::vector<GaussRat>;

/// Dense matrix over Q(i).  Rows double as exact subspace bases: a subspace of
/// Q(i)^n is represented by the reduced row echelon form of any spanning set,
/// which makes equality of subspaces a plain matrix comparison.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n);
  static Mat from_rows(std::initializer_list<Vec> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussRat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const GaussRat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Vec row(int i) const;
  void set_row(int i, const Vec& v);
  void append_row(const Vec& v);
  void append_rows(const Mat& m);

  Mat transpose() const;
  Mat conj_entries() const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);

  Mat scaled(const GaussRat& c) const;

 private:
  int rows_, cols_;
  std::vector<GaussRat> a_;
};

/// In-place Gauss-Jordan reduction.  Returns the rank; pivot columns are
/// appended to *pivots when given.  Zero rows sink to the bottom.
int rref_inplace(Mat& m, std::vector<int>* pivots = nullptr);

/// Canonical basis of the row space: RREF with zero rows dropped.
Mat rowspace(const Mat& m);

/// Rows spanning the right kernel {v : m v = 0}, in canonical form.
Mat kernel(const Mat& m);

int rank(const Mat& m);

Mat rowspace_sum(const Mat& a, const Mat& b);
Mat rowspace_intersect(const Mat& a, const Mat& b);
bool rowspace_contains(const Mat& a, const Vec& x);
bool rowspace_contains_all(const Mat& a, const Mat& b);
bool rowspace_equal(const Mat& a, const Mat& b);

/// Coordinates u with u * basis == x, when basis rows are independent and x
/// lies in their span.
std::optional<Vec> coords_in_rowspace(const Mat& basis, const Vec& x);

/// One solution x of a x = rhs (column vector), if any.
std::optional<Vec> solve(const Mat& a, const Vec& rhs);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const GaussRat& c, const Vec& a);
GaussRat vec_dot(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& a);

/// y = m x for a column vector x.
Vec mat_apply(const Mat& m, const Vec& x);
/// y = x m for a row vector x.
Vec row_apply(const Vec& x, const Mat& m);

}  // namespace liegc
