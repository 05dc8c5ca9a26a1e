#include "liegc/nilpotent.hpp"

#include <numeric>
#include <random>

#include "liegc/errors.hpp"

namespace liegc {
namespace {

/// ad_m as an (n^2 x n^2) operator on vec coordinates: x -> m x - x m.
Mat ad_operator(int n, const Mat& m) {
  Mat op(n * n, n * n);
  // (m x)_{ij} = sum_k m_{ik} x_{kj};  (x m)_{ij} = sum_k x_{ik} m_{kj}.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int row = i * n + j;
      for (int k = 0; k < n; ++k) {
        op.at(row, k * n + j) += m.at(i, k);
        op.at(row, i * n + k) -= m.at(k, j);
      }
    }
  return op;
}

Vec trace_row(int n) {
  Vec r(n * n);
  for (int i = 0; i < n; ++i) r[i * n + i] = 1;
  return r;
}

/// Closure of the given vec-rows under the commutator, within gl_n.
Mat matrix_generated(int n, Mat rows) {
  Mat cur = rows.rows() > 0 ? rowspace(rows) : rows;
  while (true) {
    Mat ext = cur;
    for (int i = 0; i < cur.rows(); ++i)
      for (int j = i + 1; j < cur.rows(); ++j) {
        Mat c = commutator(vec_to_mat(cur.row(i), n), vec_to_mat(cur.row(j), n));
        ext.append_row(mat_to_vec(c));
      }
    ext = rowspace(ext);
    if (ext.rows() == cur.rows()) return cur;
    cur = std::move(ext);
  }
}

Mat regular_e(int n) {
  Mat e(n, n);
  for (int i = 0; i + 1 < n; ++i) e.at(i, i + 1) = 1;
  return e;
}

}  // namespace

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition make_partition(int n, const std::vector<int>& parts) {
  Partition p{parts};
  if (parts.empty()) throw InvalidPartitionError("empty partition");
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw InvalidPartitionError("parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw InvalidPartitionError("parts must be weakly decreasing");
  }
  if (p.total() != n) throw InvalidPartitionError("parts must sum to n");
  return p;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Vec mat_to_vec(const Mat& m) {
  Vec v;
  v.reserve(size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Mat vec_to_mat(const Vec& v, int n) {
  if (int(v.size()) != n * n) throw DimensionMismatchError("vec_to_mat: size");
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
  return m;
}

StandardTriple triple_from_partition(int n, const Partition& lambda) {
  Partition p = make_partition(n, lambda.parts);
  StandardTriple t;
  t.n = n;
  t.partition = p;
  t.e = Mat(n, n);
  t.h = Mat(n, n);
  int off = 0;
  for (int m : p.parts) {
    for (int i = 0; i + 1 < m; ++i) t.e.at(off + i, off + i + 1) = 1;
    for (int i = 0; i < m; ++i) t.h.at(off + i, off + i) = GaussRat(m - 1 - 2 * i);
    off += m;
  }
  // Solve [e,f] = h and [h,f] = -2f as a linear system in f's entries.
  Mat ad_e = ad_operator(n, t.e);
  Mat ad_h = ad_operator(n, t.h);
  Mat sys(0, n * n);
  Vec rhs;
  for (int r = 0; r < n * n; ++r) {
    sys.append_row(ad_e.row(r));
    rhs.push_back(mat_to_vec(t.h)[r]);
  }
  Mat shift = ad_h + Mat::identity(n * n).scaled(GaussRat(2));
  for (int r = 0; r < n * n; ++r) {
    sys.append_row(shift.row(r));
    rhs.push_back(GaussRat(0));
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw InvalidPartitionError("no f completes the triple");
  t.f = vec_to_mat(*sol, n);
  return t;
}

bool triple_relations_hold(const StandardTriple& t) {
  return commutator(t.e, t.f) == t.h &&
         commutator(t.h, t.e) == t.e.scaled(GaussRat(2)) &&
         commutator(t.h, t.f) == t.f.scaled(GaussRat(-2));
}

Mat matrix_centralizer(int n, const std::vector<Mat>& elements) {
  Mat constraints(0, n * n);
  for (const Mat& m : elements) constraints.append_rows(ad_operator(n, m));
  constraints.append_row(trace_row(n));
  return kernel(constraints);
}

Mat centralizer_nilpotent(int n, const Partition& lambda) {
  StandardTriple t = triple_from_partition(n, lambda);
  return matrix_centralizer(n, {t.e});
}

bool certify_pair_centralizer_zero(int n) {
  Mat e = regular_e(n);
  Mat low(n, n);
  low.at(n - 1, 0) = 1;  // spans the lowest root space
  return matrix_centralizer(n, {e, low}).rows() == 0;
}

bool certify_slice_generation(int n, const Partition& lambda) {
  StandardTriple t = triple_from_partition(n, lambda);
  Mat gens = centralizer_nilpotent(n, lambda);
  gens.append_row(mat_to_vec(t.e));
  gens.append_row(mat_to_vec(t.h));
  gens.append_row(mat_to_vec(t.f));
  return matrix_generated(n, gens).rows() == n * n - 1;
}

NilpotentGCParams gc_params_nilpotent(int n, const Partition& lambda) {
  Mat ze = centralizer_nilpotent(n, lambda);
  std::vector<Mat> elems;
  for (int i = 0; i < ze.rows(); ++i) elems.push_back(vec_to_mat(ze.row(i), n));
  // Anything commuting with all of Z(e) commutes with e, so this is Z(Z(e)).
  return NilpotentGCParams{matrix_centralizer(n, elems)};
}

Mat entrywise_imag(const Mat& t) {
  Mat m(t.rows(), t.cols());
  GaussRat two_i = GaussRat(Rational(0), Rational(2));
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j)
      m.at(i, j) = (t.at(i, j) - t.at(i, j).conj()) / two_i;
  return m;
}

bool nilpotent_gc_predicate(int n, const Partition& lambda, const Mat& t) {
  Mat ti = entrywise_imag(t);
  Mat zti = matrix_centralizer(n, {ti});
  Mat ze = centralizer_nilpotent(n, lambda);
  return rowspace_equal(zti, ze);
}

GaussRat nilpotent_two_form(int n, const Mat& t, const Mat& x, const Mat& y) {
  // kappa(a,b) = 2n tr(ab) on sl_n.
  Mat prod = t * commutator(x, y);
  GaussRat tr;
  for (int i = 0; i < n; ++i) tr += prod.at(i, i);
  return tr * GaussRat(2 * n);
}

ProbeReport probe_prop_ij(int n, const Partition& lambda, int trials, uint64_t seed) {
  Mat ze = centralizer_nilpotent(n, lambda);
  ProbeReport rep;
  rep.trials = trials;
  int full_dim = n * n - 1;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + uint64_t(t) * 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> dist(-2, 2);
    Mat gens = ze;
    for (int g = 0; g < 2; ++g) {
      Mat r(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          r.at(i, j) = GaussRat(Rational(dist(rng)), Rational(dist(rng)));
      // Project onto sl_n by pushing the trace into the last diagonal entry.
      GaussRat tr;
      for (int i = 0; i < n; ++i) tr += r.at(i, i);
      r.at(n - 1, n - 1) -= tr;
      gens.append_row(mat_to_vec(r));
    }
    Mat e_sub = matrix_generated(n, gens);
    Mat conj_rows(0, n * n);
    for (int i = 0; i < e_sub.rows(); ++i) {
      Vec row = e_sub.row(i);
      for (auto& c : row) c = c.conj();
      conj_rows.append_row(row);
    }
    if (rowspace_sum(e_sub, conj_rows).rows() == full_dim) {
      ++rep.full_sum_count;
      if (e_sub.rows() != full_dim) ++rep.violations;
    }
  }
  return rep;
}

}  // namespace liegc
