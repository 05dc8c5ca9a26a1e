#include "liegc/dirac.hpp"

#include <optional>

#include "liegc/errors.hpp"

namespace liegc {
namespace {

Vec double_row(const DoubleElement& u) {
  Vec r = u.vec;
  r.insert(r.end(), u.covec.begin(), u.covec.end());
  return r;
}

DoubleElement split_row(const Vec& row) {
  size_t n = row.size() / 2;
  return DoubleElement{Vec(row.begin(), row.begin() + n),
                       Vec(row.begin() + n, row.end())};
}

/// Matrix of conj(eps)(X,Y) = conj(eps(sigma X, sigma Y)) in E's basis, when
/// E is sigma-stable; nullopt otherwise.
std::optional<Mat> conj_form_on_E(const TwoFormOnE& eps, const Conjugation& sigma) {
  const Mat& basis = eps.E.basis;
  int d = basis.rows();
  Mat s(d, d);  // column i = coordinates of sigma(X_i) in E's basis
  for (int i = 0; i < d; ++i) {
    auto coords = coords_in_rowspace(basis, sigma.apply(basis.row(i)));
    if (!coords) return std::nullopt;
    for (int j = 0; j < d; ++j) s.at(j, i) = (*coords)[j];
  }
  return (s.transpose() * eps.matrix * s).conj_entries();
}

/// Kernel of the sharp map of a form matrix on E, returned in g coordinates.
Mat sharp_kernel(const Subalgebra& e, const Mat& form) {
  Mat ker = kernel(form.transpose());  // rows u with u * form = 0
  Mat out(0, e.basis.cols());
  for (int i = 0; i < ker.rows(); ++i) out.append_row(row_apply(ker.row(i), e.basis));
  return ker.rows() > 0 ? rowspace(out) : out;
}

}  // namespace

TwoFormOnE make_two_form(const Subalgebra& e, const Mat& matrix) {
  int d = e.basis.rows();
  if (matrix.rows() != d || matrix.cols() != d)
    throw DimensionMismatchError("two-form matrix must match E's dimension");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j)
      if (matrix.at(i, j) != -matrix.at(j, i))
        throw DimensionMismatchError("two-form matrix must be antisymmetric");
  return TwoFormOnE{e, matrix};
}

TwoFormOnE zero_two_form(const Subalgebra& e) {
  return TwoFormOnE{e, Mat(e.basis.rows(), e.basis.rows())};
}

DiracPair make_dirac_pair(const Subalgebra& e, const TwoFormOnE& eps,
                          const Subalgebra& isotropy) {
  return DiracPair{e, eps, isotropy};
}

bool validate_dirac_pair(const DiracPair& pair) {
  if (!rowspace_contains_all(pair.E.basis, pair.isotropy.basis)) return false;
  for (int i = 0; i < pair.isotropy.basis.rows(); ++i) {
    Vec k = pair.isotropy.basis.row(i);
    for (int j = 0; j < pair.E.basis.rows(); ++j)
      if (!eval_two_form(pair.eps, k, pair.E.basis.row(j)).is_zero()) return false;
  }
  return true;
}

GaussRat pairing(const ChevalleyAlgebra& alg, const DoubleElement& u,
                 const DoubleElement& v) {
  if (int(u.vec.size()) != alg.dim || int(v.vec.size()) != alg.dim)
    throw DimensionMismatchError("pairing: element size");
  return vec_dot(u.vec, v.covec) + vec_dot(v.vec, u.covec);
}

namespace {

/// (ad_x)^T eta without materializing the dense operator.
Vec coad(const ChevalleyAlgebra& alg, const Vec& x, const Vec& eta) {
  Vec out(alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < alg.dim; ++j)
      for (const auto& [idx, c] : alg.table[i][j])
        if (!eta[idx].is_zero()) out[j] += x[i] * c * eta[idx];
  }
  return out;
}

}  // namespace

DoubleElement double_bracket(const ChevalleyAlgebra& alg, const DoubleElement& u,
                             const DoubleElement& v) {
  DoubleElement out;
  out.vec = bracket(alg, u.vec, v.vec);
  // ad*_X eta = -ad_X^T eta.
  out.covec = vec_sub(coad(alg, v.vec, u.covec), coad(alg, u.vec, v.covec));
  return out;
}

GaussRat eval_two_form(const TwoFormOnE& eps, const Vec& x, const Vec& y) {
  auto cx = coords_in_rowspace(eps.E.basis, x);
  auto cy = coords_in_rowspace(eps.E.basis, y);
  if (!cx || !cy) throw DimensionMismatchError("eval_two_form: argument outside E");
  GaussRat s;
  int d = eps.E.basis.rows();
  for (int i = 0; i < d; ++i) {
    if ((*cx)[i].is_zero()) continue;
    for (int j = 0; j < d; ++j)
      if (!(*cy)[j].is_zero()) s += (*cx)[i] * (*cy)[j] * eps.matrix.at(i, j);
  }
  return s;
}

ThreeFormOnE d_E(const TwoFormOnE& eps) {
  const Subalgebra& e = eps.E;
  const ChevalleyAlgebra& alg = *e.alg;
  int d = e.basis.rows();
  // Bracket table in E coordinates; failure to close is NotSubalgebra.
  std::vector<std::vector<Vec>> br(d, std::vector<Vec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec b = bracket(alg, e.basis.row(i), e.basis.row(j));
      auto coords = coords_in_rowspace(e.basis, b);
      if (!coords) throw NotSubalgebraError("d_E: E is not bracket-closed");
      br[i][j] = *coords;
    }
  auto eps_coord = [&](const Vec& cx, int k) {
    GaussRat s;
    for (int i = 0; i < d; ++i)
      if (!cx[i].is_zero()) s += cx[i] * eps.matrix.at(i, k);
    return s;
  };
  ThreeFormOnE out;
  out.dim = d;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        // eps(X_i,[X_j,X_k]) + eps(X_j,[X_k,X_i]) + eps(X_k,[X_i,X_j]),
        // written against row i of eps via antisymmetry.
        GaussRat v;
        v += -eps_coord(br[j][k], i);       // eps(X_i, [X_j,X_k])
        v += -eps_coord(br[i][k], j) * GaussRat(-1);  // eps(X_j, -[X_i,X_k])
        v += -eps_coord(br[i][j], k);       // eps(X_k, [X_i,X_j])
        out.vals.push_back(v);
      }
  return out;
}

LinearDirac make_L(const DiracPair& pair) { return make_L(pair.E, pair.eps); }

LinearDirac make_L(const Subalgebra& e, const TwoFormOnE& eps) {
  const ChevalleyAlgebra& alg = *e.alg;
  int n = alg.dim;
  int d = e.basis.rows();
  // E's basis is reduced echelon, so row i reads coordinate 1 at pivot p_i and
  // xi_i supported on pivot columns satisfies xi_i(X_j) = eps(X_i, X_j).
  Mat copy = e.basis;
  std::vector<int> pivots;
  rref_inplace(copy, &pivots);
  Mat rows(0, 2 * n);
  for (int i = 0; i < d; ++i) {
    Vec r(2 * n);
    for (int c = 0; c < n; ++c) r[c] = e.basis.at(i, c);
    for (int j = 0; j < d; ++j) r[n + pivots[j]] = eps.matrix.at(i, j);
    rows.append_row(r);
  }
  Mat ann = kernel(e.basis.rows() > 0 ? e.basis : Mat(0, n));
  for (int i = 0; i < ann.rows(); ++i) {
    Vec r(2 * n);
    for (int c = 0; c < n; ++c) r[n + c] = ann.at(i, c);
    rows.append_row(r);
  }
  LinearDirac l;
  l.alg = &alg;
  l.basis = rowspace(rows);
  return l;
}

bool is_maximal_isotropic(const LinearDirac& l) {
  int n = l.alg->dim;
  if (l.basis.rows() != n) return false;
  for (int i = 0; i < n; ++i) {
    DoubleElement u = split_row(l.basis.row(i));
    for (int j = i; j < n; ++j) {
      DoubleElement v = split_row(l.basis.row(j));
      if (!pairing(*l.alg, u, v).is_zero()) return false;
    }
  }
  return true;
}

bool is_double_subalgebra(const LinearDirac& l) {
  // Reduce once; each bracket is then eliminated against the pivot rows.
  Mat r = l.basis;
  std::vector<int> pivots;
  int rk = rref_inplace(r, &pivots);
  auto in_span = [&](Vec v) {
    for (int i = 0; i < rk; ++i) {
      GaussRat c = v[pivots[i]];
      if (c.is_zero()) continue;
      for (int j = 0; j < r.cols(); ++j) {
        const GaussRat& rj = r.at(i, j);
        if (!rj.is_zero()) v[j] -= c * rj;
      }
    }
    return vec_is_zero(v);
  };
  for (int i = 0; i < l.basis.rows(); ++i) {
    DoubleElement u = split_row(l.basis.row(i));
    for (int j = i + 1; j < l.basis.rows(); ++j) {
      DoubleElement v = split_row(l.basis.row(j));
      Vec b = double_row(double_bracket(*l.alg, u, v));
      if (!vec_is_zero(b) && !in_span(b)) return false;
    }
  }
  return true;
}

LinearDirac conj_double(const LinearDirac& l, const Conjugation& sigma) {
  int n = l.alg->dim;
  Mat mt = sigma.matrix.transpose();
  Mat rows(0, 2 * n);
  for (int i = 0; i < l.basis.rows(); ++i) {
    DoubleElement u = split_row(l.basis.row(i));
    // sigma(X) on the vector part; (sigma* xi)(X) = conj(xi(sigma X)) dually.
    Vec cv(n), cc(n);
    for (int c = 0; c < n; ++c) {
      cv[c] = u.vec[c].conj();
      cc[c] = u.covec[c].conj();
    }
    DoubleElement out{mat_apply(sigma.matrix, cv), mat_apply(mt, cc)};
    rows.append_row(double_row(out));
  }
  LinearDirac r;
  r.alg = l.alg;
  r.basis = l.basis.rows() > 0 ? rowspace(rows) : rows;
  return r;
}

Mat gc_defect(const DiracPair& pair, const Conjugation& sigma) {
  LinearDirac l = make_L(pair);
  LinearDirac lbar = conj_double(l, sigma);
  return rowspace_intersect(l.basis, lbar.basis);
}

Mat isotropy_in_double(const DiracPair& pair) {
  int n = pair.E.alg->dim;
  Mat rows(0, 2 * n);
  for (int i = 0; i < pair.isotropy.basis.rows(); ++i) {
    Vec r(2 * n);
    for (int c = 0; c < n; ++c) r[c] = pair.isotropy.basis.at(i, c);
    rows.append_row(r);
  }
  return pair.isotropy.basis.rows() > 0 ? rowspace(rows) : rows;
}

bool is_gc(const DiracPair& pair, const Conjugation& sigma) {
  return rowspace_equal(gc_defect(pair, sigma), isotropy_in_double(pair));
}

LinearDirac b_transform(const LinearDirac& l, const Mat& b) {
  int n = l.alg->dim;
  if (b.rows() != n || b.cols() != n)
    throw DimensionMismatchError("b_transform: form must be dim x dim");
  Mat rows(0, 2 * n);
  for (int i = 0; i < l.basis.rows(); ++i) {
    DoubleElement u = split_row(l.basis.row(i));
    Vec shear = row_apply(u.vec, b);  // (i_X B)_j = sum_i x_i B_ij
    DoubleElement out{u.vec, vec_add(u.covec, shear)};
    rows.append_row(double_row(out));
  }
  LinearDirac r;
  r.alg = l.alg;
  r.basis = l.basis.rows() > 0 ? rowspace(rows) : rows;
  return r;
}

Mat restrict_two_form(const Mat& b, const Subalgebra& e) {
  int d = e.basis.rows();
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m.at(i, j) = vec_dot(row_apply(e.basis.row(i), b), e.basis.row(j));
  return m;
}

Mat pushforward(const Mat& f, const Mat& d) {
  int n = f.cols(), m = f.rows();
  if (d.cols() != 2 * n) throw DimensionMismatchError("pushforward: D width != 2n");
  Mat c = kernel(d);  // membership constraints for RS(d)
  // Unknown (x, xi) in C^{n+m} subject to (x, F^T xi) in RS(d).
  Mat ft = f.transpose();
  Mat constraints(c.rows(), n + m);
  for (int i = 0; i < c.rows(); ++i) {
    for (int j = 0; j < n; ++j) constraints.at(i, j) = c.at(i, j);
    for (int j = 0; j < m; ++j) {
      GaussRat s;
      for (int k = 0; k < n; ++k) s += c.at(i, n + k) * ft.at(k, j);
      constraints.at(i, n + j) = s;
    }
  }
  Mat sol = kernel(constraints);
  Mat rows(0, 2 * m);
  for (int i = 0; i < sol.rows(); ++i) {
    Vec srow = sol.row(i);
    Vec x(srow.begin(), srow.begin() + n);
    Vec xi(srow.begin() + n, srow.end());
    Vec fx = mat_apply(f, x);
    Vec r = fx;
    r.insert(r.end(), xi.begin(), xi.end());
    rows.append_row(r);
  }
  return rows.rows() > 0 ? rowspace(rows) : rows;
}

Mat pullback(const Mat& f, const Mat& d) {
  int n = f.cols(), m = f.rows();
  if (d.cols() != 2 * m) throw DimensionMismatchError("pullback: D width != 2m");
  Mat c = kernel(d);
  // Unknown (x, xi) in C^{n+m} subject to (F x, xi) in RS(d).
  Mat constraints(c.rows(), n + m);
  for (int i = 0; i < c.rows(); ++i) {
    for (int j = 0; j < n; ++j) {
      GaussRat s;
      for (int k = 0; k < m; ++k) s += c.at(i, k) * f.at(k, j);
      constraints.at(i, j) = s;
    }
    for (int j = 0; j < m; ++j) constraints.at(i, n + j) = c.at(i, m + j);
  }
  Mat sol = kernel(constraints);
  Mat ft = f.transpose();
  Mat rows(0, 2 * n);
  for (int i = 0; i < sol.rows(); ++i) {
    Vec srow = sol.row(i);
    Vec x(srow.begin(), srow.begin() + n);
    Vec xi(srow.begin() + n, srow.end());
    Vec fstar = mat_apply(ft, xi);
    Vec r = x;
    r.insert(r.end(), fstar.begin(), fstar.end());
    rows.append_row(r);
  }
  return rows.rows() > 0 ? rowspace(rows) : rows;
}

Mat quotient_projection(const ChevalleyAlgebra& alg, const Subalgebra& k) {
  // Rows annihilating k span the dual of g/k; as a map, kernel = k exactly.
  if (k.basis.rows() == 0) return Mat::identity(alg.dim);
  return kernel(k.basis);
}

const char* struct_class_name(StructClass c) {
  switch (c) {
    case StructClass::Complex:
      return "Complex";
    case StructClass::Symplectic:
      return "Symplectic";
    case StructClass::BTransformOfSymplectic:
      return "BTransformOfSymplectic";
    case StructClass::GeneralGC:
      return "GeneralGC";
    case StructClass::Presymplectic:
      return "Presymplectic";
    case StructClass::RealDirac:
      return "RealDirac";
    case StructClass::NotGC:
      return "NotGC";
  }
  return "?";
}

StructClass interpret(const DiracPair& pair, const Conjugation& sigma) {
  const ChevalleyAlgebra& alg = *pair.E.alg;
  bool gc = is_gc(pair, sigma);
  bool e_full = pair.E.dimension() == alg.dim;
  Mat ebar = conj_subspace(sigma, pair.E.basis);
  Mat kbasis = pair.isotropy.basis.rows() > 0 ? rowspace(pair.isotropy.basis)
                                              : Mat(0, alg.dim);
  if (gc) {
    if (pair.eps.matrix.is_zero() &&
        rowspace_intersect(pair.E.basis, ebar) == kbasis &&
        rowspace_sum(pair.E.basis, ebar).rows() == alg.dim)
      return StructClass::Complex;
    if (e_full) {
      auto cf = conj_form_on_E(pair.eps, sigma);
      if (cf) {
        Mat sum = pair.eps.matrix + *cf;   // 2 Re(eps)
        Mat diff = pair.eps.matrix - *cf;  // 2i Im(eps)
        if (sum.is_zero() && sharp_kernel(pair.E, pair.eps.matrix) == kbasis)
          return StructClass::Symplectic;
        if (sharp_kernel(pair.E, diff) == kbasis)
          return StructClass::BTransformOfSymplectic;
      }
    }
    return StructClass::GeneralGC;
  }
  if (e_full) {
    auto cf = conj_form_on_E(pair.eps, sigma);
    if (cf && pair.eps.matrix == *cf) return StructClass::Presymplectic;
  }
  LinearDirac l = make_L(pair);
  if (conj_double(l, sigma) == l) return StructClass::RealDirac;
  return StructClass::NotGC;
}

}  // namespace liegc
