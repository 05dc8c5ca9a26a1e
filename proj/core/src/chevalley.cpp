#include "liegc/chevalley.hpp"

#include <map>

#include "liegc/errors.hpp"

namespace liegc {
namespace {

/// Structure-constant builder.  Signs are pinned by the extraspecial-pair
/// convention: for each non-simple positive root the minimal decomposition
/// gets N = p+1 > 0, and every other constant follows from the standard
/// two-root and four-root relations.
class NBuilder {
 public:
  explicit NBuilder(const RootSystem& rs) : rs_(rs) {}

  // N_{alpha,beta} for root indices with alpha+beta a root.
  Rational n(int i, int j) {
    auto key = std::make_pair(i, j);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Rational v = compute(i, j);
    memo_[key] = v;
    return v;
  }

  // Largest k >= 0 with beta - k*alpha a root.
  int p_string(int i, int j) {
    int p = 0;
    int cur = j;
    int ni = rs_.neg_index[i];
    while (true) {
      int nxt = rs_.sum_index[cur][ni];
      if (nxt < 0) break;
      cur = nxt;
      ++p;
    }
    return p;
  }

 private:
  bool positive(int i) const { return rs_.height(i) > 0; }

  Rational compute(int i, int j) {
    int s = rs_.sum_index[i][j];
    if (s < 0) throw DimensionMismatchError("N requested for a non-root sum");
    bool pi = positive(i), pj = positive(j);
    if (pi && pj) {
      if (i > j) return -n(j, i);
      auto [eps, eta] = extraspecial(s);
      if (eps == i && eta == j) return Rational(p_string(i, j) + 1);
      // Four-root relation on (eps, eta, -alpha, -beta).
      Rational acc = 0;
      int eta_mi = rs_.sum_index[eta][rs_.neg_index[i]];
      if (eta_mi >= 0)
        acc += n(eta, rs_.neg_index[i]) * n(eps, rs_.neg_index[j]) / rs_.length2(eta_mi);
      int eps_mi = rs_.sum_index[eps][rs_.neg_index[i]];
      if (eps_mi >= 0)
        acc -= n(eps, rs_.neg_index[i]) * n(eta, rs_.neg_index[j]) / rs_.length2(eps_mi);
      return rs_.length2(s) * acc / n(eps, eta);
    }
    if (!pi && !pj) return -n(rs_.neg_index[i], rs_.neg_index[j]);
    // Mixed signs: rotate the zero-sum triple (i, j, k) to a same-sign pair.
    int k = rs_.neg_index[s];
    if (positive(j) == positive(k))
      return rs_.length2(k) * n(j, k) / rs_.length2(i);
    return rs_.length2(k) * n(k, i) / rs_.length2(j);
  }

  // Minimal positive decomposition (eps, eta) of the positive root s.
  std::pair<int, int> extraspecial(int s) {
    auto it = esp_.find(s);
    if (it != esp_.end()) return it->second;
    for (int eps = 0; eps < rs_.num_roots(); ++eps) {
      if (!positive(eps)) continue;
      int eta = rs_.sum_index[s][rs_.neg_index[eps]];
      if (eta >= 0 && positive(eta) && eps != s) {
        esp_[s] = {eps, eta};
        return {eps, eta};
      }
    }
    throw DimensionMismatchError("no decomposition for a non-simple positive root");
  }

  const RootSystem& rs_;
  std::map<std::pair<int, int>, Rational> memo_;
  std::map<int, std::pair<int, int>> esp_;
};

}  // namespace

AlgebraElement ChevalleyAlgebra::basis_vector(int idx) const {
  AlgebraElement v(dim);
  v[idx] = 1;
  return v;
}

GaussRat ChevalleyAlgebra::structure_constant(int root_a, int root_b) const {
  int s = rs.sum_index[root_a][root_b];
  if (s < 0) throw DimensionMismatchError("structure_constant: sum is not a root");
  for (const auto& [idx, c] : table[e_index(root_a)][e_index(root_b)])
    if (idx == e_index(s)) return c;
  return GaussRat(0);
}

Mat ChevalleyAlgebra::ad(const AlgebraElement& x) const {
  if (int(x.size()) != dim) throw DimensionMismatchError("ad: element size");
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j)
      for (const auto& [idx, c] : table[i][j]) m.at(idx, j) += x[i] * c;
  }
  return m;
}

ChevalleyAlgebra build_chevalley(const RootSystem& rs) {
  ChevalleyAlgebra alg;
  alg.rs = rs;
  int r = rs.rank, n = rs.num_roots();
  alg.dim = r + n;
  alg.table.assign(alg.dim, std::vector<std::vector<std::pair<int, GaussRat>>>(alg.dim));

  NBuilder nb(alg.rs);
  auto& t = alg.table;

  // [h_i, e_beta] = <beta, alpha_i-check> e_beta.
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < n; ++k) {
      int pairing = 0;
      for (int j = 0; j < r; ++j) pairing += alg.rs.roots[k][j] * alg.rs.cartan[i][j];
      if (pairing != 0) {
        t[i][r + k].push_back({r + k, GaussRat(pairing)});
        t[r + k][i].push_back({r + k, GaussRat(-pairing)});
      }
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (alg.rs.neg_index[a] == b) {
        // [e_alpha, e_{-alpha}] = alpha-check in the h basis.
        Coroot cr = coroot(alg.rs, a);
        for (int i = 0; i < r; ++i)
          if (cr.vector[i] != 0) t[r + a][r + b].push_back({i, GaussRat(cr.vector[i])});
        continue;
      }
      int s = alg.rs.sum_index[a][b];
      if (s < 0) continue;
      Rational c = nb.n(a, b);
      if (c.get_den() != 1)
        throw UnsupportedTypeError("internal: non-integral structure constant");
      if (c != 0) t[r + a][r + b].push_back({r + s, GaussRat(c)});
    }

  alg.killing = Mat(alg.dim, alg.dim);
  std::vector<Mat> ads;
  ads.reserve(alg.dim);
  for (int i = 0; i < alg.dim; ++i) ads.push_back(alg.ad(alg.basis_vector(i)));
  for (int i = 0; i < alg.dim; ++i)
    for (int j = i; j < alg.dim; ++j) {
      GaussRat tr;
      for (int p = 0; p < alg.dim; ++p)
        for (int q = 0; q < alg.dim; ++q) tr += ads[i].at(p, q) * ads[j].at(q, p);
      alg.killing.at(i, j) = tr;
      alg.killing.at(j, i) = tr;
    }
  return alg;
}

AlgebraElement bracket(const ChevalleyAlgebra& alg, const AlgebraElement& x,
                       const AlgebraElement& y) {
  if (int(x.size()) != alg.dim || int(y.size()) != alg.dim)
    throw DimensionMismatchError("bracket: element size");
  AlgebraElement out(alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < alg.dim; ++j) {
      if (y[j].is_zero()) continue;
      for (const auto& [idx, c] : alg.table[i][j]) out[idx] += x[i] * y[j] * c;
    }
  }
  return out;
}

GaussRat killing_form(const ChevalleyAlgebra& alg, const AlgebraElement& x,
                      const AlgebraElement& y) {
  if (int(x.size()) != alg.dim || int(y.size()) != alg.dim)
    throw DimensionMismatchError("killing_form: element size");
  GaussRat s;
  for (int i = 0; i < alg.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < alg.dim; ++j)
      if (!y[j].is_zero()) s += x[i] * y[j] * alg.killing.at(i, j);
  }
  return s;
}

AlgebraElement Conjugation::apply(const AlgebraElement& x) const {
  Vec c(x.size());
  for (size_t i = 0; i < x.size(); ++i) c[i] = x[i].conj();
  return mat_apply(matrix, c);
}

int Conjugation::root_action(const RootSystem& rs, int root_idx) const {
  return kind == ConjKind::compact ? rs.neg_index[root_idx] : root_idx;
}

Conjugation conjugation(const ChevalleyAlgebra& alg, ConjKind kind) {
  Conjugation c;
  c.kind = kind;
  switch (kind) {
    case ConjKind::compact: {
      c.matrix = Mat(alg.dim, alg.dim);
      for (int i = 0; i < alg.rs.rank; ++i) c.matrix.at(i, i) = -1;
      for (int k = 0; k < alg.rs.num_roots(); ++k)
        c.matrix.at(alg.e_index(alg.rs.neg_index[k]), alg.e_index(k)) = -1;
      break;
    }
    case ConjKind::split:
    case ConjKind::matrix_entrywise:
      // The split form is spanned by the Chevalley basis itself; for the
      // A-series matrix model entrywise conjugation fixes the same basis.
      c.matrix = Mat::identity(alg.dim);
      break;
  }
  return c;
}

CompactRootBasis compact_root_basis(const ChevalleyAlgebra& alg, const Conjugation& conj) {
  if (conj.kind != ConjKind::compact)
    throw UnsupportedKindError("compact_root_basis requires the compact conjugation");
  int n = alg.rs.num_roots();
  CompactRootBasis pb;
  pb.vectors = Mat(n, alg.dim);
  pb.duals = Mat(n, alg.dim);
  for (int k = 0; k < n; ++k) {
    GaussRat sign = alg.rs.height(k) > 0 ? GaussRat(1) : GaussRat(-1);
    pb.vectors.at(k, alg.e_index(k)) = sign;
    pb.duals.at(k, alg.e_index(k)) = sign;
  }
  return pb;
}

Subalgebra make_subalgebra(const ChevalleyAlgebra& alg, const Mat& spanning_rows) {
  if (spanning_rows.rows() > 0 && spanning_rows.cols() != alg.dim)
    throw DimensionMismatchError("make_subalgebra: row width");
  Subalgebra s;
  s.alg = &alg;
  s.basis = spanning_rows.rows() > 0 ? rowspace(spanning_rows) : Mat(0, alg.dim);
  return s;
}

bool is_subalgebra(const Subalgebra& s) {
  for (int i = 0; i < s.basis.rows(); ++i)
    for (int j = i + 1; j < s.basis.rows(); ++j) {
      AlgebraElement b = bracket(*s.alg, s.basis.row(i), s.basis.row(j));
      if (!vec_is_zero(b) && !rowspace_contains(s.basis, b)) return false;
    }
  return true;
}

Subalgebra subalgebra_from_subset(const ChevalleyAlgebra& alg, const RootSubset& a,
                                  bool include_cartan, bool certify) {
  Mat cartan_part(0, alg.dim);
  if (include_cartan)
    for (int i = 0; i < alg.rs.rank; ++i) cartan_part.append_row(alg.h(i));
  return subalgebra_from_subset(alg, a, cartan_part, certify);
}

Subalgebra subalgebra_from_subset(const ChevalleyAlgebra& alg, const RootSubset& a,
                                  const Mat& cartan_part, bool certify) {
  if (certify && !is_closed(a))
    throw NotClosedError("subset is not closed under root addition");
  Mat rows = cartan_part;
  if (rows.cols() == 0) rows = Mat(0, alg.dim);
  for (int k : a.indices()) rows.append_row(alg.e(k));
  return make_subalgebra(alg, rows);
}

Subalgebra centralizer(const ChevalleyAlgebra& alg,
                       const std::vector<AlgebraElement>& elements) {
  Mat constraints(0, alg.dim);
  for (const auto& s : elements) constraints.append_rows(alg.ad(s));
  Subalgebra out;
  out.alg = &alg;
  out.basis = constraints.rows() == 0 ? Mat::identity(alg.dim) : kernel(constraints);
  return out;
}

Subalgebra generated_subalgebra(const ChevalleyAlgebra& alg,
                                const std::vector<AlgebraElement>& gens) {
  Mat cur(0, alg.dim);
  for (const auto& g : gens) cur.append_row(g);
  cur = cur.rows() > 0 ? rowspace(cur) : cur;
  while (true) {
    Mat ext = cur;
    for (int i = 0; i < cur.rows(); ++i)
      for (int j = i + 1; j < cur.rows(); ++j)
        ext.append_row(bracket(alg, cur.row(i), cur.row(j)));
    ext = rowspace(ext);
    if (ext.rows() == cur.rows()) break;
    cur = std::move(ext);
  }
  Subalgebra s;
  s.alg = &alg;
  s.basis = cur;
  return s;
}

Mat conj_subspace(const Conjugation& conj, const Mat& basis) {
  Mat out(0, basis.cols());
  for (int i = 0; i < basis.rows(); ++i) out.append_row(conj.apply(basis.row(i)));
  return basis.rows() > 0 ? rowspace(out) : out;
}

}  // namespace liegc
