#include "liegc/classify.hpp"

#include <algorithm>

#include "liegc/errors.hpp"

namespace liegc {
namespace {

/// Coroot coordinate vector of a root, as a rational row.
Vec coroot_row(const RootSystem& rs, int root_idx) {
  Coroot c = coroot(rs, root_idx);
  Vec v(rs.rank);
  for (int i = 0; i < rs.rank; ++i) v[i] = c.vector[i];
  return v;
}

/// Inner product matrix on the simple-coroot coordinate space:
/// <av_i, av_j> = 4 (a_i,a_j) / ((a_i,a_i)(a_j,a_j)).
Mat coroot_gram(const RootSystem& rs) {
  Mat g(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      g.at(i, j) = GaussRat(Rational(Rational(4) * rs.gram[i][j] / (rs.gram[i][i] * rs.gram[j][j])));
  return g;
}

/// Basis rows of the orthocomplement of span(coroots of s) in coroot space.
Mat coroot_orthocomplement(const RootSystem& rs, const RootSubset& s) {
  Mat v(0, rs.rank);
  for (int i : s.indices()) v.append_row(coroot_row(rs, i));
  if (v.rows() == 0) return Mat::identity(rs.rank);
  return kernel(rowspace(v) * coroot_gram(rs));
}

/// Canonical phi-space: covectors vanishing on Delta(k)-coroots and on the
/// orthocomplement of span(a0-coroots).
Mat phi_space(const RootSystem& rs, const RootSubset& a0, const RootSubset& delta_k) {
  Mat constraints(0, rs.rank);
  for (int i : delta_k.indices()) constraints.append_row(coroot_row(rs, i));
  constraints.append_rows(coroot_orthocomplement(rs, a0));
  return kernel(constraints);
}

}  // namespace

GcPairReport check_gc_pair(const DiracPair& pair, const Conjugation& sigma) {
  GcPairReport rep;
  const ChevalleyAlgebra& alg = *pair.E.alg;
  const Mat& e = pair.E.basis;
  Mat ebar = conj_subspace(sigma, e);
  Mat kbasis = pair.isotropy.basis.rows() > 0 ? rowspace(pair.isotropy.basis)
                                              : Mat(0, alg.dim);

  rep.k_in_E = rowspace_contains_all(e, kbasis);
  rep.e_plus_conj_full = rowspace_sum(e, ebar).rows() == alg.dim;

  try {
    rep.cocycle = d_E(pair.eps).is_zero();
  } catch (const NotSubalgebraError&) {
    rep.cocycle = false;
  }

  rep.eps_vanishes_on_k = true;
  if (rep.k_in_E) {
    for (int i = 0; i < kbasis.rows() && rep.eps_vanishes_on_k; ++i)
      for (int j = 0; j < e.rows(); ++j)
        if (!eval_two_form(pair.eps, kbasis.row(i), e.row(j)).is_zero()) {
          rep.eps_vanishes_on_k = false;
          break;
        }
  } else {
    rep.eps_vanishes_on_k = false;
  }

  // (5): the kernel of (eps - conj eps)-sharp restricted to E cap conj(E).
  Mat d = rowspace_intersect(e, ebar);
  int dd = d.rows();
  if (rep.k_in_E && rowspace_contains_all(e, d)) {
    Mat delta(dd, dd);
    bool defined = true;
    for (int i = 0; i < dd && defined; ++i)
      for (int j = 0; j < dd; ++j) {
        Vec si = sigma.apply(d.row(i));
        Vec sj = sigma.apply(d.row(j));
        if (!coords_in_rowspace(e, si) || !coords_in_rowspace(e, sj)) {
          defined = false;
          break;
        }
        delta.at(i, j) = eval_two_form(pair.eps, d.row(i), d.row(j)) -
                         eval_two_form(pair.eps, si, sj).conj();
      }
    if (defined) {
      Mat ker = kernel(delta.transpose());  // rows u with u * delta = 0
      Mat ker_g(0, alg.dim);
      for (int i = 0; i < ker.rows(); ++i) ker_g.append_row(row_apply(ker.row(i), d));
      ker_g = ker.rows() > 0 ? rowspace(ker_g) : ker_g;
      rep.kernel_is_k = rowspace_equal(ker_g, kbasis);
    }
  }
  return rep;
}

std::vector<CompactGCFamily> gc_pairs_compact(const RootSystem& rs,
                                              const RootSubset& delta_k) {
  std::vector<CompactGCFamily> out;
  for (const RootSubset& a : enumerate_closed_subsets(rs, delta_k)) {
    if (!is_parabolic_subset(a)) continue;
    auto [a0, aprime] = split_subset(a);
    CompactGCFamily fam;
    fam.parabolic = a;
    fam.levi_core = a0;
    fam.phi_basis = phi_space(rs, a0, delta_k);
    fam.phi_space_dim = fam.phi_basis.rows();
    fam.open_roots = subtract(a0, delta_k);
    out.push_back(fam);
  }
  return out;
}

bool compact_gc_predicate(const CompactGCFamily& family,
                          const std::vector<GaussRat>& phi) {
  const RootSystem& rs = *family.parabolic.rs;
  for (int i : family.open_roots.indices())
    if (pair_coroot(phi, coroot(rs, i)).re() == 0) return false;
  return true;
}

std::vector<RealDiracFamily> real_dirac_pairs_compact(const RootSystem& rs,
                                                      const RootSubset& delta_k) {
  std::vector<RealDiracFamily> out;
  for (const RootSubset& l : enumerate_symmetric_closed_subsets(rs)) {
    if ((delta_k.mask & ~l.mask) != 0) continue;
    RealDiracFamily fam;
    fam.symmetric_l = l;
    fam.phi_basis = phi_space(rs, l, delta_k);
    fam.phi_space_dim = fam.phi_basis.rows();
    out.push_back(fam);
  }
  return out;
}

bool real_dirac_value_ok(const RealDiracFamily& family,
                         const std::vector<GaussRat>& phi) {
  const RootSystem& rs = *family.symmetric_l.rs;
  for (int i : family.symmetric_l.indices())
    if (pair_coroot(phi, coroot(rs, i)).re() != 0) return false;
  return true;
}

std::vector<int> sigma_root_action(const RootSystem& rs, ConjKind kind) {
  std::vector<int> act(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i)
    act[i] = kind == ConjKind::compact ? rs.neg_index[i] : i;
  return act;
}

std::vector<int> theta_root_action(const RootSystem& rs,
                                   const std::vector<int>& sigma_action) {
  std::vector<int> act(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) act[i] = rs.neg_index[sigma_action[i]];
  return act;
}

namespace {

RootSubset act_subset(const RootSubset& s, const std::vector<int>& action) {
  uint64_t m = 0;
  for (int i : s.indices()) m |= uint64_t(1) << action[i];
  return RootSubset{s.rs, m};
}

bool is_gc_subset(const RootSubset& a, const std::vector<int>& sigma_action) {
  if (!is_closed(a)) return false;
  RootSubset sa = act_subset(a, sigma_action);
  if (unite(a, sa).mask != full_subset(*a.rs).mask) return false;
  RootSubset cap = intersect(a, sa);
  return (cap.mask & ~negate_subset(a).mask) == 0;
}

}  // namespace

std::vector<RootSubset> gc_subsets(const RootSystem& rs,
                                   const std::vector<int>& sigma_action,
                                   const RootSubset& lambda, int budget_bits) {
  std::vector<RootSubset> out;
  for (const RootSubset& a : enumerate_closed_subsets(rs, lambda, budget_bits))
    if (is_gc_subset(a, sigma_action)) out.push_back(a);
  return out;
}

bool check_phi_orbit(const RootSubset& a, const std::vector<GaussRat>& phi,
                     const std::vector<int>& sigma_action, const RootSubset& lambda) {
  const RootSystem& rs = *a.rs;
  for (int i : lambda.indices())
    if (!pair_coroot(phi, coroot(rs, i)).is_zero()) return false;
  RootSubset cap = intersect(a, act_subset(a, sigma_action));
  for (int i : subtract(cap, lambda).indices()) {
    GaussRat lhs = pair_coroot(phi, coroot(rs, i));
    GaussRat rhs = pair_coroot(phi, coroot(rs, sigma_action[i])).conj();
    if (lhs == rhs) return false;
  }
  return true;
}

GCSubsetDecomposition decompose_gc_subset(const RootSubset& a,
                                          const std::vector<int>& sigma_action) {
  const RootSystem& rs = *a.rs;
  if (!is_gc_subset(a, sigma_action))
    throw NotGCSubsetError("decompose: input is not a generalized complex subset");
  std::vector<int> theta = theta_root_action(rs, sigma_action);

  GCSubsetDecomposition d;
  d.phi = unite(a, act_subset(a, theta));
  if (!is_parabolic_subset(d.phi) || act_subset(d.phi, theta).mask != d.phi.mask)
    throw NotGCSubsetError("decompose: A cup theta(A) is not a theta-stable parabolic");

  RootSubset gamma = intersect(d.phi, negate_subset(d.phi));
  d.psi = subtract(d.phi, gamma);

  // Simple summands of gamma: components under non-orthogonality.
  std::vector<int> gidx = gamma.indices();
  std::vector<int> comp(gidx.size(), -1);
  int ncomp = 0;
  for (size_t s = 0; s < gidx.size(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::vector<size_t> stack{s};
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      for (size_t t = 0; t < gidx.size(); ++t)
        if (comp[t] < 0 && rs.inner(rs.roots[gidx[cur]], rs.roots[gidx[t]]) != 0) {
          comp[t] = ncomp;
          stack.push_back(t);
        }
    }
    ++ncomp;
  }
  d.summands.assign(ncomp, empty_subset(rs));
  for (size_t s = 0; s < gidx.size(); ++s)
    d.summands[comp[s]] = unite(d.summands[comp[s]], subset_of_indices(rs, {gidx[s]}));

  RootSubset a0 = intersect(a, negate_subset(a));
  RootSubset theta_a0 = act_subset(a0, theta);
  for (int i = 0; i < ncomp; ++i) {
    bool in_a0 = (d.summands[i].mask & ~a0.mask) == 0;
    bool in_ta0 = (d.summands[i].mask & ~theta_a0.mask) == 0;
    if (in_a0 && in_ta0) {
      d.r_summands.push_back(i);
    } else if (in_a0) {
      d.t_summands.push_back(i);
    } else if (in_ta0) {
      d.theta_t_summands.push_back(i);
      d.a_parts.push_back(intersect(d.summands[i], a0));
    } else {
      throw NotGCSubsetError("decompose: summand fits no T / thetaT / R bucket");
    }
  }
  return d;
}

RootSubset recompose(const GCSubsetDecomposition& d) {
  RootSubset a = d.psi;
  for (int i : d.t_summands) a = unite(a, d.summands[i]);
  for (int i : d.r_summands) a = unite(a, d.summands[i]);
  for (const RootSubset& ai : d.a_parts) a = unite(a, ai);
  return a;
}

std::optional<std::pair<RootSubset, RootSubset>> verify_symmetric_cover(
    const RootSystem& rs) {
  std::vector<RootSubset> syms = enumerate_symmetric_closed_subsets(rs);
  uint64_t full = full_subset(rs).mask;
  for (size_t i = 0; i < syms.size(); ++i)
    for (size_t j = i; j < syms.size(); ++j) {
      if ((syms[i].mask | syms[j].mask) != full) continue;
      if (syms[i].mask != full && syms[j].mask != full)
        return std::make_pair(syms[i], syms[j]);
    }
  return std::nullopt;
}

TwoFormOnE eps_from_phi(const Subalgebra& e, const std::vector<GaussRat>& phi) {
  const ChevalleyAlgebra& alg = *e.alg;
  if (int(phi.size()) != alg.rs.rank)
    throw DimensionMismatchError("eps_from_phi: phi must have rank entries");
  int d = e.basis.rows();
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec b = bracket(alg, e.basis.row(i), e.basis.row(j));
      GaussRat v;
      for (int c = 0; c < alg.rs.rank; ++c) v += phi[c] * b[c];
      m.at(i, j) = v;
      m.at(j, i) = -v;
    }
  return make_two_form(e, m);
}

std::vector<int> coroot_basis_of(const RootSubset& a0) {
  const RootSystem& rs = *a0.rs;
  Mat span(0, rs.rank);
  std::vector<int> basis;
  for (int i : a0.indices()) {
    Mat ext = span;
    ext.append_row(coroot_row(rs, i));
    if (rank(ext) > span.rows()) {
      span = rowspace(ext);
      basis.push_back(i);
    }
  }
  return basis;
}

std::vector<GaussRat> phi_from_values(const RootSystem& rs,
                                      const std::vector<int>& basis_roots,
                                      const std::vector<GaussRat>& values) {
  if (basis_roots.size() != values.size())
    throw DimensionMismatchError("phi_from_values: size mismatch");
  Mat v(0, rs.rank);
  for (int i : basis_roots) v.append_row(coroot_row(rs, i));
  Mat constraints = v;
  Vec rhs(values);
  Mat orth = v.rows() > 0 ? kernel(rowspace(v) * coroot_gram(rs))
                          : Mat::identity(rs.rank);
  constraints.append_rows(orth);
  for (int i = 0; i < orth.rows(); ++i) rhs.push_back(GaussRat(0));
  auto sol = solve(constraints, rhs);
  if (!sol) throw DimensionMismatchError("phi_from_values: inconsistent values");
  return *sol;
}

}  // namespace liegc
