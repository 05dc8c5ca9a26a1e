#pragma once

#include <utility>
#include <vector>

#include "liegc/matrix.hpp"
#include "liegc/rootsys.hpp"

namespace liegc {

using AlgebraElement = Vec;  // coefficient vector of length dim

/// g_C realized by a Chevalley basis: h_1..h_rank (simple coroots) followed
/// by one root vector e_alpha per root, in the canonical root order.
/// Structure-constant signs follow the extraspecial-pair convention.
struct ChevalleyAlgebra {
  RootSystem rs;
  int dim = 0;

  /// Sparse bracket table: table[i][j] lists (basis index, coefficient) of
  /// [b_i, b_j].  Read-only after construction.
  std::vector<std::vector<std::vector<std::pair<int, GaussRat>>>> table;

  /// Killing form on the basis, kappa(b_i, b_j).
  Mat killing;

  int h_index(int i) const { return i; }
  int e_index(int root_idx) const { return rs.rank + root_idx; }

  AlgebraElement basis_vector(int idx) const;
  AlgebraElement h(int i) const { return basis_vector(h_index(i)); }
  AlgebraElement e(int root_idx) const { return basis_vector(e_index(root_idx)); }

  /// N_{alpha,beta} for root indices with alpha+beta a root.
  GaussRat structure_constant(int root_a, int root_b) const;

  /// Matrix of ad_x on the basis (columns: images of basis vectors).
  Mat ad(const AlgebraElement& x) const;
};

ChevalleyAlgebra build_chevalley(const RootSystem& rs);

AlgebraElement bracket(const ChevalleyAlgebra& alg, const AlgebraElement& x,
                       const AlgebraElement& y);

GaussRat killing_form(const ChevalleyAlgebra& alg, const AlgebraElement& x,
                      const AlgebraElement& y);

enum class ConjKind { compact, split, matrix_entrywise };

/// Antilinear involution sigma: sigma(sum c_i b_i) = sum conj(c_i) M b_i,
/// stored via the real matrix M on coefficient vectors.
struct Conjugation {
  ConjKind kind = ConjKind::compact;
  Mat matrix;  // real entries; applied after entrywise conjugation

  AlgebraElement apply(const AlgebraElement& x) const;
  /// Induced action on root indices: compact sends alpha to -alpha, split
  /// fixes every root.
  int root_action(const RootSystem& rs, int root_idx) const;
};

Conjugation conjugation(const ChevalleyAlgebra& alg, ConjKind kind);

/// Basis {X_alpha}: X_alpha = e_alpha for positive alpha and
/// X_{-alpha} = sigma(X_alpha) for the compact sigma.
struct CompactRootBasis {
  Mat vectors;  // row per root (canonical root order): X_{roots[k]}
  Mat duals;    // dual covectors on g_C restricted to the root-space block
};

CompactRootBasis compact_root_basis(const ChevalleyAlgebra& alg, const Conjugation& conj);

struct Subalgebra {
  const ChevalleyAlgebra* alg = nullptr;
  Mat basis;  // reduced echelon rows

  int dimension() const { return basis.rows(); }
};

Subalgebra make_subalgebra(const ChevalleyAlgebra& alg, const Mat& spanning_rows);
bool is_subalgebra(const Subalgebra& s);

/// Cartan + root spaces of A.  When certify is true, throws NotClosedError
/// unless A is closed.
Subalgebra subalgebra_from_subset(const ChevalleyAlgebra& alg, const RootSubset& a,
                                  bool include_cartan = true, bool certify = false);
Subalgebra subalgebra_from_subset(const ChevalleyAlgebra& alg, const RootSubset& a,
                                  const Mat& cartan_part, bool certify = false);

Subalgebra centralizer(const ChevalleyAlgebra& alg,
                       const std::vector<AlgebraElement>& elements);

Subalgebra generated_subalgebra(const ChevalleyAlgebra& alg,
                                const std::vector<AlgebraElement>& gens);

/// sigma image of a subspace (span of conjugated basis rows).
Mat conj_subspace(const Conjugation& conj, const Mat& basis);

}  // namespace liegc
