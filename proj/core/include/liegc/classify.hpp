#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegc/dirac.hpp"
#include "liegc/rootsys.hpp"

namespace liegc {

struct IsotropyData {
  RootSubset delta_k;                 // roots of k_C (empty for a Cartan isotropy)
  std::optional<RootSubset> lambda;   // roots of the Levi Z(h), orbit mode only
};

/// The five-condition checklist for a generalized complex pair.
struct GcPairReport {
  bool k_in_E = false;            // (1) k_C inside E
  bool e_plus_conj_full = false;  // (2) E + conj(E) = g_C
  bool cocycle = false;           // (3) d_E eps = 0
  bool eps_vanishes_on_k = false; // (4) eps-sharp kills k
  bool kernel_is_k = false;       // (5) Ker((eps - conj eps)-sharp on E cap conj E) = k_C
  bool verdict() const {
    return k_in_E && e_plus_conj_full && cocycle && eps_vanishes_on_k && kernel_is_k;
  }
};

GcPairReport check_gc_pair(const DiracPair& pair, const Conjugation& sigma);

/// One family of the compact maximal-rank classification: a parabolic subset
/// A containing Delta(k), the canonical phi-space basis (covectors on the
/// simple-coroot coordinates, vanishing on Delta(k)-coroots and on the
/// orthocomplement of span(A0-coroots)), and the roots carrying the open
/// condition Re(phi(alpha-check)) != 0.
struct CompactGCFamily {
  RootSubset parabolic;
  RootSubset levi_core;    // A0
  Mat phi_basis;           // rational rows of width rank
  int phi_space_dim = 0;
  RootSubset open_roots;   // A0 minus Delta(k)
};

std::vector<CompactGCFamily> gc_pairs_compact(const RootSystem& rs,
                                              const RootSubset& delta_k);

/// phi as a covector on the simple-coroot basis; true iff the open condition
/// Re(phi(alpha-check)) != 0 holds on all of family.open_roots.
bool compact_gc_predicate(const CompactGCFamily& family,
                          const std::vector<GaussRat>& phi);

/// A family of real Dirac pairs: a symmetric closed l containing Delta(k),
/// with the same canonical phi-space but the purely-imaginary value condition.
struct RealDiracFamily {
  RootSubset symmetric_l;
  Mat phi_basis;
  int phi_space_dim = 0;
};

std::vector<RealDiracFamily> real_dirac_pairs_compact(const RootSystem& rs,
                                                      const RootSubset& delta_k);

/// True iff phi(alpha-check) is purely imaginary for every root of l.
bool real_dirac_value_ok(const RealDiracFamily& family,
                         const std::vector<GaussRat>& phi);

/// Root actions of the supported conjugations.
std::vector<int> sigma_root_action(const RootSystem& rs, ConjKind kind);
/// theta = -sigma on roots.
std::vector<int> theta_root_action(const RootSystem& rs,
                                   const std::vector<int>& sigma_action);

/// All closed A containing Lambda with A cup sigma(A) = Delta and
/// A cap sigma(A) inside -A.
std::vector<RootSubset> gc_subsets(const RootSystem& rs,
                                   const std::vector<int>& sigma_action,
                                   const RootSubset& lambda, int budget_bits = 24);

/// phi vanishes on Lambda-coroots and phi(alpha-check) differs from
/// conj(phi(sigma(alpha)-check)) on (A cap sigma A) minus Lambda.
bool check_phi_orbit(const RootSubset& a, const std::vector<GaussRat>& phi,
                     const std::vector<int>& sigma_action, const RootSubset& lambda);

struct GCSubsetDecomposition {
  RootSubset phi;                    // A cup theta(A): theta-stable parabolic
  RootSubset psi;                    // phi minus its symmetric part
  std::vector<RootSubset> summands;  // simple summands of phi cap -phi
  std::vector<int> t_summands;       // indices into summands
  std::vector<int> theta_t_summands;
  std::vector<int> r_summands;
  std::vector<RootSubset> a_parts;   // parallel to theta_t_summands
};

GCSubsetDecomposition decompose_gc_subset(const RootSubset& a,
                                          const std::vector<int>& sigma_action);
RootSubset recompose(const GCSubsetDecomposition& d);

/// Searches symmetric closed pairs (X, Y) covering Delta with X, Y proper;
/// returns a counterexample pair or nullopt (success).
std::optional<std::pair<RootSubset, RootSubset>> verify_symmetric_cover(
    const RootSystem& rs);

/// eps = phi-tilde of the bracket: eps(X,Y) reads the Cartan coefficients of
/// [X,Y] against phi (a covector on the simple-coroot coordinates).
TwoFormOnE eps_from_phi(const Subalgebra& e, const std::vector<GaussRat>& phi);

/// Canonical phi covector taking the prescribed values on a coroot basis of
/// span(A0) and vanishing on its orthocomplement; values.size() must match
/// the coroot-basis size returned by coroot_basis_of.
std::vector<int> coroot_basis_of(const RootSubset& a0);
std::vector<GaussRat> phi_from_values(const RootSystem& rs,
                                      const std::vector<int>& basis_roots,
                                      const std::vector<GaussRat>& values);

}  // namespace liegc
