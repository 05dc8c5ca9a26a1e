#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liegc/matrix.hpp"
#include "liegc/scalar.hpp"

namespace liegc {

/// Finite root system of type A-G.  Roots are integer coordinate vectors in
/// the simple-root basis, ordered by (height, lexicographic), so subset masks
/// are stable across runs.  The inner product is normalized so short roots
/// have squared length 2.
struct RootSystem {
  char series = 'A';
  int rank = 0;
  std::vector<std::vector<int>> roots;    // all roots, canonical order
  std::vector<std::vector<int>> cartan;   // cartan[i][j] = <alpha_j, alpha_i-check>
  std::vector<std::vector<Rational>> gram;  // (alpha_i, alpha_j)

  // Derived lookup tables, filled by build_root_system.
  std::vector<int> neg_index;               // index of -roots[k]
  std::vector<std::vector<int>> sum_index;  // index of roots[i]+roots[j], or -1

  int num_roots() const { return int(roots.size()); }
  int height(int idx) const;
  int root_index(const std::vector<int>& coords) const;  // -1 if absent

  /// (beta, gamma) for arbitrary lattice vectors in simple-root coordinates.
  Rational inner(const std::vector<int>& b, const std::vector<int>& c) const;
  Rational length2(int idx) const { return inner(roots[idx], roots[idx]); }

  std::string type_name() const { return std::string(1, series) + std::to_string(rank); }
};

/// Subset of the roots of a fixed system, as a bitmask over the canonical
/// root order.  Systems with more than 64 roots are rejected for subset work.
struct RootSubset {
  const RootSystem* rs = nullptr;
  uint64_t mask = 0;

  bool contains(int idx) const { return (mask >> idx) & 1u; }
  int size() const { return __builtin_popcountll(mask); }
  std::vector<int> indices() const;

  friend bool operator==(const RootSubset& a, const RootSubset& b) {
    return a.rs == b.rs && a.mask == b.mask;
  }
  friend bool operator!=(const RootSubset& a, const RootSubset& b) { return !(a == b); }
};

struct Coroot {
  int root_index = -1;
  std::vector<Rational> vector;  // coordinates in the simple-coroot basis
};

/// series in {A..G}; throws UnsupportedTypeError for invalid (series, rank) or
/// CapExceededError when rank exceeds rank_cap.
RootSystem build_root_system(char series, int rank, int rank_cap = 4);

/// Parses "A2", "G2"... and dispatches to build_root_system.
RootSystem build_root_system(const std::string& type, int rank_cap = 4);

RootSubset make_subset(const RootSystem& rs, uint64_t mask);
RootSubset subset_of_indices(const RootSystem& rs, const std::vector<int>& idxs);
RootSubset full_subset(const RootSystem& rs);
RootSubset empty_subset(const RootSystem& rs);
RootSubset negate_subset(const RootSubset& s);
RootSubset intersect(const RootSubset& a, const RootSubset& b);
RootSubset unite(const RootSubset& a, const RootSubset& b);
RootSubset subtract(const RootSubset& a, const RootSubset& b);

bool is_closed(const RootSubset& s);
bool is_symmetric(const RootSubset& s);
bool is_parabolic_subset(const RootSubset& s);

/// (A0, A') with A0 = S cap -S and A' = S minus A0.
std::pair<RootSubset, RootSubset> split_subset(const RootSubset& s);

/// All closed subsets containing `required`, ordered by mask.  Throws
/// CapExceededError when the number of free roots exceeds `budget_bits`.
std::vector<RootSubset> enumerate_closed_subsets(const RootSystem& rs,
                                                 const RootSubset& required,
                                                 int budget_bits = 24);

/// All symmetric closed subsets; enumerates over {root, -root} pair masks so
/// large systems stay cheap.
std::vector<RootSubset> enumerate_symmetric_closed_subsets(const RootSystem& rs);

/// S symmetric closed with span_Q(S) cap ambient = S.
bool is_levi_subsystem(const RootSubset& s, const RootSubset& ambient);

/// Rank of the Q-span of the subset's roots.
int span_rank(const RootSubset& s);

Coroot coroot(const RootSystem& rs, int root_index);

/// phi given by its values on the simple coroots.
GaussRat pair_coroot(const std::vector<GaussRat>& phi, const Coroot& c);

/// <beta, alpha-check> for a lattice vector beta (Cartan-integer pairing).
Rational root_coroot_pairing(const RootSystem& rs, const std::vector<int>& beta,
                             const Coroot& c);

}  // namespace liegc
