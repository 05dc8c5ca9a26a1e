#pragma once

#include <cstdint>
#include <vector>

#include "liegc/matrix.hpp"

namespace liegc {

/// Weakly decreasing positive parts summing to n.
struct Partition {
  std::vector<int> parts;

  int total() const;
};

Partition make_partition(int n, const std::vector<int>& parts);

/// (e, h, f) in sl_n with [e,f]=h, [h,e]=2e, [h,f]=-2f; e block-Jordan of the
/// given partition, h the per-block weight ladder, f solved from the linear
/// system rather than hard-coded.
struct StandardTriple {
  int n = 0;
  Partition partition;
  Mat e, h, f;  // n x n
};

StandardTriple triple_from_partition(int n, const Partition& lambda);

bool triple_relations_hold(const StandardTriple& t);

Mat commutator(const Mat& a, const Mat& b);

/// Row vector of length n*n (row-major vec of an n x n matrix).
Vec mat_to_vec(const Mat& m);
Mat vec_to_mat(const Vec& v, int n);

/// Basis rows (in vec coordinates) of {x in sl_n : [m_j, x] = 0 for all j}.
Mat matrix_centralizer(int n, const std::vector<Mat>& elements);

/// Basis of Z_{sl_n}(e) for the partition's triple.
Mat centralizer_nilpotent(int n, const Partition& lambda);

/// Joint centralizer of {e_regular, E_{n,1}} in sl_n is zero.
bool certify_pair_centralizer_zero(int n);

/// Z(e) together with {e,h,f} generates all of sl_n.
bool certify_slice_generation(int n, const Partition& lambda);

struct NilpotentGCParams {
  Mat zz_basis;  // basis rows of Z(Z(e)) in vec coordinates
};

NilpotentGCParams gc_params_nilpotent(int n, const Partition& lambda);

/// The open condition on t = t_r + i t_i: Z(t_i) = Z(e), with t_i taken
/// against entrywise conjugation (the split sl_n(R) form).
bool nilpotent_gc_predicate(int n, const Partition& lambda, const Mat& t);

/// Imaginary part of t under entrywise conjugation: (t - conj t) / 2i.
Mat entrywise_imag(const Mat& t);

/// eps(x, y) = kappa(t, [x, y]) via the trace form; antisymmetric by
/// invariance, with sharp-kernel Z(t).
GaussRat nilpotent_two_form(int n, const Mat& t, const Mat& x, const Mat& y);

struct ProbeReport {
  int trials = 0;
  int full_sum_count = 0;  // trials where E + conj(E) = sl_n held
  int violations = 0;      // of those, E != sl_n
};

/// Randomized falsification probe: E = closure of Z(e) plus random elements;
/// whenever E + conj(E) = sl_n, asserts E = sl_n.  Deterministic per
/// (trials, seed); trial t derives its own generator from seed.
ProbeReport probe_prop_ij(int n, const Partition& lambda, int trials, uint64_t seed);

}  // namespace liegc
