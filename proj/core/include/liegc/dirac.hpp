#pragma once

#include <vector>

#include "liegc/chevalley.hpp"
#include "liegc/matrix.hpp"

namespace liegc {

/// X + xi in g_C + g_C*: vec and covec both have length dim(g).
struct DoubleElement {
  Vec vec;
  Vec covec;
};

/// Subspace of g_C + g_C* as a canonical (reduced echelon) basis matrix with
/// rows in (vec | covec) coordinates of width 2*dim(g).
struct LinearDirac {
  const ChevalleyAlgebra* alg = nullptr;
  Mat basis;

  int dimension() const { return basis.rows(); }

  friend bool operator==(const LinearDirac& a, const LinearDirac& b) {
    return a.alg == b.alg && a.basis == b.basis;
  }
  friend bool operator!=(const LinearDirac& a, const LinearDirac& b) { return !(a == b); }
};

/// 2-form on a subalgebra E, as an antisymmetric matrix in E's basis rows.
struct TwoFormOnE {
  Subalgebra E;
  Mat matrix;
};

/// Alternating 3-form on E, stored on ordered basis triples i<j<k.
struct ThreeFormOnE {
  int dim = 0;
  std::vector<GaussRat> vals;  // lexicographic over (i,j,k), i<j<k

  bool is_zero() const {
    for (const auto& v : vals)
      if (!v.is_zero()) return false;
    return true;
  }
};

struct DiracPair {
  Subalgebra E;
  TwoFormOnE eps;
  Subalgebra isotropy;  // k_C
};

TwoFormOnE make_two_form(const Subalgebra& e, const Mat& matrix);
TwoFormOnE zero_two_form(const Subalgebra& e);

DiracPair make_dirac_pair(const Subalgebra& e, const TwoFormOnE& eps,
                          const Subalgebra& isotropy);

/// k_C within E and eps-sharp vanishing on k_C (the Dirac-pair invariants).
bool validate_dirac_pair(const DiracPair& pair);

GaussRat pairing(const ChevalleyAlgebra& alg, const DoubleElement& u,
                 const DoubleElement& v);

DoubleElement double_bracket(const ChevalleyAlgebra& alg, const DoubleElement& u,
                             const DoubleElement& v);

/// eps(x, y) for x, y in the span of E (coordinates solved against E's basis).
GaussRat eval_two_form(const TwoFormOnE& eps, const Vec& x, const Vec& y);

/// d_E eps(X,Y,Z) = eps(X,[Y,Z]) + eps(Y,[Z,X]) + eps(Z,[X,Y]).
/// Throws NotSubalgebraError when E is not bracket-closed.
ThreeFormOnE d_E(const TwoFormOnE& eps);

/// L(E, eps) = {X + xi : X in E, i_X eps = xi|_E}, as a canonical subspace.
LinearDirac make_L(const DiracPair& pair);
LinearDirac make_L(const Subalgebra& e, const TwoFormOnE& eps);

bool is_maximal_isotropic(const LinearDirac& l);
bool is_double_subalgebra(const LinearDirac& l);

LinearDirac conj_double(const LinearDirac& l, const Conjugation& sigma);

/// L cap conj(L) as a subspace of the double.
Mat gc_defect(const DiracPair& pair, const Conjugation& sigma);

/// Rows spanning k_C + 0 in double coordinates (the GC target of the defect).
Mat isotropy_in_double(const DiracPair& pair);

bool is_gc(const DiracPair& pair, const Conjugation& sigma);

/// B an antisymmetric dim x dim matrix on g's basis; shear X+xi by i_X B.
LinearDirac b_transform(const LinearDirac& l, const Mat& b);

/// Restriction of an ambient 2-form B to E's basis.
Mat restrict_two_form(const Mat& b, const Subalgebra& e);

/// F is an m x n matrix mapping V = C^n to W = C^m; D has rows of width 2n.
/// pushforward: {F X + xi : X + F^T xi in D}; pullback: {X + F* xi : F X + xi in D}.
Mat pushforward(const Mat& f, const Mat& d);
Mat pullback(const Mat& f, const Mat& d);

/// Projection g -> g/k as a coordinate matrix (rows indexed by a complement
/// basis of k), for use with pushforward/pullback.
Mat quotient_projection(const ChevalleyAlgebra& alg, const Subalgebra& k);

enum class StructClass {
  Complex,
  Symplectic,
  BTransformOfSymplectic,
  GeneralGC,
  Presymplectic,
  RealDirac,
  NotGC,
};

const char* struct_class_name(StructClass c);

StructClass interpret(const DiracPair& pair, const Conjugation& sigma);

}  // namespace liegc
