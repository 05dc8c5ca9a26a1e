#include "doctest.h"
#include "liegc/classify.hpp"
#include "liegc/dirac.hpp"
#include "liegc/errors.hpp"

using namespace liegc;

namespace {

std::vector<DoubleElement> double_basis(const ChevalleyAlgebra& alg) {
  std::vector<DoubleElement> out;
  for (int i = 0; i < alg.dim; ++i) {
    DoubleElement u{Vec(alg.dim), Vec(alg.dim)};
    u.vec[i] = GaussRat(1);
    out.push_back(u);
    DoubleElement v{Vec(alg.dim), Vec(alg.dim)};
    v.covec[i] = GaussRat(1);
    out.push_back(v);
  }
  return out;
}

RootSubset positive_roots(const RootSystem& rs) {
  uint64_t m = 0;
  for (int i = 0; i < rs.num_roots(); ++i)
    if (rs.height(i) > 0) m |= uint64_t(1) << i;
  return make_subset(rs, m);
}

Subalgebra cartan_subalgebra(const ChevalleyAlgebra& alg) {
  Mat rows(0, alg.dim);
  for (int i = 0; i < alg.rs.rank; ++i) rows.append_row(alg.h(i));
  return make_subalgebra(alg, rows);
}

}  // namespace

TEST_CASE("double bracket leaves the pairing invariant") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 1));
  auto basis = double_basis(alg);
  for (const auto& u : basis)
    for (const auto& v : basis)
      for (const auto& w : basis) {
        GaussRat lhs = pairing(alg, double_bracket(alg, u, v), w);
        GaussRat rhs = pairing(alg, v, double_bracket(alg, u, w));
        CHECK(lhs + rhs == GaussRat(0));
      }
}

TEST_CASE("double bracket acts as a derivation of itself") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 1));
  auto basis = double_basis(alg);
  auto dsub = [&](const DoubleElement& a, const DoubleElement& b) {
    return DoubleElement{vec_sub(a.vec, b.vec), vec_sub(a.covec, b.covec)};
  };
  for (const auto& u : basis)
    for (const auto& v : basis)
      for (const auto& w : basis) {
        DoubleElement lhs = double_bracket(alg, u, double_bracket(alg, v, w));
        DoubleElement r1 = double_bracket(alg, double_bracket(alg, u, v), w);
        DoubleElement r2 = double_bracket(alg, v, double_bracket(alg, u, w));
        DoubleElement diff = dsub(dsub(lhs, r1), r2);
        CHECK(vec_is_zero(diff.vec));
        CHECK(vec_is_zero(diff.covec));
      }
}

TEST_CASE("graphs of two-forms are maximal isotropic") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 2));
  const RootSystem& rs = alg.rs;
  Subalgebra borel = subalgebra_from_subset(alg, positive_roots(rs), true);
  Subalgebra full = subalgebra_from_subset(alg, full_subset(rs), true);

  for (const Subalgebra* e : {&borel, &full}) {
    LinearDirac l = make_L(*e, zero_two_form(*e));
    CHECK(l.dimension() == alg.dim);
    CHECK(is_maximal_isotropic(l));
  }
  // A nonzero form on the borel.
  int d = borel.dimension();
  Mat m(d, d);
  m.at(0, d - 1) = GaussRat(2);
  m.at(d - 1, 0) = GaussRat(-2);
  m.at(1, 2) = GaussRat::i();
  m.at(2, 1) = -GaussRat::i();
  LinearDirac l = make_L(borel, make_two_form(borel, m));
  CHECK(is_maximal_isotropic(l));
}

TEST_CASE("graph construction matches the direct membership description") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 2));
  const RootSystem& rs = alg.rs;
  Subalgebra borel = subalgebra_from_subset(alg, positive_roots(rs), true);
  int d = borel.dimension(), n = alg.dim;
  Mat m(d, d);
  m.at(0, 3) = GaussRat(1);
  m.at(3, 0) = GaussRat(-1);
  m.at(1, 4) = GaussRat(Rational(1, 2));
  m.at(4, 1) = GaussRat(Rational(-1, 2));
  TwoFormOnE eps = make_two_form(borel, m);
  LinearDirac l = make_L(borel, eps);

  // Oracle: pairs (x, xi) with x in E and xi(X_j) = eps(x, X_j) for all j,
  // assembled as one linear system over (coords in E, xi).
  Mat sys(0, d + n);
  Vec zero_rhs;
  // x = sum c_i X_i, then for each j: sum_i c_i eps(i,j) - xi(X_j) = 0.
  // Solution space rows: unknown vector (c, xi).
  Mat constraints(d, d + n);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) constraints.at(j, i) = eps.matrix.at(i, j);
    for (int c = 0; c < n; ++c)
      constraints.at(j, d + c) = -borel.basis.at(j, c);
  }
  Mat sol = kernel(constraints);
  Mat rows(0, 2 * n);
  for (int i = 0; i < sol.rows(); ++i) {
    Vec srow = sol.row(i);
    Vec cc(srow.begin(), srow.begin() + d);
    Vec xi(srow.begin() + d, srow.end());
    Vec x = row_apply(cc, borel.basis);
    Vec r = x;
    r.insert(r.end(), xi.begin(), xi.end());
    rows.append_row(r);
  }
  CHECK(rowspace_equal(l.basis, rowspace(rows)));
}

TEST_CASE("zero forms on subalgebras are closed") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('B', 2));
  Subalgebra borel = subalgebra_from_subset(alg, positive_roots(alg.rs), true);
  CHECK(d_E(zero_two_form(borel)).is_zero());
}

TEST_CASE("a wedge of root covectors on the borel fails to be closed") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 2));
  const RootSystem& rs = alg.rs;
  Subalgebra borel = subalgebra_from_subset(alg, positive_roots(rs), true);
  // Basis rows of the borel in rref order: h1, h2, then the positive root
  // vectors; find the rows holding the two simple root vectors.
  int d = borel.dimension();
  int r_a = -1, r_b = -1;
  for (int i = 0; i < d; ++i) {
    for (int s = 0; s < rs.rank; ++s) {
      std::vector<int> unit(rs.rank, 0);
      unit[s] = 1;
      if (borel.basis.row(i) == alg.e(rs.root_index(unit))) (s == 0 ? r_a : r_b) = i;
    }
  }
  REQUIRE(r_a >= 0);
  REQUIRE(r_b >= 0);
  Mat m(d, d);
  m.at(r_a, r_b) = GaussRat(1);
  m.at(r_b, r_a) = GaussRat(-1);
  CHECK(!d_E(make_two_form(borel, m)).is_zero());
}

TEST_CASE("the exterior derivative needs a bracket-closed domain") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 2));
  const RootSystem& rs = alg.rs;
  std::vector<int> u1(rs.rank, 0), u2(rs.rank, 0);
  u1[0] = 1;
  u2[1] = 1;
  RootSubset bad = subset_of_indices(rs, {rs.root_index(u1), rs.root_index(u2)});
  Subalgebra e = subalgebra_from_subset(alg, bad, false, false);
  CHECK_THROWS_AS(d_E(zero_two_form(e)), NotSubalgebraError);
}

TEST_CASE("shearing by an ambient two-form matches adding its restriction") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 2));
  Subalgebra borel = subalgebra_from_subset(alg, positive_roots(alg.rs), true);
  int n = alg.dim;
  Mat b(n, n);
  int seed = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      seed = (seed * 37 + 11) % 7;
      b.at(i, j) = GaussRat(seed - 3, (seed % 2) ? 1 : -1);
      b.at(j, i) = -b.at(i, j);
    }
  TwoFormOnE eps = zero_two_form(borel);
  LinearDirac lhs = b_transform(make_L(borel, eps), b);
  Mat r = restrict_two_form(b, borel);
  LinearDirac rhs = make_L(borel, make_two_form(borel, r));
  CHECK(lhs == rhs);
  CHECK(is_maximal_isotropic(lhs));
}

TEST_CASE("closure of the graph matches closure of E plus the cocycle rule") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 2));
  Subalgebra borel = subalgebra_from_subset(alg, positive_roots(alg.rs), true);
  Subalgebra full = subalgebra_from_subset(alg, full_subset(alg.rs), true);
  CHECK(is_double_subalgebra(make_L(full, zero_two_form(full))));
  CHECK(is_double_subalgebra(make_L(borel, zero_two_form(borel))));
  // The non-cocycle wedge from above must break closure of the graph.
  int d = borel.dimension();
  Mat m(d, d);
  m.at(2, 3) = GaussRat(1);
  m.at(3, 2) = GaussRat(-1);
  TwoFormOnE eps = make_two_form(borel, m);
  CHECK(is_double_subalgebra(make_L(borel, eps)) == d_E(eps).is_zero());
}

TEST_CASE("conjugation of the double is an involution") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 2));
  Conjugation s = conjugation(alg, ConjKind::compact);
  Subalgebra borel = subalgebra_from_subset(alg, positive_roots(alg.rs), true);
  LinearDirac l = make_L(borel, zero_two_form(borel));
  CHECK(conj_double(conj_double(l, s), s) == l);
}

TEST_CASE("the flag example: borel with zero form is of complex type") {
  for (const char* t : {"A1", "A2", "B2"}) {
    ChevalleyAlgebra alg = build_chevalley(build_root_system(t));
    Conjugation s = conjugation(alg, ConjKind::compact);
    Subalgebra borel = subalgebra_from_subset(alg, positive_roots(alg.rs), true);
    Subalgebra cartan = cartan_subalgebra(alg);
    DiracPair pair = make_dirac_pair(borel, zero_two_form(borel), cartan);
    CHECK(validate_dirac_pair(pair));
    CHECK(is_gc(pair, s));
    CHECK(rowspace_equal(gc_defect(pair, s), isotropy_in_double(pair)));
    CHECK(interpret(pair, s) == StructClass::Complex);
  }
}

TEST_CASE("taxonomy of full-space pairs in rank one") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 1));
  Conjugation s = conjugation(alg, ConjKind::compact);
  Subalgebra full = subalgebra_from_subset(alg, full_subset(alg.rs), true);
  Subalgebra cartan = cartan_subalgebra(alg);

  auto pair_for = [&](const GaussRat& phi_val) {
    TwoFormOnE eps = eps_from_phi(full, {phi_val});
    return make_dirac_pair(full, eps, cartan);
  };

  // Real value on the coroot: the real part of the form is zero.
  CHECK(interpret(pair_for(GaussRat(1)), s) == StructClass::Symplectic);
  // Mixed value: still generalized complex, via a real shear.
  CHECK(interpret(pair_for(GaussRat(Rational(1), Rational(1))), s) ==
        StructClass::BTransformOfSymplectic);
  // Purely imaginary value: degenerate, conjugation-fixed form.
  CHECK(interpret(pair_for(GaussRat::i()), s) == StructClass::Presymplectic);
  CHECK(!is_gc(pair_for(GaussRat::i()), s));
}

TEST_CASE("symmetric subalgebras with zero form give real Dirac structures") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 2));
  const RootSystem& rs = alg.rs;
  Conjugation s = conjugation(alg, ConjKind::compact);
  std::vector<int> u1(rs.rank, 0);
  u1[0] = 1;
  int a = rs.root_index(u1);
  RootSubset pm = subset_of_indices(rs, {a, rs.neg_index[a]});
  Subalgebra l = subalgebra_from_subset(alg, pm, true, true);
  Subalgebra cartan = cartan_subalgebra(alg);
  DiracPair pair = make_dirac_pair(l, zero_two_form(l), cartan);
  CHECK(!is_gc(pair, s));
  CHECK(interpret(pair, s) == StructClass::RealDirac);
}

TEST_CASE("a borel over a trivial isotropy is not generalized complex") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 2));
  Conjugation s = conjugation(alg, ConjKind::compact);
  Subalgebra borel = subalgebra_from_subset(alg, positive_roots(alg.rs), true);
  Subalgebra none = make_subalgebra(alg, Mat(0, alg.dim));
  DiracPair pair = make_dirac_pair(borel, zero_two_form(borel), none);
  CHECK(!is_gc(pair, s));
  CHECK(interpret(pair, s) == StructClass::NotGC);
}

TEST_CASE("two-form construction rejects non-antisymmetric matrices") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 1));
  Subalgebra full = subalgebra_from_subset(alg, full_subset(alg.rs), true);
  Mat bad(3, 3);
  bad.at(0, 1) = GaussRat(1);
  CHECK_THROWS_AS(make_two_form(full, bad), DimensionMismatchError);
}

TEST_CASE("transport along the identity map changes nothing") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 1));
  Subalgebra full = subalgebra_from_subset(alg, full_subset(alg.rs), true);
  LinearDirac l = make_L(full, zero_two_form(full));
  Mat id = Mat::identity(alg.dim);
  CHECK(rowspace_equal(pushforward(id, l.basis), l.basis));
  CHECK(rowspace_equal(pullback(id, l.basis), l.basis));
}

TEST_CASE("transport to the quotient and back recovers the graph") {
  ChevalleyAlgebra alg = build_chevalley(build_root_system('A', 1));
  Subalgebra cartan = cartan_subalgebra(alg);
  Subalgebra borel = subalgebra_from_subset(alg, positive_roots(alg.rs), true);
  Mat proj = quotient_projection(alg, cartan);
  CHECK(proj.rows() == alg.dim - 1);
  CHECK(rowspace_equal(kernel(proj), rowspace(cartan.basis)));
  LinearDirac l = make_L(borel, zero_two_form(borel));
  Mat down = pushforward(proj, l.basis);
  Mat back = pullback(proj, down);
  CHECK(rowspace_equal(back, l.basis));
  CHECK(rowspace_equal(pushforward(proj, back), down));
}
