#include <algorithm>
#include <set>

#include "doctest.h"
#include "liegc/errors.hpp"
#include "liegc/rootsys.hpp"

using namespace liegc;

namespace {

/// Oracle: every subset of the full 2^|roots| lattice, tested directly.
std::vector<uint64_t> brute_closed_subsets(const RootSystem& rs, uint64_t required) {
  int n = rs.num_roots();
  REQUIRE(n <= 14);
  std::vector<uint64_t> out;
  for (uint64_t m = 0; m < (uint64_t(1) << n); ++m) {
    if ((required & ~m) != 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j) {
        if (!((m >> i) & 1) || !((m >> j) & 1)) continue;
        int s = rs.sum_index[i][j];
        if (s >= 0 && !((m >> s) & 1)) {
          ok = false;
          break;
        }
      }
    if (ok) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("root counts match the classical formulas") {
  CHECK(build_root_system('A', 1).num_roots() == 2);
  CHECK(build_root_system('A', 2).num_roots() == 6);
  CHECK(build_root_system('A', 3).num_roots() == 12);
  CHECK(build_root_system('B', 2).num_roots() == 8);
  CHECK(build_root_system('B', 3).num_roots() == 18);
  CHECK(build_root_system('C', 3).num_roots() == 18);
  CHECK(build_root_system('C', 4).num_roots() == 32);
  CHECK(build_root_system('D', 4).num_roots() == 24);
  CHECK(build_root_system('F', 4).num_roots() == 48);
  CHECK(build_root_system('G', 2).num_roots() == 12);
}

TEST_CASE("string parsing and guard rails") {
  CHECK(build_root_system("B3").type_name() == "B3");
  CHECK_THROWS_AS(build_root_system('A', 5), CapExceededError);
  CHECK(build_root_system('A', 5, 8).num_roots() == 30);
  CHECK_THROWS_AS(build_root_system('H', 2), UnsupportedTypeError);
  CHECK_THROWS_AS(build_root_system('G', 3), UnsupportedTypeError);
  CHECK_THROWS_AS(build_root_system("Q9"), UnsupportedTypeError);
}

TEST_CASE("roots come in height order with simple roots first") {
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    RootSystem rs = build_root_system(t);
    // Negative heights first, increasing; simple roots are the first rank
    // entries of the positive half.
    for (int i = 0; i + 1 < rs.num_roots(); ++i)
      CHECK(rs.height(i) <= rs.height(i + 1));
    int pos_start = rs.num_roots() / 2;
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rs.height(pos_start + i) == 1);
      int ones = 0;
      for (int j = 0; j < rs.rank; ++j) ones += rs.roots[pos_start + i][j];
      CHECK(ones == 1);
    }
  }
}

TEST_CASE("normalization makes short roots have squared length two") {
  for (const char* t : {"A2", "B2", "C3", "G2", "F4"}) {
    RootSystem rs = build_root_system(t);
    Rational shortest = rs.length2(0);
    for (int i = 1; i < rs.num_roots(); ++i) shortest = std::min(shortest, rs.length2(i));
    CHECK(shortest == 2);
  }
  RootSystem g2 = build_root_system('G', 2);
  std::set<Rational> lens;
  for (int i = 0; i < g2.num_roots(); ++i) lens.insert(g2.length2(i));
  CHECK(lens == std::set<Rational>{Rational(2), Rational(6)});
}

TEST_CASE("cartan integers agree with the inner products") {
  for (const char* t : {"A3", "B3", "C4", "D4", "F4", "G2"}) {
    RootSystem rs = build_root_system(t);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j)
        CHECK(Rational(rs.cartan[i][j]) == 2 * rs.gram[i][j] / rs.gram[i][i]);
  }
}

TEST_CASE("the long simple root of G2 pairs to -3 with the short coroot") {
  RootSystem g2 = build_root_system('G', 2);
  // Simple roots: index 0 short, 1 long (or vice versa); find them.
  int s = g2.gram[0][0] == 2 ? 0 : 1;
  int l = 1 - s;
  CHECK(g2.cartan[s][l] == -3);
  CHECK(g2.cartan[l][s] == -1);
  // Same answer through the coroot pairing.
  std::vector<int> unit_s(2, 0), unit_l(2, 0);
  unit_s[s] = 1;
  unit_l[l] = 1;
  Coroot cs = coroot(g2, g2.root_index(unit_s));
  CHECK(root_coroot_pairing(g2, unit_l, cs) == -3);
}

TEST_CASE("negation and sum tables are coherent") {
  RootSystem rs = build_root_system('B', 2);
  for (int i = 0; i < rs.num_roots(); ++i) {
    CHECK(rs.neg_index[rs.neg_index[i]] == i);
    CHECK(rs.sum_index[i][rs.neg_index[i]] == -1);
    for (int j = 0; j < rs.num_roots(); ++j) {
      CHECK(rs.sum_index[i][j] == rs.sum_index[j][i]);
      if (rs.sum_index[i][j] >= 0) {
        std::vector<int> s(rs.rank);
        for (int k = 0; k < rs.rank; ++k) s[k] = rs.roots[i][k] + rs.roots[j][k];
        CHECK(rs.root_index(s) == rs.sum_index[i][j]);
      }
    }
  }
}

TEST_CASE("closed subset enumeration matches the exhaustive oracle") {
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    RootSystem rs = build_root_system(t);
    auto oracle = brute_closed_subsets(rs, 0);
    auto fast = enumerate_closed_subsets(rs, empty_subset(rs));
    REQUIRE(fast.size() == oracle.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].mask == oracle[i]);
  }
}

TEST_CASE("closed subset enumeration with a required core matches the oracle") {
  RootSystem rs = build_root_system('B', 2);
  for (int i = 0; i < rs.num_roots(); ++i) {
    uint64_t req = (uint64_t(1) << i) | (uint64_t(1) << rs.neg_index[i]);
    auto oracle = brute_closed_subsets(rs, req);
    auto fast = enumerate_closed_subsets(rs, make_subset(rs, req));
    REQUIRE(fast.size() == oracle.size());
    for (size_t k = 0; k < fast.size(); ++k) CHECK(fast[k].mask == oracle[k]);
  }
}

TEST_CASE("A2 has exactly four closed subsets containing a root pair") {
  RootSystem rs = build_root_system('A', 2);
  int pos_start = rs.num_roots() / 2;
  uint64_t req = (uint64_t(1) << pos_start) | (uint64_t(1) << rs.neg_index[pos_start]);
  auto subs = enumerate_closed_subsets(rs, make_subset(rs, req));
  CHECK(subs.size() == 4);
}

TEST_CASE("symmetric closed enumeration equals the filtered closed list") {
  for (const char* t : {"A2", "B2", "G2"}) {
    RootSystem rs = build_root_system(t);
    std::set<uint64_t> sym;
    for (const auto& s : enumerate_closed_subsets(rs, empty_subset(rs)))
      if (is_symmetric(s)) sym.insert(s.mask);
    std::set<uint64_t> fast;
    for (const auto& s : enumerate_symmetric_closed_subsets(rs)) fast.insert(s.mask);
    CHECK(fast == sym);
  }
}

TEST_CASE("parabolic and split bookkeeping") {
  RootSystem rs = build_root_system('A', 2);
  RootSubset all = full_subset(rs);
  CHECK(is_parabolic_subset(all));
  auto [a0, aprime] = split_subset(all);
  CHECK(a0 == all);
  CHECK(aprime.mask == 0);
  // A Borel: all positive roots.
  uint64_t pos = 0;
  for (int i = 0; i < rs.num_roots(); ++i)
    if (rs.height(i) > 0) pos |= uint64_t(1) << i;
  RootSubset borel = make_subset(rs, pos);
  CHECK(is_closed(borel));
  CHECK(is_parabolic_subset(borel));
  CHECK(!is_symmetric(borel));
  auto [b0, bp] = split_subset(borel);
  CHECK(b0.mask == 0);
  CHECK(bp == borel);
}

TEST_CASE("D2 decomposes as two orthogonal copies of A1") {
  RootSystem rs = build_root_system('D', 2);
  CHECK(rs.num_roots() == 4);
  CHECK(rs.cartan[0][1] == 0);
  CHECK(rs.gram[0][1] == 0);
}

TEST_CASE("levi subsystems of B2") {
  RootSystem rs = build_root_system('B', 2);
  RootSubset all = full_subset(rs);
  CHECK(is_levi_subsystem(empty_subset(rs), all));
  CHECK(is_levi_subsystem(all, all));
  int n_levi = 0;
  for (const auto& s : enumerate_symmetric_closed_subsets(rs)) {
    if (is_levi_subsystem(s, all)) ++n_levi;
    // A symmetric pair {a, -a} is a Levi only if no other root lies on its line.
    if (s.size() == 2) {
      int i = s.indices()[0];
      bool on_line = false;
      for (int j = 0; j < rs.num_roots(); ++j) {
        if (s.contains(j)) continue;
        std::vector<int> dbl(rs.rank);
        for (int k = 0; k < rs.rank; ++k) dbl[k] = 2 * rs.roots[i][k];
        if (rs.roots[j] == dbl) on_line = true;
      }
      CHECK(is_levi_subsystem(s, all) == !on_line);
    }
  }
  CHECK(n_levi >= 2);
}

TEST_CASE("span rank counts independent directions") {
  RootSystem rs = build_root_system('A', 3);
  CHECK(span_rank(full_subset(rs)) == 3);
  CHECK(span_rank(empty_subset(rs)) == 0);
  int pos_start = rs.num_roots() / 2;
  RootSubset one = subset_of_indices(rs, {pos_start, rs.neg_index[pos_start]});
  CHECK(span_rank(one) == 1);
}

TEST_CASE("coroots of simple roots are unit vectors") {
  RootSystem rs = build_root_system('G', 2);
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<int> unit(rs.rank, 0);
    unit[i] = 1;
    Coroot c = coroot(rs, rs.root_index(unit));
    for (int j = 0; j < rs.rank; ++j)
      CHECK(c.vector[j] == (i == j ? 1 : 0));
  }
}

TEST_CASE("coroot pairing reproduces the cartan integers") {
  for (const char* t : {"A2", "B2", "C3", "G2", "F4"}) {
    RootSystem rs = build_root_system(t);
    for (int a = 0; a < rs.num_roots(); ++a) {
      Coroot c = coroot(rs, a);
      CHECK(root_coroot_pairing(rs, rs.roots[a], c) == 2);
      for (int b = 0; b < rs.num_roots(); ++b) {
        Rational expect = 2 * rs.inner(rs.roots[b], rs.roots[a]) / rs.length2(a);
        CHECK(root_coroot_pairing(rs, rs.roots[b], c) == expect);
      }
    }
  }
}
