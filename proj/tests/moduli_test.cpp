#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "liegc/moduli.hpp"

using namespace liegc;

TEST_CASE("rank one orbit graph over a cartan isotropy") {
  RootSystem rs = build_root_system('A', 1);
  ModuliGraph g = build_moduli_graph(rs, empty_subset(rs));
  REQUIRE(g.nodes.size() == 4);
  std::multiset<int> dims;
  for (const auto& n : g.nodes) dims.insert(n.dim);
  CHECK(dims == std::multiset<int>{0, 0, 0, 1});
  std::multiset<size_t> comp_sizes;
  for (const auto& c : g.components) comp_sizes.insert(c.size());
  CHECK(comp_sizes == std::multiset<size_t>{1, 1, 2});
  // The two-element component links the full set to the empty set.
  for (const auto& [e, f] : g.edges) {
    CHECK(g.nodes[e].subset == full_subset(rs));
    CHECK(g.nodes[f].subset.mask == 0);
  }
}

TEST_CASE("rank two orbit graph census over a cartan isotropy") {
  RootSystem rs = build_root_system('A', 2);
  ModuliGraph g = build_moduli_graph(rs, empty_subset(rs));
  CHECK(g.nodes.size() == 29);
  std::map<size_t, int> census;
  for (const auto& c : g.components) ++census[c.size()];
  CHECK(census[5] == 1);
  CHECK(census[2] == 6);
  CHECK(census[1] == 12);
  int gc_capable = 0;
  for (const auto& n : g.nodes)
    if (n.gc_capable) ++gc_capable;
  CHECK(gc_capable == 13);
}

TEST_CASE("node dimensions come from the symmetric part") {
  RootSystem rs = build_root_system('B', 2);
  ModuliGraph g = build_moduli_graph(rs, empty_subset(rs));
  for (const auto& n : g.nodes) {
    CHECK(n.a0 == split_subset(n.subset).first);
    CHECK(n.aprime == split_subset(n.subset).second);
    CHECK(n.dim == span_rank(n.a0));
    CHECK(n.dim == orbit_dimension(n.subset, g.delta_k));
  }
}

TEST_CASE("edges respect the closure rule") {
  RootSystem rs = build_root_system('A', 2);
  ModuliGraph g = build_moduli_graph(rs, empty_subset(rs));
  for (const auto& [e, f] : g.edges) {
    CHECK(e != f);
    CHECK(g.nodes[f].aprime == g.nodes[e].aprime);
    CHECK(is_levi_subsystem(g.nodes[f].a0, g.nodes[e].a0));
    CHECK(closure_contains(g.nodes[e], g.nodes[f], g.delta_k));
  }
}

TEST_CASE("graph restricted by a nontrivial isotropy") {
  RootSystem rs = build_root_system('A', 2);
  int a = 0;  // lowest root, plus its negative
  RootSubset delta_k = subset_of_indices(rs, {a, rs.neg_index[a]});
  ModuliGraph g = build_moduli_graph(rs, delta_k);
  CHECK(g.nodes.size() == 4);
  for (const auto& n : g.nodes) {
    CHECK((n.subset.mask & delta_k.mask) == delta_k.mask);
    CHECK(n.dim == span_rank(n.a0) - 1);
  }
}

TEST_CASE("json serialization round-trips through a parser") {
  RootSystem rs = build_root_system('A', 2);
  ModuliGraph g = build_moduli_graph(rs, empty_subset(rs));
  auto j = nlohmann::json::parse(moduli_to_json(g));
  CHECK(j["type"] == "A2");
  CHECK(j["nodes"].size() == 29);
  CHECK(j["edges"].size() == g.edges.size());
  CHECK(j["components"].size() == g.components.size());
  for (const auto& n : j["nodes"]) {
    CHECK(n.contains("mask"));
    CHECK(n.contains("dim"));
    CHECK(n.contains("parabolic"));
    CHECK(n.contains("gc_predicate"));
  }
}

TEST_CASE("dot output names the digraph and lists every node") {
  RootSystem rs = build_root_system('A', 1);
  ModuliGraph g = build_moduli_graph(rs, empty_subset(rs));
  std::string dot = moduli_to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  for (size_t i = 0; i < g.nodes.size(); ++i)
    CHECK(dot.find("n" + std::to_string(i)) != std::string::npos);
}

TEST_CASE("surface membership for affine parameter triples") {
  // Affine points satisfy the surface exactly when the third parameter is the
  // sum of the first two.
  CHECK(su3_surface_membership(GaussRat(1), GaussRat(2), GaussRat(3)));
  CHECK(su3_surface_membership(GaussRat(Rational(1, 2)), GaussRat::i(),
                               GaussRat(Rational(1, 2)) + GaussRat::i()));
  CHECK(!su3_surface_membership(GaussRat(1), GaussRat(2), GaussRat(4)));
  CHECK(su3_surface_membership(GaussRat(0), GaussRat(0), GaussRat(0)));
}

TEST_CASE("surface membership at the boundary points") {
  ProjPoint inf{GaussRat(1), GaussRat(0)};
  ProjPoint zero{GaussRat(0), GaussRat(1)};
  auto aff = [](const GaussRat& c) { return ProjPoint{c, GaussRat(1)}; };
  // All three at infinity.
  CHECK(su3_surface_membership(inf, inf, inf));
  // One coordinate at infinity with the others matching the limit rows.
  CHECK(su3_surface_membership(aff(GaussRat(5)), inf, inf));
  CHECK(su3_surface_membership(inf, aff(GaussRat(7)), inf));
  CHECK(su3_surface_membership(inf, inf, aff(GaussRat(9))));
  CHECK(!su3_surface_membership(aff(GaussRat(5)), inf, zero));
  // Scaling homogeneous coordinates never changes the answer.
  ProjPoint p{GaussRat(2), GaussRat(4)};
  ProjPoint q{GaussRat(1), GaussRat(2)};
  CHECK(su3_surface_membership(p, aff(GaussRat(1)), aff(GaussRat(Rational(3, 2)))) ==
        su3_surface_membership(q, aff(GaussRat(1)), aff(GaussRat(Rational(3, 2)))));
}

TEST_CASE("surface membership rejects the degenerate point") {
  ProjPoint bad{GaussRat(0), GaussRat(0)};
  ProjPoint ok{GaussRat(1), GaussRat(1)};
  CHECK_THROWS(su3_surface_membership(bad, ok, ok));
}
