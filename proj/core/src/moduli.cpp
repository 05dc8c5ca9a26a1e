#include "liegc/moduli.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "liegc/errors.hpp"

namespace liegc {
namespace {

std::string root_coords_str(const RootSystem& rs, int idx) {
  std::string s = "(";
  for (int j = 0; j < rs.rank; ++j) {
    if (j) s += ",";
    s += std::to_string(rs.roots[idx][j]);
  }
  return s + ")";
}

std::string locus_description(const RootSubset& open_roots) {
  if (open_roots.size() == 0) return "point";
  std::string s = "Re(phi(coroot)) != 0 for roots {";
  bool first = true;
  for (int i : open_roots.indices()) {
    if (open_roots.rs->height(i) <= 0) continue;  // one per +- pair
    if (!first) s += ", ";
    s += root_coords_str(*open_roots.rs, i);
    first = false;
  }
  return s + "}";
}

}  // namespace

int orbit_dimension(const RootSubset& subset, const RootSubset& delta_k) {
  auto [a0, aprime] = split_subset(subset);
  return span_rank(a0) - span_rank(delta_k);
}

bool closure_contains(const OrbitNode& e, const OrbitNode& f, const RootSubset& delta_k) {
  if (f.aprime.mask != e.aprime.mask) return false;
  if ((delta_k.mask & ~f.subset.mask) != 0) return false;
  return is_levi_subsystem(f.a0, e.a0);
}

ModuliGraph build_moduli_graph(const RootSystem& rs, const RootSubset& delta_k,
                               int budget_bits) {
  ModuliGraph g;
  g.rs = &rs;
  g.delta_k = delta_k;
  for (const RootSubset& s : enumerate_closed_subsets(rs, delta_k, budget_bits)) {
    OrbitNode node;
    node.subset = s;
    auto [a0, aprime] = split_subset(s);
    node.a0 = a0;
    node.aprime = aprime;
    node.dim = span_rank(a0) - span_rank(delta_k);
    node.gc_capable = is_parabolic_subset(s);
    node.gc_locus = node.gc_capable ? locus_description(subtract(a0, delta_k)) : "";
    g.nodes.push_back(node);
  }
  int n = int(g.nodes.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && closure_contains(g.nodes[i], g.nodes[j], delta_k))
        g.edges.push_back({i, j});

  // Weakly connected components via union-find.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [i, j] : g.edges) parent[find(i)] = find(j);
  std::vector<std::vector<int>> buckets(n);
  for (int i = 0; i < n; ++i) buckets[find(i)].push_back(i);
  for (auto& b : buckets)
    if (!b.empty()) g.components.push_back(b);
  return g;
}

std::string moduli_to_json(const ModuliGraph& g) {
  nlohmann::json j;
  j["type"] = g.rs->type_name();
  j["isotropy_mask"] = g.delta_k.mask;
  j["nodes"] = nlohmann::json::array();
  for (const auto& node : g.nodes) {
    j["nodes"].push_back({{"mask", node.subset.mask},
                          {"dim", node.dim},
                          {"parabolic", node.gc_capable},
                          {"gc_predicate", node.gc_locus}});
  }
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
  j["components"] = g.components;
  return j.dump(2);
}

std::string moduli_to_dot(const ModuliGraph& g) {
  std::ostringstream os;
  os << "digraph moduli {\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    os << "  n" << i << " [label=\"mask=" << n.subset.mask << "\\ndim=" << n.dim
       << (n.gc_capable ? "\\nparabolic" : "") << "\"];\n";
  }
  for (auto [a, b] : g.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

bool su3_surface_membership(const ProjPoint& first, const ProjPoint& second,
                            const ProjPoint& third) {
  auto valid = [](const ProjPoint& pt) { return !(pt.p.is_zero() && pt.q.is_zero()); };
  if (!valid(first) || !valid(second) || !valid(third))
    throw DimensionMismatchError("su3_surface_membership: [0,0] is not projective");
  const GaussRat &x = first.p, &y = first.q;
  const GaussRat &u = second.p, &v = second.q;
  const GaussRat &s = third.p, &t = third.q;
  return (v * t * x + y * t * u - y * v * s).is_zero();
}

bool su3_surface_membership(const GaussRat& c_alpha, const GaussRat& c_beta,
                            const GaussRat& c_alphabeta) {
  return su3_surface_membership(ProjPoint{c_alpha, GaussRat(1)},
                                ProjPoint{c_beta, GaussRat(1)},
                                ProjPoint{c_alphabeta, GaussRat(1)});
}

}  // namespace liegc
