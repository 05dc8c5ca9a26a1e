#pragma once

#include <string>
#include <vector>

#include "liegc/rootsys.hpp"
#include "liegc/scalar.hpp"

namespace liegc {

struct OrbitNode {
  RootSubset subset;
  RootSubset a0;       // subset cap -subset
  RootSubset aprime;   // subset minus a0
  int dim = 0;         // rank span(a0) - rank span(Delta(k))
  bool gc_capable = false;  // parabolic
  std::string gc_locus;     // open-condition description, empty if none
};

struct ModuliGraph {
  const RootSystem* rs = nullptr;
  RootSubset delta_k;
  std::vector<OrbitNode> nodes;                 // ordered by subset mask
  std::vector<std::pair<int, int>> edges;       // (E, F): O_F inside closure(O_E)
  std::vector<std::vector<int>> components;     // weak connectivity classes
};

int orbit_dimension(const RootSubset& subset, const RootSubset& delta_k);

/// Closure rule: F' = E', F0 a Levi subsystem of E0, Delta(k) inside F.
bool closure_contains(const OrbitNode& e, const OrbitNode& f, const RootSubset& delta_k);

ModuliGraph build_moduli_graph(const RootSystem& rs, const RootSubset& delta_k,
                               int budget_bits = 24);

std::string moduli_to_json(const ModuliGraph& g);
std::string moduli_to_dot(const ModuliGraph& g);

/// Point of CP^1 as an exact homogeneous pair [p, q]; infinity is [1, 0].
struct ProjPoint {
  GaussRat p, q;
};

/// The trilinear surface v t x + y t u - y v s on CP1 x CP1 x CP1, with the
/// three points ([x,y],[u,v],[s,t]).
bool su3_surface_membership(const ProjPoint& first, const ProjPoint& second,
                            const ProjPoint& third);

/// Affine parameters (c_alpha, c_beta, c_{alpha+beta}) -> ([c,1],...) points.
bool su3_surface_membership(const GaussRat& c_alpha, const GaussRat& c_beta,
                            const GaussRat& c_alphabeta);

}  // namespace liegc
