#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "liegc/cache.hpp"
#include "liegc/classify.hpp"
#include "liegc/errors.hpp"
#include "liegc/moduli.hpp"
#include "liegc/nilpotent.hpp"
#include "liegc/rootsys.hpp"

using namespace liegc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCertificate = 3;

struct CommonOpts {
  std::string type;
  int rank_cap = 4;
  std::string isotropy = "cartan";
  std::string sigma = "compact";
  std::string format = "json";
  int budget_bits = 24;
  int jobs = 1;
  std::string cache_dir;
};

std::string effective_cache_dir(const CommonOpts& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* env = std::getenv("LIEGC_CACHE_DIR")) return env;
  return "";
}

RootSystem load_root_system(const CommonOpts& o) {
  if (o.type.size() < 2) throw UnsupportedTypeError("bad --type: " + o.type);
  char series = o.type[0];
  int rank = std::stoi(o.type.substr(1));
  std::string dir = effective_cache_dir(o);
  if (!dir.empty()) return cached_root_system(dir, series, rank, o.rank_cap);
  return build_root_system(series, rank, o.rank_cap);
}

/// "cartan" or comma-separated tokens +aK / -aK naming signed simple roots.
RootSubset parse_isotropy(const RootSystem& rs, const std::string& spec) {
  if (spec == "cartan" || spec.empty()) return empty_subset(rs);
  uint64_t mask = 0;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    if (token.size() < 3 || (token[0] != '+' && token[0] != '-') || token[1] != 'a')
      throw UnsupportedTypeError("bad isotropy token: " + token);
    int k = std::stoi(token.substr(2));
    if (k < 1 || k > rs.rank)
      throw UnsupportedTypeError("isotropy simple-root index out of range: " + token);
    std::vector<int> coords(rs.rank, 0);
    coords[k - 1] = token[0] == '+' ? 1 : -1;
    int idx = rs.root_index(coords);
    if (idx < 0) throw UnsupportedTypeError("no such root: " + token);
    mask |= uint64_t(1) << idx;
  }
  RootSubset s = make_subset(rs, mask);
  if (!is_symmetric(s) || !is_closed(s))
    throw UnsupportedTypeError("isotropy must be a symmetric closed subset");
  return s;
}

ConjKind parse_sigma(const std::string& s) {
  if (s == "compact") return ConjKind::compact;
  if (s == "split") return ConjKind::split;
  throw UnsupportedTypeError("bad --sigma: " + s);
}

std::string root_coords_str(const RootSystem& rs, int idx) {
  std::string s = "(";
  for (int j = 0; j < rs.rank; ++j) {
    if (j) s += ",";
    s += std::to_string(rs.roots[idx][j]);
  }
  return s + ")";
}

/// Open condition on phi for one admissible subset: the part of the coroot
/// condition that is not already forced by the isotropy.
std::string predicate_description(const RootSubset& a, ConjKind kind,
                                  const RootSubset& delta_k) {
  const RootSystem& rs = *a.rs;
  RootSubset open_roots = subtract(split_subset(a).first, delta_k);
  if (open_roots.size() == 0) return "point";
  std::string part = kind == ConjKind::compact ? "Re" : "Im";
  std::string s = part + "(phi(coroot)) != 0 for roots {";
  bool first = true;
  for (int i : open_roots.indices()) {
    if (rs.height(i) <= 0) continue;
    if (!first) s += ", ";
    s += root_coords_str(rs, i);
    first = false;
  }
  return s + "}";
}

int cmd_roots(const CommonOpts& o) {
  RootSystem rs = load_root_system(o);
  size_t closed = enumerate_closed_subsets(rs, empty_subset(rs), o.budget_bits).size();
  if (o.format == "csv") {
    std::cout << "index,height";
    for (int j = 0; j < rs.rank; ++j) std::cout << ",c" << (j + 1);
    std::cout << "\n";
    for (int i = 0; i < rs.num_roots(); ++i) {
      std::cout << i << "," << rs.height(i);
      for (int j = 0; j < rs.rank; ++j) std::cout << "," << rs.roots[i][j];
      std::cout << "\n";
    }
  } else if (o.format == "json") {
    nlohmann::json j;
    j["type"] = rs.type_name();
    j["num_roots"] = rs.num_roots();
    j["roots"] = rs.roots;
    j["cartan"] = rs.cartan;
    auto gram = nlohmann::json::array();
    for (int i = 0; i < rs.rank; ++i) {
      auto row = nlohmann::json::array();
      for (int k = 0; k < rs.rank; ++k) row.push_back(rat_str(rs.gram[i][k]));
      gram.push_back(row);
    }
    j["gram"] = gram;
    j["closed_subsets"] = closed;
    std::cout << j.dump(2) << "\n";
  } else {
    throw UnsupportedTypeError("roots: format must be json or csv");
  }
  std::cerr << rs.type_name() << ": " << rs.num_roots() << " roots, " << closed
            << " closed subsets\n";
  return kExitOk;
}

int cmd_classify(const CommonOpts& o) {
  RootSystem rs = load_root_system(o);
  RootSubset delta_k = parse_isotropy(rs, o.isotropy);
  ConjKind kind = parse_sigma(o.sigma);
  auto action = sigma_root_action(rs, kind);
  auto subsets = gc_subsets(rs, action, delta_k, o.budget_bits);

  struct Row {
    uint64_t mask, levi;
    bool parabolic;
    int phi_dim;
    std::string predicate;
  };
  std::vector<Row> rows;
  for (const RootSubset& a : subsets) {
    RootSubset a0 = split_subset(a).first;
    Row r;
    r.mask = a.mask;
    r.levi = a0.mask;
    r.parabolic = is_parabolic_subset(a);
    r.phi_dim = span_rank(a0) - span_rank(delta_k);
    r.predicate = predicate_description(a, kind, delta_k);
    rows.push_back(r);
  }

  if (o.format == "csv") {
    std::cout << "subset_mask,parabolic,levi_core,phi_space_dim,gc_predicate\n";
    for (const auto& r : rows)
      std::cout << r.mask << "," << (r.parabolic ? "true" : "false") << "," << r.levi
                << "," << r.phi_dim << ",\"" << r.predicate << "\"\n";
  } else if (o.format == "json") {
    auto j = nlohmann::json::array();
    for (const auto& r : rows)
      j.push_back({{"subset_mask", r.mask},
                   {"parabolic", r.parabolic},
                   {"levi_core", r.levi},
                   {"phi_space_dim", r.phi_dim},
                   {"gc_predicate", r.predicate}});
    std::cout << j.dump(2) << "\n";
  } else {
    throw UnsupportedTypeError("classify: format must be json or csv");
  }
  std::cerr << rs.type_name() << " sigma=" << o.sigma << ": " << rows.size()
            << " admissible subsets\n";
  return kExitOk;
}

int cmd_moduli(const CommonOpts& o) {
  RootSystem rs = load_root_system(o);
  RootSubset delta_k = parse_isotropy(rs, o.isotropy);
  ModuliGraph g = build_moduli_graph(rs, delta_k, o.budget_bits);
  if (o.format == "json") {
    std::cout << moduli_to_json(g) << "\n";
  } else if (o.format == "dot") {
    std::cout << moduli_to_dot(g);
  } else if (o.format == "csv") {
    std::cout << "mask,dim,parabolic,gc_predicate\n";
    for (const auto& n : g.nodes)
      std::cout << n.subset.mask << "," << n.dim << ","
                << (n.gc_capable ? "true" : "false") << ",\"" << n.gc_locus << "\"\n";
  } else {
    throw UnsupportedTypeError("moduli: format must be json, csv or dot");
  }
  std::cerr << rs.type_name() << ": " << g.nodes.size() << " nodes, "
            << g.edges.size() << " edges, " << g.components.size() << " components\n";
  return kExitOk;
}

int cmd_nilpotent(int n, const std::string& partition, int trials, uint64_t seed) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(partition);
  while (std::getline(in, token, ',')) parts.push_back(std::stoi(token));
  Partition p = make_partition(n, parts);

  StandardTriple t = triple_from_partition(n, p);
  bool triple_ok = triple_relations_hold(t);
  Mat ze = centralizer_nilpotent(n, p);
  bool pair_cert = certify_pair_centralizer_zero(n);
  bool slice_cert = certify_slice_generation(n, p);
  NilpotentGCParams params = gc_params_nilpotent(n, p);
  ProbeReport probe = probe_prop_ij(n, p, trials, seed);

  nlohmann::json j;
  j["triple_ok"] = triple_ok;
  j["dim_Ze"] = ze.rows();
  j["pair_cert"] = pair_cert;
  j["slice_cert"] = slice_cert;
  j["zz_dim"] = params.zz_basis.rows();
  j["probe"] = {{"trials", probe.trials}, {"violations", probe.violations}};
  std::cout << j.dump(2) << "\n";

  bool pass = triple_ok && pair_cert && slice_cert && probe.violations == 0;
  return pass ? kExitOk : kExitCertificate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Dirac and generalized complex structure classifier"};
  app.require_subcommand(1);

  CommonOpts o;
  int nilp_n = 0;
  std::string nilp_partition;
  int probe_trials = 100;
  uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_type) {
    if (needs_type) cmd->add_option("--type", o.type, "Root system type, e.g. A2")->required();
    cmd->add_option("--rank-cap", o.rank_cap, "Largest admitted rank");
    cmd->add_option("--budget", o.budget_bits, "Enumeration budget in free bits");
    cmd->add_option("--format", o.format, "json, csv or dot");
    cmd->add_option("--jobs", o.jobs, "Worker count hint (output is identical)");
    cmd->add_option("--cache-dir", o.cache_dir,
                    "Cache directory (env LIEGC_CACHE_DIR)");
  };

  CLI::App* roots = app.add_subcommand("roots", "Print root data and subset counts");
  add_common(roots, true);

  CLI::App* classify =
      app.add_subcommand("classify", "List admissible subsets with phi conditions");
  add_common(classify, true);
  classify->add_option("--isotropy", o.isotropy, "cartan or tokens like +a1,-a1");
  classify->add_option("--sigma", o.sigma, "compact or split");

  CLI::App* moduli = app.add_subcommand("moduli", "Build the orbit closure graph");
  add_common(moduli, true);
  moduli->add_option("--isotropy", o.isotropy, "cartan or tokens like +a1,-a1");

  CLI::App* nilpotent =
      app.add_subcommand("nilpotent", "Certificates for a nilpotent orbit in sl_n");
  nilpotent->add_option("--n", nilp_n, "Matrix size")->required();
  nilpotent->add_option("--partition", nilp_partition, "Jordan type, e.g. 2,1")
      ->required();
  nilpotent->add_option("--probe-trials", probe_trials, "Randomized probe trials");
  nilpotent->add_option("--seed", seed, "Probe seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (o.jobs < 1) throw UnsupportedTypeError("--jobs must be positive");
    if (roots->parsed()) return cmd_roots(o);
    if (classify->parsed()) return cmd_classify(o);
    if (moduli->parsed()) return cmd_moduli(o);
    if (nilpotent->parsed())
      return cmd_nilpotent(nilp_n, nilp_partition, probe_trials, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
