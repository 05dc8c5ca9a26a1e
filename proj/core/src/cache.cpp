#include "liegc/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace liegc {
namespace {

constexpr const char* kRootsHeader = "liegc-roots v1";
// Structure-constant files are tagged with the sign convention so a future
// convention change invalidates old caches.
constexpr const char* kChevHeader = "liegc-chevalley v1 esp1";

}  // namespace

std::string root_cache_path(const std::string& dir, char series, int rank) {
  return dir + "/roots_" + std::string(1, series) + std::to_string(rank) + ".txt";
}

bool write_root_cache(const std::string& dir, const RootSystem& rs) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(root_cache_path(dir, rs.series, rs.rank));
  if (!out) return false;
  out << kRootsHeader << "\n" << rs.series << " " << rs.rank << "\n";
  out << rs.num_roots() << "\n";
  for (const auto& r : rs.roots) {
    for (int j = 0; j < rs.rank; ++j) out << (j ? " " : "") << r[j];
    out << "\n";
  }
  for (int i = 0; i < rs.rank; ++i) {
    for (int j = 0; j < rs.rank; ++j) out << (j ? " " : "") << rs.cartan[i][j];
    out << "\n";
  }
  for (int i = 0; i < rs.rank; ++i) {
    for (int j = 0; j < rs.rank; ++j) out << (j ? " " : "") << rat_str(rs.gram[i][j]);
    out << "\n";
  }
  return bool(out);
}

std::optional<RootSystem> read_root_cache(const std::string& dir, char series, int rank) {
  std::ifstream in(root_cache_path(dir, series, rank));
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  if (header != kRootsHeader) return std::nullopt;
  char s;
  int r, count;
  if (!(in >> s >> r >> count) || s != series || r != rank) return std::nullopt;
  RootSystem rs;
  rs.series = series;
  rs.rank = rank;
  rs.roots.assign(count, std::vector<int>(rank));
  for (auto& root : rs.roots)
    for (int j = 0; j < rank; ++j)
      if (!(in >> root[j])) return std::nullopt;
  rs.cartan.assign(rank, std::vector<int>(rank));
  for (auto& row : rs.cartan)
    for (int j = 0; j < rank; ++j)
      if (!(in >> row[j])) return std::nullopt;
  rs.gram.assign(rank, std::vector<Rational>(rank));
  for (auto& row : rs.gram)
    for (int j = 0; j < rank; ++j) {
      std::string tok;
      if (!(in >> tok)) return std::nullopt;
      try {
        row[j] = rat_parse(tok);
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
  // Derived tables are cheap; rebuild rather than store.
  int n = count;
  rs.neg_index.assign(n, -1);
  rs.sum_index.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    std::vector<int> neg(rank);
    for (int j = 0; j < rank; ++j) neg[j] = -rs.roots[i][j];
    rs.neg_index[i] = rs.root_index(neg);
    if (rs.neg_index[i] < 0) return std::nullopt;
    for (int k = 0; k < n; ++k) {
      std::vector<int> sum(rank);
      for (int j = 0; j < rank; ++j) sum[j] = rs.roots[i][j] + rs.roots[k][j];
      rs.sum_index[i][k] = rs.root_index(sum);
    }
  }
  return rs;
}

RootSystem cached_root_system(const std::string& dir, char series, int rank,
                              int rank_cap) {
  if (rank <= rank_cap)
    if (auto rs = read_root_cache(dir, series, rank)) return *rs;
  RootSystem rs = build_root_system(series, rank, rank_cap);
  write_root_cache(dir, rs);
  return rs;
}

std::string chevalley_cache_path(const std::string& dir, char series, int rank) {
  return dir + "/chevalley_" + std::string(1, series) + std::to_string(rank) + ".txt";
}

bool write_chevalley_cache(const std::string& dir, const ChevalleyAlgebra& alg) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(chevalley_cache_path(dir, alg.rs.series, alg.rs.rank));
  if (!out) return false;
  out << kChevHeader << "\n" << alg.rs.series << " " << alg.rs.rank << "\n";
  // Only the root-root structure constants are stored; the Cartan brackets
  // and coroot values are recomputed from the root system.
  std::ostringstream body;
  int lines = 0;
  for (int a = 0; a < alg.rs.num_roots(); ++a)
    for (int b = 0; b < alg.rs.num_roots(); ++b) {
      if (alg.rs.neg_index[a] == b || alg.rs.sum_index[a][b] < 0) continue;
      GaussRat c = alg.structure_constant(a, b);
      body << a << " " << b << " " << rat_str(c.re()) << "\n";
      ++lines;
    }
  out << lines << "\n" << body.str();
  return bool(out);
}

std::optional<ChevalleyAlgebra> read_chevalley_cache(const std::string& dir,
                                                     const RootSystem& rs) {
  std::ifstream in(chevalley_cache_path(dir, rs.series, rs.rank));
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  if (header != kChevHeader) return std::nullopt;
  char s;
  int r, lines;
  if (!(in >> s >> r >> lines) || s != rs.series || r != rs.rank) return std::nullopt;

  ChevalleyAlgebra alg;
  alg.rs = rs;
  alg.dim = rs.rank + rs.num_roots();
  alg.table.assign(alg.dim, std::vector<std::vector<std::pair<int, GaussRat>>>(alg.dim));
  int rk = rs.rank;
  for (int i = 0; i < rk; ++i)
    for (int k = 0; k < rs.num_roots(); ++k) {
      int pairing = 0;
      for (int j = 0; j < rk; ++j) pairing += rs.roots[k][j] * rs.cartan[i][j];
      if (pairing != 0) {
        alg.table[i][rk + k].push_back({rk + k, GaussRat(pairing)});
        alg.table[rk + k][i].push_back({rk + k, GaussRat(-pairing)});
      }
    }
  for (int a = 0; a < rs.num_roots(); ++a) {
    int b = rs.neg_index[a];
    Coroot cr = coroot(rs, a);
    for (int i = 0; i < rk; ++i)
      if (cr.vector[i] != 0) alg.table[rk + a][rk + b].push_back({i, GaussRat(cr.vector[i])});
  }
  for (int l = 0; l < lines; ++l) {
    int a, b;
    std::string tok;
    if (!(in >> a >> b >> tok)) return std::nullopt;
    try {
      Rational c = rat_parse(tok);
      int sum = rs.sum_index[a][b];
      if (sum < 0) return std::nullopt;
      if (c != 0) alg.table[rk + a][rk + b].push_back({rk + sum, GaussRat(c)});
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  // Killing form is quick relative to the sign recursion; recompute.
  alg.killing = Mat(alg.dim, alg.dim);
  std::vector<Mat> ads;
  for (int i = 0; i < alg.dim; ++i) ads.push_back(alg.ad(alg.basis_vector(i)));
  for (int i = 0; i < alg.dim; ++i)
    for (int j = i; j < alg.dim; ++j) {
      GaussRat tr;
      for (int p = 0; p < alg.dim; ++p)
        for (int q = 0; q < alg.dim; ++q) tr += ads[i].at(p, q) * ads[j].at(q, p);
      alg.killing.at(i, j) = tr;
      alg.killing.at(j, i) = tr;
    }
  return alg;
}

ChevalleyAlgebra cached_chevalley(const std::string& dir, const RootSystem& rs) {
  if (auto alg = read_chevalley_cache(dir, rs)) return *alg;
  ChevalleyAlgebra alg = build_chevalley(rs);
  write_chevalley_cache(dir, alg);
  return alg;
}

}  // namespace liegc
