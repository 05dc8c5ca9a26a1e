#include "liegc/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "liegc/errors.hpp"

namespace liegc {
namespace {

using QVec = std::vector<Rational>;

Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Simple roots in ambient Euclidean coordinates (Bourbaki realizations).
std::vector<QVec> simple_roots_ambient(char series, int rank) {
  auto unit = [&](int dim, int i) {
    QVec v(dim, Rational(0));
    v[i] = 1;
    return v;
  };
  std::vector<QVec> s;
  switch (series) {
    case 'A': {
      if (rank < 1) throw UnsupportedTypeError("A requires rank >= 1");
      int d = rank + 1;
      for (int i = 0; i < rank; ++i) {
        QVec v(d, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      break;
    }
    case 'B': {
      if (rank < 2) throw UnsupportedTypeError("B requires rank >= 2");
      for (int i = 0; i + 1 < rank; ++i) {
        QVec v(rank, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      s.push_back(unit(rank, rank - 1));
      break;
    }
    case 'C': {
      if (rank < 2) throw UnsupportedTypeError("C requires rank >= 2");
      for (int i = 0; i + 1 < rank; ++i) {
        QVec v(rank, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      QVec v(rank, Rational(0));
      v[rank - 1] = 2;
      s.push_back(v);
      break;
    }
    case 'D': {
      // D2 = A1 x A1 is admitted deliberately: it is the one reducible system
      // the tests use as a contrast case.
      if (rank < 2) throw UnsupportedTypeError("D requires rank >= 2");
      for (int i = 0; i + 1 < rank; ++i) {
        QVec v(rank, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(v);
      }
      QVec v(rank, Rational(0));
      v[rank - 2] = 1;
      v[rank - 1] = 1;
      s.push_back(v);
      break;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw UnsupportedTypeError("E requires rank in {6,7,8}");
      QVec a1(8, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      for (int i = 1; i <= 6; ++i) a1[i] = Rational(-1, 2);
      s.push_back(a1);
      QVec a2(8, Rational(0));
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a2);
      for (int k = 0; k < rank - 2; ++k) {
        QVec v(8, Rational(0));
        v[k] = -1;
        v[k + 1] = 1;
        s.push_back(v);
      }
      break;
    }
    case 'F': {
      if (rank != 4) throw UnsupportedTypeError("F requires rank 4");
      QVec a1(4, Rational(0)), a2(4, Rational(0)), a3(4, Rational(0));
      a1[1] = 1;
      a1[2] = -1;
      a2[2] = 1;
      a2[3] = -1;
      a3[3] = 1;
      QVec a4(4, Rational(1, 2));
      a4[1] = Rational(-1, 2);
      a4[2] = Rational(-1, 2);
      a4[3] = Rational(-1, 2);
      s = {a1, a2, a3, a4};
      break;
    }
    case 'G': {
      if (rank != 2) throw UnsupportedTypeError("G requires rank 2");
      QVec a1(3, Rational(0)), a2(3, Rational(0));
      a1[0] = 1;
      a1[1] = -1;
      a2[0] = -2;
      a2[1] = 1;
      a2[2] = 1;
      s = {a1, a2};
      break;
    }
    default:
      throw UnsupportedTypeError(std::string("unknown series ") + series);
  }
  return s;
}

int classical_root_count(char series, int rank) {
  switch (series) {
    case 'A':
      return rank * (rank + 1);
    case 'B':
    case 'C':
      return 2 * rank * rank;
    case 'D':
      return 2 * rank * (rank - 1);
    case 'E':
      return rank == 6 ? 72 : (rank == 7 ? 126 : 240);
    case 'F':
      return 48;
    case 'G':
      return 12;
  }
  return -1;
}

}  // namespace

int RootSystem::height(int idx) const {
  return std::accumulate(roots[idx].begin(), roots[idx].end(), 0);
}

int RootSystem::root_index(const std::vector<int>& coords) const {
  auto cmp = [this](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  };
  auto it = std::lower_bound(roots.begin(), roots.end(), coords, cmp);
  if (it != roots.end() && *it == coords) return int(it - roots.begin());
  return -1;
}

Rational RootSystem::inner(const std::vector<int>& b, const std::vector<int>& c) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i) {
    if (b[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      if (c[j] != 0) s += Rational(b[i]) * Rational(c[j]) * gram[i][j];
  }
  return s;
}

RootSystem build_root_system(char series, int rank, int rank_cap) {
  if (series < 'A' || series > 'G') throw UnsupportedTypeError("series must be A-G");
  if (rank < 1) throw UnsupportedTypeError("rank must be positive");
  if (rank > rank_cap)
    throw CapExceededError("rank " + std::to_string(rank) + " exceeds cap " +
                           std::to_string(rank_cap));
  std::vector<QVec> simples = simple_roots_ambient(series, rank);

  RootSystem rs;
  rs.series = series;
  rs.rank = rank;

  // Gram matrix, normalized so the shortest simple root has squared length 2.
  Rational min_len2;
  for (int i = 0; i < rank; ++i) {
    Rational l2 = dot(simples[i], simples[i]);
    if (i == 0 || l2 < min_len2) min_len2 = l2;
  }
  Rational scale = Rational(2) / min_len2;
  rs.gram.assign(rank, QVec(rank, Rational(0)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.gram[i][j] = scale * dot(simples[i], simples[j]);

  rs.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational a = Rational(2) * rs.gram[i][j] / rs.gram[i][i];
      if (a.get_den() != 1)
        throw UnsupportedTypeError("non-integral Cartan entry for " + rs.type_name());
      rs.cartan[i][j] = int(a.get_num().get_si());
    }

  // Reflection closure of the simple roots in simple-root coordinates:
  // s_i(beta) subtracts <beta, alpha_i-check> = sum_j c_j cartan[i][j] from c_i.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    seen.insert(c);
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : frontier) {
      for (int i = 0; i < rank; ++i) {
        int pairing = 0;
        for (int j = 0; j < rank; ++j) pairing += c[j] * rs.cartan[i][j];
        std::vector<int> r = c;
        r[i] -= pairing;
        if (seen.insert(r).second) next.push_back(r);
      }
      std::vector<int> m(rank);
      for (int j = 0; j < rank; ++j) m[j] = -c[j];
      if (seen.insert(m).second) next.push_back(m);
    }
    frontier = std::move(next);
  }
  rs.roots.assign(seen.begin(), seen.end());
  std::sort(rs.roots.begin(), rs.roots.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ha = std::accumulate(a.begin(), a.end(), 0);
              int hb = std::accumulate(b.begin(), b.end(), 0);
              if (ha != hb) return ha < hb;
              return a < b;
            });

  if (rs.num_roots() != classical_root_count(series, rank))
    throw UnsupportedTypeError("internal: root count mismatch for " + rs.type_name());

  int n = rs.num_roots();
  rs.neg_index.assign(n, -1);
  rs.sum_index.assign(n, std::vector<int>(n, -1));
  std::map<std::vector<int>, int> lookup;
  for (int k = 0; k < n; ++k) lookup[rs.roots[k]] = k;
  for (int i = 0; i < n; ++i) {
    std::vector<int> m(rank);
    for (int j = 0; j < rank; ++j) m[j] = -rs.roots[i][j];
    rs.neg_index[i] = lookup.at(m);
    for (int k = 0; k < n; ++k) {
      std::vector<int> s(rank);
      for (int j = 0; j < rank; ++j) s[j] = rs.roots[i][j] + rs.roots[k][j];
      auto it = lookup.find(s);
      if (it != lookup.end()) rs.sum_index[i][k] = it->second;
    }
  }
  return rs;
}

RootSystem build_root_system(const std::string& type, int rank_cap) {
  if (type.size() < 2) throw UnsupportedTypeError("bad type string: " + type);
  char series = type[0];
  int rank = 0;
  try {
    size_t pos = 0;
    rank = std::stoi(type.substr(1), &pos);
    if (pos != type.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw UnsupportedTypeError("bad type string: " + type);
  }
  return build_root_system(series, rank, rank_cap);
}

std::vector<int> RootSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < rs->num_roots(); ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

RootSubset make_subset(const RootSystem& rs, uint64_t mask) {
  if (rs.num_roots() > 64)
    throw CapExceededError("subset masks support at most 64 roots");
  if (rs.num_roots() < 64 && (mask >> rs.num_roots()) != 0)
    throw DimensionMismatchError("mask has bits beyond the root count");
  return RootSubset{&rs, mask};
}

RootSubset subset_of_indices(const RootSystem& rs, const std::vector<int>& idxs) {
  uint64_t m = 0;
  for (int i : idxs) {
    if (i < 0 || i >= rs.num_roots()) throw DimensionMismatchError("root index out of range");
    m |= uint64_t(1) << i;
  }
  return make_subset(rs, m);
}

RootSubset full_subset(const RootSystem& rs) {
  int n = rs.num_roots();
  uint64_t m = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
  return make_subset(rs, m);
}

RootSubset empty_subset(const RootSystem& rs) { return make_subset(rs, 0); }

RootSubset negate_subset(const RootSubset& s) {
  uint64_t m = 0;
  for (int i = 0; i < s.rs->num_roots(); ++i)
    if (s.contains(i)) m |= uint64_t(1) << s.rs->neg_index[i];
  return RootSubset{s.rs, m};
}

RootSubset intersect(const RootSubset& a, const RootSubset& b) {
  return RootSubset{a.rs, a.mask & b.mask};
}
RootSubset unite(const RootSubset& a, const RootSubset& b) {
  return RootSubset{a.rs, a.mask | b.mask};
}
RootSubset subtract(const RootSubset& a, const RootSubset& b) {
  return RootSubset{a.rs, a.mask & ~b.mask};
}

bool is_closed(const RootSubset& s) {
  auto idx = s.indices();
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b) {
      int sum = s.rs->sum_index[idx[a]][idx[b]];
      if (sum >= 0 && !s.contains(sum)) return false;
    }
  return true;
}

bool is_symmetric(const RootSubset& s) { return negate_subset(s).mask == s.mask; }

bool is_parabolic_subset(const RootSubset& s) {
  return is_closed(s) && unite(s, negate_subset(s)).mask == full_subset(*s.rs).mask;
}

std::pair<RootSubset, RootSubset> split_subset(const RootSubset& s) {
  RootSubset a0 = intersect(s, negate_subset(s));
  return {a0, subtract(s, a0)};
}

namespace {

struct ClosedEnum {
  const RootSystem* rs;
  int n;
  uint64_t required;
  std::vector<std::vector<std::pair<int, int>>> pairs_by_sum;
  std::vector<uint64_t> out;

  void run() {
    pairs_by_sum.assign(n, {});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int s = rs->sum_index[i][j];
        if (s >= 0) pairs_by_sum[s].push_back({i, j});
      }
    dfs(0, 0);
    std::sort(out.begin(), out.end());
  }

  bool can_include(uint64_t chosen, int k) const {
    for (int i = 0; i < k; ++i) {
      if (!((chosen >> i) & 1)) continue;
      int s = rs->sum_index[i][k];
      if (s >= 0 && s < k && !((chosen >> s) & 1)) return false;
    }
    return true;
  }

  void dfs(int k, uint64_t chosen) {
    if (k == n) {
      out.push_back(chosen);
      return;
    }
    bool forced = (required >> k) & 1;
    if (!forced) {
      // Exclude k: fails if two chosen roots already sum to it.
      bool ok = true;
      for (auto [i, j] : pairs_by_sum[k])
        if (((chosen >> i) & 1) && ((chosen >> j) & 1)) {
          ok = false;
          break;
        }
      if (ok) dfs(k + 1, chosen);
    }
    if (can_include(chosen, k)) dfs(k + 1, chosen | (uint64_t(1) << k));
  }
};

}  // namespace

std::vector<RootSubset> enumerate_closed_subsets(const RootSystem& rs,
                                                 const RootSubset& required,
                                                 int budget_bits) {
  int n = rs.num_roots();
  if (n > 64) throw CapExceededError("subset masks support at most 64 roots");
  int free_bits = n - __builtin_popcountll(required.mask);
  if (free_bits > budget_bits)
    throw CapExceededError("enumeration over " + std::to_string(free_bits) +
                           " free roots exceeds budget of " + std::to_string(budget_bits));
  ClosedEnum e{&rs, n, required.mask, {}, {}};
  e.run();
  std::vector<RootSubset> result;
  result.reserve(e.out.size());
  for (uint64_t m : e.out) result.push_back(RootSubset{&rs, m});
  return result;
}

std::vector<RootSubset> enumerate_symmetric_closed_subsets(const RootSystem& rs) {
  int n = rs.num_roots();
  if (n > 64) throw CapExceededError("subset masks support at most 64 roots");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    if (i < rs.neg_index[i]) pairs.push_back({i, rs.neg_index[i]});
  int p = int(pairs.size());
  std::vector<RootSubset> out;
  for (uint64_t pm = 0; pm < (uint64_t(1) << p); ++pm) {
    uint64_t m = 0;
    for (int k = 0; k < p; ++k)
      if ((pm >> k) & 1) m |= (uint64_t(1) << pairs[k].first) | (uint64_t(1) << pairs[k].second);
    RootSubset s{&rs, m};
    if (is_closed(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(),
            [](const RootSubset& a, const RootSubset& b) { return a.mask < b.mask; });
  return out;
}

int span_rank(const RootSubset& s) {
  Mat m(0, s.rs->rank);
  for (int i : s.indices()) {
    Vec row(s.rs->rank);
    for (int j = 0; j < s.rs->rank; ++j) row[j] = Rational(s.rs->roots[i][j]);
    m.append_row(row);
  }
  return m.rows() == 0 ? 0 : rank(m);
}

bool is_levi_subsystem(const RootSubset& s, const RootSubset& ambient) {
  if ((s.mask & ~ambient.mask) != 0) return false;
  if (!is_symmetric(s) || !is_closed(s)) return false;
  Mat span(0, s.rs->rank);
  for (int i : s.indices()) {
    Vec row(s.rs->rank);
    for (int j = 0; j < s.rs->rank; ++j) row[j] = Rational(s.rs->roots[i][j]);
    span.append_row(row);
  }
  int r = span.rows() == 0 ? 0 : rank(span);
  for (int g : ambient.indices()) {
    if (s.contains(g)) continue;
    Vec row(s.rs->rank);
    for (int j = 0; j < s.rs->rank; ++j) row[j] = Rational(s.rs->roots[g][j]);
    Mat ext = span;
    ext.append_row(row);
    if (rank(ext) == r) return false;  // gamma in span(S) but outside S
  }
  return true;
}

Coroot coroot(const RootSystem& rs, int root_index) {
  if (root_index < 0 || root_index >= rs.num_roots())
    throw DimensionMismatchError("root index out of range");
  const auto& c = rs.roots[root_index];
  Rational len2 = rs.length2(root_index);
  Coroot cr;
  cr.root_index = root_index;
  cr.vector.resize(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    cr.vector[i] = Rational(c[i]) * rs.gram[i][i] / len2;
  return cr;
}

GaussRat pair_coroot(const std::vector<GaussRat>& phi, const Coroot& c) {
  if (phi.size() != c.vector.size()) throw DimensionMismatchError("pair_coroot: size");
  GaussRat s;
  for (size_t i = 0; i < phi.size(); ++i) s += phi[i] * GaussRat(c.vector[i]);
  return s;
}

Rational root_coroot_pairing(const RootSystem& rs, const std::vector<int>& beta,
                             const Coroot& c) {
  Rational s = 0;
  for (int i = 0; i < rs.rank; ++i) {
    int cart = 0;
    for (int j = 0; j < rs.rank; ++j) cart += beta[j] * rs.cartan[i][j];
    s += c.vector[i] * cart;
  }
  return s;
}

}  // namespace liegc
