#pragma once

#include <optional>
#include <string>

#include "liegc/chevalley.hpp"
#include "liegc/rootsys.hpp"

namespace liegc {

/// On-disk caches: a versioned text table per (series, rank) for root data,
/// and one per algebra for structure constants.  Files are regenerated when
/// missing or version-stale.

std::string root_cache_path(const std::string& dir, char series, int rank);
bool write_root_cache(const std::string& dir, const RootSystem& rs);
std::optional<RootSystem> read_root_cache(const std::string& dir, char series, int rank);

/// Builds via the cache when possible, writing it on a miss.
RootSystem cached_root_system(const std::string& dir, char series, int rank,
                              int rank_cap = 4);

std::string chevalley_cache_path(const std::string& dir, char series, int rank);
bool write_chevalley_cache(const std::string& dir, const ChevalleyAlgebra& alg);
std::optional<ChevalleyAlgebra> read_chevalley_cache(const std::string& dir,
                                                     const RootSystem& rs);
ChevalleyAlgebra cached_chevalley(const std::string& dir, const RootSystem& rs);

}  // namespace liegc
