#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lfw/zeros.hpp"

namespace lfw {

// Where precomputed ordinates may come from. The template may contain
// {q}, {index} and {T}; nothing is downloaded unless allow_network is set.
struct ZeroSourceConfig {
  std::string url_template;
  bool allow_network = false;
  std::filesystem::path cache_dir = "cache";
  int timeout_seconds = 30;
};

// <cache_dir>/zeros/chi_q.index/<T>.csv
std::filesystem::path zero_cache_path(const std::filesystem::path& cache_dir, CharacterId id, double T);

std::string expand_zero_url(const std::string& url_template, CharacterId id, double T);

// Accepts a bare JSON array of ordinates or an object holding one under "zeros".
std::vector<double> parse_ordinate_json(const std::string& body);

// Cached list for (chi, T), re-verified and with coverage (0, T] checked.
std::optional<ZeroList> load_cached_zeros(const std::filesystem::path& cache_dir, const Character& chi, double T,
                                          const EvalParams& p = {});
void store_cached_zeros(const std::filesystem::path& cache_dir, const ZeroList& list, double T);

// Cache first, then the configured endpoint. Network error when the list is
// not cached and the network is disabled or unreachable.
ZeroList fetch_zeros(const Character& chi, double T, const ZeroSourceConfig& cfg, const EvalParams& p = {});

}  // namespace lfw
