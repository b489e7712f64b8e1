#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lfw/bump.hpp"
#include "lfw/lfunc.hpp"
#include "lfw/zero_fetch.hpp"
#include "lfw/zeros.hpp"

namespace lfw {

enum class ValueType { integer, real, boolean, text };

struct ConfigKey {
  std::string name;
  ValueType type;
  std::string default_value;
  double min = 0.0;  // numeric range, inclusive
  double max = 0.0;
  std::string help;
};

// Every recognised key with its default, in file order.
const std::vector<ConfigKey>& config_keys();

// Flat key=value settings with dotted section names. Values are kept as the
// text they were given, so save/load round trips are exact.
class RunConfig {
 public:
  RunConfig();

  static RunConfig parse(const std::string& text);
  static RunConfig load(const std::filesystem::path& path);
  std::string to_text() const;
  void save(const std::filesystem::path& path) const;

  // Validates the key and the value against its type and range.
  void set(const std::string& key, const std::string& value);
  const std::string& get(const std::string& key) const;
  bool has_key(const std::string& key) const;

  std::int64_t integer(const std::string& key) const;
  double real(const std::string& key) const;
  bool flag(const std::string& key) const;

  EvalParams eval_params() const;
  Bump bump() const;
  ScanOptions scan_options() const;
  ZeroSourceConfig zero_source() const;
  std::size_t max_sieve() const;
  unsigned threads() const;
  std::filesystem::path output_dir() const;
  std::filesystem::path cache_dir() const;
  std::filesystem::path plot_dir() const;

  bool operator==(const RunConfig&) const = default;

 private:
  std::map<std::string, std::string> values_;
};

// Points of the base-2/base-3 Halton sequence starting at `offset`, mapped
// into [sigma_lo, sigma_hi] x [t_lo, t_hi].
std::vector<cplx> halton_strip_points(std::size_t count, std::uint64_t offset, double sigma_lo, double sigma_hi,
                                      double t_lo, double t_hi);

}  // namespace lfw
