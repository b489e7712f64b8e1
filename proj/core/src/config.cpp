#include "lfw/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "lfw/errors.hpp"
#include "lfw/report.hpp"

namespace lfw {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

const ConfigKey& lookup(const std::string& key) {
  const auto& keys = config_keys();
  auto it = std::find_if(keys.begin(), keys.end(), [&](const ConfigKey& k) { return k.name == key; });
  if (it == keys.end()) fail(ErrorKind::invalid_argument, "unknown config key '" + key + "'");
  return *it;
}

double parse_number(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    fail(ErrorKind::invalid_argument, "config key '" + key + "': '" + text + "' is not a number");
  }
  return v;
}

std::int64_t parse_int(const std::string& key, const std::string& text) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    // Allow integral values written like 2e7.
    const double d = parse_number(key, text);
    if (d != std::floor(d) || std::fabs(d) > 9e15) {
      fail(ErrorKind::invalid_argument, "config key '" + key + "': '" + text + "' is not an integer");
    }
    return static_cast<std::int64_t>(d);
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  fail(ErrorKind::invalid_argument, "config key '" + key + "': '" + text + "' is not a boolean");
}

void validate(const ConfigKey& k, const std::string& value) {
  switch (k.type) {
    case ValueType::integer: {
      const auto v = static_cast<double>(parse_int(k.name, value));
      if (v < k.min || v > k.max) {
        fail(ErrorKind::invalid_argument, "config key '" + k.name + "' = " + value + " is outside [" +
                                              std::to_string(static_cast<long long>(k.min)) + ", " +
                                              std::to_string(static_cast<long long>(k.max)) + "]");
      }
      break;
    }
    case ValueType::real: {
      const double v = parse_number(k.name, value);
      if (v < k.min || v > k.max) {
        fail(ErrorKind::invalid_argument, "config key '" + k.name + "' = " + value + " is outside [" +
                                              std::to_string(k.min) + ", " + std::to_string(k.max) + "]");
      }
      break;
    }
    case ValueType::boolean:
      parse_bool(k.name, value);
      break;
    case ValueType::text:
      if (value.find('\n') != std::string::npos) {
        fail(ErrorKind::invalid_argument, "config key '" + k.name + "' must fit on one line");
      }
      break;
  }
}

}  // namespace

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = {
      {"threads", ValueType::integer, "0", 0, 1024, "worker threads, 0 = hardware concurrency"},
      {"arith.max_sieve", ValueType::integer, "20000000", 1, 2e9, "largest n the l(n) sieve may allocate"},
      {"bump.a", ValueType::real, "0.5", 1e-6, 1e6, "left end of the bump support"},
      {"bump.b", ValueType::real, "2", 1e-6, 1e6, "right end of the bump support"},
      {"bump.amplitude", ValueType::real, "1", -1e12, 1e12, "bump amplitude"},
      {"eval.em_shift", ValueType::integer, "10", 1, 100000, "minimum Euler-Maclaurin shift"},
      {"eval.em_order", ValueType::integer, "8", 1, 30, "Bernoulli correction terms"},
      {"eval.deriv_radius", ValueType::real, "0.25", 1e-4, 1, "Cauchy circle radius for derivatives"},
      {"eval.deriv_nodes", ValueType::integer, "64", 8, 4096, "Cauchy circle nodes"},
      {"eval.target_abs_err", ValueType::real, "1e-10", 1e-16, 1e-2, "target absolute error"},
      {"zeros.max_height", ValueType::real, "2100", 1, 1e5, "highest ordinate a scan may reach"},
      {"zeros.window", ValueType::real, "10", 0.5, 1000, "t-length of independently scanned windows"},
      {"zeros.max_halvings", ValueType::integer, "6", 0, 20, "grid refinements per window"},
      {"zeros.start", ValueType::real, "0.01", 1e-6, 1, "lower end of every scan"},
      {"paths.output_dir", ValueType::text, "reports", 0, 0, "root for verification reports"},
      {"paths.cache_dir", ValueType::text, "cache", 0, 0, "root for cached zero lists"},
      {"paths.plot_dir", ValueType::text, "plots", 0, 0, "root for exported plot data"},
      {"network.enabled", ValueType::boolean, "false", 0, 0, "allow downloading zero ordinates"},
      {"network.zero_url", ValueType::text, "", 0, 0, "URL template with {q}, {index}, {T}"},
      {"network.timeout", ValueType::integer, "30", 1, 3600, "HTTP timeout in seconds"},
      {"verify.threshold", ValueType::real, "0.75", -10, 10, "largest accepted fitted exponent"},
      {"selftest.points", ValueType::integer, "9", 1, 1000, "strip points per character"},
      {"selftest.sequence_offset", ValueType::integer, "17", 0, 1e9, "first Halton index for strip points"},
      {"selftest.max_modulus", ValueType::integer, "12", 1, 200, "largest modulus in the property suite"},
  };
  return keys;
}

RunConfig::RunConfig() {
  for (const auto& k : config_keys()) values_[k.name] = k.default_value;
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(ErrorKind::parse, "config line " + std::to_string(line_no) + ": expected key=value");
    }
    try {
      cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const Error& e) {
      fail(ErrorKind::parse, "config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) { return parse(read_text_file(path)); }

std::string RunConfig::to_text() const {
  std::string out;
  for (const auto& k : config_keys()) out += k.name + "=" + values_.at(k.name) + "\n";
  return out;
}

void RunConfig::save(const std::filesystem::path& path) const { write_text_file(path, to_text()); }

void RunConfig::set(const std::string& key, const std::string& value) {
  const ConfigKey& k = lookup(key);
  validate(k, value);
  values_[key] = value;
}

const std::string& RunConfig::get(const std::string& key) const {
  lookup(key);
  return values_.at(key);
}

bool RunConfig::has_key(const std::string& key) const { return values_.count(key) != 0; }

std::int64_t RunConfig::integer(const std::string& key) const { return parse_int(key, get(key)); }
double RunConfig::real(const std::string& key) const { return parse_number(key, get(key)); }
bool RunConfig::flag(const std::string& key) const { return parse_bool(key, get(key)); }

EvalParams RunConfig::eval_params() const {
  EvalParams p;
  p.em_shift = static_cast<int>(integer("eval.em_shift"));
  p.em_order = static_cast<int>(integer("eval.em_order"));
  p.deriv_radius = real("eval.deriv_radius");
  p.deriv_nodes = static_cast<int>(integer("eval.deriv_nodes"));
  p.target_abs_err = real("eval.target_abs_err");
  return p;
}

Bump RunConfig::bump() const { return Bump(real("bump.a"), real("bump.b"), real("bump.amplitude")); }

ScanOptions RunConfig::scan_options() const {
  ScanOptions o;
  o.max_height = real("zeros.max_height");
  o.window = real("zeros.window");
  o.max_halvings = static_cast<int>(integer("zeros.max_halvings"));
  return o;
}

ZeroSourceConfig RunConfig::zero_source() const {
  ZeroSourceConfig z;
  z.url_template = get("network.zero_url");
  z.allow_network = flag("network.enabled");
  z.cache_dir = cache_dir();
  z.timeout_seconds = static_cast<int>(integer("network.timeout"));
  return z;
}

std::size_t RunConfig::max_sieve() const { return static_cast<std::size_t>(integer("arith.max_sieve")); }
unsigned RunConfig::threads() const { return static_cast<unsigned>(integer("threads")); }
std::filesystem::path RunConfig::output_dir() const { return get("paths.output_dir"); }
std::filesystem::path RunConfig::cache_dir() const { return get("paths.cache_dir"); }
std::filesystem::path RunConfig::plot_dir() const { return get("paths.plot_dir"); }

std::vector<cplx> halton_strip_points(std::size_t count, std::uint64_t offset, double sigma_lo, double sigma_hi,
                                      double t_lo, double t_hi) {
  auto radical_inverse = [](std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base), f = inv, r = 0.0;
    for (; i > 0; i /= base, f *= inv) r += f * static_cast<double>(i % base);
    return r;
  };
  std::vector<cplx> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint64_t i = offset + j;
    out.emplace_back(sigma_lo + (sigma_hi - sigma_lo) * radical_inverse(i, 2),
                     t_lo + (t_hi - t_lo) * radical_inverse(i, 3));
  }
  return out;
}

}  // namespace lfw
