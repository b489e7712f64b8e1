#include "lfw/zero_fetch.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "lfw/errors.hpp"

namespace lfw {
namespace {

std::string height_label(double T) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", T);
  return buf;
}

void replace_all(std::string& s, const std::string& key, const std::string& value) {
  for (std::size_t pos = s.find(key); pos != std::string::npos; pos = s.find(key, pos + value.size())) {
    s.replace(pos, key.size(), value);
  }
}

}  // namespace

std::filesystem::path zero_cache_path(const std::filesystem::path& cache_dir, CharacterId id, double T) {
  return cache_dir / "zeros" / id.str() / (height_label(T) + ".csv");
}

std::string expand_zero_url(const std::string& url_template, CharacterId id, double T) {
  std::string url = url_template;
  replace_all(url, "{q}", std::to_string(id.modulus));
  replace_all(url, "{index}", std::to_string(id.index));
  replace_all(url, "{T}", height_label(T));
  return url;
}

std::vector<double> parse_ordinate_json(const std::string& body) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::parse, std::string("zero endpoint returned invalid JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("zeros")) doc = doc["zeros"];
  if (!doc.is_array()) fail(ErrorKind::parse, "zero endpoint must return a JSON array of ordinates");
  std::vector<double> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_number()) fail(ErrorKind::parse, "entry " + std::to_string(i) + " of the zero array is not a number");
    out.push_back(doc[i].get<double>());
  }
  return out;
}

std::optional<ZeroList> load_cached_zeros(const std::filesystem::path& cache_dir, const Character& chi, double T,
                                          const EvalParams& p) {
  const auto path = zero_cache_path(cache_dir, chi.id(), T);
  if (!std::filesystem::exists(path)) return std::nullopt;
  ZeroList list = import_zeros(path, chi, p);
  if (!mark_coverage(list, chi, 0.0, T)) return std::nullopt;
  return list;
}

void store_cached_zeros(const std::filesystem::path& cache_dir, const ZeroList& list, double T) {
  export_zeros(list, zero_cache_path(cache_dir, list.character, T));
}

ZeroList fetch_zeros(const Character& chi, double T, const ZeroSourceConfig& cfg, const EvalParams& p) {
  if (auto cached = load_cached_zeros(cfg.cache_dir, chi, T, p)) return *cached;
  if (!cfg.allow_network) {
    fail(ErrorKind::network, "zeros for " + chi.id().str() + " up to T=" + height_label(T) +
                                 " are not cached and network access is disabled");
  }
  if (cfg.url_template.empty()) fail(ErrorKind::network, "no zero source URL configured");

  const std::string url = expand_zero_url(cfg.url_template, chi.id(), T);
  static const std::regex split(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, split)) fail(ErrorKind::network, "unsupported zero source URL " + url);
  httplib::Client client(m[1].str());
  client.set_connection_timeout(cfg.timeout_seconds);
  client.set_read_timeout(cfg.timeout_seconds);
  client.set_follow_location(true);
  const std::string target = m[2].matched ? m[2].str() : "/";
  auto res = client.Get(target);
  if (!res) fail(ErrorKind::network, "request to " + url + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) fail(ErrorKind::network, "request to " + url + " returned HTTP " + std::to_string(res->status));

  std::vector<double> gammas = parse_ordinate_json(res->body);
  std::erase_if(gammas, [&](double g) { return !(g > 0.0) || g > T; });
  ZeroList list = verify_ordinates(gammas, chi, p);
  mark_coverage(list, chi, 0.0, T);
  store_cached_zeros(cfg.cache_dir, list, T);
  return list;
}

}  // namespace lfw
