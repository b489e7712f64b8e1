#include "lfw/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "lfw/errors.hpp"

namespace lfw {
namespace {

using ojson = nlohmann::ordered_json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ojson complex_json(cplx z) { return ojson::array({z.real(), z.imag()}); }

cplx complex_from(const nlohmann::json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

ojson fit_json(const FitResult& f) {
  ojson j;
  j["alpha"] = f.alpha;
  j["std_error"] = f.std_error;
  j["used"] = f.used;
  j["dropped"] = f.dropped;
  return j;
}

FitResult fit_from(const nlohmann::json& j) {
  FitResult f;
  f.alpha = j.at("alpha").get<double>();
  f.std_error = j.at("std_error").get<double>();
  f.used = j.at("used").get<std::size_t>();
  f.dropped = j.at("dropped").get<std::size_t>();
  return f;
}

}  // namespace

ojson report_to_json(const VerificationReport& r) {
  ojson j;
  j["schema"] = kReportSchemaVersion;
  j["kind"] = to_string(r.kind);
  j["character"] = r.character.str();
  j["modulus"] = r.character.modulus;
  j["index"] = r.character.index;
  j["conductor"] = r.conductor;
  j["parity"] = r.parity;
  j["xi"] = r.xi ? ojson(r.xi->str()) : ojson(nullptr);
  if (r.bump) {
    ojson b;
    b["a"] = r.bump->a();
    b["b"] = r.bump->b();
    b["amplitude"] = r.bump->amplitude();
    j["bump"] = b;
  } else {
    j["bump"] = nullptr;
  }
  ojson pts = ojson::array();
  for (const auto& p : r.points) {
    ojson e;
    e["x"] = p.x;
    e["lhs"] = complex_json(p.lhs);
    e["rhs"] = complex_json(p.rhs);
    e["residual"] = p.residual;
    if (p.literal_residual) e["literal_residual"] = *p.literal_residual;
    e["terms"] = p.terms;
    pts.push_back(std::move(e));
  }
  j["points"] = std::move(pts);
  j["fit"] = fit_json(r.fit);
  if (r.literal_fit) j["literal_fit"] = fit_json(*r.literal_fit);
  j["threshold"] = r.threshold;
  j["passed"] = r.passed;
  ojson extras = ojson::object();
  for (const auto& [k, v] : r.extras) extras[k] = v;
  j["extras"] = std::move(extras);
  return j;
}

VerificationReport report_from_json(const nlohmann::json& doc) {
  try {
    VerificationReport r;
    r.kind = parse_report_kind(doc.at("kind").get<std::string>());
    r.character = CharacterId::parse(doc.at("character").get<std::string>());
    r.conductor = doc.at("conductor").get<std::uint32_t>();
    r.parity = doc.at("parity").get<int>();
    if (!doc.at("xi").is_null()) r.xi = Rational::parse(doc.at("xi").get<std::string>());
    if (!doc.at("bump").is_null()) {
      const auto& b = doc.at("bump");
      r.bump = Bump(b.at("a").get<double>(), b.at("b").get<double>(), b.at("amplitude").get<double>());
    }
    for (const auto& e : doc.at("points")) {
      GridPoint p;
      p.x = e.at("x").get<double>();
      p.lhs = complex_from(e.at("lhs"));
      p.rhs = complex_from(e.at("rhs"));
      p.residual = e.at("residual").get<double>();
      if (e.contains("literal_residual")) p.literal_residual = e.at("literal_residual").get<double>();
      p.terms = e.at("terms").get<std::size_t>();
      r.points.push_back(p);
    }
    r.fit = fit_from(doc.at("fit"));
    if (doc.contains("literal_fit")) r.literal_fit = fit_from(doc.at("literal_fit"));
    r.threshold = doc.at("threshold").get<double>();
    r.passed = doc.at("passed").get<bool>();
    for (const auto& [k, v] : doc.at("extras").items()) r.extras.emplace_back(k, v.get<double>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("malformed report: ") + e.what());
  }
}

std::string report_json_text(const VerificationReport& r) { return report_to_json(r).dump(2) + "\n"; }

std::string report_grid_csv(const VerificationReport& r) {
  const bool literal = !r.points.empty() && r.points.front().literal_residual.has_value();
  std::string out = literal ? "X,abs_lhs,abs_rhs,residual,literal_residual\n" : "X,abs_lhs,abs_rhs,residual\n";
  for (const auto& p : r.points) {
    out += g17(p.x) + "," + g17(std::abs(p.lhs)) + "," + g17(std::abs(p.rhs)) + "," + g17(p.residual);
    if (literal) out += "," + g17(p.literal_residual.value_or(0.0));
    out += "\n";
  }
  return out;
}

std::string report_plot_csv(const VerificationReport& r) {
  std::string out = "x,residual,log_x,log_residual\n";
  for (const auto& p : r.points) {
    if (!(p.residual > 0.0)) continue;
    out += g17(p.x) + "," + g17(p.residual) + "," + g17(std::log(p.x)) + "," + g17(std::log(p.residual)) + "\n";
  }
  return out;
}

std::string report_stem(const VerificationReport& r) {
  const Rational xi = r.xi.value_or(Rational{});
  return r.character.str() + "_xi_" + std::to_string(xi.h) + "_" + std::to_string(xi.k);
}

std::filesystem::path report_path(const std::filesystem::path& root, const VerificationReport& r,
                                  const std::string& extension) {
  return root / to_string(r.kind) / (report_stem(r) + extension);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) fail(ErrorKind::io, "cannot write " + path.string());
  f << text;
  if (!f) fail(ErrorKind::io, "write failed for " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

WrittenReport write_report(const std::filesystem::path& root, const VerificationReport& r) {
  WrittenReport w{report_path(root, r, ".json"), report_path(root, r, ".csv")};
  write_text_file(w.json, report_json_text(r));
  write_text_file(w.csv, report_grid_csv(r));
  return w;
}

std::filesystem::path write_plot_data(const std::filesystem::path& root, const VerificationReport& r) {
  const auto path = report_path(root, r, ".csv");
  write_text_file(path, report_plot_csv(r));
  return path;
}

}  // namespace lfw
