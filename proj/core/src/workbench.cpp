#include "lfw/workbench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "lfw/errors.hpp"
#include "lfw/parallel.hpp"
#include "lfw/report.hpp"
#include "lfw/zero_fetch.hpp"

namespace lfw {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double max_of(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

std::vector<double> grid_of(const VerifyRequest& req) { return req.grid.empty() ? default_grid(req.kind) : req.grid; }

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

// Cached list of the smallest height >= T, if any.
std::optional<ZeroList> best_cached(const std::filesystem::path& cache_dir, const Character& chi, double T,
                                    const EvalParams& p) {
  const auto dir = cache_dir / "zeros" / chi.id().str();
  if (!std::filesystem::is_directory(dir)) return std::nullopt;
  std::vector<double> heights;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".csv") continue;
    try {
      heights.push_back(std::stod(entry.path().stem().string()));
    } catch (const std::exception&) {
    }
  }
  std::sort(heights.begin(), heights.end());
  for (double h : heights) {
    if (h < T) continue;
    if (auto list = load_cached_zeros(cache_dir, chi, h, p)) return list;
  }
  return std::nullopt;
}

Character primitive_for(const VerifyRequest& req) {
  const Character chi = character(req.character);
  return conductor_and_primitive_part(chi).primitive;
}

}  // namespace

std::vector<double> default_grid(ReportKind kind) {
  switch (kind) {
    case ReportKind::ultraclean_ii:
    case ReportKind::ultraclean_iii:
      return {1e3, 1e4, 1e5, 1e6};
    case ReportKind::meowing:
      return {1e3, 1e4, 1e5};
    case ReportKind::twist_T:
      return {50.0, 100.0, 200.0, 300.0};
    case ReportKind::twist_smoothed:
    case ReportKind::eureka:
      return {20.0, 40.0, 80.0, 160.0};
  }
  return {};
}

double required_zero_height(const VerifyRequest& req, const Bump& bump) {
  const double top = max_of(grid_of(req));
  switch (req.kind) {
    case ReportKind::twist_T:
      return top;
    case ReportKind::twist_smoothed:
    case ReportKind::eureka:
      return kTwoPi * req.xi.value() * top * bump.b();
    default:
      return 0.0;
  }
}

std::size_t required_sieve(const VerifyRequest& req, const Bump& bump) {
  const double top = max_of(grid_of(req));
  const Character chi = character(req.character);
  const double cond = chi.conductor();
  switch (req.kind) {
    case ReportKind::ultraclean_ii:
      return static_cast<std::size_t>(std::floor(top));
    case ReportKind::ultraclean_iii:
      return sieve_needed_smoothed(1, bump, top);
    case ReportKind::twist_T:
      return static_cast<std::size_t>(std::floor(cond * top / (kTwoPi * req.xi.value())));
    case ReportKind::twist_smoothed:
      return sieve_needed_smoothed(chi.conductor(), bump, top);
    case ReportKind::meowing:
      return sieve_needed_smoothed(chi.modulus(), bump, top);
    case ReportKind::eureka:
      return 0;
  }
  return 0;
}

Workspace::Workspace(RunConfig cfg) : cfg_(std::move(cfg)) { parallel::set_threads(cfg_.threads()); }

const EllTable& Workspace::ell_table(std::size_t n) {
  std::lock_guard lock(mutex_);
  if (!table_ || table_->size() < n) {
    // Grow geometrically so successive requests do not re-sieve each time.
    std::size_t size = std::max<std::size_t>(n, 1000);
    if (table_) size = std::max(size, std::min(2 * table_->size(), cfg_.max_sieve()));
    table_ = std::make_unique<EllTable>(size, cfg_.max_sieve());
  }
  return *table_;
}

const ZeroList& Workspace::zeros(const Character& primitive, double T) {
  std::lock_guard lock(mutex_);
  if (!primitive.is_primitive()) {
    fail(ErrorKind::domain, "zero lists are kept for primitive characters, got " + primitive.id().str());
  }
  auto it = zero_lists_.find(primitive.id());
  if (it != zero_lists_.end() && it->second.t_max >= T) return it->second;

  const EvalParams p = cfg_.eval_params();
  if (auto cached = best_cached(cfg_.cache_dir(), primitive, T, p)) {
    return zero_lists_[primitive.id()] = std::move(*cached);
  }
  const ZeroSourceConfig src = cfg_.zero_source();
  if (src.allow_network && !src.url_template.empty()) {
    ZeroList fetched = fetch_zeros(primitive, T, src, p);
    if (fetched.complete) return zero_lists_[primitive.id()] = std::move(fetched);
  }
  // Round up so nearby requests share one scan.
  const double height = std::min(std::ceil(T / 10.0) * 10.0, std::max(T, cfg_.real("zeros.max_height")));
  ZeroList list = scan_zeros(primitive, cfg_.real("zeros.start"), height, p, cfg_.scan_options());
  ++scans_;
  if (!list.complete) {
    fail(ErrorKind::scan_failure, "zero scan for " + primitive.id().str() + " up to " + fmt("%g", height) +
                                      " found a count outside the expected tolerance");
  }
  store_cached_zeros(cfg_.cache_dir(), list, height);
  return zero_lists_[primitive.id()] = std::move(list);
}

VerificationReport run_verification(Workspace& ws, const VerifyRequest& req) {
  const RunConfig& cfg = ws.config();
  const Bump bump = cfg.bump();
  const auto grid = grid_of(req);
  const Character chi = character(req.character);
  const double T = required_zero_height(req, bump);
  const std::size_t N = required_sieve(req, bump);
  const EllTable* table = N > 0 ? &ws.ell_table(N) : nullptr;
  const ZeroList* zeros = T > 0.0 ? &ws.zeros(primitive_for(req), T) : nullptr;

  VerificationReport r;
  switch (req.kind) {
    case ReportKind::ultraclean_ii:
      r = compare_ultraclean_ii(chi, grid, *table);
      break;
    case ReportKind::ultraclean_iii:
      r = compare_ultraclean_iii(chi, bump, grid, *table);
      break;
    case ReportKind::twist_T:
      r = compare_twist_T(chi, req.xi, grid, *zeros, *table);
      break;
    case ReportKind::twist_smoothed:
      r = compare_twist_smoothed(chi, req.xi, bump, grid, *zeros, *table);
      break;
    case ReportKind::eureka:
      r = compare_eureka(chi, req.xi, bump, grid, *zeros);
      break;
    case ReportKind::meowing:
      r = compare_meowing(chi, req.xi, bump, grid, *table);
      break;
  }
  r.threshold = cfg.real("verify.threshold");
  r.passed = r.fit.alpha <= r.threshold;
  return r;
}

std::vector<CharacterRow> character_table(std::uint32_t q) {
  std::vector<CharacterRow> rows;
  for (const auto& chi : enumerate_characters(q)) {
    rows.push_back({chi.id(), chi.conductor(), chi.parity(), chi.order(), chi.is_principal(), chi.is_primitive()});
  }
  return rows;
}

int cmd_characters(std::uint32_t q, std::ostream& out) {
  const auto rows = character_table(q);
  out << "index  conductor  parity  order  principal  primitive\n";
  char line[128];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%5u  %9u  %6s  %5u  %9s  %9s\n", r.id.index, r.conductor,
                  r.parity ? "odd" : "even", r.order, r.principal ? "yes" : "no", r.primitive ? "yes" : "no");
    out << line;
  }
  return kExitPass;
}

int cmd_scan_zeros(Workspace& ws, CharacterId id, double T, std::ostream& out) {
  const Character chi = character(id);
  const Character prim = conductor_and_primitive_part(chi).primitive;
  if (!(prim == chi)) {
    out << id.str() << " is induced from " << prim.id().str() << "; scanning the primitive character\n";
  }
  const ZeroList& list = ws.zeros(prim, T);
  const auto path = ws.config().output_dir() / "zeros" / (prim.id().str() + "_T_" + fmt("%g", T) + ".csv");
  ZeroList view = list;
  mark_coverage(view, prim, 0.0, T);
  export_zeros(view, path);
  const double expected = T > 2.0 ? expected_count(prim, T) : 0.0;
  out << prim.id().str() << ": " << view.zeros.size() << " zeros in (0, " << fmt("%g", T) << "], smooth count "
      << fmt("%.3f", expected) << ", tolerance " << fmt("%.3f", count_tolerance(prim, T)) << "\n";
  if (!view.zeros.empty()) out << "first ordinate " << fmt("%.12f", view.zeros.front().gamma) << "\n";
  out << "written " << path.string() << "\n";
  return kExitPass;
}

int cmd_verify(Workspace& ws, const VerifyRequest& req, std::ostream& out) {
  const VerificationReport r = run_verification(ws, req);
  const WrittenReport w = write_report(ws.config().output_dir(), r);
  out << to_string(r.kind) << " " << r.character.str() << " (conductor " << r.conductor << ", "
      << (r.parity ? "odd" : "even") << ")";
  if (r.xi) out << " xi=" << r.xi->str();
  out << "\n";
  for (const auto& p : r.points) {
    out << "  X=" << fmt("%-10g", p.x) << " |lhs|=" << fmt("%-14.6e", std::abs(p.lhs))
        << " |rhs|=" << fmt("%-14.6e", std::abs(p.rhs)) << " residual=" << fmt("%.6e", p.residual);
    if (p.literal_residual) out << " literal=" << fmt("%.6e", *p.literal_residual);
    out << "\n";
  }
  out << "  alpha=" << fmt("%.4f", r.fit.alpha) << " +- " << fmt("%.4f", r.fit.std_error);
  if (r.literal_fit) out << "  literal alpha=" << fmt("%.4f", r.literal_fit->alpha);
  out << "  threshold=" << fmt("%g", r.threshold) << "  " << (r.passed ? "PASS" : "FAIL") << "\n";
  for (const auto& [k, v] : r.extras) out << "  " << k << "=" << fmt("%.6e", v) << "\n";
  out << "  report " << w.json.string() << "\n";
  return r.passed ? kExitPass : kExitThreshold;
}

int cmd_selftest(Workspace& ws, std::ostream& out) {
  const auto checks = run_selftest(ws.config());
  bool ok = true;
  char line[256];
  for (const auto& c : checks) {
    ok = ok && c.passed;
    std::snprintf(line, sizeof line, "%-4s %-34s worst=%.3e tol=%.0e (%.2fs)", c.passed ? "ok" : "FAIL",
                  c.name.c_str(), c.worst, c.tolerance, c.seconds);
    out << line;
    if (!c.passed && !c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  out << (ok ? "selftest passed\n" : "selftest FAILED\n");
  return ok ? kExitPass : kExitError;
}

int cmd_export_plotdata(Workspace& ws, const VerifyRequest& req, std::ostream& out) {
  const VerificationReport r = run_verification(ws, req);
  const auto path = write_plot_data(ws.config().plot_dir(), r);
  out << "written " << path.string() << " (" << r.points.size() << " points, alpha=" << fmt("%.4f", r.fit.alpha)
      << ")\n";
  return kExitPass;
}

}  // namespace lfw
