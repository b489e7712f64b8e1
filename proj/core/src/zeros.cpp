#include "lfw/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <boost/math/tools/toms748_solve.hpp>

#include "lfw/errors.hpp"
#include "lfw/gamma.hpp"
#include "lfw/parallel.hpp"

namespace lfw {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxAbsL = 1e-8;
constexpr double kImportAbsL = 1e-6;
constexpr double kDuplicateGap = 1e-7;

double smooth_count(const Character& chi, double T) {
  if (T <= 2.0) return 0.0;
  return std::max(0.0, expected_count(chi, T));
}

double initial_step(const Character& chi, double t_hi) {
  const double lg = std::log(chi.modulus() * t_hi / (2.0 * kPi));
  return 0.5 * std::min(1.0, 2.0 * kPi / std::max(1.0, lg));
}

std::string window_string(double a, double b) {
  std::ostringstream os;
  os.precision(10);
  os << "(" << a << ", " << b << "]";
  return os.str();
}

Zero finish_zero(const Character& chi, double gamma, double err, const EvalParams& p) {
  const LJet jet = L_jet(cplx(0.5, gamma), chi, p);
  if (std::abs(jet.value) > kMaxAbsL) {
    std::ostringstream os;
    os.precision(17);
    os << "refined ordinate " << gamma << " leaves |L| = " << std::abs(jet.value) << " for " << chi.id().str();
    fail(ErrorKind::scan_failure, os.str());
  }
  return {gamma, jet.first, ZeroSource::computed, err};
}

// Sign changes of Z on the window. The grid is halved until the number of
// brackets equals the argument-principle count of the surrounding box.
std::vector<Zero> scan_window_real(const Character& chi, double w0, double w1, const EvalParams& p,
                                   const ScanOptions& opts) {
  const int target = winding_count(chi, 0.25, 0.75, w0, w1, p);
  const double h0 = initial_step(chi, w1);
  std::size_t n = static_cast<std::size_t>(std::ceil((w1 - w0) / h0));
  n = std::max<std::size_t>(n, 2);
  auto node = [&](std::size_t k, std::size_t count) {
    return k == count ? w1 : w0 + (w1 - w0) * static_cast<double>(k) / static_cast<double>(count);
  };
  std::vector<double> values(n + 1);
  for (std::size_t k = 0; k <= n; ++k) values[k] = hardy_z(node(k, n), chi, p);
  auto count_changes = [](const std::vector<double>& v) {
    long c = 0;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) c += (v[k] < 0.0) != (v[k + 1] < 0.0);
    return c;
  };
  long found = count_changes(values);
  for (int level = 1; level <= opts.max_halvings && found < target; ++level) {
    const std::size_t m = 2 * n;
    std::vector<double> finer(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
      finer[k] = (k % 2 == 0) ? values[k / 2] : hardy_z(node(k, m), chi, p);
    }
    values = std::move(finer);
    n = m;
    found = count_changes(values);
  }
  if (found != target) {
    fail(ErrorKind::scan_failure, "sign changes (" + std::to_string(found) + ") and winding count (" +
                                      std::to_string(target) + ") disagree after " +
                                      std::to_string(opts.max_halvings) + " halvings on window " +
                                      window_string(w0, w1) + " for " + chi.id().str());
  }

  std::vector<Zero> out;
  const auto f = [&](double t) { return hardy_z(t, chi, p); };
  for (std::size_t k = 0; k < n; ++k) {
    if ((values[k] < 0.0) == (values[k + 1] < 0.0)) continue;
    double a = node(k, n);
    double b = node(k + 1, n);
    std::uintmax_t iters = 100;
    const auto r = boost::math::tools::toms748_solve(f, a, b, values[k], values[k + 1],
                                                     boost::math::tools::eps_tolerance<double>(50), iters);
    const double gamma = 0.5 * (r.first + r.second);
    const double err = std::max(0.5 * (r.second - r.first), 1e-15 * gamma);
    if (err > 1e-9) fail(ErrorKind::scan_failure, "bracket refinement stalled near " + std::to_string(gamma));
    out.push_back(finish_zero(chi, gamma, err, p));
  }
  return out;
}

// Argument increment of L along the segment z0 -> z1, subdividing until each
// piece turns by less than pi/4.
double arg_change(const Character& chi, cplx z0, cplx z1, cplx f0, cplx f1, const EvalParams& p, int depth) {
  const double d = std::arg(f1 / f0);
  if (std::abs(d) < 0.25 * kPi && depth >= 2) return d;
  if (depth > 40) fail(ErrorKind::scan_failure, "argument tracking failed: L nearly vanishes on a box edge");
  const cplx mid = 0.5 * (z0 + z1);
  const cplx fm = L(mid, chi, p);
  return arg_change(chi, z0, mid, f0, fm, p, depth + 1) + arg_change(chi, mid, z1, fm, f1, p, depth + 1);
}

// Edges start from pieces of length at most 0.1, short against the zero
// spacing at every height in range, so no full turn can hide between samples.
double edge(const Character& chi, cplx z0, cplx z1, const EvalParams& p) {
  const auto pieces = static_cast<int>(std::max(1.0, std::ceil(std::abs(z1 - z0) / 0.1)));
  double total = 0.0;
  cplx prev_z = z0;
  cplx prev_f = L(z0, chi, p);
  for (int k = 1; k <= pieces; ++k) {
    const cplx z = k == pieces ? z1 : z0 + (z1 - z0) * (static_cast<double>(k) / pieces);
    const cplx f = L(z, chi, p);
    total += arg_change(chi, prev_z, z, prev_f, f, p, 2);
    prev_z = z;
    prev_f = f;
  }
  return total;
}

// Complex secant iteration on L started inside the box.
bool secant_zero(const Character& chi, double t0, double t1, const EvalParams& p, double& gamma, double& err) {
  cplx s0(0.5, t0 + 0.4 * (t1 - t0));
  cplx s1(0.5, t0 + 0.6 * (t1 - t0));
  cplx f0 = L(s0, chi, p);
  cplx f1 = L(s1, chi, p);
  for (int it = 0; it < 80; ++it) {
    if (f1 == f0) break;
    const cplx step = f1 * (s1 - s0) / (f1 - f0);
    s0 = s1;
    f0 = f1;
    s1 -= step;
    f1 = L(s1, chi, p);
    if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(s1))) {
      if (std::abs(s1.real() - 0.5) > 1e-8) {
        std::ostringstream os;
        os.precision(12);
        os << "zero off the critical line at " << s1.real() << " + " << s1.imag() << "i for " << chi.id().str();
        fail(ErrorKind::scan_failure, os.str());
      }
      gamma = s1.imag();
      err = std::max(std::abs(step), 1e-15 * gamma);
      return gamma > t0 - 1e-9 && gamma <= t1 + 1e-9;
    }
  }
  return false;
}

void locate_in_box(const Character& chi, double t0, double t1, int count, const EvalParams& p,
                   std::vector<Zero>& out, int depth) {
  if (count <= 0) return;
  if (count == 1) {
    double gamma = 0.0, err = 0.0;
    if (secant_zero(chi, t0, t1, p, gamma, err)) {
      out.push_back(finish_zero(chi, gamma, err, p));
      return;
    }
  }
  if (depth > 12) fail(ErrorKind::scan_failure, "could not isolate zeros in " + window_string(t0, t1));
  const double tm = 0.5 * (t0 + t1);
  const int lower = winding_count(chi, 0.25, 0.75, t0, tm, p);
  locate_in_box(chi, t0, tm, lower, p, out, depth + 1);
  locate_in_box(chi, tm, t1, count - lower, p, out, depth + 1);
}

std::vector<Zero> scan_window_complex(const Character& chi, double w0, double w1, const EvalParams& p,
                                      const ScanOptions& opts) {
  const double h0 = initial_step(chi, w1);
  std::size_t n = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil((w1 - w0) / h0)));
  auto box_counts = [&](std::size_t count) {
    std::vector<int> c(count);
    for (std::size_t k = 0; k < count; ++k) {
      const double a = w0 + (w1 - w0) * static_cast<double>(k) / static_cast<double>(count);
      const double b = k + 1 == count ? w1 : w0 + (w1 - w0) * static_cast<double>(k + 1) / static_cast<double>(count);
      c[k] = winding_count(chi, 0.25, 0.75, a, b, p);
    }
    return c;
  };
  auto total = [](const std::vector<int>& c) {
    long s = 0;
    for (int v : c) s += v;
    return s;
  };
  std::vector<int> counts = box_counts(n);
  long prev = total(counts);
  bool stable = false;
  for (int level = 1; level <= opts.max_halvings; ++level) {
    n *= 2;
    counts = box_counts(n);
    const long cur = total(counts);
    if (cur == prev) {
      stable = true;
      break;
    }
    prev = cur;
  }
  if (!stable) {
    fail(ErrorKind::scan_failure, "winding count did not stabilise after " + std::to_string(opts.max_halvings) +
                                      " halvings on window " + window_string(w0, w1) + " for " + chi.id().str());
  }
  std::vector<Zero> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (counts[k] < 0) fail(ErrorKind::scan_failure, "negative winding number on " + window_string(w0, w1));
    const double a = w0 + (w1 - w0) * static_cast<double>(k) / static_cast<double>(n);
    const double b = k + 1 == n ? w1 : w0 + (w1 - w0) * static_cast<double>(k + 1) / static_cast<double>(n);
    locate_in_box(chi, a, b, counts[k], p, out, 0);
  }
  std::sort(out.begin(), out.end(), [](const Zero& x, const Zero& y) { return x.gamma < y.gamma; });
  return out;
}

double parse_double(const std::string& field, std::size_t line) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v)) {
    fail(ErrorKind::parse, "line " + std::to_string(line) + ": cannot parse number '" + field + "'");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string format17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

double expected_count(const Character& chi, double T) {
  if (!(T >= 2.0)) fail(ErrorKind::domain, "expected_count needs T >= 2");
  return T / (2.0 * kPi) * std::log(chi.modulus() * T / (2.0 * kPi * std::numbers::e));
}

double count_tolerance(const Character& chi, double T) { return 2.0 + std::log(chi.modulus() * T); }

double hardy_theta(double t, const Character& chi) {
  const double kappa = chi.parity();
  return log_gamma(cplx(0.5 * (0.5 + kappa), 0.5 * t)).imag() + 0.5 * t * std::log(chi.modulus() / kPi);
}

double hardy_z(double t, const Character& chi, const EvalParams& p) {
  const double theta = hardy_theta(t, chi);
  return (std::polar(1.0, theta) * L(cplx(0.5, t), chi, p)).real();
}

int winding_count(const Character& chi, double sigma0, double sigma1, double t0, double t1, const EvalParams& p) {
  const cplx a(sigma0, t0), b(sigma1, t0), c(sigma1, t1), d(sigma0, t1);
  const double turns = (edge(chi, a, b, p) + edge(chi, b, c, p) + edge(chi, c, d, p) + edge(chi, d, a, p)) /
                       (2.0 * kPi);
  if (std::abs(turns - std::round(turns)) > 0.1) {
    fail(ErrorKind::scan_failure, "argument change around " + window_string(t0, t1) + " is not a whole number of turns");
  }
  return static_cast<int>(std::lround(turns));
}

ZeroList scan_zeros(const Character& chi, double T0, double T1, const EvalParams& p, const ScanOptions& opts) {
  if (!(T0 > 0.0) || !(T1 > T0)) fail(ErrorKind::invalid_argument, "scan window needs 0 < T0 < T1");
  if (T1 > opts.max_height) {
    fail(ErrorKind::invalid_argument, "scan height " + std::to_string(T1) + " exceeds the configured maximum " +
                                          std::to_string(opts.max_height));
  }
  if (!chi.is_primitive()) {
    fail(ErrorKind::invalid_argument, "zero scans need a primitive character; " + chi.id().str() + " has conductor " +
                                          std::to_string(chi.conductor()));
  }
  const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil((T1 - T0) / opts.window)));
  std::vector<std::vector<Zero>> found(pieces);
  const bool real = chi.is_real();
  parallel::for_each_index(pieces, [&](std::size_t i) {
    const double w0 = T0 + (T1 - T0) * static_cast<double>(i) / static_cast<double>(pieces);
    const double w1 = i + 1 == pieces ? T1 : T0 + (T1 - T0) * static_cast<double>(i + 1) / static_cast<double>(pieces);
    found[i] = real ? scan_window_real(chi, w0, w1, p, opts) : scan_window_complex(chi, w0, w1, p, opts);
  });
  std::vector<ZeroList> parts;
  for (auto& f : found) {
    ZeroList part;
    part.character = chi.id();
    part.zeros = std::move(f);
    parts.push_back(std::move(part));
  }
  ZeroList list = merge_zero_lists(parts);
  list.character = chi.id();
  mark_coverage(list, chi, T0, T1);
  return list;
}

bool mark_coverage(ZeroList& list, const Character& chi, double T0, double T1) {
  list.t_min = T0;
  list.t_max = T1;
  std::erase_if(list.zeros, [&](const Zero& z) { return z.gamma <= T0 || z.gamma > T1; });
  const double expected = smooth_count(chi, T1) - smooth_count(chi, T0);
  list.complete = std::abs(static_cast<double>(list.zeros.size()) - expected) <= count_tolerance(chi, T1);
  return list.complete;
}

ZeroList merge_zero_lists(const std::vector<ZeroList>& parts) {
  ZeroList out;
  if (!parts.empty()) {
    out.character = parts.front().character;
    out.t_min = parts.front().t_min;
  }
  for (const auto& part : parts) {
    out.t_min = std::min(out.t_min, part.t_min);
    out.t_max = std::max(out.t_max, part.t_max);
    out.zeros.insert(out.zeros.end(), part.zeros.begin(), part.zeros.end());
  }
  std::stable_sort(out.zeros.begin(), out.zeros.end(), [](const Zero& a, const Zero& b) { return a.gamma < b.gamma; });
  std::vector<Zero> unique;
  for (const auto& z : out.zeros) {
    if (!unique.empty() && z.gamma - unique.back().gamma < kDuplicateGap) continue;
    unique.push_back(z);
  }
  out.zeros = std::move(unique);
  return out;
}

std::string zeros_to_csv(const ZeroList& list) {
  std::string out = "gamma,re_lprime,im_lprime,refine_err\n";
  for (const auto& z : list.zeros) {
    out += format17(z.gamma) + "," + format17(z.lprime.real()) + "," + format17(z.lprime.imag()) + "," +
           format17(z.refine_err) + "\n";
  }
  return out;
}

void export_zeros(const ZeroList& list, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::io, "cannot write " + path.string());
  f << zeros_to_csv(list);
  if (!f) fail(ErrorKind::io, "write failed for " + path.string());
}

ZeroList zeros_from_csv(const std::string& text, const Character& chi, const EvalParams& p) {
  ZeroList list;
  list.character = chi.id();
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  std::vector<std::string> offenders;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.rfind("gamma", 0) == 0) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (fields.empty() || fields.size() > 4) {
      fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected 1 to 4 comma separated fields");
    }
    Zero z;
    z.source = ZeroSource::imported;
    z.gamma = parse_double(fields[0], line_no);
    if (!(z.gamma > 0.0)) fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": ordinate must be positive");
    const bool has_lprime = fields.size() >= 3 && !fields[1].empty() && !fields[2].empty();
    if (fields.size() == 4 && !fields[3].empty()) z.refine_err = parse_double(fields[3], line_no);
    if (has_lprime) {
      z.lprime = {parse_double(fields[1], line_no), parse_double(fields[2], line_no)};
      const double v = std::abs(L(cplx(0.5, z.gamma), chi, p));
      if (v > kImportAbsL) offenders.push_back(format17(z.gamma) + " (|L| = " + format17(v) + ")");
    } else {
      const LJet jet = L_jet(cplx(0.5, z.gamma), chi, p);
      if (std::abs(jet.value) > kImportAbsL) {
        offenders.push_back(format17(z.gamma) + " (|L| = " + format17(std::abs(jet.value)) + ")");
      }
      z.lprime = jet.first;
    }
    if (!list.zeros.empty() && z.gamma <= list.zeros.back().gamma) {
      fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": ordinates must be strictly increasing");
    }
    list.zeros.push_back(z);
  }
  if (!offenders.empty()) {
    std::string msg = "imported ordinates fail verification for " + chi.id().str() + ":";
    for (const auto& o : offenders) msg += " " + o;
    fail(ErrorKind::verification, msg);
  }
  list.t_max = list.zeros.empty() ? 0.0 : list.zeros.back().gamma;
  list.complete = false;
  return list;
}

ZeroList import_zeros(const std::filesystem::path& path, const Character& chi, const EvalParams& p) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return zeros_from_csv(ss.str(), chi, p);
}

ZeroList verify_ordinates(const std::vector<double>& gammas, const Character& chi, const EvalParams& p) {
  std::string csv;
  std::vector<double> sorted = gammas;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (double g : sorted) csv += format17(g) + "\n";
  return zeros_from_csv(csv, chi, p);
}

}  // namespace lfw
