#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfw/config.hpp"
#include "lfw/errors.hpp"
#include "lfw/workbench.hpp"

namespace {

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) lfw::fail(lfw::ErrorKind::invalid_argument, "bad grid value '" + item + "'");
    out.push_back(v);
  }
  return out;
}

struct VerifyArgs {
  std::string kind;
  std::string chi = "1.0";
  std::string xi = "1/1";
  std::string grid;

  lfw::VerifyRequest request() const {
    lfw::VerifyRequest r;
    r.kind = lfw::parse_report_kind(kind);
    r.character = lfw::CharacterId::parse(chi);
    r.xi = lfw::Rational::parse(xi);
    r.grid = parse_grid(grid);
    return r;
  }
};

void add_verify_options(CLI::App* cmd, VerifyArgs& args) {
  cmd->add_option("kind", args.kind,
                  "ultraclean_ii, ultraclean_iii, twist_T, twist_smoothed, eureka or meowing")
      ->required();
  cmd->add_option("--chi", args.chi, "character as q.index")->default_val("1.0");
  cmd->add_option("--xi", args.xi, "twist h/k")->default_val("1/1");
  cmd->add_option("--grid", args.grid, "comma separated X (or T) values; default depends on kind");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lfw: numerical workbench for Dirichlet L-functions, their zeros and twisted prime sums"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "key=value configuration file")->check(CLI::ExistingFile);
  std::map<std::string, std::string> overrides;
  for (const auto& key : lfw::config_keys()) {
    app.add_option_function<std::string>(
        "--" + key.name, [&overrides, name = key.name](const std::string& v) { overrides[name] = v; },
        key.help + " (default " + (key.default_value.empty() ? "empty" : key.default_value) + ")");
  }

  std::uint32_t modulus = 1;
  auto* characters = app.add_subcommand("characters", "list the characters mod q");
  characters->add_option("q", modulus, "modulus")->required();

  std::string scan_chi;
  double scan_height = 0.0;
  auto* scan = app.add_subcommand("scan-zeros", "locate zeros on the critical line up to height T");
  scan->add_option("chi", scan_chi, "character as q.index")->required();
  scan->add_option("T", scan_height, "height")->required()->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run one identity check and write its report");
  add_verify_options(verify, verify_args);

  auto* selftest = app.add_subcommand("selftest", "run the property suite");

  VerifyArgs plot_args;
  auto* plot = app.add_subcommand("export-plotdata", "write log-log residual data for one check");
  add_verify_options(plot, plot_args);

  CLI11_PARSE(app, argc, argv);

  try {
    lfw::RunConfig cfg = config_path.empty() ? lfw::RunConfig{} : lfw::RunConfig::load(config_path);
    for (const auto& [k, v] : overrides) cfg.set(k, v);

    if (characters->parsed()) return lfw::cmd_characters(modulus, std::cout);
    lfw::Workspace ws(cfg);
    if (scan->parsed()) return lfw::cmd_scan_zeros(ws, lfw::CharacterId::parse(scan_chi), scan_height, std::cout);
    if (verify->parsed()) return lfw::cmd_verify(ws, verify_args.request(), std::cout);
    if (selftest->parsed()) return lfw::cmd_selftest(ws, std::cout);
    if (plot->parsed()) return lfw::cmd_export_plotdata(ws, plot_args.request(), std::cout);
  } catch (const lfw::Error& e) {
    std::cerr << "lfw: " << e.what() << "\n";
    return lfw::kExitError;
  } catch (const std::exception& e) {
    std::cerr << "lfw: " << e.what() << "\n";
    return lfw::kExitError;
  }
  return lfw::kExitError;
}
