#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <unistd.h>

#include "lfw/config.hpp"
#include "lfw/errors.hpp"
#include "lfw/report.hpp"
#include "lfw/workbench.hpp"
#include "lfw/zero_fetch.hpp"

namespace fs = std::filesystem;

namespace {

class WorkbenchTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("lfw_wb_" + std::to_string(::getpid()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  lfw::RunConfig config() const {
    lfw::RunConfig cfg;
    cfg.set("paths.output_dir", (root_ / "reports").string());
    cfg.set("paths.cache_dir", (root_ / "cache").string());
    cfg.set("paths.plot_dir", (root_ / "plots").string());
    cfg.set("arith.max_sieve", "2000000");
    return cfg;
  }

  fs::path root_;
};

}  // namespace

TEST(Config, DefaultsAndTypedViews) {
  const lfw::RunConfig cfg;
  EXPECT_EQ(cfg.get("bump.a"), "0.5");
  EXPECT_EQ(cfg.real("zeros.max_height"), 2100.0);
  EXPECT_FALSE(cfg.flag("network.enabled"));
  EXPECT_EQ(cfg.max_sieve(), 20000000u);
  EXPECT_EQ(cfg.bump().b(), 2.0);
  EXPECT_EQ(cfg.eval_params().em_shift, 10);
  EXPECT_EQ(cfg.scan_options().window, 10.0);
}

TEST(Config, TextRoundTripIsExact) {
  lfw::RunConfig cfg;
  cfg.set("bump.a", "0.40000000000000002");
  cfg.set("network.zero_url", "http://localhost:1/{q}/{index}?T={T}");
  cfg.set("threads", "3");
  const auto back = lfw::RunConfig::parse(cfg.to_text());
  EXPECT_EQ(back, cfg);
  EXPECT_EQ(back.to_text(), cfg.to_text());
}

TEST(Config, ParsesCommentsAndRejectsBadInput) {
  const auto cfg = lfw::RunConfig::parse("# comment\n\n bump.b = 3 \nnetwork.enabled=yes\n");
  EXPECT_EQ(cfg.real("bump.b"), 3.0);
  EXPECT_TRUE(cfg.flag("network.enabled"));
  EXPECT_THROW(lfw::RunConfig::parse("no_equals_sign\n"), lfw::Error);
  EXPECT_THROW(lfw::RunConfig::parse("unknown.key=1\n"), lfw::Error);
  lfw::RunConfig c;
  EXPECT_THROW(c.set("eval.em_order", "0"), lfw::Error);
  EXPECT_THROW(c.set("eval.em_order", "2.5"), lfw::Error);
  EXPECT_THROW(c.set("bump.a", "abc"), lfw::Error);
  EXPECT_THROW(c.set("network.enabled", "maybe"), lfw::Error);
  c.set("arith.max_sieve", "2e7");
  EXPECT_EQ(c.max_sieve(), 20000000u);
}

TEST(Config, HaltonPointsAreDeterministic) {
  const auto a = lfw::halton_strip_points(50, 17, 0.1, 0.9, 2.0, 40.0);
  const auto b = lfw::halton_strip_points(50, 17, 0.1, 0.9, 2.0, 40.0);
  EXPECT_EQ(a, b);
  for (auto s : a) {
    EXPECT_GE(s.real(), 0.1);
    EXPECT_LE(s.real(), 0.9);
    EXPECT_GE(s.imag(), 2.0);
    EXPECT_LE(s.imag(), 40.0);
  }
  EXPECT_NEAR(lfw::halton_strip_points(1, 1, 0, 1, 0, 1)[0].real(), 0.5, 1e-15);
}

TEST(CharacterTable, Rows) {
  EXPECT_EQ(lfw::character_table(4).size(), 2u);
  const auto one = lfw::character_table(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].principal);
  const auto seven = lfw::character_table(7);
  ASSERT_EQ(seven.size(), 6u);
  for (const auto& r : seven) EXPECT_EQ(6u % r.order, 0u);
  std::ostringstream out;
  EXPECT_EQ(lfw::cmd_characters(5, out), lfw::kExitPass);
  EXPECT_NE(out.str().find("odd"), std::string::npos);
  EXPECT_THROW(lfw::cmd_characters(0, out), lfw::Error);
}

TEST_F(WorkbenchTest, ReportsAreByteIdenticalAcrossRuns) {
  lfw::VerifyRequest req;
  req.kind = lfw::ReportKind::meowing;
  req.character = {4, 1};
  req.xi = lfw::Rational(1, 3);
  req.grid = {1e3, 3e3, 1e4};
  std::string first, second;
  {
    lfw::Workspace ws(config());
    std::ostringstream out;
    lfw::cmd_verify(ws, req, out);
    first = lfw::read_text_file(root_ / "reports" / "meowing" / "chi_4.1_xi_1_3.json");
  }
  {
    auto cfg = config();
    cfg.set("threads", "1");
    lfw::Workspace ws(cfg);
    std::ostringstream out;
    lfw::cmd_verify(ws, req, out);
    second = lfw::read_text_file(root_ / "reports" / "meowing" / "chi_4.1_xi_1_3.json");
  }
  EXPECT_EQ(first, second);
  EXPECT_TRUE(fs::exists(root_ / "reports" / "meowing" / "chi_4.1_xi_1_3.csv"));
}

TEST_F(WorkbenchTest, ReportJsonRoundTrip) {
  lfw::Workspace ws(config());
  lfw::VerifyRequest req;
  req.kind = lfw::ReportKind::twist_T;
  req.character = {4, 1};
  req.grid = {30.0, 60.0, 90.0};
  const auto r = lfw::run_verification(ws, req);
  const auto back = lfw::report_from_json(lfw::report_to_json(r));
  EXPECT_EQ(lfw::report_json_text(back), lfw::report_json_text(r));
  EXPECT_EQ(lfw::report_stem(r), "chi_4.1_xi_1_1");
  const auto csv = lfw::report_grid_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "X,abs_lhs,abs_rhs,residual,literal_residual");
  EXPECT_THROW(lfw::report_from_json(nlohmann::json::parse("{\"kind\": \"meowing\"}")), lfw::Error);
}

TEST_F(WorkbenchTest, UltracleanZetaPasses) {
  lfw::Workspace ws(config());
  lfw::VerifyRequest req;
  std::ostringstream out;
  EXPECT_EQ(lfw::cmd_verify(ws, req, out), lfw::kExitPass) << out.str();
  const auto r = lfw::report_from_json(
      nlohmann::json::parse(lfw::read_text_file(root_ / "reports" / "ultraclean_ii" / "chi_1.0_xi_1_1.json")));
  EXPECT_LT(r.fit.alpha, 0.75);
  EXPECT_EQ(r.points.size(), 4u);
}

TEST_F(WorkbenchTest, ThresholdFailureExitCode) {
  auto cfg = config();
  cfg.set("verify.threshold", "-1");
  lfw::Workspace ws(cfg);
  lfw::VerifyRequest req;
  req.grid = {1e3, 1e4, 1e5};
  std::ostringstream out;
  EXPECT_EQ(lfw::cmd_verify(ws, req, out), lfw::kExitThreshold);
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);
}

TEST_F(WorkbenchTest, MeowingMuZeroBranch) {
  lfw::Workspace ws(config());
  lfw::VerifyRequest req;
  req.kind = lfw::ReportKind::meowing;
  req.xi = lfw::Rational(1, 4);
  req.grid = {1e3, 1e4, 1e5};
  const auto r = lfw::run_verification(ws, req);
  for (const auto& p : r.points) EXPECT_EQ(p.rhs, lfw::cplx(0.0));
}

TEST_F(WorkbenchTest, CachedZerosReproduceFreshScan) {
  lfw::VerifyRequest req;
  req.kind = lfw::ReportKind::twist_smoothed;
  req.character = {4, 1};
  req.xi = lfw::Rational(1, 2);
  req.grid = {10.0, 15.0, 20.0};
  lfw::VerificationReport fresh, reused;
  {
    lfw::Workspace ws(config());
    fresh = lfw::run_verification(ws, req);
    EXPECT_EQ(ws.scans_performed(), 1u);
  }
  {
    lfw::Workspace ws(config());
    reused = lfw::run_verification(ws, req);
    EXPECT_EQ(ws.scans_performed(), 0u);
  }
  ASSERT_EQ(fresh.points.size(), reused.points.size());
  for (std::size_t i = 0; i < fresh.points.size(); ++i) {
    EXPECT_LT(std::abs(fresh.points[i].lhs - reused.points[i].lhs), 1e-10);
    EXPECT_LT(std::fabs(fresh.points[i].residual - reused.points[i].residual), 1e-10);
  }
}

TEST_F(WorkbenchTest, ScanZerosCommand) {
  lfw::Workspace ws(config());
  std::ostringstream out;
  EXPECT_EQ(lfw::cmd_scan_zeros(ws, {12, 2}, 40.0, out), lfw::kExitPass);
  // chi_12.2 is induced from a primitive character of smaller modulus.
  EXPECT_NE(out.str().find("induced"), std::string::npos) << out.str();
  EXPECT_TRUE(fs::exists(root_ / "cache" / "zeros"));
}

TEST_F(WorkbenchTest, SelftestPasses) {
  lfw::Workspace ws(config());
  std::ostringstream out;
  EXPECT_EQ(lfw::cmd_selftest(ws, out), lfw::kExitPass) << out.str();
}

TEST_F(WorkbenchTest, PlotData) {
  lfw::Workspace ws(config());
  lfw::VerifyRequest req;
  req.grid = {1e3, 1e4, 1e5};
  std::ostringstream out;
  EXPECT_EQ(lfw::cmd_export_plotdata(ws, req, out), lfw::kExitPass);
  const auto text = lfw::read_text_file(root_ / "plots" / "ultraclean_ii" / "chi_1.0_xi_1_1.csv");
  EXPECT_EQ(text.substr(0, text.find('\n')), "x,residual,log_x,log_residual");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}

TEST_F(WorkbenchTest, NetworkDisabledByDefault) {
  lfw::ZeroSourceConfig src;
  src.cache_dir = root_ / "cache";
  src.url_template = "http://127.0.0.1:9/{q}";
  try {
    lfw::fetch_zeros(lfw::principal_character(1), 30.0, src);
    FAIL() << "expected network error";
  } catch (const lfw::Error& e) {
    EXPECT_EQ(e.kind(), lfw::ErrorKind::network);
  }
}

TEST_F(WorkbenchTest, FetchFromLocalEndpoint) {
  httplib::Server server;
  std::atomic<int> hits{0};
  server.Get(R"(/zeros/(\d+)/(\d+))", [&](const httplib::Request& req, httplib::Response& res) {
    ++hits;
    if (req.matches[1] == "1") {
      res.set_content("[14.134725141734693, 21.022039638771555, 25.010857580145688, 30.424876125859513]",
                      "application/json");
    } else {
      res.set_content("{\"zeros\": [7.5]}", "application/json");
    }
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  lfw::ZeroSourceConfig src;
  src.cache_dir = root_ / "cache";
  src.allow_network = true;
  src.url_template = "http://127.0.0.1:" + std::to_string(port) + "/zeros/{q}/{index}?height={T}";
  EXPECT_EQ(lfw::expand_zero_url(src.url_template, {1, 0}, 31), "http://127.0.0.1:" + std::to_string(port) +
                                                                   "/zeros/1/0?height=31");
  const auto list = lfw::fetch_zeros(lfw::principal_character(1), 31.0, src);
  EXPECT_EQ(list.zeros.size(), 4u);
  EXPECT_TRUE(list.complete);
  EXPECT_EQ(list.zeros.front().source, lfw::ZeroSource::imported);
  EXPECT_TRUE(fs::exists(lfw::zero_cache_path(src.cache_dir, {1, 0}, 31.0)));
  // Second call is served from the cache.
  lfw::fetch_zeros(lfw::principal_character(1), 31.0, src);
  EXPECT_EQ(hits.load(), 1);
  // Ordinates that are not zeros are rejected.
  try {
    lfw::fetch_zeros(lfw::character({4, 1}), 10.0, src);
    ADD_FAILURE() << "expected verification error";
  } catch (const lfw::Error& e) {
    EXPECT_EQ(e.kind(), lfw::ErrorKind::verification);
  }
  server.stop();
  worker.join();
}

TEST(ZeroFetch, ParsesOrdinateJson) {
  EXPECT_EQ(lfw::parse_ordinate_json("[1.5, 2]"), (std::vector<double>{1.5, 2.0}));
  EXPECT_EQ(lfw::parse_ordinate_json("{\"zeros\": [3]}"), (std::vector<double>{3.0}));
  EXPECT_THROW(lfw::parse_ordinate_json("[1, \"x\"]"), lfw::Error);
  EXPECT_THROW(lfw::parse_ordinate_json("not json"), lfw::Error);
  EXPECT_EQ(lfw::zero_cache_path("cache", {4, 1}, 300.0), fs::path("cache/zeros/chi_4.1/300.csv"));
}
