#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "lfw/sums.hpp"

namespace lfw {

inline constexpr const char* kReportSchemaVersion = "1";

nlohmann::ordered_json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& doc);

// Pretty JSON followed by a newline; stable key order, no timestamps.
std::string report_json_text(const VerificationReport& r);
// X,abs_lhs,abs_rhs,residual[,literal_residual]
std::string report_grid_csv(const VerificationReport& r);
// x,residual,log_x,log_residual for log-log plotting; nonpositive residuals are skipped.
std::string report_plot_csv(const VerificationReport& r);

// chi_q.index_xi_h_k; reports without a twist parameter use xi = 1/1.
std::string report_stem(const VerificationReport& r);
// <root>/<kind>/<stem><extension>
std::filesystem::path report_path(const std::filesystem::path& root, const VerificationReport& r,
                                  const std::string& extension);

struct WrittenReport {
  std::filesystem::path json;
  std::filesystem::path csv;
};
WrittenReport write_report(const std::filesystem::path& root, const VerificationReport& r);
std::filesystem::path write_plot_data(const std::filesystem::path& root, const VerificationReport& r);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace lfw
