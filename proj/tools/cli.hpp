#pragma once

// Command implementations behind the `cmc` executable. Each command writes
// its report to `out`, diagnostics to `err`, and returns the process exit
// code, so tests can drive them without spawning processes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmc/catalog.hpp"

namespace cmc::cli {

enum ExitCode : int {
  kOk = 0,
  kResidualBreach = 1,
  kParseError = 2,
  kInvalidParameters = 3,
  kIoError = 4,
};

struct ReportRecord {
  std::string family;
  int n = 0;
  int c = 0;
  std::string params;
  double H_signed = 0.0;
  double abs_H = 0.0;
  double phi_norm = 0.0;
  double alpha_H = 0.0;
  double scalar_curvature = 0.0;  ///< inf S
  double scalar_bound = 0.0;
  std::string branch;
  double residual_max = 0.0;
  std::string timestamp;
  std::optional<double> inf_K;  ///< surfaces only
};

struct RecordOptions {
  std::uint64_t seed = 0;
  /// Random chart points at which the Simons residual is evaluated.
  std::size_t residual_samples = 4;
  /// Fixed timestamp; the current UTC time when empty.
  std::optional<std::string> timestamp;
};

ReportRecord make_record(const ModelSpec& model, const RecordOptions& options);
nlohmann::ordered_json to_json(const ReportRecord& r);

/// Header plus one row per record; numbers in shortest round-trip form.
std::string to_csv(const std::vector<ReportRecord>& records);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string& s);

struct VerifyOptions {
  std::size_t grid = 8;
  double tol = 1e-5;
  /// Grids with more than max_points points fall back to Halton sampling.
  std::size_t max_points = 1024;
};

/// Per-check maxima over the sample grid, keyed by check name, plus the
/// overall maximum and a pass flag.
nlohmann::ordered_json verify_summary(const ModelSpec& model, const VerifyOptions& options);

std::string utc_timestamp();

int run_model(const std::string& spec_text, const RecordOptions& options, std::ostream& out, std::ostream& err);

int run_verify_suite(const std::string& spec_text, const VerifyOptions& options, std::ostream& out,
                     std::ostream& err);

int run_okumura(int n, std::size_t trials, std::uint64_t seed, std::ostream& out, std::ostream& err);

struct UnduloidOptions {
  double H = 1.0;
  std::optional<double> B;
  std::size_t samples = 256;
  std::optional<double> solve_eps;
  bool csv = false;
};

int run_unduloid(const UnduloidOptions& options, std::ostream& out, std::ostream& err);

enum class ReportFormat { Csv, Json };

struct ReportOptions {
  std::vector<std::string> families;  ///< empty: all families
  std::optional<std::string> out_path;  ///< stdout when empty
  ReportFormat format = ReportFormat::Csv;
  std::uint64_t seed = 0;
  std::optional<std::string> timestamp;
};

int run_report(const ReportOptions& options, std::ostream& out, std::ostream& err);

}  // namespace cmc::cli
