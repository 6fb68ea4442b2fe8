#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cmc::cli;

  CLI::App app{"Geometry of CMC hypersurfaces in space forms: models, verification suites and reports"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cmc 0.1.0");

  std::string spec;
  RecordOptions record;
  auto* model = app.add_subcommand("model", "Closed forms, bounds and branch of one model (JSON)");
  model->add_option("SPEC", spec, "family:key=value,... e.g. clifford:n=3,k=1")->required();
  model->add_option("--seed", record.seed, "Seed for the residual sample points");
  model->add_option("--samples", record.residual_samples, "Random points for residual_max")->check(CLI::PositiveNumber);

  VerifyOptions verify;
  auto* ver = app.add_subcommand("verify", "Run every geometric identity on a sample grid (JSON)");
  ver->add_option("SPEC", spec, "Model spec")->required();
  ver->add_option("--grid", verify.grid, "Points per chart axis (>= 4)");
  ver->add_option("--tol", verify.tol, "Largest admissible residual");
  ver->add_option("--max-points", verify.max_points, "Switch to Halton sampling above this many points");

  int ok_n = 3;
  std::size_t ok_trials = 100000;
  std::uint64_t ok_seed = 0;
  auto* oku = app.add_subcommand("okumura", "Random trace-free tuples against the Okumura bound (JSON)");
  oku->add_option("--n", ok_n, "Tuple length")->required();
  oku->add_option("--trials", ok_trials, "Number of random tuples");
  oku->add_option("--seed", ok_seed, "RNG seed");

  UnduloidOptions und;
  double und_B = 0.0;
  double und_eps = 0.0;
  auto* un = app.add_subcommand("unduloid", "Delaunay unduloid profile, curvature extrema (JSON or CSV)");
  un->add_option("--H", und.H, "Mean curvature (nonzero)")->required();
  auto* b_opt = un->add_option("--B", und_B, "Neck parameter in (0,1)");
  un->add_option("--samples", und.samples, "Samples over one period");
  auto* eps_opt = un->add_option("--solve-eps", und_eps, "Choose B so that inf K = -eps");
  un->add_flag("--csv", und.csv, "Emit the sampled profile as CSV");

  ReportOptions report;
  std::string families;
  std::string out_path;
  std::string format = "csv";
  auto* rep = app.add_subcommand("report", "Closed-form report over the default parameter grids");
  rep->add_option("--families", families, "Comma-separated family names (default: all)");
  auto* out_opt = rep->add_option("--out", out_path, "Output file (default: stdout)");
  rep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  rep->add_option("--seed", report.seed, "Seed for the residual sample points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  if (*model) return run_model(spec, record, std::cout, std::cerr);
  if (*ver) return run_verify_suite(spec, verify, std::cout, std::cerr);
  if (*oku) return run_okumura(ok_n, ok_trials, ok_seed, std::cout, std::cerr);
  if (*un) {
    if (*b_opt) und.B = und_B;
    if (*eps_opt) und.solve_eps = und_eps;
    return run_unduloid(und, std::cout, std::cerr);
  }
  report.families = split_list(families);
  if (*out_opt) report.out_path = out_path;
  report.format = format == "json" ? ReportFormat::Json : ReportFormat::Csv;
  return run_report(report, std::cout, std::cerr);
}
