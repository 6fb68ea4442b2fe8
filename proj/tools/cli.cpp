#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "cmc/bounds.hpp"
#include "cmc/classify.hpp"
#include "cmc/errors.hpp"

namespace cmc::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<ChartPoint> random_points(const ImmersionChart& chart, std::size_t count, std::uint64_t seed,
                                      const std::string& salt) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (unsigned char ch : salt) words.push_back(ch);
  std::seed_seq seq(words.begin(), words.end());
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<ChartPoint> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    ChartPoint u;
    for (const Interval& iv : chart.domain()) {
      const double w = iv.hi - iv.lo;
      const double t = unit(rng);
      u.push_back(iv.periodic ? iv.lo + t * w : iv.lo + (0.1 + 0.8 * t) * w);
    }
    pts.push_back(std::move(u));
  }
  return pts;
}

double kappa_difference(std::vector<double> numeric, const std::vector<double>& reference) {
  // Closed-form lists follow a fixed normal; numeric ones use H >= 0.
  const auto max_diff = [&](const std::vector<double>& a) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - reference[i]));
    return d;
  };
  std::sort(numeric.begin(), numeric.end());
  const double same = max_diff(numeric);
  for (double& x : numeric) x = -x;
  std::sort(numeric.begin(), numeric.end());
  return std::min(same, max_diff(numeric));
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (offending token: '" << e.token() << "')\n";
    return kParseError;
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const NonElliptic& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kResidualBreach;
  }
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ReportRecord make_record(const ModelSpec& model, const RecordOptions& options) {
  const ClosedForm cf = closed_form_invariants(model);
  const ClassificationVerdict v = classify(model);
  ReportRecord r;
  r.family = std::string(family_name(model));
  r.n = model_dimension(model);
  r.c = model_curvature(model);
  r.params = format_params(model);
  r.H_signed = cf.H_signed;
  r.abs_H = cf.abs_H;
  r.phi_norm = v.sup_phi;
  r.alpha_H = v.alpha_H;
  r.scalar_curvature = v.inf_S;
  r.scalar_bound = v.scalar_bound;
  r.branch = std::string(to_string(v.branch));
  if (v.surface) r.inf_K = v.surface->inf_K;

  const ImmersionChart chart = build_chart(model);
  const double h = default_fd_step();
  for (const auto& u : random_points(chart, options.residual_samples, options.seed, format_model_spec(model))) {
    r.residual_max = std::max(r.residual_max, std::abs(simons_residual(chart, u, h)));
  }
  r.timestamp = options.timestamp.value_or(utc_timestamp());
  return r;
}

json to_json(const ReportRecord& r) {
  json j;
  j["family"] = r.family;
  j["n"] = r.n;
  j["c"] = r.c;
  j["params"] = r.params;
  j["H_signed"] = r.H_signed;
  j["abs_H"] = r.abs_H;
  j["phi_norm"] = r.phi_norm;
  j["alpha_H"] = r.alpha_H;
  j["scalar_curvature"] = r.scalar_curvature;
  j["scalar_bound"] = r.scalar_bound;
  j["branch"] = r.branch;
  j["residual_max"] = r.residual_max;
  if (r.inf_K) j["inf_K"] = *r.inf_K;
  j["timestamp"] = r.timestamp;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  q += '"';
  return q;
}

std::string to_csv(const std::vector<ReportRecord>& records) {
  std::ostringstream os;
  os << "family,n,c,params,abs_H,phi_norm,alpha_H,scalar_curvature,scalar_bound,branch,inf_K\r\n";
  for (const auto& r : records) {
    os << csv_field(r.family) << ',' << r.n << ',' << r.c << ',' << csv_field(r.params) << ','
       << format_double(r.abs_H) << ',' << format_double(r.phi_norm) << ',' << format_double(r.alpha_H) << ','
       << format_double(r.scalar_curvature) << ',' << format_double(r.scalar_bound) << ',' << csv_field(r.branch)
       << ',' << (r.inf_K ? format_double(*r.inf_K) : std::string()) << "\r\n";
  }
  return os.str();
}

json verify_summary(const ModelSpec& model, const VerifyOptions& options) {
  const ImmersionChart chart = build_chart(model);
  const int n = model_dimension(model);
  const int c = model_curvature(model);
  const double h = default_fd_step();
  const auto pts = sample_grid(chart, options.grid, options.max_points);

  double simons = 0.0, trace_phi = 0.0, phi_identity = 0.0, ricci_trace = 0.0, scalar_contraction = 0.0;
  double h_diff = 0.0, phi_diff = 0.0, kappa_diff = 0.0, point_error = 0.0;
  double gauss = 0.0, gauss_bound = 0.0;
  double h_min = INFINITY, h_max = -INFINITY;

  for (const auto& u : pts) {
    const ShapeData sd = shape_data_at(chart, u);
    h_min = std::min(h_min, sd.H);
    h_max = std::max(h_max, sd.H);
    simons = std::max(simons, std::abs(simons_residual(chart, u, h)));
    trace_phi = std::max(trace_phi, std::abs(sd.phi.trace()));

    double sum_k2 = 0.0;
    for (double k : sd.kappas) sum_k2 += k * k;
    phi_identity = std::max(phi_identity, std::abs(sd.phi_norm2 - (sum_k2 - n * sd.H * sd.H)));

    double tr_ric = 0.0;
    std::vector<double> ei(n), ej(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::fill(ei.begin(), ei.end(), 0.0);
        std::fill(ej.begin(), ej.end(), 0.0);
        ei[i] = 1.0;
        ej[j] = 1.0;
        tr_ric += sd.g_inv(i, j) * ricci_from_curvature(sd, ei, ej);
      }
    }
    ricci_trace = std::max(ricci_trace, std::abs(tr_ric - sd.S));
    scalar_contraction = std::max(
        scalar_contraction, std::abs(scalar_from_curvature(sd) - (n * (n - 1.0) * (c + sd.H * sd.H) - sd.phi_norm2)));

    const PointwiseClosedForm pc = closed_form_at(model, u);
    h_diff = std::max(h_diff, std::abs(std::abs(sd.H) - pc.abs_H));
    phi_diff = std::max(phi_diff, std::abs(std::sqrt(std::max(sd.phi_norm2, 0.0)) - pc.phi_norm));
    kappa_diff = std::max(kappa_diff, kappa_difference(sd.kappas, pc.kappas));

    if (c != 0) point_error = std::max(point_error, std::abs(bilinear_form(chart.space(), sd.position, sd.position) - c));

    if (n == 2) {
      const double K = intrinsic_gauss_n2(chart, u, h);
      gauss = std::max(gauss, std::abs(K - ((c + sd.H * sd.H) - 0.5 * sd.phi_norm2)));
      gauss_bound = std::max(gauss_bound, K - (c + sd.H * sd.H));
    }
  }

  json checks;
  checks["simons_max"] = simons;
  checks["trace_phi_max"] = trace_phi;
  checks["phi_norm_identity_max"] = phi_identity;
  checks["ricci_trace_max"] = ricci_trace;
  checks["scalar_contraction_max"] = scalar_contraction;
  checks["abs_H_closed_form_max"] = h_diff;
  checks["phi_norm_closed_form_max"] = phi_diff;
  checks["kappa_closed_form_max"] = kappa_diff;
  checks["mean_curvature_spread"] = h_max - h_min;
  checks["point_validation_max"] = point_error;
  if (n == 2) {
    checks["gauss_consistency_max"] = gauss;
    checks["gauss_bound_violation"] = std::max(gauss_bound, 0.0);
  }

  double worst = 0.0;
  for (const auto& [key, value] : checks.items()) worst = std::max(worst, value.get<double>());

  json j;
  j["model"] = format_model_spec(model);
  j["grid"] = options.grid;
  j["points"] = pts.size();
  j["tol"] = options.tol;
  j["fd_step"] = h;
  j["checks"] = checks;
  j["max_residual"] = worst;
  j["branch"] = std::string(to_string(classify(model).branch));
  j["passed"] = worst <= options.tol;
  return j;
}

int run_model(const std::string& spec_text, const RecordOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ModelSpec m = parse_model_spec(spec_text);
    out << to_json(make_record(m, options)).dump(2) << '\n';
    return kOk;
  });
}

int run_verify_suite(const std::string& spec_text, const VerifyOptions& options, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    const ModelSpec m = parse_model_spec(spec_text);
    if (options.grid < 4) throw InvalidParameters("--grid must be at least 4");
    if (!(options.tol > 0.0)) throw InvalidParameters("--tol must be positive");
    const json summary = verify_summary(m, options);
    out << summary.dump(2) << '\n';
    return summary["passed"].get<bool>() ? kOk : kResidualBreach;
  });
}

int run_okumura(int n, std::size_t trials, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (n < 2 || n > 64) throw InvalidParameters("--n must lie in [2, 64]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::size_t violations = 0;
    double min_slack = INFINITY;
    double max_ratio = 0.0;
    std::vector<double> a(n);
    for (std::size_t t = 0; t < trials; ++t) {
      double mean = 0.0;
      for (double& x : a) {
        x = unit(rng);
        mean += x;
      }
      mean /= n;
      for (double& x : a) x -= mean;
      const OkumuraReport r = okumura_check(a, 1e-12);
      if (r.slack < -1e-12) ++violations;
      min_slack = std::min(min_slack, r.slack);
      if (r.upper_bound > 0.0) max_ratio = std::max(max_ratio, std::abs(r.sum_cubes) / r.upper_bound);
    }

    std::vector<double> up(n, -1.0);
    up[0] = n - 1.0;
    std::vector<double> down(n, 1.0);
    down[0] = 1.0 - n;
    const OkumuraReport ru = okumura_check(up, 1e-12);
    const OkumuraReport rl = okumura_check(down, 1e-12);

    json j;
    j["n"] = n;
    j["trials"] = trials;
    j["seed"] = seed;
    j["okumura_constant"] = okumura_constant(n);
    j["violations"] = violations;
    j["min_slack"] = trials > 0 ? json(min_slack) : json(nullptr);
    j["max_ratio"] = max_ratio;
    j["equality_upper"] = std::string(to_string(ru.equality_side));
    j["equality_lower"] = std::string(to_string(rl.equality_side));
    out << j.dump(2) << '\n';
    return violations == 0 ? kOk : kResidualBreach;
  });
}

int run_unduloid(const UnduloidOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const double H = options.H;
    double B = 0.0;
    if (options.solve_eps) {
      B = solve_B_for_inf_K(H, *options.solve_eps);
    } else if (options.B) {
      B = *options.B;
    } else {
      throw InvalidParameters("either --B or --solve-eps is required");
    }
    validate(Unduloid{H, B});
    if (options.samples < 2) throw InvalidParameters("--samples must be at least 2");

    const double period = std::numbers::pi / std::abs(H);
    const std::size_t m = options.samples;
    if (options.csv) {
      out << "s,x,y,dy,d2y,K,kappa_meridian,kappa_parallel,phi_norm\r\n";
      for (std::size_t i = 0; i <= m; ++i) {
        const double s = period * static_cast<double>(i) / static_cast<double>(m);
        const UnduloidProfile p = unduloid_profile(H, B, s);
        const auto [km, kp] = unduloid_kappas(H, B, s);
        out << format_double(s) << ',' << format_double(p.x) << ',' << format_double(p.y) << ','
            << format_double(p.dy) << ',' << format_double(p.d2y) << ',' << format_double(unduloid_K(H, B, s)) << ','
            << format_double(km) << ',' << format_double(kp) << ',' << format_double(std::abs(kp - km) / std::sqrt(2.0))
            << "\r\n";
      }
      return kOk;
    }

    double min_K = INFINITY;
    double argmin = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double s = period * static_cast<double>(i) / static_cast<double>(m);
      const double K = unduloid_K(H, B, s);
      if (K < min_K) {
        min_K = K;
        argmin = s;
      }
    }
    const ClosedForm cf = closed_form_invariants(Unduloid{H, B});
    json j;
    j["H"] = H;
    j["B"] = B;
    if (options.solve_eps) j["solve_eps"] = *options.solve_eps;
    j["period"] = period;
    j["x_period"] = unduloid_profile(H, B, period).x;
    j["neck_radius"] = (1.0 - B) / (2.0 * std::abs(H));
    j["bulge_radius"] = (1.0 + B) / (2.0 * std::abs(H));
    j["inf_K"] = unduloid_inf_K(H, B);
    j["sampled_min_K"] = min_K;
    j["sampled_argmin_s"] = argmin;
    j["samples"] = m;
    j["sup_phi"] = cf.phi_norm;
    j["alpha_H"] = *cf.alpha_H;
    out << j.dump(2) << '\n';
    return kOk;
  });
}

int run_report(const ReportOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<std::string> known = all_families();
    const std::vector<std::string> families = options.families.empty() ? known : options.families;
    for (const auto& fam : families) {
      if (std::find(known.begin(), known.end(), fam) == known.end()) {
        throw ParseError("unknown model family '" + fam + "' in --families", fam);
      }
    }
    std::vector<ReportRecord> records;
    for (const auto& fam : families) {
      for (const auto& m : default_parameter_grid(fam)) {
        RecordOptions ro;
        ro.seed = options.seed;
        ro.timestamp = options.timestamp;
        records.push_back(make_record(m, ro));
      }
    }

    std::string text;
    if (options.format == ReportFormat::Csv) {
      text = to_csv(records);
    } else {
      json arr = json::array();
      for (const auto& r : records) arr.push_back(to_json(r));
      text = arr.dump(2) + "\n";
    }

    if (!options.out_path) {
      out << text;
      return kOk;
    }
    std::ofstream file(*options.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << *options.out_path << "' for writing\n";
      return kIoError;
    }
    file << text;
    file.close();
    if (!file) {
      err << "error: failed writing '" << *options.out_path << "'\n";
      return kIoError;
    }
    return kOk;
  });
}

}  // namespace cmc::cli
