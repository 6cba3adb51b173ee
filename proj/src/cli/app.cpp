#include "hrl/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hrl/cli/parse.hpp"
#include "hrl/cli/report.hpp"
#include "hrl/curve_tracer.hpp"
#include "hrl/error.hpp"
#include "hrl/format.hpp"
#include "hrl/spectral_zeros.hpp"

namespace hrl::cli {

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot rename into " + path);
  }
}

namespace {

using Clock = std::chrono::steady_clock;

struct PairArgs {
  std::string q1, q2, q;
};

void add_pair_options(CLI::App* cmd, PairArgs& a) {
  cmd->add_option("--q1", a.q1, "Q1 as a polynomial in x");
  cmd->add_option("--q2", a.q2, "Q2 as a polynomial in x");
  cmd->add_option("--q", a.q, "coefficients 'Q1;Q2' (alternative to --q1/--q2)");
}

RecurrencePair read_pair(const PairArgs& a) {
  if (!a.q.empty()) {
    if (!a.q1.empty() || !a.q2.empty()) throw InvalidInput("give either --q or --q1/--q2, not both");
    const auto qs = parse_poly_list(a.q);
    if (qs.size() != 2) {
      throw ValidationError("this command needs an order-2 recurrence (k = 2); got k = " + std::to_string(qs.size()));
    }
    return RecurrencePair(qs[0], qs[1]);
  }
  if (a.q1.empty() || a.q2.empty()) throw InvalidInput("both --q1 and --q2 are required");
  const RatPoly q1 = parse_poly(a.q1);
  const RatPoly q2 = parse_poly(a.q2);
  return RecurrencePair(q1, q2);
}

// Emits a document to a file (and a one-line note to out) or to out.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string roots_csv(const std::vector<std::complex<double>>& roots) {
  std::string out = "index,re,im\n";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out += std::to_string(i) + "," + format_double(roots[i].real()) + "," + format_double(roots[i].imag()) + "\n";
  }
  return out;
}

double max_imag(const std::vector<std::complex<double>>& roots) {
  double m = 0.0;
  for (const auto& z : roots) m = std::max(m, std::fabs(z.imag()));
  return m;
}

Window parse_window(const std::string& text, int resolution) {
  Window w;
  std::vector<double> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InvalidInput("--window expects xmin,xmax,ymin,ymax; bad number '" + part + "'");
    }
  }
  if (v.size() != 4) throw InvalidInput("--window expects four numbers xmin,xmax,ymin,ymax");
  w.x_min = v[0];
  w.x_max = v[1];
  w.y_min = v[2];
  w.y_max = v[3];
  w.resolution = resolution;
  w.validate();
  return w;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reality of zeros for polynomial sequences P_i + Q1 P_{i-1} + Q2 P_{i-2} = 0", "hrl"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  // check
  PairArgs check_pair;
  std::string check_json;
  bool check_timings = false;
  auto* check = app.add_subcommand("check", "decide whether every P_i is real-rooted");
  add_pair_options(check, check_pair);
  check->add_option("--json", check_json, "write the JSON report here instead of stdout");
  check->add_flag("--timings", check_timings, "include wall-clock timings (breaks byte-stability)");

  // zeros
  PairArgs zeros_pair;
  int zeros_n = 0;
  std::string zeros_method = "levels", zeros_csv, zeros_json;
  auto* zeros = app.add_subcommand("zeros", "zeros of P_n");
  add_pair_options(zeros, zeros_pair);
  zeros->add_option("-n", zeros_n, "index of the polynomial")->required()->check(CLI::Range(1, 100000));
  zeros->add_option("--method", zeros_method, "levels or expand")->check(CLI::IsMember({"levels", "expand"}));
  zeros->add_option("--csv", zeros_csv, "write index,re,im rows here");
  zeros->add_option("--json", zeros_json, "write the JSON document here instead of stdout");

  // gen
  std::string gen_q, gen_json, gen_method = "recurrence";
  int gen_n = 0;
  auto* gen = app.add_subcommand("gen", "coefficients of P_0 .. P_n for any order");
  gen->add_option("--q", gen_q, "coefficients 'Q1;Q2;...;Qk'")->required();
  gen->add_option("-n", gen_n, "last index")->required()->check(CLI::Range(0, 100000));
  gen->add_option("--method", gen_method, "recurrence or series")->check(CLI::IsMember({"recurrence", "series"}));
  gen->add_option("--json", gen_json, "write the JSON document here instead of stdout");

  // curve
  PairArgs curve_pair;
  std::string curve_window, curve_svg, curve_csv, curve_json;
  int curve_res = 512, curve_cloud = 81;
  bool curve_certified = false;
  auto* curve = app.add_subcommand("curve", "trace Im f = 0 and sample the zero-attracting set");
  add_pair_options(curve, curve_pair);
  curve->add_option("--window", curve_window, "xmin,xmax,ymin,ymax (default: from root bounds)");
  curve->add_option("--resolution", curve_res, "grid cells per axis")->check(CLI::Range(16, 8192));
  curve->add_option("--cloud", curve_cloud, "number of level samples in [0,4] (0 disables)")->check(CLI::Range(0, 100000));
  curve->add_flag("--certified", curve_certified, "exact sign evaluation at grid nodes");
  curve->add_option("--svg", curve_svg, "write an SVG plot here");
  curve->add_option("--csv", curve_csv, "write x,y,component_id,classification rows here");
  curve->add_option("--json", curve_json, "write the JSON summary here instead of stdout");

  // verify
  PairArgs verify_pair;
  int verify_n = 20;
  double verify_tol = 1e-8;
  std::string verify_json;
  auto* verify = app.add_subcommand("verify", "compare the verdict with numeric zeros of P_1 .. P_n");
  add_pair_options(verify, verify_pair);
  verify->add_option("--n-max", verify_n, "largest index")->check(CLI::Range(1, 100000));
  verify->add_option("--tol", verify_tol, "largest |Im z| still counted as real")->check(CLI::PositiveNumber);
  verify->add_option("--json", verify_json, "write the JSON document here instead of stdout");

  // sweep
  PairArgs sweep_pair;
  int sweep_grid = 0;
  std::string sweep_json;
  auto* sweep = app.add_subcommand("sweep", "Sturm counts of Q1^2 - s Q2 for s in (0,4)");
  add_pair_options(sweep, sweep_pair);
  sweep->add_option("--grid", sweep_grid, "extra uniform samples s = 4j/(M+1)")->check(CLI::Range(0, 100000));
  sweep->add_option("--json", sweep_json, "write the JSON document here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseFailure;
  }

  try {
    if (check->parsed()) {
      const auto start = Clock::now();
      const RecurrencePair pair = read_pair(check_pair);
      const Verdict verdict = full_verdict(pair);
      Json doc = check_report(pair, verdict);
      if (check_timings) doc["timings"] = Json{{"total_ms", elapsed_ms(start)}};
      emit(check_json, render(doc), out);
      if (!check_json.empty()) {
        for (const auto& r : verdict.reports) {
          out << condition_letter(r.id) << "  " << status_name(r.status) << "  " << r.summary << "\n";
        }
        out << "overall: " << status_name(verdict.overall) << "\n";
        if (is_passing(verdict.overall)) out << "support: " << support_text(verdict.support) << "\n";
      }
      return kOk;
    }

    if (zeros->parsed()) {
      const RecurrencePair pair = read_pair(zeros_pair);
      Json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = "zeros";
      doc["input"] = input_echo(pair);
      doc["n"] = zeros_n;
      doc["method"] = zeros_method;
      std::vector<std::complex<double>> roots;
      bool converged = true;
      if (zeros_method == "levels") {
        const SpectralZeros sz = zeros_via_levels(pair, zeros_n);
        roots = sz.roots;
        converged = sz.converged;
        doc["roots_at_infinity"] = sz.roots_at_infinity;
        Json levels = Json::array();
        double residual = 0.0;
        for (const auto& lr : sz.per_level) {
          residual = std::max(residual, lr.roots.residual);
          levels.push_back(Json{{"k", lr.level.k},
                                {"value", number(lr.level.value)},
                                {"exact", lr.level.exact ? Json(to_string(*lr.level.exact)) : Json(nullptr)},
                                {"self_paired", lr.level.self_paired},
                                {"roots", lr.roots.roots.size()},
                                {"roots_at_infinity", lr.roots_at_infinity}});
        }
        doc["levels"] = levels;
        doc["residual"] = number(residual);
      } else {
        const ComplexRootSet rs = zeros_via_expansion(pair, zeros_n);
        roots = rs.roots;
        converged = rs.converged;
        doc["residual"] = number(rs.residual);
      }
      if (!converged) throw ConvergenceError("root finding for P_" + std::to_string(zeros_n) + " did not converge");
      Json rj = Json::array();
      for (const auto& z : roots) rj.push_back(to_json(z));
      doc["roots"] = rj;
      doc["count"] = roots.size();
      doc["max_imag_deviation"] = number(max_imag(roots));
      if (!zeros_csv.empty()) write_file_atomic(zeros_csv, roots_csv(roots));
      emit(zeros_json, render(doc), out);
      return kOk;
    }

    if (gen->parsed()) {
      const RecurrenceSpec spec(parse_poly_list(gen_q));
      const auto seq = gen_method == "series" ? expand_generating_function(spec, gen_n) : generate_sequence(spec, gen_n);
      Json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = "gen";
      doc["order"] = spec.order();
      doc["method"] = gen_method;
      Json qs = Json::array();
      for (const auto& q : spec.qs()) qs.push_back(to_string(q));
      doc["q"] = qs;
      doc["n"] = gen_n;
      Json rows = Json::array();
      for (std::size_t i = 0; i < seq.size(); ++i) {
        Json coeffs = Json::array();
        for (const auto& c : seq[i].coeffs()) coeffs.push_back(to_string(c));
        rows.push_back(Json{{"i", i}, {"degree", seq[i].degree()}, {"poly", to_string(seq[i])}, {"coefficients", coeffs}});
      }
      doc["sequence"] = rows;
      emit(gen_json, render(doc), out);
      return kOk;
    }

    if (curve->parsed()) {
      const RecurrencePair pair = read_pair(curve_pair);
      const Window window = curve_window.empty() ? default_window(pair, curve_res) : parse_window(curve_window, curve_res);
      TraceOptions opts;
      opts.certified_grid = curve_certified;
      CurveTrace trace = trace_gamma_tilde(pair, window, opts);
      PlotMarkers markers;
      markers.critical_points = real_critical_abscissas(pair);
      for (const auto& r : isolate_real_roots(pair.discriminant())) markers.discriminant_roots.push_back(r.to_double());
      classify(trace, markers.critical_points);
      std::optional<GammaCloud> cloud;
      if (curve_cloud >= 2) {
        cloud = gamma_point_cloud(pair, curve_cloud);
        if (!cloud->converged) throw ConvergenceError("level-set root finding for the point cloud did not converge");
      }
      if (!curve_svg.empty()) write_file_atomic(curve_svg, render_svg(trace, cloud ? &*cloud : nullptr, markers));
      if (!curve_csv.empty()) write_file_atomic(curve_csv, render_csv(trace, cloud ? &*cloud : nullptr));

      Json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = "curve";
      doc["input"] = input_echo(pair);
      doc["window"] = Json{{"x_min", number(window.x_min)},
                           {"x_max", number(window.x_max)},
                           {"y_min", number(window.y_min)},
                           {"y_max", number(window.y_max)},
                           {"resolution", window.resolution}};
      Json comps = Json::array();
      for (std::size_t i = 0; i < trace.components.size(); ++i) {
        const auto& c = trace.components[i];
        Json crossings = Json::array();
        for (double x : c.crossing_points) crossings.push_back(number(x));
        comps.push_back(Json{{"id", i},
                             {"closed", c.closed},
                             {"classification", classification_name(c.classification)},
                             {"points", c.points.size()},
                             {"crossing_points", crossings}});
      }
      doc["components"] = comps;
      doc["warnings"] = trace.warnings;
      Json crit = Json::array(), disc = Json::array();
      for (double x : markers.critical_points) crit.push_back(number(x));
      for (double x : markers.discriminant_roots) disc.push_back(number(x));
      doc["critical_points"] = crit;
      doc["discriminant_roots"] = disc;
      doc["cloud_points"] = cloud ? cloud->points.size() : 0;
      emit(curve_json, render(doc), out);
      return kOk;
    }

    if (verify->parsed()) {
      const RecurrencePair pair = read_pair(verify_pair);
      const Verdict verdict = full_verdict(pair);
      Json rows = Json::array();
      bool real = true;
      for (int n = 1; n <= verify_n; ++n) {
        const SpectralZeros sz = zeros_via_levels(pair, n);
        if (!sz.converged) throw ConvergenceError("root finding for P_" + std::to_string(n) + " did not converge");
        const double dev = max_imag(sz.roots);
        const bool row_real = dev < verify_tol;
        real = real && row_real;
        rows.push_back(Json{{"n", n}, {"max_imag_deviation", number(dev)}, {"real", row_real}});
      }
      Json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = "verify";
      doc["input"] = input_echo(pair);
      doc["tolerance"] = number(verify_tol);
      doc["rows"] = rows;
      doc["empirically_real"] = real;
      doc["verdict"] = status_name(verdict.overall);
      doc["consistent"] = real == is_passing(verdict.overall);
      emit(verify_json, render(doc), out);
      return kOk;
    }

    if (sweep->parsed()) {
      const RecurrencePair pair = read_pair(sweep_pair);
      const CriterionContext ctx(pair);
      const SweepResult sr = hyperbolicity_sweep(ctx);
      Json samples = Json::array(), cuts = Json::array();
      bool all_real = true;
      for (const auto& s : sr.samples) {
        samples.push_back(to_json(s));
        all_real = all_real && s.all_real();
      }
      for (const auto& c : sr.cut_points) cuts.push_back(to_string(c));
      Json grid = Json::array();
      for (int j = 1; j <= sweep_grid; ++j) {
        const FiberSample s = sample_fiber(pair, make_rational(4L * j, sweep_grid + 1));
        grid.push_back(to_json(s));
        all_real = all_real && s.all_real();
      }
      Json crit = Json::array();
      for (const auto& cp : ctx.critical_points()) crit.push_back(to_json(cp));
      Json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = "sweep";
      doc["input"] = input_echo(pair);
      doc["critical_points"] = crit;
      doc["certified"] = Json{{"samples", samples}, {"cut_points", cuts}, {"unresolved", sr.unresolved}, {"notes", sr.notes}};
      doc["grid"] = grid;
      doc["all_real"] = all_real;
      emit(sweep_json, render(doc), out);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kParseFailure;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const ConvergenceError& e) {
    err << "no convergence: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace hrl::cli
