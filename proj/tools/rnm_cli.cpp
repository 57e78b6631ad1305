// Command-line front end: run/trace/diagnose simplex searches and run the
// exact certification of bounded move sequences.
//
// Exit codes: 0 success, 1 runtime error (evaluation/frame failure, failed
// certification), 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rnm/certifier.hpp"
#include "rnm/frame.hpp"
#include "rnm/objectives.hpp"
#include "rnm/reference_sequences.hpp"
#include "rnm/simplex.hpp"

namespace {

struct CommonOpts {
  std::string objective = "mckinnon";
  std::string preset;
  std::vector<double> coords;  // inline simplex, 2*(n+1) numbers in 2-D
  std::string variant = "rnm";
  double chi = 2.0;
  int iters = 100;
  double diameter_tol = 0.0;
  double value_tol = 0.0;
  std::string output;        // empty = stdout
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_output) {
  cmd->add_option("--objective", o.objective,
                  "Objective: 'mckinnon' or 'quad:a11,a12,a22,b1,b2,c' for "
                  "f = (a11 x^2 + 2 a12 x y + a22 y^2)/2 + b1 x + b2 y + c")
      ->capture_default_str();
  cmd->add_option("--preset", o.preset,
                  "Initial simplex preset: 'mckinnon-start' or 'quad-42-start'");
  cmd->add_option("--simplex", o.coords,
                  "Inline initial simplex as x1 y1 x2 y2 x3 y3");
  cmd->add_option("--variant", o.variant, "Algorithm variant: 'nm' or 'rnm'")
      ->check(CLI::IsMember({"nm", "rnm"}))
      ->capture_default_str();
  cmd->add_option("--chi", o.chi, "Expansion coefficient (nm only, must be > 1)")
      ->capture_default_str();
  cmd->add_option("--iters", o.iters, "Iteration cap")->capture_default_str();
  cmd->add_option("--diameter-tol", o.diameter_tol,
                  "Stop when the simplex diameter falls below this (0 = off)")
      ->capture_default_str();
  cmd->add_option("--value-tol", o.value_tol,
                  "Stop when the best-to-worst value spread falls below this (0 = off)")
      ->capture_default_str();
  if (with_output) {
    cmd->add_option("--output", o.output, "Output path (default: stdout)");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  }
}

rnm::Simplex initial_simplex(const CommonOpts& o, const rnm::Evaluator& f) {
  if (!o.preset.empty() && !o.coords.empty())
    throw CLI::ValidationError("--preset and --simplex are mutually exclusive");
  std::vector<rnm::Point> pts;
  if (o.preset == "mckinnon-start") {
    pts = rnm::mckinnon_start_points();
  } else if (o.preset == "quad-42-start") {
    pts = {{0.0, 0.5}, {0.25, -0.75}, {-0.8, 0.0}};
  } else if (!o.preset.empty()) {
    throw CLI::ValidationError("unknown preset '" + o.preset + "'");
  } else if (o.coords.empty()) {
    throw CLI::ValidationError("one of --preset or --simplex is required");
  } else if (o.coords.size() != 6) {
    throw CLI::ValidationError("--simplex expects 6 numbers (three 2-D points), got " +
                               std::to_string(o.coords.size()));
  } else {
    for (size_t i = 0; i + 1 < o.coords.size(); i += 2)
      pts.push_back({o.coords[i], o.coords[i + 1]});
  }
  return rnm::Simplex::from_points(pts, f);
}

rnm::RunConfig run_config(const CommonOpts& o) {
  rnm::RunConfig c;
  c.variant = o.variant == "nm" ? rnm::Variant::NM : rnm::Variant::RNM;
  c.expansion_coefficient = o.chi;
  c.max_iterations = o.iters;
  c.diameter_tolerance = o.diameter_tol;
  c.value_tolerance = o.value_tol;
  return c;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
  f << text;
}

// A malformed --objective string is a usage error (exit 2), not a runtime
// failure.
std::shared_ptr<const rnm::Objective> parse_objective_arg(const std::string& text) {
  try {
    return rnm::parse_objective(text);
  } catch (const rnm::DomainError& e) {
    throw CLI::ValidationError(e.what());
  }
}

int do_run(const CommonOpts& o) {
  auto obj = parse_objective_arg(o.objective);
  rnm::MoveTrace tr = rnm::run(obj->evaluator(), initial_simplex(o, obj->evaluator()), run_config(o));
  if (tr.failed_iteration) {
    std::cerr << "evaluation failed at iteration " << *tr.failed_iteration << "\n";
    return 1;
  }
  const rnm::Vertex& best = tr.final_simplex.vertices.front();
  std::printf("best vertex: (%.6g, %.6g)  f = %.10g\n", best.coordinates[0],
              best.coordinates[1], best.value);
  std::printf("iterations: %zu  evaluations: %d  termination: %s\n", tr.iterations.size(),
              tr.total_evaluations, tr.termination.c_str());
  return 0;
}

int do_trace(const CommonOpts& o) {
  auto obj = parse_objective_arg(o.objective);
  rnm::MoveTrace tr = rnm::run(obj->evaluator(), initial_simplex(o, obj->evaluator()), run_config(o));
  emit(o.output, o.format == "json" ? rnm::trace_to_json(tr).dump(2) + "\n"
                                    : rnm::trace_to_csv(tr));
  if (tr.failed_iteration) {
    std::cerr << "evaluation failed at iteration " << *tr.failed_iteration << "\n";
    return 1;
  }
  return 0;
}

int do_diagnose(const CommonOpts& o, const std::string& base_policy) {
  auto obj = parse_objective_arg(o.objective);
  rnm::MoveTrace tr = rnm::run(obj->evaluator(), initial_simplex(o, obj->evaluator()), run_config(o));
  if (tr.final_simplex.dimension != 2)
    throw std::runtime_error("diagnostics require a 2-D run");
  auto policy = base_policy == "midpoint" ? rnm::BasePointPolicy::EdgeMidpoint
                                          : rnm::BasePointPolicy::WorstVertex;
  auto ds = rnm::diagnose_run(tr, *obj, policy);
  emit(o.output, rnm::diagnostics_to_csv(ds));
  if (tr.failed_iteration) {
    std::cerr << "evaluation failed at iteration " << *tr.failed_iteration << "\n";
    return 1;
  }
  return 0;
}

int do_certify(int depth, double precision, const std::string& report_path) {
  rnm::EnumerateOptions opts;
  // precision is a decimal endpoint-refinement width; default 1e-7
  opts.precision = rnm::Rational(1, 1);
  {
    // convert the double bound to a rational 10^-k style value
    rnm::Rational p(precision);
    if (p <= 0) throw CLI::ValidationError("--precision must be positive");
    opts.precision = p;
  }
  rnm::CertificationReport rep =
      rnm::certify_against_reference(rnm::reference_sequences_text, depth, 1e-5, opts);
  for (const auto& r : rep.enumeration.results)
    std::puts(rnm::format_sequence_line(r).c_str());

  nlohmann::json j;
  j["depth"] = depth;
  j["sequences"] = nlohmann::json::array();
  for (const auto& r : rep.enumeration.results) {
    nlohmann::json e;
    e["sequence"] = r.sequence;
    e["intervals"] = nlohmann::json::array();
    for (const auto& iv : r.possible_set.intervals())
      e["intervals"].push_back({iv.lo.get_d(), iv.hi.get_d()});
    j["sequences"].push_back(e);
  }
  j["max_sequence_length"] = rep.enumeration.max_sequence_length;
  j["branches_explored"] = rep.enumeration.branches_explored;
  j["matches_reference"] = rep.matches_reference;
  j["no_sequence_of_depth"] = rep.no_sequence_of_depth;
  j["reference_diff"] = rep.differences;
  j["wall_seconds"] = rep.wall_seconds;
  if (report_path.empty())
    std::cout << j.dump(2) << "\n";
  else {
    std::ofstream f(report_path);
    if (!f) throw std::runtime_error("cannot open report file '" + report_path + "'");
    f << j.dump(2) << "\n";
  }

  if (!rep.matches_reference || !rep.no_sequence_of_depth) {
    std::cerr << "certification FAILED\n";
    for (const auto& d : rep.differences) std::cerr << "  " << d << "\n";
    return 1;
  }
  std::fprintf(stderr, "certified: no possible sequence of %d steps (max length %zu), %.1fs\n",
               depth, rep.enumeration.max_sequence_length, rep.wall_seconds);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted Nelder-Mead simplex search, local-frame diagnostics, and "
               "exact certification of bounded move sequences"};
  app.require_subcommand(1);

  CommonOpts run_o, trace_o, diag_o;
  std::string base_policy = "worst";
  int depth = 14;
  double precision = 1e-7;
  std::string report_path;

  auto* run_cmd = app.add_subcommand("run", "Run the simplex search and print the best vertex");
  add_common(run_cmd, run_o, false);

  auto* trace_cmd = app.add_subcommand("trace", "Run and emit the full move trace");
  add_common(trace_cmd, trace_o, true);

  auto* diag_cmd =
      app.add_subcommand("diagnose", "Run and emit per-iteration local-frame diagnostics (CSV)");
  add_common(diag_cmd, diag_o, true);
  diag_cmd->add_option("--base", base_policy,
                       "Frame base point: 'worst' vertex or edge 'midpoint'")
      ->check(CLI::IsMember({"worst", "midpoint"}))
      ->capture_default_str();

  auto* cert_cmd = app.add_subcommand(
      "certify", "Enumerate possible move sequences in exact arithmetic and compare "
                 "against the bundled reference output");
  cert_cmd->add_option("--depth", depth, "Search depth bound")->capture_default_str();
  cert_cmd->add_option("--precision", precision, "Interval endpoint refinement width")
      ->capture_default_str();
  cert_cmd->add_option("--report", report_path, "Write the JSON report here (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run_cmd->parsed()) return do_run(run_o);
    if (trace_cmd->parsed()) return do_trace(trace_o);
    if (diag_cmd->parsed()) return do_diagnose(diag_o, base_policy);
    if (cert_cmd->parsed()) return do_certify(depth, precision, report_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
