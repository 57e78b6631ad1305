// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 3 and 7 share a single full-depth certification run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lp_oracle.hpp"
#include "rnm/certifier.hpp"
#include "rnm/frame.hpp"
#include "rnm/objectives.hpp"
#include "rnm/reference_sequences.hpp"
#include "rnm/simplex.hpp"

using namespace rnm;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

Simplex quad42_start(const Evaluator& f) {
  return Simplex::from_points({{0.0, 0.5}, {0.25, -0.75}, {-0.8, 0.0}}, f);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// -------------------------------------------------------------------------

void criterion1() {
  auto t0 = Clock::now();
  QuadraticObjective q = QuadraticObjective::study_instance();
  RunConfig cfg;
  cfg.max_iterations = 20;
  auto tr = run(q.evaluator(), quad42_start(q.evaluator()), cfg);
  const auto& b20 = tr.final_simplex.vertices[0];
  bool ok20 = std::fabs(b20.coordinates[0] - 0.997986) < 1e-3 &&
              std::fabs(b20.coordinates[1] + 1.00128) < 1e-3;

  cfg.max_iterations = 500;
  cfg.diameter_tolerance = 1e-7;
  auto tr2 = run(q.evaluator(), quad42_start(q.evaluator()), cfg);
  const auto& b500 = tr2.final_simplex.vertices[0];
  bool okmin = std::fabs(b500.coordinates[0] - 1.0) < 1e-6 &&
               std::fabs(b500.coordinates[1] + 1.0) < 1e-6;
  double dt = seconds_since(t0);
  std::ostringstream d;
  d << "best after 20 = (" << b20.coordinates[0] << ", " << b20.coordinates[1] << "), after "
    << tr2.iterations.size() << " within 1e-6 of (1,-1): " << (okmin ? "yes" : "no") << ", "
    << dt << "s";
  report(1, "quadratic benchmark regression", ok20 && okmin && dt < 1.0, d.str());
}

void criterion2() {
  auto t0 = Clock::now();
  McKinnonObjective m;
  RunConfig cfg;
  cfg.max_iterations = 50;
  auto tr = run(m.evaluator(), mckinnon_start(), cfg);
  bool all_inside = tr.iterations.size() == 50;
  bool origin_kept = true;
  bool diam_monotone = true;
  double prev_diam = order_vertices(mckinnon_start()).diameter();
  for (const auto& it : tr.iterations) {
    all_inside = all_inside && it.move.kind == MoveKind::InsideContract;
    origin_kept = origin_kept && it.vertices[0].coordinates == Point{0, 0} &&
                  it.vertices[0].id == 0;
    Simplex s;
    s.dimension = 2;
    s.vertices = it.vertices;
    double d = s.diameter();
    diam_monotone = diam_monotone && d < prev_diam;
    prev_diam = d;
  }
  double dt = seconds_since(t0);
  std::ostringstream d;
  d << "50 inside contractions: " << (all_inside ? "yes" : "no")
    << ", origin retained: " << (origin_kept ? "yes" : "no")
    << ", diameter strictly decreasing: " << (diam_monotone ? "yes" : "no") << ", " << dt << "s";
  report(2, "strictly convex non-convergence regression", all_inside && origin_kept &&
         diam_monotone && dt < 1.0, d.str());
}

CertificationReport certification_run() {
  EnumerateOptions opts;
  opts.collect_witnesses = true;
  return certify_against_reference(reference_sequences_text, 14, 1e-5, opts);
}

void criterion3(const CertificationReport& rep) {
  std::ostringstream d;
  d << rep.enumeration.results.size() << " sequences, max length "
    << rep.enumeration.max_sequence_length << ", " << rep.wall_seconds << "s";
  for (const auto& diff : rep.differences) d << "; " << diff;
  report(3, "exact certification matches the bundled reference at depth 14",
         rep.matches_reference && rep.no_sequence_of_depth &&
             rep.enumeration.max_sequence_length == 13,
         d.str());
}

void criterion4() {
  QuadraticObjective q = QuadraticObjective::study_instance();
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  bool ok = true;
  int checked = 0;
  while (checked < 100) {
    Point p{coord(rng), coord(rng)};
    auto g = objective_gradient(q, p);
    if (std::hypot(g[0], g[1]) < 1e-6) continue;
    auto H = objective_hessian(q, p);
    LocalFrame fr = local_frame(g, H, {p[0], p[1]});
    Vector2 m1{fr.M[0][0], fr.M[1][0]}, m2{fr.M[0][1], fr.M[1][1]};
    auto mul = [&](const Vector2& v) {
      return Vector2{H[0][0] * v[0] + H[0][1] * v[1], H[1][0] * v[0] + H[1][1] * v[1]};
    };
    auto dot = [](const Vector2& a, const Vector2& b) { return a[0] * b[0] + a[1] * b[1]; };
    ok = ok && std::fabs(dot(g, m1)) < 1e-10 && std::fabs(dot(g, m2) - 1.0) < 1e-10 &&
         std::fabs(dot(m1, mul(m1)) - 1.0) < 1e-10 && std::fabs(dot(m1, mul(m2))) < 1e-10 &&
         fr.M[0][0] * fr.M[1][1] - fr.M[0][1] * fr.M[1][0] > 0.0;
    ++checked;
  }
  bool raised = false;
  try {
    McKinnonObjective m;
    local_frame(objective_gradient(m, {0, 0}), objective_hessian(m, {0, 0}), {0, 0});
  } catch (const FrameError& e) {
    raised = std::string(e.what()).find("no frame exists") != std::string::npos;
  }
  report(4, "local-frame identities and singular-Hessian rejection", ok && raised);
}

void criterion5() {
  // exact rational geometry of the three move types
  std::mt19937 rng(55);
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(1, 6);
  auto rnd = [&] { return rat(num(rng), den(rng)); };
  auto area2 = [](const std::array<std::array<Rational, 2>, 3>& t) {
    Rational v = (t[1][0] - t[0][0]) * (t[2][1] - t[0][1]) -
                 (t[2][0] - t[0][0]) * (t[1][1] - t[0][1]);
    return v < 0 ? Rational(-v) : v;
  };
  bool exact_ok = true;
  int done = 0;
  while (done < 60) {
    std::array<std::array<Rational, 2>, 3> t{{{rnd(), rnd()}, {rnd(), rnd()}, {rnd(), rnd()}}};
    Rational a = area2(t);
    if (a == 0) continue;
    auto refl = t, in = t, out = t;
    for (int k = 0; k < 2; ++k) {
      refl[2][k] = t[0][k] + t[1][k] - t[2][k];
      in[2][k] = (t[0][k] + t[1][k]) / 4 + t[2][k] / 2;
      out[2][k] = Rational(3) * (t[0][k] + t[1][k]) / 4 - t[2][k] / 2;
    }
    exact_ok = exact_ok && area2(refl) == a && area2(in) * 2 == a && area2(out) * 2 == a;
    ++done;
  }

  // flatness invariance under reflection in a fixed frame
  QuadraticObjective q = QuadraticObjective::study_instance();
  LocalFrame fr = local_frame(objective_gradient(q, {0.5, 0.5}),
                              objective_hessian(q, {0.5, 0.5}), {0.5, 0.5});
  std::array<Vector2, 3> tri{Vector2{0.1, 0.2}, Vector2{0.8, 0.3}, Vector2{0.4, 0.9}};
  std::array<Vector2, 3> refl = tri;
  refl[2] = {tri[0][0] + tri[1][0] - tri[2][0], tri[0][1] + tri[1][1] - tri[2][1]};
  auto ma = frame_metrics(tri, fr), mb = frame_metrics(refl, fr);
  bool flat_ok = std::fabs(ma.flatness - mb.flatness) < 1e-9 * std::max(1.0, ma.flatness);

  // frame change rescales area by |det(M2^-1 M1)|
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  bool scale_ok = true;
  int scaled = 0;
  while (scaled < 30) {
    Point b1{coord(rng), coord(rng)}, b2{coord(rng), coord(rng)};
    auto g1 = objective_gradient(q, b1), g2 = objective_gradient(q, b2);
    if (std::hypot(g1[0], g1[1]) < 1e-3 || std::hypot(g2[0], g2[1]) < 1e-3) continue;
    LocalFrame f1 = local_frame(g1, objective_hessian(q, b1), {b1[0], b1[1]});
    LocalFrame f2 = local_frame(g2, objective_hessian(q, b2), {b2[0], b2[1]});
    std::array<Vector2, 3> t{Vector2{coord(rng), coord(rng)}, Vector2{coord(rng), coord(rng)},
                             Vector2{coord(rng), coord(rng)}};
    double a1, a2;
    try {
      a1 = frame_metrics(t, f1).area;
      a2 = frame_metrics(t, f2).area;
    } catch (const FrameError&) {
      continue;
    }
    if (a1 < 1e-9) continue;
    double det = (f2.M_inv[0][0] * f1.M[0][0] + f2.M_inv[0][1] * f1.M[1][0]) *
                     (f2.M_inv[1][0] * f1.M[0][1] + f2.M_inv[1][1] * f1.M[1][1]) -
                 (f2.M_inv[0][0] * f1.M[0][1] + f2.M_inv[0][1] * f1.M[1][1]) *
                     (f2.M_inv[1][0] * f1.M[0][0] + f2.M_inv[1][1] * f1.M[1][0]);
    scale_ok = scale_ok && std::fabs(a2 - a1 * std::fabs(det)) < 1e-9;
    ++scaled;
  }
  report(5, "exact move geometry and frame-change scaling", exact_ok && flat_ok && scale_ok);
}

void criterion6() {
  std::mt19937 rng(606060);
  std::uniform_int_distribution<int> nrows(1, 6);
  std::uniform_int_distribution<int> small(-4, 4);
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<int> snum(0, 100001);
  int agree = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SLinearConstraint> rows;
    int n = nrows(rng);
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> cs(static_cast<size_t>(deg(rng)) + 1);
      for (auto& c : cs) c = Rational(small(rng));
      rows.push_back(SLinearConstraint{SPoly(cs), Rational(small(rng)), Rational(small(rng)),
                                       Rational(small(rng))});
    }
    SFormula f = feasibility_condition(rows);
    for (int k = 0; k < 20; ++k) {
      Rational s = rat(snum(rng), 100000);
      ++total;
      if (f.eval_at(s) == rnm_tests::feasible_at(rows, s)) ++agree;
    }
  }
  std::ostringstream d;
  d << agree << "/" << total << " sampled feasibility decisions agree";
  report(6, "symbolic feasibility equals the exact planar oracle", agree == total, d.str());
}

void criterion7(const CertificationReport& rep) {
  auto psi_obj = [](const Point& p) { return 0.5 * p[0] * p[0] + p[1]; };
  const Rational eps = certifier_epsilon();
  int replayed = 0, strict_matches = 0, hard_mismatches = 0;
  for (const auto& r : rep.enumeration.results) {
    auto wit = rep.enumeration.witnesses.find(r.sequence);
    if (wit == rep.enumeration.witnesses.end() || wit->second.empty()) {
      ++hard_mismatches;
      continue;
    }
    const auto& iv = r.possible_set.intervals().front();
    for (int k = 1; k <= 3; ++k) {
      Rational s = iv.lo + rat(k, 4) * (iv.hi - iv.lo);
      // find a surviving branch containing this s
      const BranchWitness* branch = nullptr;
      for (const auto& b : wit->second)
        if (b.set.contains(s)) { branch = &b; break; }
      if (!branch) continue;
      auto tu = rnm_tests::feasible_tu(branch->rows, s);
      if (!tu.feasible) { ++hard_mismatches; continue; }
      double sd = to_double(s), td = to_double(tu.t), ud = to_double(tu.u);
      Simplex tri =
          Simplex::from_points({{-1.0, -ud}, {sd, td}, {1.0, ud}}, psi_obj);
      RunConfig cfg;
      cfg.max_iterations = static_cast<int>(r.sequence.size());
      cfg.variant = Variant::RNM;
      auto tr = run(psi_obj, tri, cfg);
      bool match = tr.iterations.size() == r.sequence.size();
      for (size_t i = 0; match && i < tr.iterations.size(); ++i)
        match = tr.iterations[i].move.code2d &&
                *tr.iterations[i].move.code2d == r.sequence[i];
      ++replayed;
      // every relaxed row slack >= 2*eps means all true comparisons are
      // strict by at least eps, so the numeric engine must agree
      Rational min_slack(1);
      for (const auto& row : branch->rows) {
        Rational slack = row.phi.eval(s) + row.nu * tu.t + row.omega * tu.u - row.theta;
        if (slack < min_slack) min_slack = slack;
      }
      if (match) {
        if (min_slack >= 2 * eps) ++strict_matches;
      } else if (min_slack >= 2 * eps) {
        ++hard_mismatches;
      }
    }
  }
  std::ostringstream d;
  d << replayed << " replays, " << strict_matches << " with strict margins, "
    << hard_mismatches << " unexplained mismatches";
  report(7, "numeric engine reproduces certified move sequences", hard_mismatches == 0 &&
         strict_matches > 0, d.str());
}

void criterion8() {
  QuadraticObjective q = QuadraticObjective::study_instance();
  RunConfig cfg;
  cfg.max_iterations = 200;
  cfg.diameter_tolerance = 1e-7;  // stop before double-precision value ties
                                  // degenerate the triangle
  auto tr = run(q.evaluator(), quad42_start(q.evaluator()), cfg);
  auto diag = diagnose_run(tr, q);

  bool bounds_ok = true;
  std::vector<size_t> contraction_iters;
  for (const auto& d : diag)
    if (d.is_contraction) contraction_iters.push_back(d.iteration);
  size_t quarter_start = diag.size() - diag.size() / 4;
  for (const auto& d : diag) {
    if (!d.is_contraction || d.iteration < quarter_start || !d.frame_ok) continue;
    bounds_ok = bounds_ok && d.flatness <= 10.0 && d.height <= 10.0 * d.width * d.width;
  }
  bool ratio_ok = true;
  size_t seen = 0;
  for (auto it = contraction_iters.rbegin(); it != contraction_iters.rend() && seen < 10; ++it) {
    const auto& d = diag[*it];
    if (!d.frame_ok) continue;
    ratio_ok = ratio_ok && d.h_over_w < 0.1;
    ++seen;
  }

  // fitted exponent theta in h ~ w^theta over iterations 20..40 of the
  // strictly convex counterexample run, measured as raw coordinate spreads.
  // (In the curvature-rescaled frame the width absorbs an extra factor of
  // sqrt(f_xx) ~ w^(1/2), which pins the fitted exponent to exactly 2; the
  // plain-coordinate spreads expose the cubic flattening rate.)
  McKinnonObjective m;
  RunConfig mcfg;
  mcfg.max_iterations = 50;
  auto mtr = run(m.evaluator(), mckinnon_start(), mcfg);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& it : mtr.iterations) {
    size_t iter = &it - mtr.iterations.data();
    if (iter < 20 || iter > 40) continue;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& v : it.vertices) {
      xmin = std::min(xmin, v.coordinates[0]);
      xmax = std::max(xmax, v.coordinates[0]);
      ymin = std::min(ymin, v.coordinates[1]);
      ymax = std::max(ymax, v.coordinates[1]);
    }
    double w = xmax - xmin, h = ymax - ymin;
    if (w <= 0 || h <= 0) continue;
    double x = std::log(w), y = std::log(h);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++n;
  }
  double theta = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  bool theta_ok = n >= 10 && theta >= 2.5 && theta <= 3.5;

  std::ostringstream d;
  d << "late contractions bounded: " << (bounds_ok ? "yes" : "no")
    << ", last-10 h/w < 0.1: " << (ratio_ok ? "yes" : "no") << ", fitted exponent " << theta;
  report(8, "empirical flatness and flattening diagnostics", bounds_ok && ratio_ok && theta_ok,
         d.str());
}

void criterion9() {
  QuadraticObjective q = QuadraticObjective::study_instance();
  auto wrapped = [&q](const Point& p) {
    double z = q.evaluate(p);
    return z * z * z + z;
  };
  RunConfig cfg;
  cfg.max_iterations = 100;
  auto tr1 = run(q.evaluator(), quad42_start(q.evaluator()), cfg);
  auto tr2 = run(wrapped, quad42_start(wrapped), cfg);
  bool ok = tr1.iterations.size() == tr2.iterations.size();
  for (size_t i = 0; ok && i < tr1.iterations.size(); ++i) {
    ok = tr1.iterations[i].move.kind == tr2.iterations[i].move.kind &&
         tr1.iterations[i].move.code2d == tr2.iterations[i].move.code2d;
    for (size_t v = 0; ok && v < 3; ++v)
      ok = tr1.iterations[i].vertices[v].coordinates == tr2.iterations[i].vertices[v].coordinates;
  }
  report(9, "monotone transform leaves the trace move-for-move identical", ok);
}

}  // namespace

int main() {
  setbuf(stdout, nullptr);
  criterion1();
  criterion2();
  CertificationReport rep = certification_run();
  criterion3(rep);
  criterion4();
  criterion5();
  criterion6();
  criterion7(rep);
  criterion8();
  criterion9();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
