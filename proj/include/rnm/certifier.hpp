#ifndef RNM_CERTIFIER_HPP
#define RNM_CERTIFIER_HPP

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rnm/farkas.hpp"
#include "rnm/formula.hpp"
#include "rnm/polynomial.hpp"
#include "rnm/rational.hpp"

namespace rnm {

// ---------------------------------------------------------------------------
// Parametric triangle: coordinates are exact linear forms in the scaled
// parameters. x is a polynomial in s (degree <= 1 in practice); y is
// c + d*t + e*u.
// ---------------------------------------------------------------------------

struct LinTU {
  Rational c{0}, d{0}, e{0};

  friend LinTU operator+(const LinTU& a, const LinTU& b) { return {a.c + b.c, a.d + b.d, a.e + b.e}; }
  friend LinTU operator-(const LinTU& a, const LinTU& b) { return {a.c - b.c, a.d - b.d, a.e - b.e}; }
  friend LinTU operator*(const Rational& k, const LinTU& a) { return {k * a.c, k * a.d, k * a.e}; }
  double eval(double t, double u) const { return to_double(c) + to_double(d) * t + to_double(e) * u; }
};

struct ParametricVertex {
  SPoly x;
  LinTU y;
  int reflected_at_step = -1;  // step index of the reflection that created it

  double eval_x(double s) const {
    double v = 0, pw = 1;
    for (const auto& cf : x.coeffs()) {
      v += to_double(cf) * pw;
      pw *= s;
    }
    return v;
  }
};

struct ParametricTriangle {
  std::array<ParametricVertex, 3> v;  // slots A, B, C of the move coding
  int contraction_count = 0;

  // The initial scaled triangle: A = (-1, -u), B = (s, t), C = (1, u).
  static ParametricTriangle initial() {
    ParametricTriangle tri;
    tri.v[0] = {SPoly(-1), LinTU{0, 0, -1}};
    tri.v[1] = {SPoly::variable(), LinTU{0, 1, 0}};
    tri.v[2] = {SPoly(1), LinTU{0, 0, 1}};
    return tri;
  }
};

// surrogate objective psi(lambda, mu) = lambda^2/2 + mu at a parametric
// vertex: quadratic in s plus a linear form in (t, u)
struct PsiValue {
  SPoly quad;
  Rational d{0}, e{0};
};

inline PsiValue psi(const ParametricVertex& pv) {
  return {Rational(1, 2) * (pv.x * pv.x) + SPoly(pv.y.c), pv.y.d, pv.y.e};
}

// ---------------------------------------------------------------------------
// Move coding: 1/2/3 reflections, 4/5/6 inside contractions,
// 7/8/9 outside contractions, with worst vertex A/B/C respectively.
// ---------------------------------------------------------------------------

enum class MoveKind2 { Reflect, InsideContract, OutsideContract };

inline MoveKind2 move_kind(int code) {
  if (code < 1 || code > 9) throw std::invalid_argument("move code out of range 1-9");
  return static_cast<MoveKind2>((code - 1) / 3);
}
inline int move_worst_slot(int code) { return (code - 1) % 3; }
inline bool move_is_contraction(int code) { return code >= 4; }

inline ParametricVertex move_point(const ParametricTriangle& tri, int code) {
  int w = move_worst_slot(code);
  int o1 = (w + 1) % 3, o2 = (w + 2) % 3;
  const ParametricVertex &pw = tri.v[static_cast<size_t>(w)], &p1 = tri.v[static_cast<size_t>(o1)],
                         &p2 = tri.v[static_cast<size_t>(o2)];
  ParametricVertex nv;
  switch (move_kind(code)) {
    case MoveKind2::Reflect:
      nv.x = p1.x + p2.x - pw.x;
      nv.y = p1.y + p2.y - pw.y;
      break;
    case MoveKind2::InsideContract:
      nv.x = Rational(1, 4) * (p1.x + p2.x) + Rational(1, 2) * pw.x;
      nv.y = Rational(1, 4) * (p1.y + p2.y) + Rational(1, 2) * pw.y;
      break;
    case MoveKind2::OutsideContract:
      nv.x = Rational(3, 4) * (p1.x + p2.x) - Rational(1, 2) * pw.x;
      nv.y = Rational(3, 4) * (p1.y + p2.y) - Rational(1, 2) * pw.y;
      break;
  }
  return nv;
}

inline ParametricTriangle apply_move(const ParametricTriangle& tri, int code, int step = -1) {
  ParametricTriangle next = tri;
  ParametricVertex nv = move_point(tri, code);
  nv.reflected_at_step = (move_kind(code) == MoveKind2::Reflect) ? step : -1;
  next.v[static_cast<size_t>(move_worst_slot(code))] = nv;
  if (move_is_contraction(code)) ++next.contraction_count;
  return next;
}

// ---------------------------------------------------------------------------
// Relaxed psi-inequalities for one move, for a fixed assignment of
// {best, next} to the two non-worst slots. Each comparison f(v_i) >= f(v_j)
// contributes psi_i - psi_j + eps >= 0 with eps = 1e-6.
// ---------------------------------------------------------------------------

inline Rational certifier_epsilon() { return Rational(1, 1000000); }

struct MoveOrdering {
  int best_slot;
  int next_slot;
};

namespace detail {

// psi_i - psi_j + slack >= 0
inline SLinearConstraint psi_ge(const ParametricVertex& vi, const ParametricVertex& vj,
                                const Rational& slack) {
  PsiValue a = psi(vi), b = psi(vj);
  return SLinearConstraint{a.quad - b.quad + SPoly(slack), a.d - b.d, a.e - b.e, Rational(0)};
}

}  // namespace detail

inline std::vector<SLinearConstraint> move_inequalities(const ParametricTriangle& tri, int code,
                                                        const MoveOrdering& ord) {
  int w = move_worst_slot(code);
  if (ord.best_slot == w || ord.next_slot == w || ord.best_slot == ord.next_slot)
    throw std::invalid_argument("move_inequalities: ordering inconsistent with move code");
  const Rational eps = certifier_epsilon();
  const ParametricVertex& worst = tri.v[static_cast<size_t>(w)];
  const ParametricVertex& next = tri.v[static_cast<size_t>(ord.next_slot)];
  const ParametricVertex& best = tri.v[static_cast<size_t>(ord.best_slot)];

  std::vector<SLinearConstraint> rows;
  rows.push_back(detail::psi_ge(worst, next, eps));
  rows.push_back(detail::psi_ge(next, best, eps));
  rows.push_back(detail::psi_ge(worst, best, eps));

  ParametricVertex refl = move_point(tri, w + 1);  // reflection with this worst slot
  switch (move_kind(code)) {
    case MoveKind2::Reflect:
      // accepted: f_r < f_next
      rows.push_back(detail::psi_ge(next, refl, eps));
      break;
    case MoveKind2::InsideContract: {
      // f_r >= f_worst; accepted: f_in < f_worst
      rows.push_back(detail::psi_ge(refl, worst, eps));
      rows.push_back(detail::psi_ge(worst, move_point(tri, 3 + w + 1), eps));
      break;
    }
    case MoveKind2::OutsideContract: {
      // f_next <= f_r < f_worst; accepted: f_out <= f_r
      rows.push_back(detail::psi_ge(refl, next, eps));
      rows.push_back(detail::psi_ge(worst, refl, eps));
      rows.push_back(detail::psi_ge(refl, move_point(tri, 6 + w + 1), eps));
      break;
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Flatness-growth condition. After c contractions the area has shrunk by
// 2^-c exactly, so Gamma_l / Gamma_0 <= 1.01 becomes
// 100 w0^3 <= 101 * 2^c * wl^3, case-split over which vertex pair realizes
// each width (widths are maxima of linear polynomials in s).
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<SPoly> ordered_pair_diffs(const ParametricTriangle& tri) {
  std::vector<SPoly> d;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) d.push_back(tri.v[static_cast<size_t>(i)].x - tri.v[static_cast<size_t>(j)].x);
  return d;
}

// guard: diffs[pick] >= diffs[k] for all k
inline std::vector<SFormula> max_guards(const std::vector<SPoly>& diffs, size_t pick) {
  std::vector<SFormula> g;
  for (size_t k = 0; k < diffs.size(); ++k) {
    if (k == pick) continue;
    g.push_back(SFormula::atom(diffs[k] - diffs[pick], Rel::Le));
  }
  return g;
}

}  // namespace detail

inline SFormula flatness_growth_condition(const ParametricTriangle& initial,
                                          const ParametricTriangle& current) {
  std::vector<SPoly> d0 = detail::ordered_pair_diffs(initial);
  std::vector<SPoly> dl = detail::ordered_pair_diffs(current);
  Rational scale(101, 100);
  for (int i = 0; i < current.contraction_count; ++i) scale *= 2;

  std::vector<SFormula> branches;
  for (size_t a = 0; a < d0.size(); ++a) {
    std::vector<SFormula> g0 = detail::max_guards(d0, a);
    SPoly w0 = d0[a];
    SPoly w0_cubed = w0 * w0 * w0;
    for (size_t b = 0; b < dl.size(); ++b) {
      std::vector<SFormula> parts = g0;
      for (auto& g : detail::max_guards(dl, b)) parts.push_back(std::move(g));
      SPoly wl = dl[b];
      parts.push_back(SFormula::atom(w0_cubed - scale * (wl * wl * wl), Rel::Le));
      branches.push_back(SFormula::conj(std::move(parts)));
    }
  }
  return SFormula::disj(std::move(branches));
}

// One formula per prefix of the history (history[0] must be the initial
// triangle); prefix 0 is trivially TRUE.
inline std::vector<SFormula> flatness_conditions(const std::vector<ParametricTriangle>& history) {
  if (history.empty()) return {};
  std::vector<SFormula> out;
  out.push_back(SFormula::verum());
  for (size_t i = 1; i < history.size(); ++i)
    out.push_back(flatness_growth_condition(history.front(), history[i]));
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of possible move sequences
// ---------------------------------------------------------------------------

inline Rational s_domain_upper() { return Rational(100001, 100000); }

struct MoveSequenceResult {
  std::vector<int> sequence;
  IntervalSet possible_set;
};

// Constraint rows of one surviving ordering branch, for numeric replay.
struct BranchWitness {
  std::vector<SLinearConstraint> rows;
  IntervalSet set;
};

struct EnumerateOptions {
  Rational precision = Rational(1, 10000000);
  bool collect_witnesses = false;
  size_t max_witness_branches = 4;
  bool debug = false;
  std::function<void(const ParametricTriangle&, const std::vector<int>&)> node_hook;
};

struct EnumerationResult {
  std::vector<MoveSequenceResult> results;  // lexicographic by sequence
  std::map<std::vector<int>, std::vector<BranchWitness>> witnesses;
  size_t branches_explored = 0;
  size_t max_sequence_length = 0;
};

namespace detail {

struct SearchState {
  int max_depth;
  EnumerateOptions opts;
  AtomSetCache cache;
  std::map<std::vector<int>, IntervalSet> found;
  std::map<std::vector<int>, std::vector<BranchWitness>> witnesses;
  size_t branches = 0;
};

struct BranchNode {
  ParametricTriangle tri;
  std::vector<SLinearConstraint> rows;  // (nu, omega) != 0, deduplicated
  IntervalSet set;
  std::vector<int> seq;
  int last_reflect_slot = -1;
};

inline void dfs(SearchState& st, const ParametricTriangle& initial, const BranchNode& node) {
  if (static_cast<int>(node.seq.size()) >= st.max_depth) return;
  int step = static_cast<int>(node.seq.size());
  bool first = node.seq.empty();
  for (int code = 1; code <= 9; ++code) {
    MoveKind2 kind = move_kind(code);
    if (first && kind != MoveKind2::InsideContract) continue;
    // a reflection may not undo the immediately preceding reflection
    if (kind == MoveKind2::Reflect && move_worst_slot(code) == node.last_reflect_slot) continue;

    int w = move_worst_slot(code);
    int o1 = (w + 1) % 3, o2 = (w + 2) % 3;
    ParametricTriangle next_tri = apply_move(node.tri, code, step);
    SFormula flat = flatness_growth_condition(initial, next_tri);

    for (const MoveOrdering& ord : {MoveOrdering{o1, o2}, MoveOrdering{o2, o1}}) {
      ++st.branches;
      std::vector<SFormula> atoms;
      std::vector<SLinearConstraint> rows = node.rows;
      size_t first_new = rows.size();
      for (auto& c : move_inequalities(node.tri, code, ord)) {
        if (c.pure_s()) {
          atoms.push_back(SFormula::atom(c.rhs(), Rel::Le));
        } else if (std::find(rows.begin(), rows.end(), c) == rows.end()) {
          rows.push_back(c);
        }
      }
      for (auto& a : farkas_atoms_incremental(rows, first_new)) atoms.push_back(std::move(a));
      atoms.push_back(flat);
      SFormula step_formula = SFormula::conj(std::move(atoms));

      auto tb = std::chrono::steady_clock::now();
      IntervalSet sat = st.cache.formula_set(step_formula);
      if (st.opts.debug) {
        std::set<SPoly> ap;
        step_formula.collect_atom_polys(ap);
        std::fprintf(stderr, "[dbg] seq=");
        for (int c : node.seq) std::fprintf(stderr, "%d", c);
        std::fprintf(stderr, "+%d rows=%zu new=%zu atoms=%zu sat=%.3fs empty=%d\n", code,
                     rows.size(), rows.size() - first_new, ap.size(),
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - tb).count(),
                     (int)sat.intersect(node.set).empty());
      }
      IntervalSet next_set = sat.intersect(node.set);
      if (next_set.empty()) continue;

      BranchNode child{next_tri, std::move(rows), next_set, node.seq, -1};
      child.seq.push_back(code);
      child.last_reflect_slot = (kind == MoveKind2::Reflect) ? w : -1;

      auto& acc = st.found[child.seq];
      acc = acc.unite(next_set);
      if (st.opts.collect_witnesses) {
        auto& wits = st.witnesses[child.seq];
        if (wits.size() < st.opts.max_witness_branches)
          wits.push_back(BranchWitness{child.rows, next_set});
      }
      if (st.opts.node_hook) st.opts.node_hook(child.tri, child.seq);
      dfs(st, initial, child);
    }
  }
}

}  // namespace detail

inline EnumerationResult enumerate_possible(int max_depth, EnumerateOptions opts = {}) {
  if (max_depth < 1) throw std::invalid_argument("enumerate_possible: max_depth must be >= 1");
  Rational precision = opts.precision;
  detail::SearchState st{max_depth, std::move(opts),
                         AtomSetCache(Rational(0), s_domain_upper(), precision),
                         {},        {},
                         0};
  ParametricTriangle initial = ParametricTriangle::initial();
  detail::BranchNode root{initial, {}, IntervalSet::whole(Rational(0), s_domain_upper()), {}, -1};
  detail::dfs(st, initial, root);

  EnumerationResult res;
  for (auto& [seq, set] : st.found) {
    res.max_sequence_length = std::max(res.max_sequence_length, seq.size());
    res.results.push_back(MoveSequenceResult{seq, set});
  }
  res.witnesses = std::move(st.witnesses);
  res.branches_explored = st.branches;
  return res;
}

// ---------------------------------------------------------------------------
// Reference comparison (the bundled reference list)
// ---------------------------------------------------------------------------

struct ReferenceEntry {
  std::vector<int> sequence;
  std::vector<std::pair<double, double>> intervals;
};

// Parses lines of the form
//   {6, 2} possible for s in {{0.582145, 0.737035}}
inline std::vector<ReferenceEntry> parse_reference(const std::string& text) {
  std::vector<ReferenceEntry> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    size_t open = line.find('{');
    if (open == std::string::npos) continue;
    ReferenceEntry e;
    size_t close = line.find('}', open);
    std::string seq_part = line.substr(open + 1, close - open - 1);
    for (size_t i = 0; i < seq_part.size();) {
      if (seq_part[i] >= '0' && seq_part[i] <= '9') {
        e.sequence.push_back(seq_part[i] - '0');
        ++i;
      } else {
        ++i;
      }
    }
    size_t ivs = line.find("{{", close);
    if (ivs == std::string::npos) continue;
    size_t ive = line.rfind("}}");
    std::string iv_part = line.substr(ivs, ive - ivs + 2);
    double nums[64];
    int n = 0;
    const char* p = iv_part.c_str();
    while (*p && n < 64) {
      if ((*p >= '0' && *p <= '9') || *p == '-' || *p == '.') {
        char* end = nullptr;
        nums[n++] = std::strtod(p, &end);
        p = end;
      } else {
        ++p;
      }
    }
    for (int i = 0; i + 1 < n; i += 2) e.intervals.emplace_back(nums[i], nums[i + 1]);
    out.push_back(std::move(e));
  }
  return out;
}

struct CertificationReport {
  EnumerationResult enumeration;
  bool matches_reference = false;
  bool no_sequence_of_depth = false;  // no possible sequence reached max_depth
  std::vector<std::string> differences;
  double wall_seconds = 0;
};

inline std::string format_sequence_line(const MoveSequenceResult& r) {
  std::string line = "{";
  for (size_t i = 0; i < r.sequence.size(); ++i) {
    if (i) line += ", ";
    line += std::to_string(r.sequence[i]);
  }
  line += "} possible for s in " + r.possible_set.to_string();
  return line;
}

inline CertificationReport certify_against_reference(const std::string& reference_text, int max_depth = 14,
                                              double endpoint_tolerance = 1e-5,
                                              EnumerateOptions opts = {}) {
  auto t0 = std::chrono::steady_clock::now();
  CertificationReport rep;
  rep.enumeration = enumerate_possible(max_depth, std::move(opts));
  rep.no_sequence_of_depth = rep.enumeration.max_sequence_length < static_cast<size_t>(max_depth);

  std::map<std::vector<int>, std::vector<std::pair<double, double>>> ref;
  for (auto& e : parse_reference(reference_text)) ref[e.sequence] = e.intervals;

  std::map<std::vector<int>, const MoveSequenceResult*> got;
  for (auto& r : rep.enumeration.results) got[r.sequence] = &r;

  rep.matches_reference = true;
  for (auto& [seq, intervals] : ref) {
    auto it = got.find(seq);
    std::string name = "{";
    for (size_t i = 0; i < seq.size(); ++i) name += (i ? "," : "") + std::to_string(seq[i]);
    name += "}";
    if (it == got.end()) {
      rep.matches_reference = false;
      rep.differences.push_back("missing sequence " + name);
      continue;
    }
    const auto& ivs = it->second->possible_set.intervals();
    if (ivs.size() != intervals.size()) {
      rep.matches_reference = false;
      rep.differences.push_back("interval count mismatch for " + name);
      continue;
    }
    for (size_t i = 0; i < ivs.size(); ++i) {
      double lo = to_double(ivs[i].lo), hi = to_double(ivs[i].hi);
      if (std::abs(lo - intervals[i].first) > endpoint_tolerance ||
          std::abs(hi - intervals[i].second) > endpoint_tolerance) {
        rep.matches_reference = false;
        rep.differences.push_back("interval deviation for " + name + ": got [" + format_sig6(lo) +
                                  ", " + format_sig6(hi) + "] expected [" +
                                  format_sig6(intervals[i].first) + ", " +
                                  format_sig6(intervals[i].second) + "]");
      }
    }
  }
  for (auto& [seq, r] : got) {
    if (ref.find(seq) == ref.end()) {
      rep.matches_reference = false;
      rep.differences.push_back("extra sequence " + format_sequence_line(*r));
    }
  }

  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace rnm

#endif  // RNM_CERTIFIER_HPP
