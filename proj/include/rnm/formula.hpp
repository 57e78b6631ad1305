#ifndef RNM_FORMULA_HPP
#define RNM_FORMULA_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rnm/polynomial.hpp"
#include "rnm/rational.hpp"

namespace rnm {

enum class Rel { Lt, Le, Gt, Ge };

inline bool rel_holds(Rel rel, int sign_of_poly) {
  switch (rel) {
    case Rel::Lt: return sign_of_poly < 0;
    case Rel::Le: return sign_of_poly <= 0;
    case Rel::Gt: return sign_of_poly > 0;
    case Rel::Ge: return sign_of_poly >= 0;
  }
  return false;
}

// Boolean combination of polynomial inequalities in s. Atoms compare an
// SPoly against zero.
class SFormula {
 public:
  enum class Kind { True, False, Atom, And, Or };

  static SFormula verum() { return SFormula(Kind::True); }
  static SFormula falsum() { return SFormula(Kind::False); }

  static SFormula atom(SPoly p, Rel rel) {
    // Constant atoms fold immediately.
    if (p.degree() <= 0) {
      return rel_holds(rel, sgn(p.coeff(0))) ? verum() : falsum();
    }
    SFormula f(Kind::Atom);
    f.poly_ = std::move(p);
    f.rel_ = rel;
    return f;
  }

  static SFormula conj(std::vector<SFormula> kids) {
    std::vector<SFormula> keep;
    for (auto& k : kids) {
      if (k.kind_ == Kind::False) return falsum();
      if (k.kind_ == Kind::True) continue;
      if (k.kind_ == Kind::And) {
        for (auto& g : k.kids_) keep.push_back(std::move(g));
      } else {
        keep.push_back(std::move(k));
      }
    }
    if (keep.empty()) return verum();
    if (keep.size() == 1) return keep.front();
    SFormula f(Kind::And);
    f.kids_ = std::move(keep);
    return f;
  }

  static SFormula disj(std::vector<SFormula> kids) {
    std::vector<SFormula> keep;
    for (auto& k : kids) {
      if (k.kind_ == Kind::True) return verum();
      if (k.kind_ == Kind::False) continue;
      if (k.kind_ == Kind::Or) {
        for (auto& g : k.kids_) keep.push_back(std::move(g));
      } else {
        keep.push_back(std::move(k));
      }
    }
    if (keep.empty()) return falsum();
    if (keep.size() == 1) return keep.front();
    SFormula f(Kind::Or);
    f.kids_ = std::move(keep);
    return f;
  }

  Kind kind() const { return kind_; }
  const SPoly& poly() const { return poly_; }
  Rel rel() const { return rel_; }
  const std::vector<SFormula>& kids() const { return kids_; }

  // Exact evaluation at a rational point.
  bool eval_at(const Rational& s) const {
    return eval_signs([&](const SPoly& p) { return p.sign_at(s); });
  }

  // Evaluation given an oracle for the sign of each atom polynomial.
  bool eval_signs(const std::function<int(const SPoly&)>& sign_of) const {
    switch (kind_) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Atom: return rel_holds(rel_, sign_of(poly_));
      case Kind::And:
        for (const auto& k : kids_)
          if (!k.eval_signs(sign_of)) return false;
        return true;
      case Kind::Or:
        for (const auto& k : kids_)
          if (k.eval_signs(sign_of)) return true;
        return false;
    }
    return false;
  }

  void collect_atom_polys(std::set<SPoly>& out) const {
    switch (kind_) {
      case Kind::Atom: out.insert(poly_); break;
      case Kind::And:
      case Kind::Or:
        for (const auto& k : kids_) k.collect_atom_polys(out);
        break;
      default: break;
    }
  }

 private:
  explicit SFormula(Kind k) : kind_(k) {}
  Kind kind_ = Kind::True;
  SPoly poly_;
  Rel rel_ = Rel::Le;
  std::vector<SFormula> kids_;
};

// Ordered union of disjoint closed intervals with rational endpoints.
class IntervalSet {
 public:
  struct Interval { Rational lo, hi; };

  IntervalSet() = default;
  static IntervalSet whole(const Rational& lo, const Rational& hi) {
    IntervalSet s;
    if (lo <= hi) s.ivs_.push_back({lo, hi});
    return s;
  }

  bool empty() const { return ivs_.empty(); }
  const std::vector<Interval>& intervals() const { return ivs_; }

  Rational measure() const {
    Rational m(0);
    for (const auto& iv : ivs_) m += iv.hi - iv.lo;
    return m;
  }

  bool contains(const Rational& x) const {
    for (const auto& iv : ivs_)
      if (iv.lo <= x && x <= iv.hi) return true;
    return false;
  }

  void add(const Rational& lo, const Rational& hi) {
    if (lo > hi) return;
    ivs_.push_back({lo, hi});
    coalesce();
  }

  IntervalSet unite(const IntervalSet& o) const {
    IntervalSet r = *this;
    for (const auto& iv : o.ivs_) r.ivs_.push_back(iv);
    r.coalesce();
    return r;
  }

  IntervalSet intersect(const IntervalSet& o) const {
    IntervalSet r;
    for (const auto& a : ivs_) {
      for (const auto& b : o.ivs_) {
        Rational lo = std::max(a.lo, b.lo);
        Rational hi = std::min(a.hi, b.hi);
        if (lo <= hi) r.ivs_.push_back({lo, hi});
      }
    }
    r.coalesce();
    return r;
  }

  bool contains_set(const IntervalSet& o) const {
    return o.intersect(*this).measure() == o.measure();
  }

  // Rendering convention: {{a, b}, {c, d}} with 6 significant figures.
  std::string to_string() const {
    std::string out = "{";
    for (size_t i = 0; i < ivs_.size(); ++i) {
      if (i) out += ", ";
      out += "{" + format_sig6(ivs_[i].lo) + ", " + format_sig6(ivs_[i].hi) + "}";
    }
    out += "}";
    return out;
  }

 private:
  void coalesce() {
    std::sort(ivs_.begin(), ivs_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (auto& iv : ivs_) {
      if (!merged.empty() && iv.lo <= merged.back().hi) {
        if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
      } else {
        merged.push_back(iv);
      }
    }
    ivs_ = std::move(merged);
  }
  std::vector<Interval> ivs_;
};

// Per-atom satisfying-set cache on a fixed domain. The satisfying set of a
// single polynomial inequality is computed once (root isolation plus cell
// sign tests) and reused; formula sets are then interval-set algebra. Closed
// convention: strict and non-strict atoms yield the same closed set, and
// every root of the atom polynomial belongs to it (equality holds there).
// Interval endpoints are representatives of the bounding algebraic numbers,
// accurate to `precision`; coincident endpoints of different atoms agree
// because representatives are cached per squarefree primitive polynomial.
class AtomSetCache {
 public:
  AtomSetCache(Rational lo, Rational hi, Rational precision)
      : lo_(std::move(lo)), hi_(std::move(hi)), precision_(std::move(precision)) {}

  IntervalSet formula_set(const SFormula& f) {
    switch (f.kind()) {
      case SFormula::Kind::True: return IntervalSet::whole(lo_, hi_);
      case SFormula::Kind::False: return IntervalSet();
      case SFormula::Kind::Atom: return atom_set(f.poly(), f.rel());
      case SFormula::Kind::And: {
        IntervalSet acc = IntervalSet::whole(lo_, hi_);
        for (const auto& k : f.kids()) {
          acc = acc.intersect(formula_set(k));
          if (acc.empty()) break;
        }
        return acc;
      }
      case SFormula::Kind::Or: {
        IntervalSet acc;
        for (const auto& k : f.kids()) acc = acc.unite(formula_set(k));
        return acc;
      }
    }
    return IntervalSet();
  }

  const IntervalSet& atom_set(const SPoly& p, Rel rel) {
    bool wants_nonpositive = (rel == Rel::Lt || rel == Rel::Le);
    auto key = std::make_pair(p, wants_nonpositive);
    auto it = atom_cache_.find(key);
    if (it != atom_cache_.end()) return it->second;

    const std::vector<RootInterval>& roots = roots_of(squarefree_of(p));
    IntervalSet set;
    // cell before each root, then the root point itself
    Rational prev_rep = lo_;
    Rational prev_clear = lo_;  // rational known to be <= next root
    for (size_t i = 0; i <= roots.size(); ++i) {
      Rational cell_end_clear = (i < roots.size()) ? roots[i].lo() : hi_;
      Rational rep = (i < roots.size()) ? representative(roots[i]) : hi_;
      if (prev_clear < cell_end_clear || (i == roots.size() && prev_clear <= cell_end_clear)) {
        // sample strictly between the neighbouring roots
        Rational sample = prev_clear == cell_end_clear ? prev_clear
                                                       : (prev_clear + cell_end_clear) / 2;
        int sign = p.sign_at(sample);
        bool sat = wants_nonpositive ? sign <= 0 : sign >= 0;
        if (sat) set.add(prev_rep, rep);
      }
      if (i < roots.size()) {
        set.add(rep, rep);  // p vanishes here; equality satisfies either rel
        prev_rep = rep;
        prev_clear = roots[i].hi();
      }
    }
    return atom_cache_.emplace(std::move(key), std::move(set)).first->second;
  }

 private:
  const SPoly& squarefree_of(const SPoly& p) {
    auto it = sf_cache_.find(p);
    if (it != sf_cache_.end()) return it->second;
    return sf_cache_.emplace(p, squarefree(p)).first->second;
  }

  // Roots refined to precision and strictly separated from each other and
  // from the domain endpoints (except exact endpoint roots).
  const std::vector<RootInterval>& roots_of(const SPoly& sf) {
    auto it = root_cache_.find(sf);
    if (it != root_cache_.end()) return it->second;
    std::vector<RootInterval> rs = isolate_roots(sf, lo_, hi_);
    for (auto& r : rs) r.refine_to_width(precision_);
    for (size_t i = 0; i + 1 < rs.size(); ++i) {
      while (!(rs[i].hi() < rs[i + 1].lo())) {
        rs[i].bisect();
        rs[i + 1].bisect();
      }
    }
    if (!rs.empty()) {
      while (!rs.front().exact() && !(lo_ < rs.front().lo())) rs.front().bisect();
      while (!rs.back().exact() && !(rs.back().hi() < hi_)) rs.back().bisect();
    }
    return root_cache_.emplace(sf, std::move(rs)).first->second;
  }

  static Rational representative(const RootInterval& r) {
    return r.exact() ? r.lo() : r.midpoint();
  }

  Rational lo_, hi_, precision_;
  std::map<SPoly, SPoly> sf_cache_;
  std::map<SPoly, std::vector<RootInterval>> root_cache_;
  std::map<std::pair<SPoly, bool>, IntervalSet> atom_cache_;
};

// Computes the subset of [lo, hi] on which the formula holds, as closed
// intervals whose endpoints approximate the bounding algebraic numbers to
// within `precision`.
//
// Method: isolate the roots of a pairwise-coprime basis of the atom
// polynomials, refine the isolating intervals until disjoint, then test the
// formula exactly at a rational point inside each cell and at each
// breakpoint (where atom signs are resolved via basis divisibility).
inline IntervalSet satisfying_set(const SFormula& formula, const Rational& lo, const Rational& hi,
                                  const Rational& precision) {
  IntervalSet result;
  if (lo > hi) return result;
  if (formula.kind() == SFormula::Kind::True) return IntervalSet::whole(lo, hi);
  if (formula.kind() == SFormula::Kind::False) return result;

  std::set<SPoly> atom_set;
  formula.collect_atom_polys(atom_set);

  struct Breakpoint {
    RootInterval root;
    size_t basis_index;
  };
  std::vector<Breakpoint> bps;
  std::vector<SPoly> sf;
  sf.reserve(atom_set.size());
  for (const auto& p : atom_set) sf.push_back(squarefree(p));
  std::vector<SPoly> basis = coprime_basis(sf);
  for (size_t bi = 0; bi < basis.size(); ++bi) {
    for (auto& r : isolate_roots(basis[bi], lo, hi)) bps.push_back({std::move(r), bi});
  }
  for (auto& bp : bps) bp.root.refine_to_width(precision);
  std::map<SPoly, std::vector<bool>> atom_divisors;
  for (const auto& p : atom_set) {
    std::vector<bool> div(basis.size(), false);
    SPoly psf = squarefree(p);
    for (size_t bi = 0; bi < basis.size(); ++bi) div[bi] = divides(basis[bi], psf);
    atom_divisors[p] = div;
  }
  auto vanishes = [&](const SPoly& p, size_t bi) -> bool { return atom_divisors.at(p)[bi]; };
  // Roots of coprime basis elements are all distinct, so repeated rounds of
  // bisection separate the isolating intervals; re-sort each round because
  // overlapping intervals may be discovered out of root order.
  auto by_lo = [](const Breakpoint& a, const Breakpoint& b) {
    if (a.root.lo() != b.root.lo()) return a.root.lo() < b.root.lo();
    return a.root.hi() < b.root.hi();
  };
  for (bool overlapping = true; overlapping;) {
    std::sort(bps.begin(), bps.end(), by_lo);
    overlapping = false;
    for (size_t i = 0; i + 1 < bps.size(); ++i) {
      if (!(bps[i].root.hi() < bps[i + 1].root.lo())) {
        bps[i].root.bisect();
        bps[i + 1].root.bisect();
        overlapping = true;
      }
    }
  }
  // Separate the first/last breakpoints from the domain endpoints unless the
  // root actually sits there (exact by construction).
  if (!bps.empty()) {
    while (!bps.front().root.exact() && !(lo < bps.front().root.lo()))
      bps.front().root.bisect();
    while (!bps.back().root.exact() && !(bps.back().root.hi() < hi)) bps.back().root.bisect();
  }

  auto breakpoint_true = [&](const Breakpoint& bp) {
    std::map<SPoly, int> signs;
    return formula.eval_signs([&](const SPoly& p) -> int {
      auto it = signs.find(p);
      if (it != signs.end()) return it->second;
      int s;
      if (vanishes(p, bp.basis_index)) {
        s = 0;
      } else {
        // p is nonzero and of constant sign on the isolating interval.
        Rational probe = bp.root.exact() ? bp.root.lo() : bp.root.hi();
        s = p.sign_at(probe);
      }
      signs.emplace(p, s);
      return s;
    });
  };
  auto eval_cached = [&](const Rational& x) {
    std::map<SPoly, int> signs;
    return formula.eval_signs([&](const SPoly& p) -> int {
      auto it = signs.find(p);
      if (it != signs.end()) return it->second;
      return signs.emplace(p, p.sign_at(x)).first->second;
    });
  };

  // Build cell sample points: lo .. bp1 .. bp2 .. hi
  struct Piece { Rational lo, hi; bool truth; };
  std::vector<Piece> pieces;
  Rational cursor_lo = lo;        // left endpoint of current cell (approx)
  Rational cursor_sample_lo = lo; // rational strictly left of next root
  for (size_t i = 0; i <= bps.size(); ++i) {
    Rational cell_hi_approx = (i < bps.size()) ? bps[i].root.lo() : hi;
    Rational sample_hi = (i < bps.size()) ? bps[i].root.lo() : hi;
    if (cursor_sample_lo < sample_hi) {
      Rational sample = (cursor_sample_lo + sample_hi) / 2;
      bool t = eval_cached(sample);
      Rational cell_hi = (i < bps.size())
                             ? (bps[i].root.exact() ? bps[i].root.lo() : bps[i].root.midpoint())
                             : hi;
      pieces.push_back({cursor_lo, cell_hi, t});
      cursor_lo = cell_hi;
    } else if (i < bps.size()) {
      Rational cell_hi = bps[i].root.exact() ? bps[i].root.lo() : bps[i].root.midpoint();
      if (cell_hi > cursor_lo) cursor_lo = cell_hi;
    }
    if (i < bps.size()) {
      bool t = breakpoint_true(bps[i]);
      Rational pt = bps[i].root.exact() ? bps[i].root.lo() : bps[i].root.midpoint();
      pieces.push_back({pt, pt, t});
      cursor_sample_lo = bps[i].root.exact() ? bps[i].root.lo() : bps[i].root.hi();
    }
  }

  for (const auto& pc : pieces) {
    if (pc.truth) result.add(pc.lo, pc.hi);
  }
  return result;
}

}  // namespace rnm

#endif  // RNM_FORMULA_HPP
