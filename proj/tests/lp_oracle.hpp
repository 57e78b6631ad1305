// Exact numeric feasibility oracle for small planar systems, used to
// cross-check the symbolic Farkas feasibility formula.
//
// Rows are nu*t + omega*u >= theta - phi(s) with the closed-halfplane
// convention. At a fixed rational s the system is a finite intersection of
// halfplanes in (t, u); after adding a large bounding box it is compact, so
// it is nonempty iff some intersection point of two constraint lines (or a
// box corner) satisfies every row. All arithmetic is exact.

#ifndef RNM_TESTS_LP_ORACLE_HPP
#define RNM_TESTS_LP_ORACLE_HPP

#include <vector>

#include "rnm/certifier.hpp"
#include "rnm/rational.hpp"

namespace rnm_tests {

struct TUWitness {
  bool feasible = false;
  rnm::Rational t{0}, u{0};
};

// Decides feasibility at s; on success returns the centroid of the feasible
// candidate vertices (a point of the convex feasible region).
inline TUWitness feasible_tu(const std::vector<rnm::SLinearConstraint>& rows,
                             const rnm::Rational& s,
                             const rnm::Rational& box = rnm::Rational(1000000)) {
  using rnm::Rational;
  struct Line {
    Rational a, b, d;  // a*t + b*u >= d
  };
  std::vector<Line> ls;
  for (const auto& r : rows) {
    Rational d = r.theta - r.phi.eval(s);
    if (r.nu == 0 && r.omega == 0) {
      if (d > 0) return {};  // pure-s row violated
      continue;
    }
    ls.push_back({r.nu, r.omega, d});
  }
  // bounding box |t| <= box, |u| <= box
  ls.push_back({Rational(1), Rational(0), -box});
  ls.push_back({Rational(-1), Rational(0), -box});
  ls.push_back({Rational(0), Rational(1), -box});
  ls.push_back({Rational(0), Rational(-1), -box});

  auto ok = [&](const Rational& t, const Rational& u) {
    for (const auto& l : ls)
      if (l.a * t + l.b * u < l.d) return false;
    return true;
  };

  Rational sum_t(0), sum_u(0);
  long count = 0;
  for (size_t i = 0; i < ls.size(); ++i) {
    for (size_t j = i + 1; j < ls.size(); ++j) {
      Rational det = ls[i].a * ls[j].b - ls[i].b * ls[j].a;
      if (det == 0) continue;
      Rational t = (ls[i].d * ls[j].b - ls[i].b * ls[j].d) / det;
      Rational u = (ls[i].a * ls[j].d - ls[i].d * ls[j].a) / det;
      if (ok(t, u)) {
        sum_t += t;
        sum_u += u;
        ++count;
      }
    }
  }
  if (count == 0) return {};
  return {true, sum_t / count, sum_u / count};
}

inline bool feasible_at(const std::vector<rnm::SLinearConstraint>& rows, const rnm::Rational& s) {
  return feasible_tu(rows, s).feasible;
}

}  // namespace rnm_tests

#endif  // RNM_TESTS_LP_ORACLE_HPP
