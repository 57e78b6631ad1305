#ifndef RNM_FARKAS_HPP
#define RNM_FARKAS_HPP

#include <utility>
#include <vector>

#include "rnm/formula.hpp"
#include "rnm/polynomial.hpp"
#include "rnm/rational.hpp"

namespace rnm {

// One constraint phi(s) + nu*t + omega*u >= theta, linear in (t, u) with an
// s-dependent offset. Strict constraints are handled with the closed
// halfplane convention; see feasibility_condition.
struct SLinearConstraint {
  SPoly phi;
  Rational nu{0};
  Rational omega{0};
  Rational theta{0};

  bool pure_s() const { return nu == 0 && omega == 0; }
  // right-hand side d = theta - phi(s) of the row in N z >= d
  SPoly rhs() const { return SPoly(theta) - phi; }

  bool operator==(const SLinearConstraint& o) const {
    return phi == o.phi && nu == o.nu && omega == o.omega && theta == o.theta;
  }
};

namespace detail {

// Adds the atom gamma^T d <= 0 contributed by a sign-valid null vector.
inline void add_farkas_atom(std::vector<SFormula>& atoms, const SPoly& combo) {
  atoms.push_back(SFormula::atom(combo, Rel::Le));
}

// Antiparallel pair {i, j}: gamma = (c, 1) with n_j = -c n_i, c > 0.
inline void pair_atom(std::vector<SFormula>& atoms, const SLinearConstraint& a,
                      const SLinearConstraint& b) {
  Rational cross = a.nu * b.omega - a.omega * b.nu;
  if (cross != 0) return;
  Rational dot = a.nu * b.nu + a.omega * b.omega;
  if (sgn(dot) >= 0) return;
  Rational norm_a = a.nu * a.nu + a.omega * a.omega;
  Rational c = -dot / norm_a;  // positive
  add_farkas_atom(atoms, c * a.rhs() + b.rhs());
}

// Rank-2 triple: the null vector of the stacked 2x3 transpose is unique up
// to scale and given by signed 2x2 minors. Rank-<=1 triples are covered by
// the pairwise checks.
inline void triple_atom(std::vector<SFormula>& atoms, const SLinearConstraint& a,
                        const SLinearConstraint& b, const SLinearConstraint& c) {
  Rational g0 = b.nu * c.omega - b.omega * c.nu;
  Rational g1 = -(a.nu * c.omega - a.omega * c.nu);
  Rational g2 = a.nu * b.omega - a.omega * b.nu;
  int s0 = sgn(g0), s1 = sgn(g1), s2 = sgn(g2);
  if (s0 == 0 && s1 == 0 && s2 == 0) return;
  bool all_nonneg = s0 >= 0 && s1 >= 0 && s2 >= 0;
  bool all_nonpos = s0 <= 0 && s1 <= 0 && s2 <= 0;
  if (!all_nonneg && !all_nonpos) return;
  if (all_nonpos) {
    g0 = -g0;
    g1 = -g1;
    g2 = -g2;
  }
  add_farkas_atom(atoms, g0 * a.rhs() + g1 * b.rhs() + g2 * c.rhs());
}

}  // namespace detail

// Farkas atoms for all row subsets of size <= 3 that touch index
// `first_new` or later. Rows must have (nu, omega) != (0, 0).
inline std::vector<SFormula> farkas_atoms_incremental(const std::vector<SLinearConstraint>& rows,
                                                      size_t first_new) {
  std::vector<SFormula> atoms;
  const size_t n = rows.size();
  for (size_t j = first_new; j < n; ++j) {
    for (size_t i = 0; i < j; ++i) detail::pair_atom(atoms, rows[i], rows[j]);
  }
  for (size_t k = first_new; k < n; ++k) {
    for (size_t j = 1; j < k; ++j) {
      for (size_t i = 0; i < j; ++i) detail::triple_atom(atoms, rows[i], rows[j], rows[k]);
    }
  }
  return atoms;
}

// Formula in s that holds exactly when (t, u) exist satisfying all
// constraints, each read as a closed halfplane. In the plane, feasibility of
// the full system equals joint feasibility of every subset of at most three
// rows (Helly), and each infeasibility certificate is a nonnegative null
// vector gamma of the stacked transpose contributing the atom
// gamma^T d <= 0 with d_i = theta_i - phi_i(s).
inline SFormula feasibility_condition(const std::vector<SLinearConstraint>& constraints) {
  std::vector<SFormula> atoms;
  std::vector<SLinearConstraint> rows;
  for (const auto& c : constraints) {
    if (c.pure_s()) {
      // pure s-condition: phi(s) >= theta, hoisted directly
      atoms.push_back(SFormula::atom(c.rhs(), Rel::Le));
    } else {
      rows.push_back(c);
    }
  }
  for (auto& a : farkas_atoms_incremental(rows, 0)) atoms.push_back(std::move(a));
  return SFormula::conj(std::move(atoms));
}

}  // namespace rnm

#endif  // RNM_FARKAS_HPP
