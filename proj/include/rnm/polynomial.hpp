#ifndef RNM_POLYNOMIAL_HPP
#define RNM_POLYNOMIAL_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rnm/rational.hpp"

namespace rnm {

// Univariate polynomial in the symbol s with exact rational coefficients,
// stored low degree first with trailing zeros stripped.
class SPoly {
 public:
  SPoly() = default;
  SPoly(const Rational& constant) { coeffs_.push_back(constant); normalize(); }  // NOLINT
  SPoly(long constant) : SPoly(Rational(constant)) {}                            // NOLINT
  explicit SPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static SPoly variable() { return SPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
  }

  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational eval(const Rational& s) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
  }

  int sign_at(const Rational& s) const { return sgn(eval(s)); }

  SPoly derivative() const {
    if (coeffs_.size() <= 1) return SPoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return SPoly(std::move(d));
  }

  friend SPoly operator+(const SPoly& a, const SPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return SPoly(std::move(c));
  }
  friend SPoly operator-(const SPoly& a, const SPoly& b) { return a + (-b); }
  SPoly operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& x : c) x = -x;
    return SPoly(std::move(c));
  }
  friend SPoly operator*(const SPoly& a, const SPoly& b) {
    if (a.is_zero() || b.is_zero()) return SPoly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return SPoly(std::move(c));
  }
  friend SPoly operator*(const Rational& k, const SPoly& a) {
    std::vector<Rational> c(a.coeffs_);
    for (auto& x : c) x *= k;
    return SPoly(std::move(c));
  }
  SPoly& operator+=(const SPoly& o) { *this = *this + o; return *this; }
  SPoly& operator-=(const SPoly& o) { *this = *this - o; return *this; }
  SPoly& operator*=(const SPoly& o) { *this = *this * o; return *this; }

  bool operator==(const SPoly& o) const { return coeffs_ == o.coeffs_; }

  // Total order usable as a map key.
  bool operator<(const SPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      int c = cmp(coeffs_[i], o.coeffs_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  // Euclidean division; returns {quotient, remainder}.
  std::pair<SPoly, SPoly> divmod(const SPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("SPoly: division by zero polynomial");
    SPoly q, r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int k = r.degree() - d.degree();
      Rational c = r.leading() / d.leading();
      std::vector<Rational> mono(static_cast<size_t>(k) + 1, Rational(0));
      mono.back() = c;
      SPoly m(std::move(mono));
      q += m;
      r -= m * d;
    }
    return {q, r};
  }

  // Scales so coefficients are coprime integers with positive leading
  // coefficient; a positive rational multiple of the input.
  SPoly primitive() const {
    if (is_zero()) return SPoly();
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
      if (c == 0) continue;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    SPoly p = scale * *this;
    if (sgn(p.leading()) < 0) p = Rational(-1) * p;
    return p;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

inline SPoly gcd(const SPoly& a, const SPoly& b) {
  SPoly x = a, y = b;
  while (!y.is_zero()) {
    SPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.primitive();
}

// p with repeated roots collapsed: p / gcd(p, p').
inline SPoly squarefree(const SPoly& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return SPoly(Rational(1));
  SPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive();
  return p.divmod(g).first.primitive();
}

inline bool divides(const SPoly& d, const SPoly& p) {
  if (d.is_zero()) return p.is_zero();
  return p.divmod(d).second.is_zero();
}

// Sturm sequence of a squarefree polynomial; counts real roots in (a, b].
class SturmSequence {
 public:
  explicit SturmSequence(const SPoly& squarefree_p) {
    seq_.push_back(squarefree_p);
    if (squarefree_p.degree() >= 1) {
      seq_.push_back(squarefree_p.derivative());
      while (seq_.back().degree() >= 1) {
        SPoly r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
        if (r.is_zero()) break;
        // normalize by a positive scalar only: sign flips would break the
        // sign-variation property
        SPoly neg = -r;
        SPoly prim = neg.primitive();
        if (sgn(neg.leading()) < 0) prim = Rational(-1) * prim;
        seq_.push_back(std::move(prim));
      }
    }
  }

  int variations_at(const Rational& x) const {
    int v = 0, prev = 0;
    for (const auto& p : seq_) {
      int s = p.sign_at(x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  // Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
  }

 private:
  std::vector<SPoly> seq_;
};

// One real root of a squarefree polynomial, known to lie in (lo, hi]
// (or exactly at lo == hi). Refinable to arbitrary width.
class RootInterval {
 public:
  RootInterval(SPoly squarefree_p, SturmSequence sturm, Rational lo, Rational hi)
      : poly_(std::move(squarefree_p)), sturm_(std::move(sturm)), lo_(std::move(lo)), hi_(std::move(hi)) {
    pin_exact();
  }

  const SPoly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool exact() const { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  void refine_to_width(const Rational& target) {
    while (!exact() && width() > target) bisect();
  }

  void bisect() {
    if (exact()) return;
    Rational mid = midpoint();
    if (poly_.sign_at(mid) == 0) {
      lo_ = hi_ = mid;
      return;
    }
    if (sturm_.count_roots(mid, hi_) == 1) {
      lo_ = mid;
    } else {
      hi_ = mid;
    }
    pin_exact();
  }

 private:
  void pin_exact() {
    if (!exact() && poly_.sign_at(hi_) == 0) lo_ = hi_;
  }
  SPoly poly_;
  SturmSequence sturm_;
  Rational lo_, hi_;
};

// Isolating intervals for all distinct real roots of p inside [lo, hi].
// Throws on the identically-zero polynomial.
inline std::vector<RootInterval> isolate_roots(const SPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: polynomial is identically zero");
  std::vector<RootInterval> out;
  SPoly sf = squarefree(p);
  if (sf.degree() < 1) return out;
  SturmSequence sturm(sf);
  if (sf.sign_at(lo) == 0) out.emplace_back(sf, sturm, lo, lo);

  struct Span { Rational a, b; int count; };
  std::vector<Span> stack;
  int total = sturm.count_roots(lo, hi);
  if (total > 0) stack.push_back({lo, hi, total});
  while (!stack.empty()) {
    Span sp = stack.back();
    stack.pop_back();
    if (sp.count == 1) {
      out.emplace_back(sf, sturm, sp.a, sp.b);
      continue;
    }
    Rational mid = (sp.a + sp.b) / 2;
    int left = sturm.count_roots(sp.a, mid);
    int right = sp.count - left;
    if (left > 0) stack.push_back({sp.a, mid, left});
    if (right > 0) stack.push_back({mid, sp.b, right});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo() < b.lo(); });
  return out;
}

// Rewrites a set of squarefree polynomials as a pairwise-coprime basis with
// the same set of real roots. Inputs need not be distinct.
inline std::vector<SPoly> coprime_basis(std::vector<SPoly> polys) {
  std::vector<SPoly> basis;
  std::vector<SPoly> work;
  for (auto& p : polys) {
    if (p.degree() >= 1) work.push_back(p.primitive());
  }
  while (!work.empty()) {
    SPoly p = work.back();
    work.pop_back();
    bool consumed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      SPoly g = gcd(p, basis[i]);
      if (g.degree() >= 1) {
        SPoly b_rem = basis[i].divmod(g).first.primitive();
        SPoly p_rem = p.divmod(g).first.primitive();
        basis.erase(basis.begin() + static_cast<long>(i));
        work.push_back(g);
        if (b_rem.degree() >= 1) work.push_back(b_rem);
        if (p_rem.degree() >= 1) work.push_back(p_rem);
        consumed = true;
        break;
      }
    }
    if (!consumed) basis.push_back(p);
  }
  return basis;
}

}  // namespace rnm

#endif  // RNM_POLYNOMIAL_HPP
