#ifndef RNM_OBJECTIVES_HPP
#define RNM_OBJECTIVES_HPP

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rnm/simplex.hpp"

namespace rnm {

using Matrix2 = std::array<std::array<double, 2>, 2>;
using Vector2 = std::array<double, 2>;

// 2-D objective with optional analytic derivatives
class Objective {
 public:
  virtual ~Objective() = default;
  virtual double evaluate(const Point& p) const = 0;
  virtual bool has_derivatives() const { return false; }
  virtual Vector2 gradient(const Point&) const { throw DomainError("no analytic gradient"); }
  virtual Matrix2 hessian(const Point&) const { throw DomainError("no analytic hessian"); }
  virtual std::string name() const = 0;

  Evaluator evaluator() const {
    return [this](const Point& p) { return evaluate(p); };
  }
};

// f(p) = 1/2 p'Ap + b'p + c
class QuadraticObjective : public Objective {
 public:
  QuadraticObjective(Matrix2 A, Vector2 b, double c) : A_(A), b_(b), c_(c) {
    if (A_[0][1] != A_[1][0]) throw DomainError("quadratic matrix must be symmetric");
  }

  // the convergence-study instance f = 2x^2 + 3y^2 + xy - 3x + 5y
  static QuadraticObjective study_instance() {
    return QuadraticObjective{{{{4, 1}, {1, 6}}}, {-3, 5}, 0};
  }

  double evaluate(const Point& p) const override {
    double x = p[0], y = p[1];
    return 0.5 * (A_[0][0] * x * x + 2 * A_[0][1] * x * y + A_[1][1] * y * y) + b_[0] * x +
           b_[1] * y + c_;
  }
  bool has_derivatives() const override { return true; }
  Vector2 gradient(const Point& p) const override {
    return {A_[0][0] * p[0] + A_[0][1] * p[1] + b_[0], A_[1][0] * p[0] + A_[1][1] * p[1] + b_[1]};
  }
  Matrix2 hessian(const Point&) const override { return A_; }
  std::string name() const override { return "quadratic"; }

  const Matrix2& A() const { return A_; }
  const Vector2& b() const { return b_; }

 private:
  Matrix2 A_;
  Vector2 b_;
  double c_;
};

// The strictly convex C^2 counterexample:
//   f(x,y) = 2400|x|^3 + y + y^2   (x <= 0)
//            6x^3 + y + y^2        (x >= 0)
class McKinnonObjective : public Objective {
 public:
  double evaluate(const Point& p) const override {
    double x = p[0], y = p[1];
    double cubic = (x <= 0) ? -2400.0 * x * x * x : 6.0 * x * x * x;
    return cubic + y + y * y;
  }
  bool has_derivatives() const override { return true; }
  Vector2 gradient(const Point& p) const override {
    double x = p[0];
    double gx = (x <= 0) ? -7200.0 * x * x : 18.0 * x * x;
    return {gx, 1.0 + 2.0 * p[1]};
  }
  Matrix2 hessian(const Point& p) const override {
    double x = p[0];
    double hxx = (x <= 0) ? -14400.0 * x : 36.0 * x;
    return {{{hxx, 0.0}, {0.0, 2.0}}};
  }
  std::string name() const override { return "mckinnon"; }
};

// g(inner(p)) for a strictly increasing g: same argmin, same comparisons
class MonotoneWrapped : public Objective {
 public:
  MonotoneWrapped(std::shared_ptr<const Objective> inner, std::function<double(double)> g)
      : inner_(std::move(inner)), g_(std::move(g)) {}
  double evaluate(const Point& p) const override { return g_(inner_->evaluate(p)); }
  std::string name() const override { return "monotone(" + inner_->name() + ")"; }

 private:
  std::shared_ptr<const Objective> inner_;
  std::function<double(double)> g_;
};

// starting triangle (0,0), (1,1), ((1+sqrt(33))/8, (1-sqrt(33))/8)
inline std::vector<Point> mckinnon_start_points() {
  double r = std::sqrt(33.0);
  return {{0.0, 0.0}, {1.0, 1.0}, {(1.0 + r) / 8.0, (1.0 - r) / 8.0}};
}

inline Simplex mckinnon_start() {
  McKinnonObjective f;
  return Simplex::from_points(mckinnon_start_points(), f.evaluator());
}

// central finite differences, step 1e-6 * max(1, |p|)
inline Vector2 fd_gradient(const Objective& obj, const Point& p) {
  double h = 1e-6 * std::max(1.0, std::hypot(p[0], p[1]));
  Vector2 g;
  for (int k = 0; k < 2; ++k) {
    Point lo = p, hi = p;
    lo[static_cast<size_t>(k)] -= h;
    hi[static_cast<size_t>(k)] += h;
    g[static_cast<size_t>(k)] = (obj.evaluate(hi) - obj.evaluate(lo)) / (2 * h);
  }
  return g;
}

inline Matrix2 fd_hessian(const Objective& obj, const Point& p) {
  double h = 1e-4 * std::max(1.0, std::hypot(p[0], p[1]));
  Matrix2 H;
  double f0 = obj.evaluate(p);
  for (int k = 0; k < 2; ++k) {
    Point lo = p, hi = p;
    lo[static_cast<size_t>(k)] -= h;
    hi[static_cast<size_t>(k)] += h;
    H[static_cast<size_t>(k)][static_cast<size_t>(k)] =
        (obj.evaluate(hi) - 2 * f0 + obj.evaluate(lo)) / (h * h);
  }
  Point pp = p, pm = p, mp = p, mm = p;
  pp[0] += h; pp[1] += h;
  pm[0] += h; pm[1] -= h;
  mp[0] -= h; mp[1] += h;
  mm[0] -= h; mm[1] -= h;
  double mixed =
      (obj.evaluate(pp) - obj.evaluate(pm) - obj.evaluate(mp) + obj.evaluate(mm)) / (4 * h * h);
  H[0][1] = H[1][0] = mixed;
  return H;
}

inline Vector2 objective_gradient(const Objective& obj, const Point& p) {
  return obj.has_derivatives() ? obj.gradient(p) : fd_gradient(obj, p);
}
inline Matrix2 objective_hessian(const Objective& obj, const Point& p) {
  return obj.has_derivatives() ? obj.hessian(p) : fd_hessian(obj, p);
}

// Name-based construction: "mckinnon" or "quad:a11,a12,a22,b1,b2,c" meaning
// f = 1/2 (a11 x^2 + 2 a12 xy + a22 y^2) + b1 x + b2 y + c.
inline std::shared_ptr<Objective> parse_objective(const std::string& spec) {
  if (spec == "mckinnon") return std::make_shared<McKinnonObjective>();
  if (spec.rfind("quad:", 0) == 0) {
    std::vector<double> v;
    std::string rest = spec.substr(5);
    size_t pos = 0;
    while (pos <= rest.size()) {
      size_t comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      size_t used = 0;
      try {
        v.push_back(std::stod(tok, &used));
      } catch (const std::exception&) {
        throw DomainError("bad quadratic coefficient at position " + std::to_string(pos) + ": '" +
                          tok + "'");
      }
      if (used != tok.size())
        throw DomainError("trailing characters in coefficient at position " + std::to_string(pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (v.size() != 6)
      throw DomainError("quad spec needs 6 coefficients a11,a12,a22,b1,b2,c, got " +
                        std::to_string(v.size()));
    return std::make_shared<QuadraticObjective>(Matrix2{{{v[0], v[1]}, {v[1], v[2]}}},
                                                Vector2{v[3], v[4]}, v[5]);
  }
  throw DomainError("unknown objective '" + spec + "' (expected 'mckinnon' or 'quad:...')");
}

}  // namespace rnm

#endif  // RNM_OBJECTIVES_HPP
