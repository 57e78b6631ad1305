#ifndef RNM_FRAME_HPP
#define RNM_FRAME_HPP

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rnm/objectives.hpp"
#include "rnm/simplex.hpp"

namespace rnm {

struct FrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Affine frame p~ = M^-1 (p - b) putting the local quadratic model into the
// normal form f(b) + y~ + x~^2/2, with curvature alpha in the y~ direction.
struct LocalFrame {
  Vector2 base;
  Matrix2 M;
  Matrix2 M_inv;
  double alpha = 0;

  Vector2 to_local(const Vector2& p) const {
    double dx = p[0] - base[0], dy = p[1] - base[1];
    return {M_inv[0][0] * dx + M_inv[0][1] * dy, M_inv[1][0] * dx + M_inv[1][1] * dy};
  }
};

namespace detail {

inline double det2(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

// spectral condition number of a symmetric 2x2
inline double sym_cond(const Matrix2& h) {
  double tr = h[0][0] + h[1][1];
  double d = det2(h);
  double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - d));
  double l1 = tr / 2.0 + disc, l2 = tr / 2.0 - disc;
  double hi = std::max(std::abs(l1), std::abs(l2));
  double lo = std::min(std::abs(l1), std::abs(l2));
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

}  // namespace detail

// Columns of M: m1 = xi1 * ghat with ghat = (gy, -gx) (g rotated 90 degrees
// clockwise) and xi1 = 1/sqrt(ghat' H ghat); m2 = H^-1 g / (g' H^-1 g).
inline LocalFrame local_frame(const Vector2& g, const Matrix2& H, const Vector2& b) {
  if (g[0] == 0.0 && g[1] == 0.0) throw FrameError("at minimizer, frame undefined");
  double trace = H[0][0] + H[1][1];
  double det = detail::det2(H);
  if (!(det > 0.0) || !(trace > 0.0)) throw FrameError("no frame exists");
  if (detail::sym_cond(H) > 1e12) throw FrameError("no frame exists");

  Vector2 ghat{g[1], -g[0]};
  double quad = ghat[0] * (H[0][0] * ghat[0] + H[0][1] * ghat[1]) +
                ghat[1] * (H[1][0] * ghat[0] + H[1][1] * ghat[1]);
  if (!(quad > 0.0)) throw FrameError("no frame exists");
  double xi1 = 1.0 / std::sqrt(quad);
  Vector2 m1{xi1 * ghat[0], xi1 * ghat[1]};

  // w = H^-1 g
  Vector2 w{(H[1][1] * g[0] - H[0][1] * g[1]) / det, (-H[1][0] * g[0] + H[0][0] * g[1]) / det};
  double gw = g[0] * w[0] + g[1] * w[1];
  if (!(gw > 0.0)) throw FrameError("no frame exists");
  Vector2 m2{w[0] / gw, w[1] / gw};

  LocalFrame fr;
  fr.base = b;
  fr.M = {{{m1[0], m2[0]}, {m1[1], m2[1]}}};
  double dM = detail::det2(fr.M);
  if (!(dM > 0.0)) {
    // flip m1's sign choice; the positive root must give det M > 0
    fr.M = {{{-m1[0], m2[0]}, {-m1[1], m2[1]}}};
    dM = detail::det2(fr.M);
    if (!(dM > 0.0)) throw FrameError("no frame exists");
  }
  fr.M_inv = {{{fr.M[1][1] / dM, -fr.M[0][1] / dM}, {-fr.M[1][0] / dM, fr.M[0][0] / dM}}};
  fr.alpha = m2[0] * (H[0][0] * m2[0] + H[0][1] * m2[1]) +
             m2[1] * (H[1][0] * m2[0] + H[1][1] * m2[1]);
  if (!(fr.alpha > 0.0)) throw FrameError("no frame exists");
  return fr;
}

struct FrameMetrics {
  double width = 0;     // max pairwise |x~ difference|
  double height = 0;    // max pairwise |y~ difference|
  double area = 0;      // triangle area in transformed coordinates
  double flatness = 0;  // area / width^3
};

inline FrameMetrics frame_metrics(const std::array<Vector2, 3>& triangle, const LocalFrame& fr) {
  std::array<Vector2, 3> q;
  for (int i = 0; i < 3; ++i) q[static_cast<size_t>(i)] = fr.to_local(triangle[static_cast<size_t>(i)]);
  FrameMetrics m;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      m.width = std::max(m.width, std::abs(q[static_cast<size_t>(i)][0] - q[static_cast<size_t>(j)][0]));
      m.height = std::max(m.height, std::abs(q[static_cast<size_t>(i)][1] - q[static_cast<size_t>(j)][1]));
    }
  double e1x = q[1][0] - q[0][0], e1y = q[1][1] - q[0][1];
  double e2x = q[2][0] - q[0][0], e2y = q[2][1] - q[0][1];
  m.area = 0.5 * std::abs(e1x * e2y - e1y * e2x);
  if (m.width == 0.0) throw FrameError("degenerate vertical triangle: flatness undefined");
  m.flatness = m.area / (m.width * m.width * m.width);
  return m;
}

// advanced-contraction predicates: h~ <= 10 w~^2 and flatness <= 10
inline std::pair<bool, bool> contraction_predicates(const FrameMetrics& m) {
  return {m.height <= 10.0 * m.width * m.width, m.flatness <= 10.0};
}

enum class BasePointPolicy { WorstVertex, EdgeMidpoint };

struct IterationDiagnostics {
  size_t iteration = 0;
  std::optional<int> code2d;
  bool frame_ok = false;
  std::string frame_error;
  double width = 0, height = 0, area = 0, flatness = 0;
  double h_over_w = 0, h_over_w2 = 0;
  bool h_bound_ok = false, flatness_ok = false;
  bool is_contraction = false;
};

inline std::vector<IterationDiagnostics> diagnose_run(
    const MoveTrace& trace, const Objective& obj,
    BasePointPolicy policy = BasePointPolicy::WorstVertex) {
  std::vector<IterationDiagnostics> out;
  for (size_t i = 0; i < trace.iterations.size(); ++i) {
    const auto& vs = trace.iterations[i].vertices;  // best to worst
    IterationDiagnostics d;
    d.iteration = i;
    d.code2d = trace.iterations[i].move.code2d;
    d.is_contraction = trace.iterations[i].move.kind == MoveKind::InsideContract ||
                       trace.iterations[i].move.kind == MoveKind::OutsideContract;
    std::array<Vector2, 3> tri;
    for (int k = 0; k < 3; ++k)
      tri[static_cast<size_t>(k)] = {vs[static_cast<size_t>(k)].coordinates[0],
                                     vs[static_cast<size_t>(k)].coordinates[1]};
    Vector2 base = tri[2];  // worst vertex
    if (policy == BasePointPolicy::EdgeMidpoint)
      base = {0.5 * (tri[0][0] + tri[1][0]), 0.5 * (tri[0][1] + tri[1][1])};
    try {
      Point bp{base[0], base[1]};
      LocalFrame fr = local_frame(objective_gradient(obj, bp), objective_hessian(obj, bp), base);
      FrameMetrics m = frame_metrics(tri, fr);
      d.frame_ok = true;
      d.width = m.width;
      d.height = m.height;
      d.area = m.area;
      d.flatness = m.flatness;
      d.h_over_w = m.height / m.width;
      d.h_over_w2 = m.height / (m.width * m.width);
      auto [hb, fb] = contraction_predicates(m);
      d.h_bound_ok = hb;
      d.flatness_ok = fb;
    } catch (const FrameError& e) {
      d.frame_error = e.what();
    }
    out.push_back(std::move(d));
  }
  return out;
}

inline std::string diagnostics_to_csv(const std::vector<IterationDiagnostics>& ds) {
  std::ostringstream out;
  out.precision(17);
  out << "iteration,code2d,w,h,area,flatness,h_over_w,h_over_w2,h_bound_ok,flatness_ok,"
         "frame_error\n";
  for (const auto& d : ds) {
    out << d.iteration << ",";
    if (d.code2d) out << *d.code2d;
    out << ",";
    if (d.frame_ok) {
      out << d.width << "," << d.height << "," << d.area << "," << d.flatness << "," << d.h_over_w
          << "," << d.h_over_w2 << "," << (d.h_bound_ok ? 1 : 0) << "," << (d.flatness_ok ? 1 : 0)
          << ",";
    } else {
      out << ",,,,,,,,";
    }
    out << d.frame_error << "\n";
  }
  return out.str();
}

}  // namespace rnm

#endif  // RNM_FRAME_HPP
