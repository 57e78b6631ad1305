#ifndef RNM_SIMPLEX_HPP
#define RNM_SIMPLEX_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace rnm {

using Point = std::vector<double>;
using Evaluator = std::function<double(const Point&)>;

struct EvaluationError : std::runtime_error {
  Point where;
  explicit EvaluationError(Point p)
      : std::runtime_error("objective returned a non-finite value"), where(std::move(p)) {}
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Vertex {
  Point coordinates;
  double value = 0;
  std::int64_t id = 0;
  int slot = -1;  // lineage position A/B/C for the 2-D move coding
};

enum class MoveKind { Reflect, Expand, OutsideContract, InsideContract, Shrink };

inline const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Reflect: return "reflect";
    case MoveKind::Expand: return "expand";
    case MoveKind::OutsideContract: return "outside_contract";
    case MoveKind::InsideContract: return "inside_contract";
    case MoveKind::Shrink: return "shrink";
  }
  return "?";
}

struct Simplex {
  std::vector<Vertex> vertices;  // best to worst
  int dimension = 0;

  static Simplex from_points(const std::vector<Point>& pts, const Evaluator& f) {
    if (pts.empty()) throw DomainError("simplex needs n+1 points");
    Simplex s;
    s.dimension = static_cast<int>(pts.size()) - 1;
    for (size_t i = 0; i < pts.size(); ++i) {
      if (static_cast<int>(pts[i].size()) != s.dimension)
        throw DomainError("point dimension mismatch");
      double v = f(pts[i]);
      if (!std::isfinite(v)) throw EvaluationError(pts[i]);
      s.vertices.push_back(Vertex{pts[i], v, static_cast<std::int64_t>(i), static_cast<int>(i)});
    }
    if (s.volume_measure() == 0.0) throw DomainError("degenerate initial simplex");
    return s;
  }

  // |det| of the edge matrix: 0 exactly when degenerate
  double volume_measure() const {
    int n = dimension;
    std::vector<std::vector<double>> m(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            vertices[static_cast<size_t>(i + 1)].coordinates[static_cast<size_t>(j)] -
            vertices[0].coordinates[static_cast<size_t>(j)];
    // Gaussian elimination with partial pivoting
    double det = 1;
    for (int c = 0; c < n; ++c) {
      int piv = c;
      for (int r = c + 1; r < n; ++r)
        if (std::abs(m[static_cast<size_t>(r)][static_cast<size_t>(c)]) >
            std::abs(m[static_cast<size_t>(piv)][static_cast<size_t>(c)]))
          piv = r;
      if (m[static_cast<size_t>(piv)][static_cast<size_t>(c)] == 0.0) return 0.0;
      if (piv != c) {
        std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(c)]);
        det = -det;
      }
      det *= m[static_cast<size_t>(c)][static_cast<size_t>(c)];
      for (int r = c + 1; r < n; ++r) {
        double k = m[static_cast<size_t>(r)][static_cast<size_t>(c)] /
                   m[static_cast<size_t>(c)][static_cast<size_t>(c)];
        for (int j = c; j < n; ++j)
          m[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
              k * m[static_cast<size_t>(c)][static_cast<size_t>(j)];
      }
    }
    return std::abs(det);
  }

  double diameter() const {
    double d = 0;
    for (size_t i = 0; i < vertices.size(); ++i)
      for (size_t j = i + 1; j < vertices.size(); ++j) {
        double s2 = 0;
        for (size_t k = 0; k < vertices[i].coordinates.size(); ++k) {
          double dd = vertices[i].coordinates[k] - vertices[j].coordinates[k];
          s2 += dd * dd;
        }
        d = std::max(d, std::sqrt(s2));
      }
    return d;
  }

  double value_spread() const {
    double lo = vertices.front().value, hi = lo;
    for (const auto& v : vertices) {
      lo = std::min(lo, v.value);
      hi = std::max(hi, v.value);
    }
    return hi - lo;
  }
};

// Sort best-to-worst; ties broken by lower id (older vertices rank better).
inline Simplex order_vertices(Simplex s) {
  for (const auto& v : s.vertices)
    if (!std::isfinite(v.value)) throw EvaluationError(v.coordinates);
  std::stable_sort(s.vertices.begin(), s.vertices.end(), [](const Vertex& a, const Vertex& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.id < b.id;
  });
  return s;
}

struct MoveRecord {
  MoveKind kind = MoveKind::Reflect;
  std::int64_t worst_id = -1;
  std::vector<Vertex> accepted;  // one vertex, or n vertices for Shrink
  int evaluations = 0;
  std::optional<int> code2d;
};

enum class Variant { NM, RNM };

struct RunConfig {
  Variant variant = Variant::RNM;
  double expansion_coefficient = 2.0;  // chi, NM only
  int max_iterations = 100;
  double diameter_tolerance = 0.0;
  double value_tolerance = 0.0;
};

namespace detail {

// Sum of the n best vertices' coordinates, accumulated in index order so the
// 2-D formulas reduce bit-for-bit to p1+p2.
inline Point best_sum(const Simplex& s) {
  size_t n = static_cast<size_t>(s.dimension);
  Point q(n, 0.0);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) q[k] += s.vertices[i].coordinates[k];
  return q;
}

inline double eval_checked(const Evaluator& f, const Point& p, int& evals) {
  double v = f(p);
  ++evals;
  if (!std::isfinite(v)) throw EvaluationError(p);
  return v;
}

inline int code2d_for(MoveKind kind, int slot) {
  int base;
  switch (kind) {
    case MoveKind::Reflect: base = 0; break;
    case MoveKind::InsideContract: base = 1; break;
    case MoveKind::OutsideContract: base = 2; break;
    default: return -1;
  }
  return base * 3 + slot + 1;
}

inline std::pair<Simplex, MoveRecord> step_impl(const Simplex& in, const Evaluator& f,
                                                std::optional<double> chi) {
  if (in.volume_measure() == 0.0) throw DomainError("degenerate simplex");
  Simplex s = order_vertices(in);
  size_t n = static_cast<size_t>(s.dimension);
  const Vertex& worst = s.vertices[n];
  const Vertex& next = s.vertices[n - 1];
  const Vertex& best = s.vertices[0];
  std::int64_t next_id = 1 + std::max_element(s.vertices.begin(), s.vertices.end(),
                                              [](const Vertex& a, const Vertex& b) {
                                                return a.id < b.id;
                                              })
                                 ->id;

  Point q = best_sum(s);
  double inv_n = 1.0 / static_cast<double>(n);

  MoveRecord rec;
  rec.worst_id = worst.id;
  int evals = 0;

  auto accept = [&](MoveKind kind, Point p, double v) {
    Vertex nv{std::move(p), v, next_id, worst.slot};
    rec.kind = kind;
    rec.accepted = {nv};
    rec.evaluations = evals;
    if (s.dimension == 2 && kind != MoveKind::Expand) rec.code2d = code2d_for(kind, worst.slot);
    Simplex out = s;
    out.vertices[n] = std::move(nv);
    return std::pair<Simplex, MoveRecord>{order_vertices(std::move(out)), rec};
  };

  // reflection point: 2*centroid - worst, i.e. for n=2 exactly p1+p2-p3
  Point pr(n), centroid(n);
  for (size_t k = 0; k < n; ++k) {
    centroid[k] = q[k] * inv_n;
    pr[k] = 2.0 * centroid[k] - worst.coordinates[k];
  }
  double fr = eval_checked(f, pr, evals);

  if (chi && fr < best.value) {
    // NM expansion: p_e = centroid + chi*(centroid - worst)
    Point pe(n);
    for (size_t k = 0; k < n; ++k)
      pe[k] = centroid[k] + *chi * (centroid[k] - worst.coordinates[k]);
    double fe = eval_checked(f, pe, evals);
    if (fe < fr) return accept(MoveKind::Expand, std::move(pe), fe);
    return accept(MoveKind::Reflect, std::move(pr), fr);
  }

  if (fr < next.value) return accept(MoveKind::Reflect, std::move(pr), fr);

  if (fr < worst.value) {
    // outside contraction: 1.5*centroid - 0.5*worst == 3/4(p1+p2) - 1/2 p3 for n=2
    Point po(n);
    for (size_t k = 0; k < n; ++k) po[k] = 1.5 * centroid[k] - 0.5 * worst.coordinates[k];
    double fo = eval_checked(f, po, evals);
    if (fo <= fr) return accept(MoveKind::OutsideContract, std::move(po), fo);
  } else {
    // inside contraction: 0.5*centroid + 0.5*worst == 1/4(p1+p2) + 1/2 p3 for n=2
    Point pi(n);
    for (size_t k = 0; k < n; ++k) pi[k] = 0.5 * centroid[k] + 0.5 * worst.coordinates[k];
    double fi = eval_checked(f, pi, evals);
    if (fi < worst.value) return accept(MoveKind::InsideContract, std::move(pi), fi);
  }

  // shrink toward the best vertex
  rec.kind = MoveKind::Shrink;
  rec.evaluations = evals;
  Simplex out = s;
  for (size_t i = 1; i <= n; ++i) {
    Point p(n);
    for (size_t k = 0; k < n; ++k)
      p[k] = 0.5 * (best.coordinates[k] + out.vertices[i].coordinates[k]);
    double v = eval_checked(f, p, evals);
    Vertex nv{std::move(p), v, next_id++, out.vertices[i].slot};
    rec.accepted.push_back(nv);
    out.vertices[i] = std::move(nv);
  }
  rec.evaluations = evals;
  return {order_vertices(std::move(out)), rec};
}

}  // namespace detail

inline std::pair<Simplex, MoveRecord> rnm_step(const Simplex& s, const Evaluator& f) {
  return detail::step_impl(s, f, std::nullopt);
}

inline std::pair<Simplex, MoveRecord> nm_step(const Simplex& s, const Evaluator& f,
                                              double chi = 2.0) {
  if (!(chi > 1.0)) throw DomainError("expansion coefficient must exceed 1");
  return detail::step_impl(s, f, chi);
}

struct IterationRecord {
  MoveRecord move;
  std::vector<Vertex> vertices;  // snapshot after the move, best to worst
};

struct MoveTrace {
  RunConfig config;
  std::vector<Vertex> initial;  // ordered
  std::vector<IterationRecord> iterations;
  Simplex final_simplex;
  std::string termination;  // max_iterations | diameter | value_spread
  int total_evaluations = 0;
  std::optional<int> failed_iteration;  // set when an error aborted the run
};

inline MoveTrace run(const Evaluator& f, const Simplex& initial, const RunConfig& config) {
  MoveTrace tr;
  tr.config = config;
  Simplex s = order_vertices(initial);
  if (s.volume_measure() == 0.0) throw DomainError("degenerate initial simplex");
  tr.initial = s.vertices;
  for (int it = 0; it < config.max_iterations; ++it) {
    if (config.diameter_tolerance > 0 && s.diameter() < config.diameter_tolerance) {
      tr.termination = "diameter";
      tr.final_simplex = s;
      return tr;
    }
    if (config.value_tolerance > 0 && s.value_spread() < config.value_tolerance) {
      tr.termination = "value_spread";
      tr.final_simplex = s;
      return tr;
    }
    try {
      auto [next, rec] = (config.variant == Variant::RNM)
                             ? rnm_step(s, f)
                             : nm_step(s, f, config.expansion_coefficient);
      tr.total_evaluations += rec.evaluations;
      s = std::move(next);
      tr.iterations.push_back(IterationRecord{std::move(rec), s.vertices});
    } catch (const std::exception& e) {
      tr.failed_iteration = it;
      tr.final_simplex = s;
      tr.termination = e.what();
      return tr;
    }
  }
  tr.termination = "max_iterations";
  tr.final_simplex = s;
  return tr;
}

// ---------------------------------------------------------------------------
// Trace serialization
// ---------------------------------------------------------------------------

inline nlohmann::json vertex_to_json(const Vertex& v) {
  return {{"coordinates", v.coordinates}, {"value", v.value}, {"id", v.id}};
}

inline nlohmann::json trace_to_json(const MoveTrace& tr) {
  nlohmann::json j;
  j["config"] = {{"variant", tr.config.variant == Variant::RNM ? "rnm" : "nm"},
                 {"expansion_coefficient", tr.config.expansion_coefficient},
                 {"max_iterations", tr.config.max_iterations},
                 {"diameter_tolerance", tr.config.diameter_tolerance},
                 {"value_tolerance", tr.config.value_tolerance}};
  j["initial"] = nlohmann::json::array();
  for (const auto& v : tr.initial) j["initial"].push_back(vertex_to_json(v));
  j["iterations"] = nlohmann::json::array();
  for (size_t i = 0; i < tr.iterations.size(); ++i) {
    const auto& rec = tr.iterations[i];
    nlohmann::json it;
    it["iteration"] = i;
    it["kind"] = move_kind_name(rec.move.kind);
    it["code2d"] = rec.move.code2d ? nlohmann::json(*rec.move.code2d) : nlohmann::json(nullptr);
    it["replaced_id"] = rec.move.worst_id;
    it["evaluations"] = rec.move.evaluations;
    it["accepted"] = nlohmann::json::array();
    for (const auto& v : rec.move.accepted) it["accepted"].push_back(vertex_to_json(v));
    it["vertices"] = nlohmann::json::array();
    for (const auto& v : rec.vertices) it["vertices"].push_back(vertex_to_json(v));
    j["iterations"].push_back(std::move(it));
  }
  j["termination"] = tr.termination;
  j["total_evaluations"] = tr.total_evaluations;
  return j;
}

// 2-D CSV: one row per vertex per iteration (iteration 0 = initial simplex)
inline std::string trace_to_csv(const MoveTrace& tr) {
  std::ostringstream out;
  out.precision(17);
  out << "iteration,code2d,x,y,f\n";
  auto emit = [&](size_t iter, const std::string& code, const std::vector<Vertex>& vs) {
    for (const auto& v : vs) {
      out << iter << "," << code << "," << v.coordinates[0] << "," << v.coordinates[1] << ","
          << v.value << "\n";
    }
  };
  emit(0, "", tr.initial);
  for (size_t i = 0; i < tr.iterations.size(); ++i) {
    const auto& rec = tr.iterations[i];
    emit(i + 1, rec.move.code2d ? std::to_string(*rec.move.code2d) : std::string(), rec.vertices);
  }
  return out.str();
}

}  // namespace rnm

#endif  // RNM_SIMPLEX_HPP
