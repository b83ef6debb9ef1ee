#pragma once

// Alternating compression/translation walks, the self-avoidance oracle, walk
// length accounting, and the induced path graph with its JSON export.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgeom/ball.hpp"
#include "cgeom/bounds.hpp"
#include "cgeom/lines.hpp"
#include "cgeom/rng.hpp"
#include "cgeom/segments.hpp"
#include "cgeom/stats.hpp"

namespace cgeom {

enum class StepKind { Compression, Translation };

std::string step_kind_name(StepKind k);
StepKind step_kind_from_name(const std::string& name);

// An l-step walk: l+1 vertices joined by consecutive segments whose kinds
// alternate starting with a compression step. Translation steps record the
// offset vector that was applied to the preceding image.
template <class S>
struct Walk {
  Scale m{1};
  std::vector<Pt<S>> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> segments;
  std::vector<StepKind> step_kinds;  // one per segment
  std::vector<Pt<S>> translations;   // one per translation segment, in order
};

namespace detail {

template <class S>
bool pts_close(const Pt<S>& a, const Pt<S>& b, double tol) {
  if (a.size() != b.size()) return false;
  if constexpr (is_exact_scalar<S>) {
    (void)tol;
    return a == b;
  } else {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (std::abs(a[i] - b[i]) > tol * std::max({std::abs(a[i]), std::abs(b[i]), 1.0}))
        return false;
    return true;
  }
}

template <class S>
void require_segment_shape(const Walk<S>& w) {
  if (w.segments.empty()) throw std::invalid_argument("walk: needs at least one segment");
  if (w.vertices.size() != w.segments.size() + 1)
    throw std::invalid_argument("walk: vertex count must be segment count + 1");
  for (std::size_t i = 0; i < w.segments.size(); ++i)
    if (w.segments[i].first != i || w.segments[i].second != i + 1)
      throw std::invalid_argument("walk: segments must join consecutive vertices");
  const std::size_t dim = w.vertices.front().size();
  if (dim < 2) throw std::invalid_argument("walk: vertices need dimension >= 2");
  for (const auto& v : w.vertices)
    if (v.size() != dim) throw std::invalid_argument("walk: inconsistent vertex dimensions");
}

}  // namespace detail

// Structural validation: consecutive segments, alternation starting with a
// compression step, translation list matching the translation segments.
template <class S>
void validate_walk(const Walk<S>& w, double tol = 1e-9) {
  detail::require_segment_shape(w);
  if (w.step_kinds.size() != w.segments.size())
    throw std::invalid_argument("walk: one step kind per segment required");
  std::size_t t = 0;
  for (std::size_t i = 0; i < w.step_kinds.size(); ++i) {
    StepKind expect = (i % 2 == 0) ? StepKind::Compression : StepKind::Translation;
    if (w.step_kinds[i] != expect)
      throw std::invalid_argument("walk: step kinds must alternate starting with compression");
    if (w.step_kinds[i] == StepKind::Translation) {
      if (t >= w.translations.size())
        throw std::invalid_argument("walk: missing translation vector");
      if (w.translations[t].size() != w.vertices.front().size())
        throw std::invalid_argument("walk: translation dimension mismatch");
      Pt<S> diff = sub(w.vertices[i + 1], w.vertices[i]);
      if (!detail::pts_close(diff, w.translations[t], tol))
        throw std::invalid_argument("walk: translation vector disagrees with its segment");
      ++t;
    }
  }
  if (t != w.translations.size())
    throw std::invalid_argument("walk: too many translation vectors");
}

// True iff every compression segment maps its source to the componentwise
// m/x image (exact on rationals, relative tol on floats).
template <class S>
bool compression_steps_consistent(const Walk<S>& w, double tol = 1e-9) {
  for (std::size_t i = 0; i < w.step_kinds.size(); ++i) {
    if (w.step_kinds[i] != StepKind::Compression) continue;
    const Pt<S>& src = w.vertices[i];
    const Pt<S>& dst = w.vertices[i + 1];
    for (std::size_t k = 0; k < src.size(); ++k) {
      if (sign_of(src[k]) == 0) return false;
      S expect = scalar_from_long<S>(w.m.value) / src[k];
      if constexpr (is_exact_scalar<S>) {
        if (!(dst[k] == expect)) return false;
      } else {
        if (std::abs(dst[k] - expect) > tol * std::max(std::abs(expect), 1.0)) return false;
      }
    }
  }
  return true;
}

// Geometric self-avoidance: no two non-adjacent segments meet, adjacent
// segments share only their common endpoint. Exact orientation predicates on
// planar rational walks; tolerance on floats; for dimension > 2 a segment-pair
// distance threshold replaces the planar test.
template <class S>
bool is_self_avoiding(const Walk<S>& w, double tol = 1e-9) {
  detail::require_segment_shape(w);
  const auto& v = w.vertices;
  const std::size_t l = w.segments.size();
  for (std::size_t i = 0; i < l; ++i)
    if (detail::pts_close(v[i], v[i + 1], 0.0)) return false;  // degenerate segment
  const bool planar = v.front().size() == 2;
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      bool bad;
      if (j == i + 1) {
        bad = planar ? adjacent_fold_back_2d(v[i], v[i + 1], v[j + 1], tol)
                     : adjacent_fold_back_nd(v[i], v[i + 1], v[j + 1], tol);
      } else {
        bad = planar ? segments_intersect_2d(v[i], v[i + 1], v[j], v[j + 1], tol)
                     : segments_intersect_nd(v[i], v[i + 1], v[j], v[j + 1], tol);
      }
      if (bad) return false;
    }
  }
  return true;
}

// Total Euclidean length: sum of segment norms.
template <class S>
double walk_length(const Walk<S>& w) {
  detail::require_segment_shape(w);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
    acc += norm(sub(w.vertices[i + 1], w.vertices[i]));
  return acc;
}

// Exact certificate that the length decomposes into gaps plus translation
// norms: each compression segment's squared length equals the squared gap of
// its source and each translation segment's squared length equals the recorded
// offset's squared norm. Meaningful on exact scalars.
template <class S>
bool length_decomposition_exact(const Walk<S>& w) {
  validate_walk(w);
  std::size_t t = 0;
  for (std::size_t i = 0; i < w.step_kinds.size(); ++i) {
    S seg = norm_sq(sub(w.vertices[i + 1], w.vertices[i]));
    if (w.step_kinds[i] == StepKind::Compression) {
      Tuple<S> src{w.vertices[i]};
      if (!(seg == gap_sq(src, w.m))) return false;
    } else {
      if (!(seg == norm_sq(w.translations[t]))) return false;
      ++t;
    }
  }
  return true;
}

// (l/2)·sqrt(n)·(extreme tuple coordinate + extreme translation coordinate)
// envelopes, evaluated from the walk's recorded compression sources and
// translation vectors.
template <class S>
BoundPair walk_length_bounds(const Walk<S>& w) {
  validate_walk(w);
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  for (std::size_t i = 0; i < w.step_kinds.size(); ++i) {
    if (w.step_kinds[i] != StepKind::Compression) continue;
    for (const S& c : w.vertices[i]) {
      double d = to_double(c);
      xmin = std::min(xmin, d);
      xmax = std::max(xmax, d);
    }
  }
  double amin = 0.0, amax = 0.0;
  if (!w.translations.empty()) {
    amin = std::numeric_limits<double>::infinity();
    amax = -amin;
    for (const auto& a : w.translations)
      for (const S& c : a) {
        double d = to_double(c);
        amin = std::min(amin, d);
        amax = std::max(amax, d);
      }
  }
  const double factor = (static_cast<double>(w.segments.size()) / 2.0) *
                        std::sqrt(static_cast<double>(w.vertices.front().size()));
  BoundPair bp;
  bp.form = BoundForm::SupInfExact;
  bp.lower = factor * (xmin + amin);
  bp.upper = factor * (xmax + amax);
  return bp;
}

// --- generation --------------------------------------------------------------

struct WalkPolicy {
  int retry_budget = 256;        // candidate draws per translation step
  int candidates_per_step = 12;  // stop drawing once this many are admissible
  int admissible_probes = 64;    // boundary probes per displaced-ball test
  double line_tol = 1e-9;        // line clearance, relative to the probed ball's radius
  long max_gap_shrink = 5;       // per-step gap may shrink at most by this factor
};

class WalkGenerationError : public std::runtime_error {
 public:
  WalkGenerationError(const std::string& msg, Walk<Rat> partial)
      : std::runtime_error(msg), partial_(std::move(partial)) {}
  const Walk<Rat>& partial() const { return partial_; }

 private:
  Walk<Rat> partial_;
};

// Deterministic per seed. Compression steps are forced; translation steps
// sample the next generator inside the current induced ball (coordinates > 1,
// strictly smaller gap, admissible probes of its ball clear of the current
// line, both prospective segments exactly self-avoiding against the walk so
// far) and keep the admissible candidate of minimal translation norm.
Walk<Rat> generate_walk(const RatTuple& x0, Scale m, int l, std::uint64_t seed,
                        const WalkPolicy& policy = {});

// --- graphs ------------------------------------------------------------------

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  StepKind kind = StepKind::Compression;
};

template <class S>
struct CompressionGraph {
  Scale m{1};
  std::vector<Pt<S>> vertex_set;  // walk order
  std::vector<GraphEdge> edge_set;
};

template <class S>
CompressionGraph<S> build_graph(const Walk<S>& w) {
  validate_walk(w);
  CompressionGraph<S> g;
  g.m = w.m;
  g.vertex_set = w.vertices;
  g.edge_set.reserve(w.segments.size());
  for (std::size_t i = 0; i < w.segments.size(); ++i)
    g.edge_set.push_back(GraphEdge{w.segments[i].first, w.segments[i].second, w.step_kinds[i]});
  return g;
}

// Path degree condition on the graph with coincident vertex tuples identified:
// every degree <= 2 and exactly two vertices of degree 1.
template <class S>
bool path_degrees_ok(const CompressionGraph<S>& g) {
  if (g.edge_set.empty()) return false;
  // Identify vertices carrying identical coordinates.
  std::vector<std::size_t> rep(g.vertex_set.size());
  for (std::size_t i = 0; i < g.vertex_set.size(); ++i) {
    rep[i] = i;
    for (std::size_t j = 0; j < i; ++j)
      if (detail::pts_close(g.vertex_set[i], g.vertex_set[j], 0.0)) {
        rep[i] = rep[j];
        break;
      }
  }
  std::vector<int> degree(g.vertex_set.size(), 0);
  for (const auto& e : g.edge_set) {
    if (e.from >= rep.size() || e.to >= rep.size()) return false;
    if (rep[e.from] == rep[e.to]) return false;  // loop
    ++degree[rep[e.from]];
    ++degree[rep[e.to]];
  }
  int ones = 0;
  for (int d : degree) {
    if (d > 2) return false;
    if (d == 1) ++ones;
  }
  return ones == 2;
}

// --- serialization -----------------------------------------------------------

// JSON schema: {"m": int, "vertices": [["p/q", ...], ...],
//               "step_kinds": ["compression" | "translation", ...],
//               "translations": [["p/q", ...], ...]}
std::string walk_to_json_text(const Walk<Rat>& w);
Walk<Rat> walk_from_json_text(const std::string& text);

// JSON schema: {"m": int, "vertices": [...], "edges":
//               [{"from": i, "to": j, "kind": "..."}, ...]}
std::string graph_to_json_text(const CompressionGraph<Rat>& g);
CompressionGraph<Rat> graph_from_json_text(const std::string& text);

// Per-segment length report: "segment,kind,length" rows plus a total row.
std::string walk_length_csv(const Walk<Rat>& w);

}  // namespace cgeom
