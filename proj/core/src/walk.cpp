#include "cgeom/walk.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace cgeom {

std::string step_kind_name(StepKind k) {
  return k == StepKind::Compression ? "compression" : "translation";
}

StepKind step_kind_from_name(const std::string& name) {
  if (name == "compression") return StepKind::Compression;
  if (name == "translation") return StepKind::Translation;
  throw std::invalid_argument("unknown step kind: " + name);
}

namespace {

double line_point_dist(const Pt<double>& p, const Pt<double>& anchor, const Pt<double>& dir,
                       double dir_norm_sq) {
  double t = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) t += (p[i] - anchor[i]) * dir[i];
  t /= dir_norm_sq;
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double d = p[i] - anchor[i] - t * dir[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

const std::vector<Rat>& lambda_grid() {
  static const std::vector<Rat> grid = {make_rat(4, 5), make_rat(7, 10), make_rat(3, 5),
                                        make_rat(1, 2), make_rat(2, 5),  make_rat(1, 3),
                                        make_rat(7, 24), make_rat(1, 4)};
  return grid;
}

// Both prospective segments (image -> u, then u -> its image) against the walk
// built so far. The translation segment is adjacent to the last existing
// segment; everything else must stay strictly apart.
bool extension_ok(const std::vector<Pt<Rat>>& v, const Pt<Rat>& u, const Pt<Rat>& img2,
                  double tol) {
  const std::size_t k = v.size() - 1;  // existing segments are [v_i, v_{i+1}], i < k
  const bool planar = v.front().size() == 2;
  const Pt<Rat>& img = v[k];
  for (std::size_t i = 0; i < k; ++i) {
    bool bad;
    if (i + 1 == k) {
      bad = planar ? adjacent_fold_back_2d(v[i], v[i + 1], u, tol)
                   : adjacent_fold_back_nd(v[i], v[i + 1], u, tol);
    } else {
      bad = planar ? segments_intersect_2d(v[i], v[i + 1], img, u, tol)
                   : segments_intersect_nd(v[i], v[i + 1], img, u, tol);
    }
    if (bad) return false;
  }
  if (planar ? adjacent_fold_back_2d(img, u, img2, tol) : adjacent_fold_back_nd(img, u, img2, tol))
    return false;
  for (std::size_t i = 0; i < k; ++i) {
    bool bad = planar ? segments_intersect_2d(v[i], v[i + 1], u, img2, tol)
                      : segments_intersect_nd(v[i], v[i + 1], u, img2, tol);
    if (bad) return false;
  }
  return true;
}

}  // namespace

Walk<Rat> generate_walk(const RatTuple& x0, Scale m, int l, std::uint64_t seed,
                        const WalkPolicy& policy) {
  if (l < 1) throw std::invalid_argument("generate_walk: l must be >= 1");
  if (policy.retry_budget < 1 || policy.candidates_per_step < 1 || policy.admissible_probes < 1 ||
      policy.max_gap_shrink < 2)
    throw std::invalid_argument("generate_walk: malformed policy");
  const std::size_t n = x0.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (!(x0[i] > 1)) throw std::invalid_argument("generate_walk: start coordinates must exceed 1");
  if (sign_of(gap_sq(x0, m)) == 0)
    throw std::invalid_argument("generate_walk: start tuple is a fixed point");

  Walk<Rat> w;
  w.m = m;
  w.vertices.push_back(x0.coords());

  // Sampling is anchored at the diagonal fixed region (all-ones at m = 1).
  Pt<Rat> corner(n, Rat(1));
  if (m.value > 1) {
    Rat root = rat_of_double(std::sqrt(static_cast<double>(m.value)));
    for (auto& c : corner) c = root;
  }

  Rng rng(seed);
  Tuple<Rat> cur = x0;
  Pt<Rat> prev_delta = sub(x0.coords(), corner);

  while (w.segments.size() < static_cast<std::size_t>(l)) {
    const std::size_t idx = w.vertices.size() - 1;
    if (w.step_kinds.size() % 2 == 0) {
      Tuple<Rat> img = compress(cur, m);
      w.vertices.push_back(img.coords());
      w.segments.emplace_back(idx, idx + 1);
      w.step_kinds.push_back(StepKind::Compression);
      continue;
    }

    const Ball<Rat> ball = ball_of(cur, m);
    const CompressionLine<Rat> line = line_of(cur, m);
    const Rat cur_gap2 = gap_sq(cur, m);
    const Rat shrink_sq = Rat(policy.max_gap_shrink) * Rat(policy.max_gap_shrink);
    const Pt<Rat> img = w.vertices.back();

    const Pt<double> anchor_f = to_float_pt(line.anchor);
    const Pt<double> dir_f = to_float_pt(line.direction);
    const double dir_nsq = dot(dir_f, dir_f);
    const double radius_f = std::sqrt(to_double(ball.radius_sq));

    std::optional<Pt<Rat>> best;
    Rat best_norm_sq;
    int accepted = 0;
    int trials = 0;
    auto consider = [&](const Pt<Rat>& u) {
      ++trials;
      bool above_one = true;
      for (std::size_t i = 0; i < n && above_one; ++i) above_one = u[i] > 1;
      if (!above_one) return;
      if (u == img) return;
      Tuple<Rat> ut{u};
      Rat g2 = gap_sq(ut, m);
      if (!(sign_of(g2) > 0) || !(g2 < cur_gap2)) return;
      if (g2 * shrink_sq < cur_gap2) return;  // keep scales bounded away from collapse
      if (!contains(ball, u)) return;

      Ball<Rat> bu = ball_of(ut, m);
      auto probes = sample_admissible(bu, policy.admissible_probes, rng.next());
      // Incidence with the line is scale-free, so clearance is measured
      // relative to the probed ball's own radius.
      const double clearance = policy.line_tol * std::sqrt(to_double(bu.radius_sq));
      for (const auto& p : probes)
        if (line_point_dist(p, anchor_f, dir_f, dir_nsq) <= clearance) return;

      Pt<Rat> img2 = compress(ut, m).coords();
      if (!extension_ok(w.vertices, u, img2, policy.line_tol)) return;

      Rat tns = norm_sq(sub(u, img));
      if (!best || tns < best_norm_sq) {
        best = u;
        best_norm_sq = tns;
      }
      ++accepted;
    };

    // Phase 1: scaled replicas of the previous corner offset.  A scalar factor
    // keeps successive offsets exactly parallel, so the new chords inherit the
    // pairwise separation of the earlier ones; the admissible pool then stays
    // replica-only and the minimal-norm pick preserves that structure.
    const auto& grid = lambda_grid();
    for (int pass = 0; pass < 3 && accepted < policy.candidates_per_step; ++pass) {
      for (const Rat& lam : grid) {
        if (accepted >= policy.candidates_per_step || trials >= policy.retry_budget) break;
        Rat jit = make_rat(1024 + rng.range(-31, 31), 1024);
        Rat f = lam * jit;
        Pt<Rat> u = corner;
        for (std::size_t i = 0; i < n; ++i) u[i] = corner[i] + f * prev_delta[i];
        consider(u);
      }
    }

    // Phase 2: generic samples inside the current ball, used only when no
    // replica is admissible (e.g. a cramped region after an unusual start).
    while (accepted == 0 && trials < policy.retry_budget) {
      Pt<Rat> u = corner;
      if (trials % 2 == 0) {
        // Box sample around the current ball's center.
        const double h = 0.95 * radius_f / std::sqrt(static_cast<double>(n));
        u = ball.center;
        for (std::size_t i = 0; i < n; ++i) u[i] += rat_of_double(h * (2.0 * rng.unit() - 1.0));
      } else {
        // Fresh positive offset from the corner at the ball's own scale.
        const double sigma = radius_f * (0.55 + 0.40 * rng.unit());
        for (std::size_t i = 0; i < n; ++i)
          u[i] = corner[i] + rat_of_double(sigma * (0.45 + 0.55 * rng.unit()));
      }
      consider(u);
    }
    if (!best)
      throw WalkGenerationError(
          "generate_walk: retry budget exhausted at segment " + std::to_string(w.segments.size()),
          w);
    w.vertices.push_back(*best);
    w.segments.emplace_back(idx, idx + 1);
    w.step_kinds.push_back(StepKind::Translation);
    w.translations.push_back(sub(*best, img));
    prev_delta = sub(*best, corner);
    cur = Tuple<Rat>(*best);
  }
  return w;
}

// --- serialization -----------------------------------------------------------

namespace {

nlohmann::json points_to_json(const std::vector<Pt<Rat>>& pts) {
  auto arr = nlohmann::json::array();
  for (const auto& p : pts) {
    auto row = nlohmann::json::array();
    for (const auto& c : p) row.push_back(rat_str(c));
    arr.push_back(std::move(row));
  }
  return arr;
}

std::vector<Pt<Rat>> points_from_json(const nlohmann::json& arr) {
  std::vector<Pt<Rat>> pts;
  for (const auto& row : arr) {
    Pt<Rat> p;
    for (const auto& c : row) p.push_back(parse_rat(c.get<std::string>()));
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

std::string walk_to_json_text(const Walk<Rat>& w) {
  validate_walk(w);
  nlohmann::json j;
  j["m"] = w.m.value;
  j["vertices"] = points_to_json(w.vertices);
  auto kinds = nlohmann::json::array();
  for (StepKind k : w.step_kinds) kinds.push_back(step_kind_name(k));
  j["step_kinds"] = std::move(kinds);
  j["translations"] = points_to_json(w.translations);
  return j.dump(2) + "\n";
}

Walk<Rat> walk_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Walk<Rat> w;
  w.m = Scale{j.at("m").get<long>()};
  w.vertices = points_from_json(j.at("vertices"));
  for (const auto& k : j.at("step_kinds"))
    w.step_kinds.push_back(step_kind_from_name(k.get<std::string>()));
  w.translations = points_from_json(j.at("translations"));
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) w.segments.emplace_back(i, i + 1);
  validate_walk(w);
  return w;
}

std::string graph_to_json_text(const CompressionGraph<Rat>& g) {
  nlohmann::json j;
  j["m"] = g.m.value;
  j["vertices"] = points_to_json(g.vertex_set);
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edge_set) {
    nlohmann::json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["kind"] = step_kind_name(e.kind);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

CompressionGraph<Rat> graph_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CompressionGraph<Rat> g;
  g.m = Scale{j.at("m").get<long>()};
  g.vertex_set = points_from_json(j.at("vertices"));
  for (const auto& je : j.at("edges")) {
    GraphEdge e;
    e.from = je.at("from").get<std::size_t>();
    e.to = je.at("to").get<std::size_t>();
    e.kind = step_kind_from_name(je.at("kind").get<std::string>());
    if (e.from >= g.vertex_set.size() || e.to >= g.vertex_set.size())
      throw std::invalid_argument("graph: edge endpoint out of range");
    g.edge_set.push_back(e);
  }
  return g;
}

std::string walk_length_csv(const Walk<Rat>& w) {
  validate_walk(w);
  std::ostringstream out;
  out << "segment,kind,length\n";
  out << std::setprecision(12);
  double total = 0.0;
  for (std::size_t i = 0; i < w.segments.size(); ++i) {
    double len = norm(sub(w.vertices[i + 1], w.vertices[i]));
    total += len;
    out << i << ',' << step_kind_name(w.step_kinds[i]) << ',' << len << '\n';
  }
  out << "total,," << total << '\n';
  return out.str();
}

}  // namespace cgeom
