#include "cgeom/experiments.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cgeom/rng.hpp"
#include "cgeom/segments.hpp"

namespace cgeom {

std::optional<UnitFractionSolution> erdos_straus_solve(long n, long search_bound) {
  if (n < 3) throw std::invalid_argument("erdos_straus_solve: n must be >= 3");
  if (search_bound < 1) throw std::invalid_argument("erdos_straus_solve: bound must be >= 1");
  const long x1_hi = std::min((3 * n) / 4, search_bound);
  for (long x1 = n / 4 + 1; x1 <= x1_hi; ++x1) {
    const long p = 4 * x1 - n;  // remainder: 1/x2 + 1/x3 = p/q
    const long q = n * x1;
    if (p <= 0) continue;
    const long x2_lo = std::max(x1, q / p + 1);
    const long x2_hi = std::min((2 * q) / p, search_bound);
    for (long x2 = x2_lo; x2 <= x2_hi; ++x2) {
      const long num = p * x2 - q;  // 1/x3 = num/(q x2)
      if (num <= 0) continue;
      const long long qq = static_cast<long long>(q) * x2;
      if (qq % num != 0) continue;
      const long x3 = static_cast<long>(qq / num);
      if (x3 < x2) continue;
      UnitFractionSolution s;
      s.n = n;
      s.denominators = {x1, x2, x3};
      s.exact_sum = make_rat(1, x1) + make_rat(1, x2) + make_rat(1, x3);
      if (!(s.exact_sum == make_rat(4, n)))
        throw std::logic_error("erdos_straus_solve: internal verification failed");
      return s;
    }
  }
  return std::nullopt;
}

std::string erdos_straus_csv(const std::vector<UnitFractionSolution>& sols) {
  std::ostringstream out;
  out << "n,x1,x2,x3\n";
  for (const auto& s : sols)
    out << s.n << ',' << s.denominators[0] << ',' << s.denominators[1] << ','
        << s.denominators[2] << '\n';
  return out.str();
}

std::string solution_json_line(const UnitFractionSolution& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["x1"] = s.denominators[0];
  j["x2"] = s.denominators[1];
  j["x3"] = s.denominators[2];
  j["sum"] = rat_str(s.exact_sum);
  return j.dump() + "\n";
}

namespace {

std::vector<long> run_values(long start, long count) {
  std::vector<long> v;
  v.reserve(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) v.push_back(start + k);
  return v;
}

void require_split_params(const char* who, long n, long L, long K) {
  if (!(L < n - 1)) throw std::invalid_argument(std::string(who) + ": requires L < n-1");
  if (!(K > n - 1)) throw std::invalid_argument(std::string(who) + ": requires K > n-1");
  if (K < L + n - 1)
    throw std::invalid_argument(std::string(who) + ": K too small for distinct entries");
}

}  // namespace

ExistenceWitness sandwich_search(long n, long L, Scale m, const std::string& theorem_id,
                                 std::optional<long> K) {
  if (n < 2) throw std::invalid_argument("sandwich_search: n must be >= 2");
  if (L < 1) throw std::invalid_argument("sandwich_search: L must be >= 1");
  const Rat mn = Rat(m.value) * Rat(n);
  if (theorem_id == "harmonic_run" || theorem_id == "centered_run") {
    if (K) throw std::invalid_argument(theorem_id + ": K is not part of this statement");
    if (L <= n - 1) throw std::invalid_argument(theorem_id + ": requires L > n-1");
  }
  if (theorem_id == "harmonic_run") {
    NatTuple x(run_values(L, n));
    Rat actual = mass(x, m);
    Rat c_lo = actual * Rat(x.sup()) / mn;
    Rat c_up = actual * Rat(L) / mn;
    return ExistenceWitness{theorem_id, x,    m,    L,    std::nullopt,
                            std::nullopt, actual, c_lo, c_up, std::nullopt};
  }
  if (theorem_id == "centered_run") {
    NatTuple x(run_values(L - n / 2, n));  // run centred on L, skewed low
    Rat actual = mass(x, m);
    Rat c = actual * Rat(L) / mn;
    return ExistenceWitness{theorem_id, x, m, L, std::nullopt, std::nullopt, actual, c, c,
                            std::nullopt};
  }
  if (theorem_id == "split_run") {
    if (!K) throw std::invalid_argument("split_run: K is required");
    require_split_params("split_run", n, L, *K);
    std::vector<long> v = run_values(L, n - 1);
    v.push_back(*K);
    NatTuple x(v);
    Rat actual = mass(x, m);
    Rat c_lo = actual * Rat(*K) / mn;
    Rat c_up = actual * Rat(L) / mn;
    double ls = to_double(actual) /
                (static_cast<double>(m.value) * std::log(static_cast<double>(n) / L));
    return ExistenceWitness{theorem_id, x, m, L, K, std::nullopt, actual, c_lo, c_up, ls};
  }
  throw std::invalid_argument("sandwich_search: unknown theorem '" + theorem_id + "'");
}

ExistenceWitness power_sum_search(long n, long L, long s) {
  if (n < 2) throw std::invalid_argument("power_sum_search: n must be >= 2");
  if (L < 1) throw std::invalid_argument("power_sum_search: L must be >= 1");
  if (s < 2) throw std::invalid_argument("power_sum_search: s must be >= 2");
  if (L == n - 1)
    throw std::invalid_argument("power_sum_search: L = n-1 satisfies neither quantifier");
  auto power_sum = [s](const NatTuple& x) {
    Rat acc(0);
    for (long v : x.coords()) acc += pow_scalar(make_rat(1, v), s);
    return acc;
  };
  if (L > n - 1) {
    NatTuple x(run_values(L, n));
    Rat actual = power_sum(x);
    Rat c_lo = actual * pow_scalar(Rat(L), s - 1) / (Rat(s) * Rat(n));
    Rat c_up = actual * pow_scalar(Rat(L), s) / Rat(n);
    return ExistenceWitness{"power_sum", x,    Scale{1}, L,    std::nullopt,
                            s,           actual, c_lo,     c_up, std::nullopt};
  }
  std::vector<long> v{L};
  for (long k = n; k <= 2 * n - 2; ++k) v.push_back(k);
  NatTuple x(v);
  Rat actual = power_sum(x);
  Rat c_lo = actual * pow_scalar(Rat(x.sup()), s) / Rat(n);
  Rat c_up = actual * pow_scalar(Rat(L), s) / Rat(n);
  double ls = to_double(actual) / std::pow(std::log(static_cast<double>(n) / L), s);
  return ExistenceWitness{"power_sum", x, Scale{1}, L, std::nullopt, s, actual, c_lo, c_up, ls};
}

ExistenceWitness product_search(long n, long L, std::optional<long> K) {
  if (n < 2) throw std::invalid_argument("product_search: n must be >= 2");
  if (L < 1) throw std::invalid_argument("product_search: L must be >= 1");
  if (!K) {
    if (L <= n - 1) throw std::invalid_argument("product_search: requires L > n-1 without K");
    NatTuple x(run_values(L, n));
    Rat actual = entropy(x, Scale{1});
    Rat c_lo = actual * pow_scalar(Rat(x.sup()), n);
    Rat c_up = actual * pow_scalar(Rat(L), n);
    return ExistenceWitness{"product", x,    Scale{1}, L,    std::nullopt,
                            std::nullopt, actual, c_lo,     c_up, std::nullopt};
  }
  require_split_params("product_search", n, L, *K);
  std::vector<long> v = run_values(L, n - 1);
  v.push_back(*K);
  NatTuple x(v);
  Rat actual = entropy(x, Scale{1});
  Rat c_lo = actual * pow_scalar(Rat(*K), n);
  Rat c_up = actual * pow_scalar(Rat(L), n);
  double bound = std::log(static_cast<double>(n) / L) /
                 (static_cast<double>(n) * std::pow(static_cast<double>(L), n - 1));
  double ls = to_double(actual) / bound;
  return ExistenceWitness{"product", x, Scale{1}, L, K, std::nullopt, actual, c_lo, c_up, ls};
}

std::string witness_json_line(const ExistenceWitness& w) {
  nlohmann::json j;
  j["theorem_id"] = w.theorem_id;
  j["tuple"] = w.tuple.coords();
  j["m"] = w.m.value;
  j["L"] = w.L;
  j["K"] = w.K ? nlohmann::json(*w.K) : nlohmann::json(nullptr);
  j["s"] = w.s ? nlohmann::json(*w.s) : nlohmann::json(nullptr);
  j["actual"] = rat_str(w.actual);
  j["c_lower"] = rat_str(w.c_lower);
  j["c_upper"] = rat_str(w.c_upper);
  j["log_side"] = w.log_side ? nlohmann::json(*w.log_side) : nlohmann::json(nullptr);
  return j.dump() + "\n";
}

// --- distance experiments ----------------------------------------------------

Tuple<double> unit_gap_point(long n, std::uint64_t seed, int resample_budget) {
  if (n < 2) throw std::invalid_argument("unit_gap_point: n must be >= 2");
  if (resample_budget < 1) throw std::invalid_argument("unit_gap_point: budget must be >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < resample_budget; ++attempt) {
    Pt<double> c(static_cast<std::size_t>(n));
    double base = 0.0;
    for (long i = 0; i + 1 < n; ++i) {
      c[static_cast<std::size_t>(i)] = 1.0 + 0.2 * rng.unit_pos();
      double t = c[static_cast<std::size_t>(i)] - 1.0 / c[static_cast<std::size_t>(i)];
      base += t * t;
    }
    if (base >= 1.0 - 1e-9) continue;  // fixed coordinates already overshoot
    double lo = 1.0, hi = 10.0;
    for (int it = 0; it < 80; ++it) {
      double mid = 0.5 * (lo + hi);
      double g = mid - 1.0 / mid;
      (base + g * g < 1.0 ? lo : hi) = mid;
    }
    c[static_cast<std::size_t>(n - 1)] = 0.5 * (lo + hi);
    Tuple<double> x{c};
    if (std::abs(gap_sq(x, Scale{1}) - 1.0) <= 1e-12) return x;
  }
  throw std::runtime_error("unit_gap_point: resample budget exhausted");
}

Tuple<double> symmetric_unit_gap_point(long n) {
  if (n < 2) throw std::invalid_argument("symmetric_unit_gap_point: n must be >= 2");
  const double rn = 1.0 / std::sqrt(static_cast<double>(n));
  const double t = 0.5 * (rn + std::sqrt(rn * rn + 4.0));
  return Tuple<double>{Pt<double>(static_cast<std::size_t>(n), t)};
}

RationalDistanceFamily rational_distance_family(const NatTuple& x, Scale m, long depth) {
  if (x.dim() != 2)
    throw std::invalid_argument("rational_distance_family: planar generators only");
  if (depth < 1) throw std::invalid_argument("rational_distance_family: depth must be >= 1");
  Rat g2 = gap_sq(x, m);
  if (!(g2 > 1)) throw std::domain_error("rational_distance_family: needs gap > 1");
  const double g = std::sqrt(to_double(g2));
  RationalDistanceFamily fam;
  fam.gap_sq = g2;
  fam.center = {g * static_cast<double>(x[0]), g * static_cast<double>(x[1])};
  fam.direction = {1.0, 0.0};
  for (long k = 1; k <= depth; ++k) {
    Rat r = g2 / Rat(2 * k);
    fam.points.push_back({fam.center[0] + to_double(r) * fam.direction[0],
                          fam.center[1] + to_double(r) * fam.direction[1]});
    fam.radii.push_back(std::move(r));
  }
  return fam;
}

IntegerLinePoints integer_distance_line(const NatTuple& x, Scale m, long bound) {
  if (bound < 1) throw std::invalid_argument("integer_distance_line: bound must be >= 1");
  CompressionLine<Rat> line = line_of(x.to_rat(), m);
  IntegerLinePoints out;
  out.anchor = to_float_pt(line.anchor);
  Pt<double> dir = to_float_pt(line.direction);
  const double len = std::sqrt(dot(dir, dir));
  out.unit_direction = dir;
  for (auto& d : out.unit_direction) d /= len;
  for (long t = 0; t <= bound; ++t) {
    out.parameters.push_back(t);
    Pt<double> p = out.anchor;
    for (std::size_t i = 0; i < p.size(); ++i)
      p[i] += static_cast<double>(t) * out.unit_direction[i];
    out.points.push_back(std::move(p));
  }
  return out;
}

bool pairwise_integer_distances(const std::vector<Pt<double>>& points, double tol) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      double d = norm(sub(points[i], points[j]));
      if (std::abs(d - std::round(d)) > tol) return false;
    }
  return true;
}

double anning_lower_bound(long n, long cluster_size, long max_gap) {
  if (n < 1 || cluster_size < 1 || max_gap < 2)
    throw std::invalid_argument(
        "anning_lower_bound: need n >= 1, cluster_size >= 1, max_gap >= 2");
  Rat h(0);
  for (long k = 2; k <= max_gap; ++k) h += make_rat(1, k);
  return std::sqrt(static_cast<double>(n)) * static_cast<double>(cluster_size) * to_double(h);
}

}  // namespace cgeom
