#pragma once

// Constructive searches: exact unit-fraction triples, tuple families realizing
// the sandwich/power-sum/product existence statements, unit-gap generators,
// and the rational/integer distance families on compression lines.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgeom/lines.hpp"
#include "cgeom/stats.hpp"
#include "cgeom/tuple.hpp"

namespace cgeom {

// --- unit fractions ----------------------------------------------------------

struct UnitFractionSolution {
  long n = 0;
  std::array<long, 3> denominators{};  // x1 <= x2 <= x3
  Rat exact_sum;                       // always exactly 4/n
};

// Smallest lexicographic triple with 1/x1 + 1/x2 + 1/x3 = 4/n. The bound caps
// the searched x1 and x2; x3 is solved exactly from the remainder and may
// exceed the bound. Returns nothing when the capped search space is empty.
std::optional<UnitFractionSolution> erdos_straus_solve(long n, long search_bound);

std::string erdos_straus_csv(const std::vector<UnitFractionSolution>& sols);
std::string solution_json_line(const UnitFractionSolution& s);

// --- existence witnesses -----------------------------------------------------

// Achieved constants are exact ratios of the statistic to the two exactly
// evaluable bound expressions of the named theorem family:
//   harmonic_run   c_lower = actual/(m n/sup),  c_upper = actual/(m n/L)
//   centered_run   c_lower = c_upper = actual L/(m n)      (> 1 by design)
//   split_run      c_lower = actual/(m n/K),   c_upper = actual/(m n/L),
//                  log_side = actual/(m log(n/L))
//   power_sum, L > n-1:  c_lower = actual/(s n/L^{s-1}), c_upper = actual L^s/n
//   power_sum, L < n-1:  c_lower = actual sup^s/n, c_upper = actual L^s/n,
//                  log_side = actual/log^s(n/L)
//   product, no K:  c_lower = actual sup^n, c_upper = actual L^n
//   product, with K: c_lower = actual K^n, c_upper = actual L^n,
//                  log_side = actual/(log(n/L)/(n L^{n-1}))
struct ExistenceWitness {
  std::string theorem_id;
  NatTuple tuple;
  Scale m{1};
  long L = 0;
  std::optional<long> K;
  std::optional<long> s;
  Rat actual;   // exact statistic: mass, power sum, or product of reciprocals
  Rat c_lower;  // actual / exact lower-bound expression
  Rat c_upper;  // actual / exact upper-bound expression
  std::optional<double> log_side;  // ratio against the log-form side, if any
};

// theorem_id in {"harmonic_run", "centered_run", "split_run"}.
//   harmonic_run: L > n-1, tuple L..L+n-1.
//   centered_run: L > n-1, run centred on L (mass strictly exceeds m n/L).
//   split_run:    L < n-1 < K, K >= L+n-1 required, tuple L..L+n-2 plus K.
ExistenceWitness sandwich_search(long n, long L, Scale m, const std::string& theorem_id,
                                 std::optional<long> K = std::nullopt);

// s >= 2. L > n-1 uses the run L..L+n-1 against s n/L^{s-1}; L < n-1 uses
// {L} + n..2n-2 against log^s(n/L). L = n-1 satisfies neither quantifier.
ExistenceWitness power_sum_search(long n, long L, long s);

// Without K: L > n-1, run L..L+n-1 against (1/sup^n, 1/L^n). With K:
// L < n-1 < K, K >= L+n-1, tuple L..L+n-2 plus K, ratios against 1/K^n and
// log(n/L)/(n L^{n-1}).
ExistenceWitness product_search(long n, long L, std::optional<long> K = std::nullopt);

std::string witness_json_line(const ExistenceWitness& w);

// --- distance experiments ----------------------------------------------------

// Closed pair count at Euclidean distance exactly 1 (squared distance == 1 on
// exact scalars; |distance - 1| <= tol on floats).
template <class S>
long unit_distance_pairs(const std::vector<Pt<S>>& points, double tol = 1e-12) {
  long count = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].size() != points[j].size())
        throw std::invalid_argument("unit_distance_pairs: dimension mismatch");
      S d2 = norm_sq(sub(points[i], points[j]));
      if constexpr (is_exact_scalar<S>) {
        if (d2 == S(1)) ++count;
      } else {
        if (std::abs(std::sqrt(d2) - 1.0) <= tol) ++count;
      }
    }
  return count;
}

// Random coordinates in (1, 1.2] except the last, which is bisected in (1, 10]
// until gap^2(x, 1) = 1 within 1e-12; resamples when the fixed coordinates
// already overshoot. Deterministic per seed.
Tuple<double> unit_gap_point(long n, std::uint64_t seed, int resample_budget = 64);

// All-equal closed form t - 1/t = 1/sqrt(n), so gap^2 = 1 analytically.
Tuple<double> symmetric_unit_gap_point(long n);

struct RationalDistanceFamily {
  Rat gap_sq;                      // exact squared gap of the generator
  Pt<double> center;               // gap * x
  Pt<double> direction;            // fixed unit radial direction
  std::vector<Rat> radii;          // gap^2/(2k), k = 1..depth, exact
  std::vector<Pt<double>> points;  // center + r_k * direction
};

// Requires a planar generator with gap > 1 (exact check on gap^2); pairwise
// distances along the ray are differences of exact rational radii.
RationalDistanceFamily rational_distance_family(const NatTuple& x, Scale m, long depth);

struct IntegerLinePoints {
  Pt<double> anchor;
  Pt<double> unit_direction;
  std::vector<long> parameters;    // 0..bound
  std::vector<Pt<double>> points;  // anchor + t * unit_direction
};

// Points at integer parameters along the unit direction of line_of(x, m);
// mutual distances are the integer parameter differences.
IntegerLinePoints integer_distance_line(const NatTuple& x, Scale m, long bound);

bool pairwise_integer_distances(const std::vector<Pt<double>>& points, double tol = 1e-9);

// sqrt(n) * cluster_size * sum_{k=2}^{max_gap} 1/k.
double anning_lower_bound(long n, long cluster_size, long max_gap);

}  // namespace cgeom
