#pragma once

// Closed-form lower/upper envelopes for the tuple statistics, parametrized only
// by (n, inf, sup[, m, s]), plus the per-sample sandwich checker the sweep
// harness drives. Exact (harmonic, sup/inf) forms carry their rational values;
// log-based asymptotic forms are float-valued and are recorded, never asserted.

#include <optional>
#include <string>
#include <vector>

#include "cgeom/stats.hpp"

namespace cgeom {

enum class BoundForm { HarmonicExact, LogAsymptotic, SupInfExact };

struct BoundPair {
  BoundForm form = BoundForm::SupInfExact;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<Rat> lower_exact;  // populated for exact forms
  std::optional<Rat> upper_exact;
};

// sum(1/x_i) envelopes. HarmonicExact needs sup - (n-1) >= 1; LogAsymptotic
// needs sup > n - 1. All evaluators require n >= 2 and 1 <= inf < sup.
BoundPair mass_bounds(long n, long inf, long sup, Scale m, BoundForm form);
BoundPair rank_bounds(long n, long inf, long sup, Scale m);
BoundPair entropy_bounds(long n, long inf, long sup);
// Bounds the *squared* gap; the log-side lower value may be negative and is
// returned as stated.
BoundPair gap_bounds(long n, long inf, long sup, Scale m);
BoundPair energy_bounds(long n, long inf, long sup);
// s >= 2; both sides may be negative and are returned as stated.
BoundPair cover_mass_bounds(long n, long inf, long sup, long s);

struct MeasureCostBounds {
  BoundPair measure;  // (inf^n, sup^n), exact
  BoundPair cost;     // (inf^(n+1) sqrt n, sup^(n+1) sqrt n), float
};
MeasureCostBounds measure_cost_bounds(long n, long inf, long sup);

// --- sandwich checking -------------------------------------------------------

// Inequality ids understood by check_sandwich / the sweep harness:
//   mass_harmonic   exact harmonic envelope of mass          (hard assertion)
//   mass_supinf     exact n/sup..n/inf envelope of mass      (hard assertion)
//   mass_weak       n/sup..n/inf envelope under inf > n-1    (hard assertion)
//   mass_log        log-form envelope of mass                (recorded)
//   rank_log        log-form envelope of rank                (recorded)
//   entropy_log     log-form envelope of entropy             (recorded)
//   gap_log         log-form envelope of gap^2               (recorded)
//   energy_log      log-form envelope of energy              (recorded)
//   cover_log       log-form envelope of cover mass at s     (recorded)
//   measure_supinf  inf^n..sup^n envelope of measure         (recorded)
//   cost_supinf     inf/sup envelope of cost                 (recorded)
const std::vector<std::string>& known_inequalities();
bool inequality_is_hard(const std::string& id);
bool inequality_is_known(const std::string& id);

enum class SandwichStatus { Checked, Skipped };

struct SandwichEntry {
  std::string inequality_id;
  SandwichStatus status = SandwichStatus::Skipped;
  bool violated = false;  // only ever set for hard (exactly provable) forms
  double actual = 0.0;
  // actual / bound, recorded only when the bound side is strictly positive.
  std::optional<double> ratio_lower;
  std::optional<double> ratio_upper;
  std::optional<BoundPair> bounds;
};

SandwichEntry check_sandwich(const NatTuple& x, Scale m, const std::string& inequality_id,
                             long cover_s = 2);

}  // namespace cgeom
