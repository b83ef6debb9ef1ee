#pragma once

// Randomized sandwich sweeps: deterministic per-seed sampling of integer
// tuples, per-inequality violation counting and extreme actual/bound ratios
// with witnesses, associative merge across workers, CSV/JSON reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgeom/bounds.hpp"

namespace cgeom {

struct SweepConfig {
  std::uint64_t seed = 1;
  long n_min = 2;
  long n_max = 4;
  long coord_max = 50;
  long samples = 1000;
  std::vector<std::string> inequalities;  // empty means every known inequality
  long m_min = 1;
  long m_max = 1;
  long cover_s = 2;
};

// Declarative JSON config with exactly the SweepConfig keys; unknown keys are
// rejected, missing ones fall back to the defaults above.
SweepConfig sweep_config_from_json_text(const std::string& text);
std::string sweep_config_to_json_text(const SweepConfig& config);
// Validates ranges (n_min >= 2, n_min <= n_max <= coord_max, samples >= 1,
// 1 <= m_min <= m_max, cover_s >= 2, known inequality ids).
void validate_config(const SweepConfig& config);

struct RatioExtreme {
  double ratio = 0.0;
  std::vector<long> witness;  // tuple coordinates as sampled
  long m = 1;
  long sample_index = 0;
};

struct ViolationWitness {
  std::vector<long> witness;
  long m = 1;
  long sample_index = 0;
};

struct SweepReport {
  std::string inequality_id;
  long samples = 0;  // checked (non-skipped) samples
  long skipped = 0;
  long violations = 0;  // hard forms only; recorded forms never violate
  std::optional<RatioExtreme> min_ratio;  // smallest actual / lower-bound
  std::optional<RatioExtreme> max_ratio;  // largest actual / upper-bound
  std::vector<ViolationWitness> violation_witnesses;  // lowest-index few
};

inline constexpr int kMaxViolationWitnesses = 8;

// Deterministic for a fixed config regardless of jobs: sample i draws from the
// derived stream (seed, i) and partial reports merge in index order.
std::vector<SweepReport> run_sweep(const SweepConfig& config, int jobs = 1);

bool sweep_has_hard_violations(const std::vector<SweepReport>& reports);

// One CSV row per inequality; witness tuples as space-separated coordinates.
std::string sweep_to_csv(const std::vector<SweepReport>& reports);
std::string sweep_to_json_text(const std::vector<SweepReport>& reports);

}  // namespace cgeom
