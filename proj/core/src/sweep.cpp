#include "cgeom/sweep.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "cgeom/rng.hpp"
#include "cgeom/tuple.hpp"

namespace cgeom {

namespace {

const std::set<std::string>& config_keys() {
  static const std::set<std::string> keys = {"seed",    "n_min",        "n_max",
                                             "coord_max", "samples",    "inequalities",
                                             "m_min",   "m_max",        "cover_s"};
  return keys;
}

}  // namespace

SweepConfig sweep_config_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  for (const auto& item : j.items())
    if (config_keys().count(item.key()) == 0)
      throw std::invalid_argument("config: unknown key '" + item.key() + "'");
  SweepConfig c;
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("n_min")) c.n_min = j.at("n_min").get<long>();
  if (j.contains("n_max")) c.n_max = j.at("n_max").get<long>();
  if (j.contains("coord_max")) c.coord_max = j.at("coord_max").get<long>();
  if (j.contains("samples")) c.samples = j.at("samples").get<long>();
  if (j.contains("m_min")) c.m_min = j.at("m_min").get<long>();
  if (j.contains("m_max")) c.m_max = j.at("m_max").get<long>();
  if (j.contains("cover_s")) c.cover_s = j.at("cover_s").get<long>();
  if (j.contains("inequalities"))
    for (const auto& id : j.at("inequalities")) c.inequalities.push_back(id.get<std::string>());
  validate_config(c);
  return c;
}

std::string sweep_config_to_json_text(const SweepConfig& config) {
  nlohmann::json j;
  j["seed"] = config.seed;
  j["n_min"] = config.n_min;
  j["n_max"] = config.n_max;
  j["coord_max"] = config.coord_max;
  j["samples"] = config.samples;
  j["inequalities"] = config.inequalities;
  j["m_min"] = config.m_min;
  j["m_max"] = config.m_max;
  j["cover_s"] = config.cover_s;
  return j.dump(2) + "\n";
}

void validate_config(const SweepConfig& config) {
  if (config.n_min < 2) throw std::invalid_argument("config: n_min must be >= 2");
  if (config.n_max < config.n_min) throw std::invalid_argument("config: empty n range");
  if (config.coord_max < config.n_max)
    throw std::invalid_argument("config: coord_max too small for n_max distinct coordinates");
  if (config.samples < 1) throw std::invalid_argument("config: samples must be >= 1");
  if (config.m_min < 1 || config.m_max < config.m_min)
    throw std::invalid_argument("config: empty m range");
  if (config.cover_s < 2) throw std::invalid_argument("config: cover_s must be >= 2");
  std::set<std::string> seen;
  for (const auto& id : config.inequalities) {
    if (!inequality_is_known(id)) throw std::invalid_argument("config: unknown inequality '" + id + "'");
    if (!seen.insert(id).second)
      throw std::invalid_argument("config: duplicate inequality '" + id + "'");
  }
}

namespace {

struct Accum {
  long checked = 0;
  long skipped = 0;
  long violations = 0;
  std::optional<RatioExtreme> lo;
  std::optional<RatioExtreme> hi;
  std::vector<ViolationWitness> vw;  // index-sorted, capped
};

void merge_into(Accum& a, const Accum& b) {
  a.checked += b.checked;
  a.skipped += b.skipped;
  a.violations += b.violations;
  // Chunks merge in index order; ties keep the earlier witness.
  if (b.lo && (!a.lo || b.lo->ratio < a.lo->ratio)) a.lo = b.lo;
  if (b.hi && (!a.hi || b.hi->ratio > a.hi->ratio)) a.hi = b.hi;
  std::vector<ViolationWitness> merged;
  merged.reserve(a.vw.size() + b.vw.size());
  std::merge(a.vw.begin(), a.vw.end(), b.vw.begin(), b.vw.end(), std::back_inserter(merged),
             [](const ViolationWitness& x, const ViolationWitness& y) {
               return x.sample_index < y.sample_index;
             });
  if (merged.size() > static_cast<std::size_t>(kMaxViolationWitnesses))
    merged.resize(kMaxViolationWitnesses);
  a.vw = std::move(merged);
}

void run_chunk(const SweepConfig& config, const std::vector<std::string>& ids, long begin,
               long end, std::vector<Accum>& out) {
  out.assign(ids.size(), Accum{});
  for (long i = begin; i < end; ++i) {
    Rng rng(config.seed, static_cast<std::uint64_t>(i));
    const long n = rng.range(config.n_min, config.n_max);
    const long mv = rng.range(config.m_min, config.m_max);
    std::vector<long> coords;
    coords.reserve(static_cast<std::size_t>(n));
    while (coords.size() < static_cast<std::size_t>(n)) {
      long c = rng.range(1, config.coord_max);
      if (std::find(coords.begin(), coords.end(), c) == coords.end()) coords.push_back(c);
    }
    NatTuple x(coords);
    Scale m{mv};
    for (std::size_t k = 0; k < ids.size(); ++k) {
      SandwichEntry e = check_sandwich(x, m, ids[k], config.cover_s);
      Accum& acc = out[k];
      if (e.status == SandwichStatus::Skipped) {
        ++acc.skipped;
        continue;
      }
      ++acc.checked;
      if (e.violated) {
        ++acc.violations;
        if (acc.vw.size() < static_cast<std::size_t>(kMaxViolationWitnesses))
          acc.vw.push_back(ViolationWitness{coords, mv, i});
      }
      if (e.ratio_lower && (!acc.lo || *e.ratio_lower < acc.lo->ratio))
        acc.lo = RatioExtreme{*e.ratio_lower, coords, mv, i};
      if (e.ratio_upper && (!acc.hi || *e.ratio_upper > acc.hi->ratio))
        acc.hi = RatioExtreme{*e.ratio_upper, coords, mv, i};
    }
  }
}

std::string witness_str(const std::vector<long>& coords) {
  std::ostringstream out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ' ';
    out << coords[i];
  }
  return out.str();
}

}  // namespace

std::vector<SweepReport> run_sweep(const SweepConfig& config, int jobs) {
  validate_config(config);
  if (jobs < 1) throw std::invalid_argument("run_sweep: jobs must be >= 1");
  const std::vector<std::string> ids =
      config.inequalities.empty() ? known_inequalities() : config.inequalities;

  const long total = config.samples;
  const long njobs = std::min<long>(jobs, total);
  std::vector<std::vector<Accum>> partials(static_cast<std::size_t>(njobs));
  if (njobs == 1) {
    run_chunk(config, ids, 0, total, partials[0]);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(njobs));
    const long base = total / njobs, extra = total % njobs;
    long begin = 0;
    for (long wkr = 0; wkr < njobs; ++wkr) {
      const long len = base + (wkr < extra ? 1 : 0);
      const long end = begin + len;
      workers.emplace_back([&, wkr, begin, end]() {
        try {
          run_chunk(config, ids, begin, end, partials[static_cast<std::size_t>(wkr)]);
        } catch (...) {
          errors[static_cast<std::size_t>(wkr)] = std::current_exception();
        }
      });
      begin = end;
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<Accum> merged(ids.size());
  for (const auto& part : partials)
    for (std::size_t k = 0; k < ids.size(); ++k) merge_into(merged[k], part[k]);

  std::vector<SweepReport> reports;
  reports.reserve(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    SweepReport r;
    r.inequality_id = ids[k];
    r.samples = merged[k].checked;
    r.skipped = merged[k].skipped;
    r.violations = merged[k].violations;
    r.min_ratio = merged[k].lo;
    r.max_ratio = merged[k].hi;
    r.violation_witnesses = merged[k].vw;
    reports.push_back(std::move(r));
  }
  return reports;
}

bool sweep_has_hard_violations(const std::vector<SweepReport>& reports) {
  for (const auto& r : reports)
    if (inequality_is_hard(r.inequality_id) && r.violations > 0) return true;
  return false;
}

std::string sweep_to_csv(const std::vector<SweepReport>& reports) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << "inequality_id,samples,skipped,violations,min_ratio,min_ratio_witness,min_ratio_m,"
         "max_ratio,max_ratio_witness,max_ratio_m\n";
  for (const auto& r : reports) {
    out << r.inequality_id << ',' << r.samples << ',' << r.skipped << ',' << r.violations << ',';
    if (r.min_ratio)
      out << r.min_ratio->ratio << ',' << witness_str(r.min_ratio->witness) << ','
          << r.min_ratio->m;
    else
      out << ",,";
    out << ',';
    if (r.max_ratio)
      out << r.max_ratio->ratio << ',' << witness_str(r.max_ratio->witness) << ','
          << r.max_ratio->m;
    else
      out << ",,";
    out << '\n';
  }
  return out.str();
}

namespace {

nlohmann::json extreme_to_json(const std::optional<RatioExtreme>& e) {
  if (!e) return nullptr;
  nlohmann::json j;
  j["ratio"] = e->ratio;
  j["witness"] = e->witness;
  j["m"] = e->m;
  j["sample_index"] = e->sample_index;
  return j;
}

}  // namespace

std::string sweep_to_json_text(const std::vector<SweepReport>& reports) {
  auto arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["inequality_id"] = r.inequality_id;
    j["samples"] = r.samples;
    j["skipped"] = r.skipped;
    j["violations"] = r.violations;
    j["min_ratio"] = extreme_to_json(r.min_ratio);
    j["max_ratio"] = extreme_to_json(r.max_ratio);
    auto vw = nlohmann::json::array();
    for (const auto& v : r.violation_witnesses) {
      nlohmann::json jv;
      jv["witness"] = v.witness;
      jv["m"] = v.m;
      jv["sample_index"] = v.sample_index;
      vw.push_back(std::move(jv));
    }
    j["violation_witnesses"] = std::move(vw);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace cgeom
