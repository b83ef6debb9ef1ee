#include "cgeom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cgeom {

namespace {

void require_window(long n, long inf, long sup) {
  if (n < 2) throw std::domain_error("bound evaluators need n >= 2");
  if (inf < 1) throw std::domain_error("bound evaluators need inf >= 1");
  if (inf >= sup) throw std::domain_error("bound evaluators need inf < sup");
}

double log_form(double ratio_arg) { return std::log(ratio_arg); }

}  // namespace

BoundPair mass_bounds(long n, long inf, long sup, Scale m, BoundForm form) {
  require_window(n, inf, sup);
  BoundPair out;
  out.form = form;
  switch (form) {
    case BoundForm::HarmonicExact: {
      if (sup - (n - 1) < 1)
        throw std::domain_error("harmonic mass bound needs sup - (n-1) >= 1");
      Rat lo(0), hi(0);
      for (long k = 0; k < n; ++k) {
        lo += make_rat(m.value, sup - k);
        hi += make_rat(m.value, inf + k);
      }
      out.lower_exact = lo;
      out.upper_exact = hi;
      out.lower = to_double(lo);
      out.upper = to_double(hi);
      break;
    }
    case BoundForm::LogAsymptotic: {
      if (sup <= n - 1)
        throw std::domain_error("log mass bound needs sup > n - 1");
      const double nd = static_cast<double>(n), md = static_cast<double>(m.value);
      out.lower = md * log_form(1.0 / (1.0 - (nd - 1.0) / static_cast<double>(sup)));
      out.upper = md * log_form(1.0 + (nd - 1.0) / static_cast<double>(inf));
      break;
    }
    case BoundForm::SupInfExact: {
      out.lower_exact = make_rat(m.value * n, sup);
      out.upper_exact = make_rat(m.value * n, inf);
      out.lower = to_double(*out.lower_exact);
      out.upper = to_double(*out.upper_exact);
      break;
    }
  }
  return out;
}

BoundPair rank_bounds(long n, long inf, long sup, Scale m) {
  require_window(n, inf, sup);
  const double nd = static_cast<double>(n), md = static_cast<double>(m.value);
  const double inf2 = static_cast<double>(inf) * static_cast<double>(inf);
  const double sup2 = static_cast<double>(sup) * static_cast<double>(sup);
  if (sup2 <= nd - 1.0) throw std::domain_error("log rank bound needs sup^2 > n - 1");
  BoundPair out;
  out.form = BoundForm::LogAsymptotic;
  out.lower = md * std::sqrt(log_form(1.0 / (1.0 - (nd - 1.0) / sup2)));
  out.upper = md * std::sqrt(log_form(1.0 + (nd - 1.0) / inf2));
  return out;
}

BoundPair entropy_bounds(long n, long inf, long sup) {
  require_window(n, inf, sup);
  const double nd = static_cast<double>(n);
  if (static_cast<double>(sup) <= nd - 1.0)
    throw std::domain_error("log entropy bound needs sup > n - 1");
  BoundPair out;
  out.form = BoundForm::LogAsymptotic;
  out.lower = log_form(1.0 / (1.0 - (nd - 1.0) / static_cast<double>(sup))) /
              (nd * std::pow(static_cast<double>(sup), nd - 1.0));
  out.upper = log_form(1.0 + (nd - 1.0) / static_cast<double>(inf)) /
              (nd * std::pow(static_cast<double>(inf), nd - 1.0));
  return out;
}

BoundPair gap_bounds(long n, long inf, long sup, Scale m) {
  require_window(n, inf, sup);
  const double nd = static_cast<double>(n), md = static_cast<double>(m.value);
  const double inf2 = static_cast<double>(inf) * static_cast<double>(inf);
  const double sup2 = static_cast<double>(sup) * static_cast<double>(sup);
  if (sup2 <= nd - 1.0) throw std::domain_error("log gap bound needs sup^2 > n - 1");
  BoundPair out;
  out.form = BoundForm::LogAsymptotic;
  out.lower = nd * inf2 + md * md * log_form(1.0 / (1.0 - (nd - 1.0) / sup2)) - 2.0 * md * nd;
  out.upper = nd * sup2 + md * md * log_form(1.0 + (nd - 1.0) / inf2) - 2.0 * md * nd;
  return out;
}

BoundPair energy_bounds(long n, long inf, long sup) {
  require_window(n, inf, sup);
  const double nd = static_cast<double>(n);
  if (static_cast<double>(sup) <= nd - 1.0)
    throw std::domain_error("log energy bound needs sup > n - 1");
  const double rt = std::sqrt(nd);
  BoundPair out;
  out.form = BoundForm::LogAsymptotic;
  out.lower = log_form(1.0 / (1.0 - (nd - 1.0) / static_cast<double>(sup))) /
              (rt * std::pow(static_cast<double>(sup), nd - 1.0));
  out.upper = log_form(1.0 + (nd - 1.0) / static_cast<double>(inf)) /
              (rt * std::pow(static_cast<double>(inf), nd - 1.0));
  return out;
}

BoundPair cover_mass_bounds(long n, long inf, long sup, long s) {
  require_window(n, inf, sup);
  if (s < 2) throw std::domain_error("cover bounds need s >= 2");
  const double nd = static_cast<double>(n);
  if (static_cast<double>(sup) <= nd - 1.0)
    throw std::domain_error("log cover bound needs sup > n - 1");
  double fact = 1.0;
  for (long k = 2; k <= s; ++k) fact *= static_cast<double>(k);
  const double sd = static_cast<double>(s);
  BoundPair out;
  out.form = BoundForm::LogAsymptotic;
  const double lo_log = log_form(1.0 / (1.0 - (nd - 1.0) / static_cast<double>(sup)));
  const double hi_log = log_form(1.0 + (nd - 1.0) / static_cast<double>(inf));
  out.lower =
      fact * (std::pow(lo_log, sd) - sd * nd / std::pow(static_cast<double>(inf), sd - 1.0));
  out.upper =
      fact * (std::pow(hi_log, sd) - sd * nd / std::pow(static_cast<double>(sup), sd - 1.0));
  return out;
}

MeasureCostBounds measure_cost_bounds(long n, long inf, long sup) {
  require_window(n, inf, sup);
  MeasureCostBounds out;
  Rat lo = pow_scalar(Rat(inf), n);
  Rat hi = pow_scalar(Rat(sup), n);
  out.measure.form = BoundForm::SupInfExact;
  out.measure.lower_exact = lo;
  out.measure.upper_exact = hi;
  out.measure.lower = to_double(lo);
  out.measure.upper = to_double(hi);
  const double rt = std::sqrt(static_cast<double>(n));
  out.cost.form = BoundForm::SupInfExact;
  out.cost.lower = std::pow(static_cast<double>(inf), static_cast<double>(n + 1)) * rt;
  out.cost.upper = std::pow(static_cast<double>(sup), static_cast<double>(n + 1)) * rt;
  return out;
}

const std::vector<std::string>& known_inequalities() {
  static const std::vector<std::string> ids = {
      "mass_harmonic", "mass_supinf", "mass_weak",   "mass_log",       "rank_log",
      "entropy_log",   "gap_log",     "energy_log",  "cover_log",      "measure_supinf",
      "cost_supinf"};
  return ids;
}

bool inequality_is_hard(const std::string& id) {
  return id == "mass_harmonic" || id == "mass_supinf" || id == "mass_weak";
}

bool inequality_is_known(const std::string& id) {
  const auto& ids = known_inequalities();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

namespace {

void record_ratios(SandwichEntry& e, double actual, const BoundPair& b) {
  e.actual = actual;
  e.bounds = b;
  if (actual > 0.0 && b.lower > 0.0) e.ratio_lower = actual / b.lower;
  if (actual > 0.0 && b.upper > 0.0) e.ratio_upper = actual / b.upper;
}

}  // namespace

SandwichEntry check_sandwich(const NatTuple& x, Scale m, const std::string& id, long cover_s) {
  SandwichEntry e;
  e.inequality_id = id;
  const long n = static_cast<long>(x.dim());
  const long inf = x.inf(), sup = x.sup();

  if (id == "mass_harmonic" || id == "mass_supinf" || id == "mass_weak") {
    if (id == "mass_weak" && !(inf > n - 1)) {
      e.status = SandwichStatus::Skipped;  // quantifier of the theorem unmet
      return e;
    }
    const BoundForm form =
        id == "mass_harmonic" ? BoundForm::HarmonicExact : BoundForm::SupInfExact;
    BoundPair b = mass_bounds(n, inf, sup, m, form);
    Rat actual = mass(x, m);
    e.status = SandwichStatus::Checked;
    e.violated = (actual < *b.lower_exact) || (actual > *b.upper_exact);
    record_ratios(e, to_double(actual), b);
    return e;
  }
  if (id == "mass_log") {
    if (sup <= n - 1) {
      e.status = SandwichStatus::Skipped;
      return e;
    }
    e.status = SandwichStatus::Checked;
    record_ratios(e, to_double(mass(x, m)), mass_bounds(n, inf, sup, m, BoundForm::LogAsymptotic));
    return e;
  }
  if (id == "rank_log") {
    e.status = SandwichStatus::Checked;
    record_ratios(e, rank(x, m), rank_bounds(n, inf, sup, m));
    return e;
  }
  if (id == "entropy_log") {
    if (sup <= n - 1) {
      e.status = SandwichStatus::Skipped;
      return e;
    }
    e.status = SandwichStatus::Checked;
    record_ratios(e, to_double(entropy(x, m)), entropy_bounds(n, inf, sup));
    return e;
  }
  if (id == "gap_log") {
    e.status = SandwichStatus::Checked;
    record_ratios(e, to_double(gap_sq(x, m)), gap_bounds(n, inf, sup, m));
    return e;
  }
  if (id == "energy_log") {
    if (sup <= n - 1) {
      e.status = SandwichStatus::Skipped;
      return e;
    }
    e.status = SandwichStatus::Checked;
    record_ratios(e, energy(x, m), energy_bounds(n, inf, sup));
    return e;
  }
  if (id == "cover_log") {
    if (sup <= n - 1 || cover_s < 2) {
      e.status = SandwichStatus::Skipped;
      return e;
    }
    e.status = SandwichStatus::Checked;
    record_ratios(e, to_double(cover_mass(x, cover_s)), cover_mass_bounds(n, inf, sup, cover_s));
    return e;
  }
  if (id == "measure_supinf") {
    e.status = SandwichStatus::Checked;
    record_ratios(e, to_double(measure(x, m)), measure_cost_bounds(n, inf, sup).measure);
    return e;
  }
  if (id == "cost_supinf") {
    e.status = SandwichStatus::Checked;
    record_ratios(e, cost(x, m), measure_cost_bounds(n, inf, sup).cost);
    return e;
  }
  throw std::invalid_argument("unknown inequality id '" + id + "'");
}

}  // namespace cgeom
