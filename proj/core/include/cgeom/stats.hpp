#pragma once

// The reciprocal ("compression") map x |-> (m/x_1, ..., m/x_n) and the scalar
// statistics derived from it. Everything that is algebraic stays in the tuple's
// scalar type; only square roots drop to double.

#include <cmath>

#include "cgeom/tuple.hpp"

namespace cgeom {

template <class S>
Tuple<S> compress(const Tuple<S>& x, Scale m) {
  const S mm = scalar_from_long<S>(m.value);
  Pt<S> out;
  out.reserve(x.dim());
  for (const S& xi : x) out.push_back(mm / xi);
  return Tuple<S>(std::move(out));
}

template <class S>
Tuple<S> reciprocal(const Tuple<S>& x) {
  return compress(x, Scale(1));
}

// Sum of the image coordinates: m * sum(1/x_i).
template <class S>
S mass(const Tuple<S>& x, Scale m) {
  const S mm = scalar_from_long<S>(m.value);
  S acc = scalar_from_long<S>(0);
  for (const S& xi : x) acc += mm / xi;
  return acc;
}

// Squared euclidean norm of the image: m^2 * sum(1/x_i^2).
template <class S>
S rank_sq(const Tuple<S>& x, Scale m) {
  const S mm = scalar_from_long<S>(m.value);
  S acc = scalar_from_long<S>(0);
  for (const S& xi : x) {
    S t = mm / xi;
    acc += t * t;
  }
  return acc;
}

template <class S>
double rank(const Tuple<S>& x, Scale m) {
  return std::sqrt(to_double(rank_sq(x, m)));
}

// Product of the image coordinates: m^n / prod(x_i).
template <class S>
S entropy(const Tuple<S>& x, Scale m) {
  const S mm = scalar_from_long<S>(m.value);
  S acc = scalar_from_long<S>(1);
  for (const S& xi : x) acc *= mm / xi;
  return acc;
}

// Squared displacement between a tuple and its image: sum((x_i - m/x_i)^2).
template <class S>
S gap_sq(const Tuple<S>& x, Scale m) {
  const S mm = scalar_from_long<S>(m.value);
  S acc = scalar_from_long<S>(0);
  for (const S& xi : x) {
    S d = xi - mm / xi;
    acc += d * d;
  }
  return acc;
}

template <class S>
double gap(const Tuple<S>& x, Scale m) {
  return std::sqrt(to_double(gap_sq(x, m)));
}

template <class S>
double energy(const Tuple<S>& x, Scale m) {
  return gap(x, m) * to_double(entropy(x, m));
}

// s-fold cover tuple: (s!/x_1^s, ..., s!/x_n^s); s >= 1.
template <class S>
Tuple<S> cover(const Tuple<S>& x, long s) {
  if (s < 1) throw std::domain_error("cover order must be >= 1");
  S f = scalar_from_long<S>(1);
  for (long k = 2; k <= s; ++k) f *= scalar_from_long<S>(k);
  Pt<S> out;
  out.reserve(x.dim());
  for (const S& xi : x) out.push_back(f / pow_scalar(xi, s));
  return Tuple<S>(std::move(out));
}

// Sum of the cover coordinates: s! * sum(1/x_i^s).
template <class S>
S cover_mass(const Tuple<S>& x, long s) {
  if (s < 1) throw std::domain_error("cover order must be >= 1");
  S f = scalar_from_long<S>(1);
  for (long k = 2; k <= s; ++k) f *= scalar_from_long<S>(k);
  S acc = scalar_from_long<S>(0);
  for (const S& xi : x) acc += f / pow_scalar(xi, s);
  return acc;
}

// |entropy of the image of x  -  entropy of the image of 1/x|.
template <class S>
S measure(const Tuple<S>& x, Scale m) {
  return abs_val(entropy(x, m) - entropy(reciprocal(x), m));
}

template <class S>
double cost(const Tuple<S>& x, Scale m) {
  return to_double(measure(x, m)) * gap(x, m);
}

// Convenience overloads on integer tuples (exact arithmetic).
inline RatTuple compress(const NatTuple& x, Scale m) { return compress(x.to_rat(), m); }
inline Rat mass(const NatTuple& x, Scale m) { return mass(x.to_rat(), m); }
inline Rat rank_sq(const NatTuple& x, Scale m) { return rank_sq(x.to_rat(), m); }
inline double rank(const NatTuple& x, Scale m) { return rank(x.to_rat(), m); }
inline Rat entropy(const NatTuple& x, Scale m) { return entropy(x.to_rat(), m); }
inline Rat gap_sq(const NatTuple& x, Scale m) { return gap_sq(x.to_rat(), m); }
inline double gap(const NatTuple& x, Scale m) { return gap(x.to_rat(), m); }
inline double energy(const NatTuple& x, Scale m) { return energy(x.to_rat(), m); }
inline Rat cover_mass(const NatTuple& x, long s) { return cover_mass(x.to_rat(), s); }
inline Rat measure(const NatTuple& x, Scale m) { return measure(x.to_rat(), m); }
inline double cost(const NatTuple& x, Scale m) { return cost(x.to_rat(), m); }

}  // namespace cgeom
