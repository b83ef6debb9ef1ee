#pragma once

// Exact rational scalar used throughout the library, backed by GMP's canonical
// mpq representation (always reduced, denominator > 0), plus the small set of
// helpers that let the geometry templates stay agnostic between Rat and double.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cgeom {

using Int = mpz_class;
using Rat = mpq_class;

// p/q in canonical form; throws std::domain_error when den == 0.
Rat make_rat(long num, long den = 1);

// Parses "p" or "p/q" (decimal digits, optional leading sign).
// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

// Canonical rendering: "p" when integral, otherwise "p/q".
std::string rat_str(const Rat& q);

// Exact binary-rational image of a finite double.
Rat rat_of_double(double v);

Int factorial(long s);  // s >= 0, throws std::domain_error otherwise

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(double v) { return v; }

inline Rat abs_val(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline double abs_val(double v) { return v < 0 ? -v : v; }

inline int sign_of(const Rat& q) { return sgn(q); }
inline int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

template <class S>
inline constexpr bool is_exact_scalar = false;
template <>
inline constexpr bool is_exact_scalar<Rat> = true;

template <class S>
S scalar_from_long(long v);
template <>
inline Rat scalar_from_long<Rat>(long v) { return Rat(v); }
template <>
inline double scalar_from_long<double>(long v) { return static_cast<double>(v); }

// base^e for small nonnegative e by repeated squaring.
template <class S>
S pow_scalar(const S& base, long e) {
  if (e < 0) throw std::domain_error("pow_scalar: negative exponent");
  S acc = scalar_from_long<S>(1);
  S b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace cgeom
