#pragma once

// Tuple types. `Tuple<S>` is the generator domain type (dimension >= 2, no zero
// coordinate — the reciprocal map must be defined on it). `Pt<S>` is a plain
// point/offset with no invariants, used for centers, vertices, translations and
// other derived geometry. `NatTuple` is the pairwise-distinct positive-integer
// flavor the number-theoretic results quantify over.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cgeom/rational.hpp"

namespace cgeom {

// Positive integer scale of the reciprocal map.
struct Scale {
  long value;
  explicit Scale(long m) : value(m) {
    if (m < 1) throw std::domain_error("scale must be a positive integer");
  }
  friend bool operator==(const Scale&, const Scale&) = default;
};

template <class S>
using Pt = std::vector<S>;

template <class S>
class Tuple {
 public:
  explicit Tuple(Pt<S> coords) : c_(std::move(coords)) {
    if (c_.size() < 2) throw std::domain_error("tuple needs at least two coordinates");
    for (const S& v : c_)
      if (v == 0) throw std::domain_error("tuple coordinate must be nonzero");
  }
  Tuple(std::initializer_list<S> coords) : Tuple(Pt<S>(coords)) {}

  std::size_t dim() const { return c_.size(); }
  const S& operator[](std::size_t i) const { return c_[i]; }
  const Pt<S>& coords() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  friend bool operator==(const Tuple&, const Tuple&) = default;

 private:
  Pt<S> c_;
};

using RatTuple = Tuple<Rat>;
using FloatTuple = Tuple<double>;

class NatTuple {
 public:
  explicit NatTuple(std::vector<long> coords) : c_(std::move(coords)) {
    if (c_.size() < 2) throw std::domain_error("tuple needs at least two coordinates");
    for (long v : c_)
      if (v < 1) throw std::domain_error("natural tuple coordinate must be >= 1");
    std::vector<long> sorted(c_);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::domain_error("natural tuple coordinates must be pairwise distinct");
  }
  NatTuple(std::initializer_list<long> coords) : NatTuple(std::vector<long>(coords)) {}

  std::size_t dim() const { return c_.size(); }
  long operator[](std::size_t i) const { return c_[i]; }
  const std::vector<long>& coords() const { return c_; }

  long inf() const { return *std::min_element(c_.begin(), c_.end()); }
  long sup() const { return *std::max_element(c_.begin(), c_.end()); }

  RatTuple to_rat() const {
    Pt<Rat> out;
    out.reserve(c_.size());
    for (long v : c_) out.emplace_back(v);
    return RatTuple(std::move(out));
  }
  FloatTuple to_float() const {
    Pt<double> out(c_.begin(), c_.end());
    return FloatTuple(std::move(out));
  }

  friend bool operator==(const NatTuple&, const NatTuple&) = default;

 private:
  std::vector<long> c_;
};

// --- point algebra -----------------------------------------------------------

template <class S>
Pt<S> add(const Pt<S>& a, const Pt<S>& b) {
  if (a.size() != b.size()) throw std::domain_error("dimension mismatch");
  Pt<S> out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

template <class S>
Pt<S> sub(const Pt<S>& a, const Pt<S>& b) {
  if (a.size() != b.size()) throw std::domain_error("dimension mismatch");
  Pt<S> out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

template <class S>
Pt<S> scaled(const Pt<S>& a, const S& t) {
  Pt<S> out(a);
  for (S& v : out) v *= t;
  return out;
}

template <class S>
S dot(const Pt<S>& a, const Pt<S>& b) {
  if (a.size() != b.size()) throw std::domain_error("dimension mismatch");
  S acc = scalar_from_long<S>(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class S>
S norm_sq(const Pt<S>& a) {
  S acc = scalar_from_long<S>(0);
  for (const S& v : a) acc += v * v;
  return acc;
}

template <class S>
double norm(const Pt<S>& a) {
  return std::sqrt(to_double(norm_sq(a)));
}

template <class S>
bool is_zero(const Pt<S>& a) {
  for (const S& v : a)
    if (!(v == 0)) return false;
  return true;
}

}  // namespace cgeom
