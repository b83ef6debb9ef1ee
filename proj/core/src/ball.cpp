#include "cgeom/ball.hpp"

namespace cgeom {

std::optional<RatTuple> integer_descent_pick(const Ball<Rat>& b) {
  const RatTuple& g = b.generator;
  Pt<Rat> next = g.coords();
  std::size_t best = g.dim();  // index of the largest coordinate above 1
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g[i].get_den() != 1)
      throw std::invalid_argument("integer descent needs an integer generator");
    if (g[i] > 1 && (best == g.dim() || g[i] > next[best])) best = i;
  }
  if (best == g.dim()) return std::nullopt;  // all-ones: already at the limit
  next[best] -= 1;
  return RatTuple(std::move(next));
}

std::optional<RatTuple> midpoint_descent_pick(const Ball<Rat>& b) {
  const RatTuple& g = b.generator;
  Pt<Rat> next;
  next.reserve(g.dim());
  bool moved = false;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Rat v = (g[i] + 1) / 2;
    if (!(v == g[i])) moved = true;
    next.push_back(std::move(v));
  }
  if (!moved) return std::nullopt;
  return RatTuple(std::move(next));
}

}  // namespace cgeom
