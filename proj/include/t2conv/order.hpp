#pragma once

// The convolution order f <= g iff meet_min(f, g) = f, decided exactly on the
// functions and, independently, level by level on cut families.

#include <algorithm>
#include <vector>

#include "t2conv/convolution.hpp"
#include "t2conv/error.hpp"
#include "t2conv/interval.hpp"
#include "t2conv/rational.hpp"
#include "t2conv/truth_value.hpp"

namespace t2conv {

inline bool leq_convolution(const TruthValue& f, const TruthValue& g) { return meet_min(f, g) == f; }

template <class T>
bool leq_cutwise(const CutFamily<T>& fc, const CutFamily<T>& gc) {
  if (fc.alpha_grid() != gc.alpha_grid()) throw GridMismatch("leq_cutwise: cut families use different alpha grids");
  for (std::size_t i = 0; i < fc.size(); ++i)
    if (!interval_leq(fc[i], gc[i])) return false;
  return true;
}

namespace detail {

inline void push_levels(const TruthValue& f, std::vector<Rational>& out) {
  for (const auto& v : f.point_values()) out.push_back(v);
  for (const auto& s : f.segments()) {
    out.push_back(s.left);
    out.push_back(s.right);
  }
}

}  // namespace detail

/// Alpha grid on which the cutwise test decides the order exactly.
///
/// Critical levels are every value and one-sided limit of f, g and min(f, g);
/// the last contributes the levels where a flank of f crosses a flank of g.
/// Between consecutive critical levels both lower (upper) cut endpoints are
/// affine in alpha and never cross, so one interior level per gap settles the
/// sign for the whole gap.  The uniform grid i/m is merged in as well.
inline std::vector<Rational> adapted_grid(const TruthValue& f, const TruthValue& g, int m) {
  std::vector<Rational> crit{Rational(0), Rational(1)};
  detail::push_levels(f, crit);
  detail::push_levels(g, crit);
  detail::push_levels(pointwise_min(f, g), crit);
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  std::vector<Rational> grid;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    if (crit[i] > 0) grid.push_back(crit[i]);
    if (i + 1 < crit.size()) grid.push_back((crit[i] + crit[i + 1]) / 2);
  }
  if (m >= 1) {
    auto uni = uniform_grid<Rational>(m);
    grid.insert(grid.end(), uni.begin(), uni.end());
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

/// leq_cutwise on exact cuts over adapted_grid(f, g, m).
inline bool leq_cutwise_adapted(const TruthValue& f, const TruthValue& g, int m = 0) {
  auto grid = adapted_grid(f, g, m);
  return leq_cutwise(cuts_of<Rational>(f, grid), cuts_of<Rational>(g, grid));
}

}  // namespace t2conv
