#pragma once

// Closed subintervals of [0,1], their images under continuous t-norms, the
// interval order, and nested cut families indexed by an alpha grid.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "t2conv/error.hpp"
#include "t2conv/rational.hpp"
#include "t2conv/tnorm.hpp"
#include "t2conv/truth_value.hpp"

namespace t2conv {

/// Nonempty closed interval [lo, hi] inside [0,1].
template <class T = double>
class Interval {
 public:
  Interval(T lo, T hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(T(0) <= lo_ && lo_ <= hi_ && hi_ <= T(1))) throw BadShape("interval needs 0 <= lo <= hi <= 1");
  }
  static Interval point(const T& x) { return Interval(x, x); }

  const T& lo() const { return lo_; }
  const T& hi() const { return hi_; }
  bool contains(const T& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

  bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
  bool operator!=(const Interval& o) const { return !(*this == o); }

 private:
  T lo_;
  T hi_;
};

/// {a * b : a in A, b in B}.  Monotone plus continuous makes this [lo*lo, hi*hi].
template <class T>
Interval<T> interval_image(const Interval<T>& a, const Interval<T>& b, const TnormSpec& star) {
  if (!star.is_continuous()) throw NotContinuous("interval_image: " + star.name() + " is not continuous");
  return Interval<T>(star(a.lo(), b.lo()), star(a.hi(), b.hi()));
}

/// A ^ B = {x ^ y : x in A, y in B}.
template <class T>
Interval<T> interval_meet(const Interval<T>& a, const Interval<T>& b) {
  return Interval<T>(smin(a.lo(), b.lo()), smin(a.hi(), b.hi()));
}

/// The interval order: A <= B iff both endpoints compare.
template <class T>
bool interval_leq(const Interval<T>& a, const Interval<T>& b) {
  return a.lo() <= b.lo() && a.hi() <= b.hi();
}

/// alpha_i = i/m for i = 1..m.
template <class T = double>
std::vector<T> uniform_grid(int m) {
  if (m < 1) throw BadShape("uniform_grid needs m >= 1");
  std::vector<T> g;
  g.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    if constexpr (std::is_same_v<T, Rational>)
      g.push_back(ratio(i, m));
    else
      g.push_back(static_cast<T>(i) / static_cast<T>(m));
  }
  return g;
}

/// Cuts of one truth value on a strictly increasing alpha grid ending at 1.
template <class T = double>
class CutFamily {
 public:
  CutFamily(std::vector<T> alpha_grid, std::vector<Interval<T>> cuts)
      : grid_(std::move(alpha_grid)), cuts_(std::move(cuts)) {
    if (grid_.empty()) throw BadShape("cut family needs a nonempty alpha grid");
    if (grid_.size() != cuts_.size()) throw BadShape("cut family needs one cut per grid level");
    if (!(grid_.front() > T(0))) throw BadShape("alpha grid levels must be > 0");
    if (grid_.back() != T(1)) throw BadShape("alpha grid must end at 1");
    for (std::size_t i = 1; i < grid_.size(); ++i)
      if (!(grid_[i - 1] < grid_[i])) throw BadShape("alpha grid must be strictly increasing");
  }

  const std::vector<T>& alpha_grid() const { return grid_; }
  const std::vector<Interval<T>>& cuts() const { return cuts_; }
  std::size_t size() const { return grid_.size(); }
  const Interval<T>& operator[](std::size_t i) const { return cuts_[i]; }

  /// cuts[j] is inside cuts[i] whenever i <= j.
  bool is_nested() const {
    for (std::size_t i = 1; i < cuts_.size(); ++i)
      if (!cuts_[i - 1].contains(cuts_[i])) return false;
    return true;
  }

  bool operator==(const CutFamily& o) const { return grid_ == o.grid_ && cuts_ == o.cuts_; }
  bool operator!=(const CutFamily& o) const { return !(*this == o); }

 private:
  std::vector<T> grid_;
  std::vector<Interval<T>> cuts_;
};

/// Exact cuts of an L_u element; endpoints are rounded to T when T is double.
template <class T = double>
CutFamily<T> cuts_of(const TruthValue& f, const std::vector<T>& alpha_grid) {
  std::vector<Interval<T>> cuts;
  cuts.reserve(alpha_grid.size());
  for (const T& alpha : alpha_grid) {
    Rational a;
    if constexpr (std::is_same_v<T, Rational>)
      a = alpha;
    else
      a = to_rational(static_cast<double>(alpha));
    auto comps = alpha_cut(f, a);
    if (comps.empty()) throw NotInLu("cut at level " + format_rational(a) + " is empty");
    if (comps.size() > 1) throw NotInLu("cut at level " + format_rational(a) + " is disconnected");
    if (!comps.front().closed()) throw NotInLu("cut at level " + format_rational(a) + " is not closed");
    cuts.emplace_back(scalar_cast<T>(comps.front().lo), scalar_cast<T>(comps.front().hi));
  }
  return CutFamily<T>(alpha_grid, std::move(cuts));
}

/// The usc staircase x -> max{ alpha_i : x in cut_i } (0 outside every cut).
template <class T>
TruthValue tv_from_cuts(const CutFamily<T>& c) {
  if (!c.is_nested()) throw NotNested("tv_from_cuts: cut family is not nested");
  std::vector<T> knots{T(0), T(1)};
  for (const auto& iv : c.cuts()) {
    knots.push_back(iv.lo());
    knots.push_back(iv.hi());
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  const std::size_t m = c.size();
  // Membership is monotone in the level index, so each value is a binary search.
  auto level_value = [&](auto member) -> Rational {
    std::size_t lo = 0, hi = m;  // first index where member() fails
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (member(c[mid]))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == 0) return Rational(0);
    const T& a = c.alpha_grid()[lo - 1];
    if constexpr (std::is_same_v<T, Rational>)
      return a;
    else
      return to_rational(static_cast<double>(a));
  };
  auto exact = [](const T& x) -> Rational {
    if constexpr (std::is_same_v<T, Rational>)
      return x;
    else
      return to_rational(static_cast<double>(x));
  };

  std::vector<Rational> xs, vs;
  std::vector<Segment> segs;
  for (std::size_t k = 0; k < knots.size(); ++k) {
    const T& p = knots[k];
    xs.push_back(exact(p));
    vs.push_back(level_value([&](const Interval<T>& iv) { return iv.contains(p); }));
    if (k + 1 == knots.size()) break;
    const T& q = knots[k + 1];
    Rational v = level_value([&](const Interval<T>& iv) { return iv.lo() <= p && q <= iv.hi(); });
    segs.push_back({v, v});
  }
  return TruthValue(std::move(xs), std::move(vs), std::move(segs));
}

}  // namespace t2conv
