#pragma once

// Reference computations written independently of the library internals.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "t2conv/t2conv.hpp"

namespace ref {

using t2conv::Rational;

inline Rational q(long p, long d) { return t2conv::ratio(p, d); }

inline Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Rational inner_eval(t2conv::InnerNorm k, const Rational& x, const Rational& y) {
  if (k == t2conv::InnerNorm::product) return x * y;
  return rmax(x + y - 1, 0);
}

// Closed forms, one case split per kind.
inline Rational tnorm(const t2conv::TnormSpec& t, const Rational& x, const Rational& y) {
  using t2conv::TnormKind;
  switch (t.kind()) {
    case TnormKind::minimum: return rmin(x, y);
    case TnormKind::product: return x * y;
    case TnormKind::lukasiewicz: return rmax(x + y - 1, 0);
    case TnormKind::drastic:
      if (x == 1) return y;
      if (y == 1) return x;
      return 0;
    case TnormKind::nilpotent_minimum: return x + y > 1 ? rmin(x, y) : Rational(0);
    case TnormKind::ordinal_sum:
      for (const auto& s : t.summands()) {
        if (s.lo <= x && x <= s.hi && s.lo <= y && y <= s.hi) {
          const Rational w = s.hi - s.lo;
          return s.lo + w * inner_eval(s.inner, (x - s.lo) / w, (y - s.lo) / w);
        }
      }
      return rmin(x, y);
  }
  return 0;
}

inline double tnorm(const t2conv::TnormSpec& t, double x, double y) {
  return t2conv::to_double(tnorm(t, Rational(x), Rational(y)));
}

/// Staircase value of a cut family: largest level whose cut contains x.
template <class T>
double staircase(const t2conv::CutFamily<T>& c, double x) {
  double v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double lo = t2conv::as_double(c[i].lo()), hi = t2conv::as_double(c[i].hi());
    if (lo <= x && x <= hi) v = std::max(v, t2conv::as_double(c.alpha_grid()[i]));
  }
  return v;
}

/// Output cuts from the definition: extrema over every pair (i, j) with
/// alpha_i tri alpha_j >= alpha_t.
inline t2conv::CutFamily<double> convolve_cuts_by_definition(const t2conv::CutFamily<double>& f,
                                                             const t2conv::CutFamily<double>& g,
                                                             const t2conv::TnormSpec& star,
                                                             const t2conv::TnormSpec& tri) {
  const auto& a = f.alpha_grid();
  std::vector<t2conv::Interval<double>> out;
  for (std::size_t t = 0; t < a.size(); ++t) {
    double lo = 2, hi = -1;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (tri(a[i], a[j]) < a[t]) continue;
        lo = std::min(lo, star(f[i].lo(), g[j].lo()));
        hi = std::max(hi, star(f[i].hi(), g[j].hi()));
      }
    out.emplace_back(lo, hi);
  }
  return t2conv::CutFamily<double>(a, out);
}

/// Sup of f(a) tri g(b) over a * b = x for a continuous star.  The scan runs
/// over a fine grid plus the breakpoints of f, and over the breakpoints of g
/// with the roles swapped; the partner factor comes from bisection on the
/// monotone section.
inline double convolution_at(const t2conv::TruthValue& f, const t2conv::TruthValue& g, const t2conv::TnormSpec& star,
                             const t2conv::TnormSpec& tri, double x, int samples) {
  auto partner = [&](double a, auto&& use) {
    if (star(a, 1.0) < x) return;
    double lo = 0, hi = 1;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (star(a, mid) < x ? lo : hi) = mid;
    }
    for (double b : {lo, hi})
      if (std::abs(star(a, b) - x) <= 1e-12) use(b);
  };
  // breakpoints are evaluated exactly; their double images may miss a jump
  double best = 0;
  for (int i = 0; i <= samples; ++i) {
    const double a = static_cast<double>(i) / samples;
    partner(a, [&](double b) { best = std::max(best, tri(f(a), g(b))); });
  }
  for (const auto& bp : f.breakpoints()) {
    const double fa = t2conv::to_double(f(bp));
    partner(t2conv::to_double(bp), [&](double b) { best = std::max(best, tri(fa, g(b))); });
  }
  for (const auto& bp : g.breakpoints()) {
    const double gb = t2conv::to_double(g(bp));
    partner(t2conv::to_double(bp), [&](double a) { best = std::max(best, tri(f(a), gb)); });
  }
  return best;
}

inline std::vector<t2conv::TnormSpec> hypothesis_stars() {
  using t2conv::InnerNorm;
  return {t2conv::TnormSpec::minimum(), t2conv::TnormSpec::product(), t2conv::TnormSpec::lukasiewicz(),
          t2conv::ordinal_sum({{q(1, 5), q(4, 5), InnerNorm::product}})};
}

inline std::vector<t2conv::TnormSpec> hypothesis_tris() {
  return {t2conv::TnormSpec::minimum(), t2conv::TnormSpec::product(), t2conv::TnormSpec::lukasiewicz(),
          t2conv::TnormSpec::drastic()};
}

inline std::vector<t2conv::TnormSpec> zoo() {
  using t2conv::InnerNorm;
  return {t2conv::TnormSpec::minimum(),
          t2conv::TnormSpec::product(),
          t2conv::TnormSpec::lukasiewicz(),
          t2conv::TnormSpec::drastic(),
          t2conv::TnormSpec::nilpotent_minimum(),
          t2conv::ordinal_sum({{q(0, 1), q(1, 2), InnerNorm::lukasiewicz}, {q(1, 2), q(1, 1), InnerNorm::product}})};
}

}  // namespace ref
