#pragma once

// Exact fuzzy truth values: piecewise-affine maps [0,1] -> [0,1] that may
// jump at breakpoints.  All coordinates are rationals, so evaluation, cuts,
// envelopes and the min/max combinations below are exact.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "t2conv/error.hpp"
#include "t2conv/rational.hpp"

namespace t2conv {

/// Affine piece on an open interval (x_i, x_{i+1}), stored by its one-sided
/// limits: `left` at x_i from the right and `right` at x_{i+1} from the left.
struct Segment {
  Rational left;
  Rational right;

  bool operator==(const Segment& o) const { return left == o.left && right == o.right; }
};

class TruthValue {
 public:
  /// Validates and canonicalizes.  Throws BadShape on malformed input.
  TruthValue(std::vector<Rational> breakpoints, std::vector<Rational> point_values, std::vector<Segment> segments)
      : xs_(std::move(breakpoints)), vs_(std::move(point_values)), segs_(std::move(segments)) {
    validate();
    canonicalize();
  }

  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& point_values() const { return vs_; }
  const std::vector<Segment>& segments() const { return segs_; }

  /// Exact value at x (point value at breakpoints, affine interpolation elsewhere).
  Rational operator()(const Rational& x) const {
    if (x < 0 || x > 1) throw std::invalid_argument("TruthValue: argument outside [0,1]");
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
    if (xs_[i] == x) return vs_[i];
    return affine(i, x);
  }

  double operator()(double x) const { return to_double((*this)(Rational(x))); }

  /// Value of segment i's affine formula at any x in [x_i, x_{i+1}].
  Rational affine(std::size_t i, const Rational& x) const {
    const Segment& s = segs_[i];
    if (s.left == s.right) return s.left;
    return Rational(s.left + (s.right - s.left) * (x - xs_[i]) / (xs_[i + 1] - xs_[i]));
  }

  /// Index of the segment whose closure contains the open interval (p, q).
  std::size_t segment_containing(const Rational& p) const {
    auto it = std::upper_bound(xs_.begin(), xs_.end(), p);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    return i == 0 ? 0 : std::min(i - 1, segs_.size() - 1);
  }

  bool operator==(const TruthValue& o) const { return xs_ == o.xs_ && vs_ == o.vs_ && segs_ == o.segs_; }
  bool operator!=(const TruthValue& o) const { return !(*this == o); }

 private:
  void validate() const {
    if (xs_.size() < 2) throw BadShape("truth value needs at least the breakpoints 0 and 1");
    if (xs_.front() != 0 || xs_.back() != 1) throw BadShape("breakpoints must start at 0 and end at 1");
    if (vs_.size() != xs_.size()) throw BadShape("point_values must have one entry per breakpoint");
    if (segs_.size() + 1 != xs_.size()) throw BadShape("segments must number breakpoints - 1");
    for (std::size_t i = 1; i < xs_.size(); ++i)
      if (!(xs_[i - 1] < xs_[i])) throw BadShape("breakpoints must be strictly increasing");
    auto in_unit = [](const Rational& v) { return v >= 0 && v <= 1; };
    for (const auto& v : vs_)
      if (!in_unit(v)) throw BadShape("point value outside [0,1]");
    for (const auto& s : segs_)
      if (!in_unit(s.left) || !in_unit(s.right)) throw BadShape("segment limit outside [0,1]");
  }

  // Drops interior breakpoints where the function is affine straight through.
  void canonicalize() {
    std::vector<Rational> xs{xs_.front()};
    std::vector<Rational> vs{vs_.front()};
    std::vector<Segment> segs{segs_.front()};
    for (std::size_t i = 1; i + 1 < xs_.size(); ++i) {
      const Segment& prev = segs.back();
      const Segment& next = segs_[i];
      const Rational& v = vs_[i];
      bool removable = v == prev.right && v == next.left &&
                       (prev.right - prev.left) * (xs_[i + 1] - xs_[i]) == (next.right - next.left) * (xs_[i] - xs.back());
      if (removable) {
        segs.back().right = next.right;
      } else {
        xs.push_back(xs_[i]);
        vs.push_back(v);
        segs.push_back(next);
      }
    }
    xs.push_back(xs_.back());
    vs.push_back(vs_.back());
    xs_ = std::move(xs);
    vs_ = std::move(vs);
    segs_ = std::move(segs);
  }

  std::vector<Rational> xs_;
  std::vector<Rational> vs_;
  std::vector<Segment> segs_;
};

inline Rational eval(const TruthValue& f, const Rational& x) { return f(x); }
inline double eval(const TruthValue& f, double x) { return f(x); }

// ---------------------------------------------------------------------------
// Predicates

struct PropertyReport {
  bool normal = false;
  bool convex = false;
  bool usc = false;
  bool attains_one = false;
  /// Location of the first usc or convexity violation found.
  std::optional<Rational> witness;

  bool in_lu() const { return normal && convex && usc; }
};

inline PropertyReport properties(const TruthValue& f) {
  const auto& xs = f.breakpoints();
  const auto& vs = f.point_values();
  const auto& segs = f.segments();
  PropertyReport r;

  Rational sup = 0;
  for (const auto& v : vs) sup = smax(sup, v);
  bool attained = false;
  for (const auto& v : vs) attained = attained || v == 1;
  for (const auto& s : segs) {
    sup = smax(sup, smax(s.left, s.right));
    attained = attained || (s.left == 1 && s.right == 1);
  }
  r.normal = sup == 1;
  r.attains_one = attained;

  r.usc = true;
  for (std::size_t i = 0; i < xs.size() && r.usc; ++i) {
    if ((i > 0 && vs[i] < segs[i - 1].right) || (i < segs.size() && vs[i] < segs[i].left)) {
      r.usc = false;
      r.witness = xs[i];
    }
  }

  // Quasiconcavity: the ordered sequence of point values and one-sided limits
  // must not dip below both its prefix maximum and its suffix maximum.
  std::vector<Rational> seq;
  std::vector<Rational> where;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    seq.push_back(vs[i]);
    where.push_back(xs[i]);
    if (i < segs.size()) {
      seq.push_back(segs[i].left);
      where.push_back(xs[i]);
      seq.push_back(segs[i].right);
      where.push_back(xs[i + 1]);
    }
  }
  std::vector<Rational> suffix(seq.size());
  suffix.back() = seq.back();
  for (std::size_t q = seq.size() - 1; q-- > 0;) suffix[q] = smax(seq[q], suffix[q + 1]);
  r.convex = true;
  Rational prefix = seq.front();
  for (std::size_t q = 1; q + 1 < seq.size(); ++q) {
    if (seq[q] < prefix && seq[q] < suffix[q + 1]) {
      r.convex = false;
      if (!r.witness) r.witness = where[q];
      break;
    }
    prefix = smax(prefix, seq[q]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Level sets

/// Connected component of a level set, with the closure status of each end.
struct CutComponent {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool closed() const { return lo_closed && hi_closed; }
  bool operator==(const CutComponent& o) const {
    return lo == o.lo && hi == o.hi && lo_closed == o.lo_closed && hi_closed == o.hi_closed;
  }
};

namespace detail {

inline std::vector<CutComponent> level_set(const TruthValue& f, const Rational& alpha, bool strict) {
  const auto& xs = f.breakpoints();
  const auto& vs = f.point_values();
  const auto& segs = f.segments();
  auto sat = [&](const Rational& v) { return strict ? v > alpha : v >= alpha; };
  std::vector<CutComponent> out;
  auto add = [&](CutComponent c) {
    if (!out.empty() && out.back().hi == c.lo && (out.back().hi_closed || c.lo_closed)) {
      out.back().hi = c.hi;
      out.back().hi_closed = c.hi_closed;
    } else {
      out.push_back(std::move(c));
    }
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (sat(vs[i])) add({xs[i], xs[i], true, true});
    if (i + 1 == xs.size()) break;
    const Rational& p = xs[i];
    const Rational& q = xs[i + 1];
    const Rational& L = segs[i].left;
    const Rational& R = segs[i].right;
    if (L == R) {
      if (sat(L)) add({p, q, false, false});
      continue;
    }
    Rational t = p + (alpha - L) * (q - p) / (R - L);
    if (L < R) {
      if (strict ? alpha < L : alpha <= L)
        add({p, q, false, false});
      else if (alpha < R)
        add({t, q, !strict, false});
    } else {
      if (strict ? alpha < R : alpha <= R)
        add({p, q, false, false});
      else if (alpha < L)
        add({p, t, false, !strict});
    }
  }
  return out;
}

}  // namespace detail

/// {x : f(x) >= alpha} as maximal components.  The 0-cut is [0,1].
inline std::vector<CutComponent> alpha_cut(const TruthValue& f, const Rational& alpha) {
  if (alpha <= 0) return {CutComponent{0, 1, true, true}};
  return detail::level_set(f, alpha, false);
}

/// {x : f(x) > alpha} as maximal components.
inline std::vector<CutComponent> strong_cut(const TruthValue& f, const Rational& alpha) {
  return detail::level_set(f, alpha, true);
}

// ---------------------------------------------------------------------------
// Envelopes and pointwise lattice operations

/// x -> sup{ f(y) : y >= x }.
inline TruthValue right_sup_envelope(const TruthValue& f) {
  const auto& xs = f.breakpoints();
  const auto& vs = f.point_values();
  const auto& segs = f.segments();
  // Built right to left, then reversed.
  std::vector<Rational> bx{xs.back()};
  std::vector<Rational> bv{vs.back()};
  std::vector<Segment> bs;  // stored as (left, right) in final orientation
  Rational running = vs.back();
  for (std::size_t i = segs.size(); i-- > 0;) {
    const Rational& p = xs[i];
    const Rational& q = xs[i + 1];
    const Rational& L = segs[i].left;
    const Rational& R = segs[i].right;
    if (L <= R) {
      Rational c = smax(R, running);
      bs.push_back({c, c});
      running = c;
    } else if (running >= L) {
      bs.push_back({running, running});
    } else if (running <= R) {
      bs.push_back({L, R});
      running = L;
    } else {
      Rational t = p + (L - running) * (q - p) / (L - R);
      bs.push_back({running, running});
      bx.push_back(t);
      bv.push_back(running);
      bs.push_back({L, running});
      running = L;
    }
    running = smax(running, vs[i]);
    bx.push_back(p);
    bv.push_back(running);
  }
  std::reverse(bx.begin(), bx.end());
  std::reverse(bv.begin(), bv.end());
  std::reverse(bs.begin(), bs.end());
  return TruthValue(std::move(bx), std::move(bv), std::move(bs));
}

/// x -> sup{ f(y) : y <= x }.
inline TruthValue left_sup_envelope(const TruthValue& f) {
  const auto& xs = f.breakpoints();
  const auto& vs = f.point_values();
  const auto& segs = f.segments();
  std::vector<Rational> bx{xs.front()};
  std::vector<Rational> bv{vs.front()};
  std::vector<Segment> bs;
  Rational running = vs.front();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Rational& p = xs[i];
    const Rational& q = xs[i + 1];
    const Rational& L = segs[i].left;
    const Rational& R = segs[i].right;
    if (L >= R) {
      Rational c = smax(L, running);
      bs.push_back({c, c});
      running = c;
    } else if (running >= R) {
      bs.push_back({running, running});
    } else if (running <= L) {
      bs.push_back({L, R});
      running = R;
    } else {
      Rational t = p + (running - L) * (q - p) / (R - L);
      bs.push_back({running, running});
      bx.push_back(t);
      bv.push_back(running);
      bs.push_back({running, R});
      running = R;
    }
    running = smax(running, vs[i + 1]);
    bx.push_back(q);
    bv.push_back(running);
  }
  return TruthValue(std::move(bx), std::move(bv), std::move(bs));
}

namespace detail {

inline TruthValue pointwise(const TruthValue& f, const TruthValue& g, bool take_min) {
  std::vector<Rational> grid;
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  auto pick = [&](const Rational& a, const Rational& b) { return take_min ? smin(a, b) : smax(a, b); };
  // true when f is the chosen side for differences d = f - g
  auto f_side = [&](const Rational& d) { return take_min ? d <= 0 : d >= 0; };

  std::vector<Rational> xs;
  std::vector<Rational> vs;
  std::vector<Segment> segs;
  std::size_t fi = 0, gi = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Rational& p = grid[k];
    xs.push_back(p);
    vs.push_back(pick(f(p), g(p)));
    if (k + 1 == grid.size()) break;
    const Rational& q = grid[k + 1];
    while (f.breakpoints()[fi + 1] <= p) ++fi;
    while (g.breakpoints()[gi + 1] <= p) ++gi;
    Rational fl = f.affine(fi, p), fr = f.affine(fi, q);
    Rational gl = g.affine(gi, p), gr = g.affine(gi, q);
    Rational dl = fl - gl, dr = fr - gr;
    if ((dl < 0 && dr > 0) || (dl > 0 && dr < 0)) {
      Rational t = p + (q - p) * dl / (dl - dr);
      Rational vt = f.affine(fi, t);
      bool f_first = f_side(dl);
      segs.push_back(f_first ? Segment{fl, vt} : Segment{gl, vt});
      xs.push_back(t);
      vs.push_back(vt);
      segs.push_back(f_first ? Segment{vt, gr} : Segment{vt, fr});
    } else {
      bool use_f = f_side(dl) && f_side(dr);
      segs.push_back(use_f ? Segment{fl, fr} : Segment{gl, gr});
    }
  }
  return TruthValue(std::move(xs), std::move(vs), std::move(segs));
}

}  // namespace detail

inline TruthValue pointwise_min(const TruthValue& f, const TruthValue& g) { return detail::pointwise(f, g, true); }
inline TruthValue pointwise_max(const TruthValue& f, const TruthValue& g) { return detail::pointwise(f, g, false); }

/// Supremum of f over the closed interval [lo, hi].
inline Rational sup_on(const TruthValue& f, const Rational& lo, const Rational& hi) {
  Rational best = smax(f(lo), f(hi));
  const auto& xs = f.breakpoints();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i + 1] <= lo || xs[i] >= hi) continue;
    Rational a = smax(xs[i], lo), b = smin(xs[i + 1], hi);
    best = smax(best, smax(f.affine(i, a), f.affine(i, b)));
    if (xs[i] >= lo) best = smax(best, f.point_values()[i]);
  }
  return best;
}

/// Supremum over the open interval (lo, hi), lo < hi: values at lo and hi
/// enter only as one-sided limits.
inline Rational sup_on_open(const TruthValue& f, const Rational& lo, const Rational& hi) {
  Rational best = 0;
  const auto& xs = f.breakpoints();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i + 1] <= lo || xs[i] >= hi) continue;
    Rational a = smax(xs[i], lo), b = smin(xs[i + 1], hi);
    best = smax(best, smax(f.affine(i, a), f.affine(i, b)));
    if (xs[i] > lo) best = smax(best, f.point_values()[i]);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Constructors

namespace detail {

inline bool in_open_unit(const Rational& v) { return v > 0 && v < 1; }

}  // namespace detail

/// Trapezoid with support [a, d] and plateau [b, c]; coincident knots give jumps.
inline TruthValue trapezoid_tv(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  if (!(0 <= a && a <= b && b <= c && c <= d && d <= 1))
    throw BadShape("trapezoid_tv needs 0 <= a <= b <= c <= d <= 1");
  std::vector<Rational> knots{0, a, b, c, d, 1};
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  auto value = [&](const Rational& x) -> Rational {
    if (b <= x && x <= c) return 1;
    if (a < x && x < b) return (x - a) / (b - a);
    if (c < x && x < d) return (d - x) / (d - c);
    return 0;
  };
  std::vector<Rational> vs;
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    vs.push_back(value(knots[i]));
    if (i + 1 == knots.size()) break;
    const Rational& p = knots[i];
    const Rational& q = knots[i + 1];
    Rational mid = (p + q) / 2;
    if (b <= mid && mid <= c)
      segs.push_back({1, 1});
    else if (a < mid && mid < b)
      segs.push_back({(p - a) / (b - a), (q - a) / (b - a)});
    else if (c < mid && mid < d)
      segs.push_back({(d - p) / (d - c), (d - q) / (d - c)});
    else
      segs.push_back({0, 0});
  }
  return TruthValue(std::move(knots), std::move(vs), std::move(segs));
}

inline TruthValue triangle_tv(const Rational& a, const Rational& c, const Rational& b) {
  if (!(a <= c && c <= b)) throw BadShape("triangle_tv needs a <= c <= b");
  return trapezoid_tv(a, c, c, b);
}

/// Characteristic function of the closed interval [a, b].
inline TruthValue interval_tv(const Rational& a, const Rational& b) {
  if (!(a <= b)) throw BadShape("interval_tv needs a <= b");
  return trapezoid_tv(a, a, b, b);
}

/// Characteristic function of the singleton {x}.
inline TruthValue point_tv(const Rational& x) { return trapezoid_tv(x, x, x, x); }

/// 1 at 0, `a` on (0, u], 0 afterwards.
inline TruthValue necessity_case1_f(const Rational& a, const Rational& u) {
  if (!detail::in_open_unit(a) || !detail::in_open_unit(u)) throw BadShape("necessity_case1_f needs a, u in (0,1)");
  return TruthValue({0, u, 1}, {1, a, 0}, {{a, a}, {0, 0}});
}

/// Affine from 1 at 0 down to `b` at u, 0 afterwards.
inline TruthValue necessity_case1_g(const Rational& b, const Rational& u) {
  if (!detail::in_open_unit(b) || !detail::in_open_unit(u)) throw BadShape("necessity_case1_g needs b, u in (0,1)");
  return TruthValue({0, u, 1}, {1, b, 0}, {{1, b}, {0, 0}});
}

/// 0 on [0, u), `a` on [u, 1), 1 at 1.
inline TruthValue necessity_case2_f(const Rational& a, const Rational& u) {
  if (!detail::in_open_unit(a) || !detail::in_open_unit(u)) throw BadShape("necessity_case2_f needs a, u in (0,1)");
  return TruthValue({0, u, 1}, {0, a, 1}, {{0, 0}, {a, a}});
}

/// 0 on [0, v), affine from `b` at v up to 1 at 1.
inline TruthValue necessity_case2_g(const Rational& b, const Rational& v) {
  if (!detail::in_open_unit(b) || !detail::in_open_unit(v)) throw BadShape("necessity_case2_g needs b, v in (0,1)");
  return TruthValue({0, v, 1}, {0, b, 1}, {{0, 0}, {b, 1}});
}

}  // namespace t2conv
