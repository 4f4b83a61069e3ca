#pragma once

// The sup-convolution (f *_tri g)(x) = sup{ f(a) tri g(b) : a * b = x }.
//
// Three routes:
//   * convolve_oracle / convolve3_oracle enumerate grid pairs (triples) and
//     keep running maxima, giving a lower envelope with witnesses;
//   * meet_min is the exact closed form for * = tri = min;
//   * convolve_cuts works on alpha-cut families and computes every output cut
//     from the minimal frontier of the up-set {(i,j) : a_i tri a_j >= a_t}.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <vector>

#include "t2conv/error.hpp"
#include "t2conv/interval.hpp"
#include "t2conv/rational.hpp"
#include "t2conv/tnorm.hpp"
#include "t2conv/truth_value.hpp"

namespace t2conv {

// ---------------------------------------------------------------------------
// Exact meet for * = tri = min.  The fiber of z is ({z} x [z,1]) u ([z,1] x {z}).

inline TruthValue meet_min(const TruthValue& f, const TruthValue& g) {
  TruthValue left = pointwise_min(f, right_sup_envelope(g));
  TruthValue right = pointwise_min(g, right_sup_envelope(f));
  return pointwise_max(left, right);
}

// ---------------------------------------------------------------------------
// Grid oracle

struct OracleWitness {
  double a = 0;
  double b = 0;
  std::optional<double> c;  // third factor, triple convolution only
};

/// Grid evidence for a convolution on the uniform partition of [0,1] into n cells.
struct SampledFunction {
  int n = 0;
  /// Running max over pairs with a*b in [k/n, (k+1)/n) (last cell closed).
  std::vector<double> cell_sup;
  /// Running max over pairs whose a*b rounds to the grid point k/n.
  std::vector<double> point_best;
  std::vector<std::optional<OracleWitness>> witness;

  double x(int k) const { return static_cast<double>(k) / n; }
  int nearest(double z) const { return static_cast<int>(std::lround(z * n)); }
};

namespace detail {

inline std::vector<double> sample_on_grid(const TruthValue& f, int n) {
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = to_double(f(ratio(i, n)));
  return out;
}

inline std::vector<double> grid_points(int n) {
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = static_cast<double>(i) / n;
  return out;
}

inline SampledFunction empty_sampled(int n) {
  SampledFunction s;
  s.n = n;
  s.cell_sup.assign(static_cast<std::size_t>(n), 0.0);
  s.point_best.assign(static_cast<std::size_t>(n) + 1, 0.0);
  s.witness.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
  return s;
}

inline void accumulate(SampledFunction& s, double z, double v, const OracleWitness& w) {
  int cell = std::min(static_cast<int>(z * s.n), s.n - 1);
  auto& cs = s.cell_sup[static_cast<std::size_t>(cell)];
  cs = std::max(cs, v);
  auto k = static_cast<std::size_t>(s.nearest(z));
  if (v > s.point_best[k] || !s.witness[k]) {
    s.point_best[k] = v;
    s.witness[k] = w;
  }
}

}  // namespace detail

/// Enumerates all (n+1)^2 grid pairs.  Values are realized by their witnesses,
/// so the result bounds the true convolution from below at those points.
inline SampledFunction convolve_oracle(const TruthValue& f, const TruthValue& g, const TnormSpec& star,
                                       const TnormSpec& tri, int n) {
  if (n < 16) throw std::invalid_argument("convolve_oracle: n must be >= 16");
  auto fa = detail::sample_on_grid(f, n);
  auto gb = detail::sample_on_grid(g, n);
  auto pts = detail::grid_points(n);
  SampledFunction s = detail::empty_sampled(n);
  for (int i = 0; i <= n; ++i) {
    const double a = pts[static_cast<std::size_t>(i)];
    const double fv = fa[static_cast<std::size_t>(i)];
    for (int j = 0; j <= n; ++j) {
      const double b = pts[static_cast<std::size_t>(j)];
      detail::accumulate(s, star(a, b), tri(fv, gb[static_cast<std::size_t>(j)]), OracleWitness{a, b, std::nullopt});
    }
  }
  return s;
}

inline constexpr int kMaxTripleResolution = 200;

/// Triple-product analogue over (n+1)^3 grid triples; n is capped at 200.
inline SampledFunction convolve3_oracle(const TruthValue& f, const TruthValue& g, const TruthValue& h,
                                        const TnormSpec& star, const TnormSpec& tri, int n) {
  if (n < 16) throw std::invalid_argument("convolve3_oracle: n must be >= 16");
  n = std::min(n, kMaxTripleResolution);
  auto fa = detail::sample_on_grid(f, n);
  auto gb = detail::sample_on_grid(g, n);
  auto hc = detail::sample_on_grid(h, n);
  auto pts = detail::grid_points(n);
  SampledFunction s = detail::empty_sampled(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double ab = star(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
      const double fg = tri(fa[static_cast<std::size_t>(i)], gb[static_cast<std::size_t>(j)]);
      for (int k = 0; k <= n; ++k) {
        const double c = pts[static_cast<std::size_t>(k)];
        detail::accumulate(s, star(ab, c), tri(fg, hc[static_cast<std::size_t>(k)]),
                           OracleWitness{pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)], c});
      }
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Cut engine

struct FrontierPair {
  std::size_t i = 0;
  std::size_t j = 0;
  bool operator==(const FrontierPair& o) const { return i == o.i && j == o.j; }
};

template <class T>
struct CutConvolution {
  CutFamily<T> family;
  /// Per level: the pair (i, j) realizing the lower / upper endpoint.
  std::vector<FrontierPair> lo_witness;
  std::vector<FrontierPair> hi_witness;
};

namespace detail {

template <class T>
void check_engine_inputs(const CutFamily<T>& fc, const CutFamily<T>& gc, const TnormSpec& star, const TnormSpec& tri) {
  if (!star.is_continuous())
    throw HypothesisViolation("convolve_cuts: outer operation " + star.name() + " is not a continuous t-norm");
  if (!tri.is_right_continuous())
    throw HypothesisViolation("convolve_cuts: inner operation " + tri.name() + " is not right-continuous");
  if (fc.alpha_grid() != gc.alpha_grid()) throw GridMismatch("convolve_cuts: cut families use different alpha grids");
}

}  // namespace detail

/// Output cut at level a_t is [min lo_f(i)*lo_g(j), max hi_f(i)*hi_g(j)] over
/// S_t = {(i,j) : a_i tri a_j >= a_t}.  S_t is an up-set and both objectives are
/// monotone, so only the frontier (i, J_t(i)) with J_t(i) = min{j : (i,j) in S_t}
/// matters; J_t is nonincreasing in i, found by one two-pointer sweep per level.
template <class T>
CutConvolution<T> convolve_cuts_detailed(const CutFamily<T>& fc, const CutFamily<T>& gc, const TnormSpec& star,
                                         const TnormSpec& tri) {
  detail::check_engine_inputs(fc, gc, star, tri);
  const auto& alpha = fc.alpha_grid();
  const std::size_t m = alpha.size();
  std::vector<Interval<T>> cuts;
  std::vector<FrontierPair> low_w, high_w;
  cuts.reserve(m);
  for (std::size_t t = 0; t < m; ++t) {
    std::optional<T> best_lo, best_hi;
    FrontierPair wl, wh;
    std::size_t j = m;
    for (std::size_t i = 0; i < m; ++i) {
      while (j > 0 && tri(alpha[i], alpha[j - 1]) >= alpha[t]) --j;
      if (j == m) continue;
      T lo = star(fc[i].lo(), gc[j].lo());
      T hi = star(fc[i].hi(), gc[j].hi());
      if (!best_lo || lo < *best_lo) {
        best_lo = lo;
        wl = {i, j};
      }
      if (!best_hi || hi > *best_hi) {
        best_hi = hi;
        wh = {i, j};
      }
    }
    // (m-1, t) is always in S_t because 1 tri a_t = a_t.
    cuts.emplace_back(*best_lo, *best_hi);
    low_w.push_back(wl);
    high_w.push_back(wh);
  }
  return {CutFamily<T>(alpha, std::move(cuts)), std::move(low_w), std::move(high_w)};
}

template <class T>
CutFamily<T> convolve_cuts(const CutFamily<T>& fc, const CutFamily<T>& gc, const TnormSpec& star,
                           const TnormSpec& tri) {
  return convolve_cuts_detailed(fc, gc, star, tri).family;
}

/// Reference scan over every pair of S_t, O(m^2) per level.
template <class T>
CutFamily<T> convolve_cuts_brute(const CutFamily<T>& fc, const CutFamily<T>& gc, const TnormSpec& star,
                                 const TnormSpec& tri) {
  detail::check_engine_inputs(fc, gc, star, tri);
  const auto& alpha = fc.alpha_grid();
  const std::size_t m = alpha.size();
  std::vector<Interval<T>> cuts;
  for (std::size_t t = 0; t < m; ++t) {
    std::optional<T> best_lo, best_hi;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (!(tri(alpha[i], alpha[j]) >= alpha[t])) continue;
        T lo = star(fc[i].lo(), gc[j].lo());
        T hi = star(fc[i].hi(), gc[j].hi());
        if (!best_lo || lo < *best_lo) best_lo = lo;
        if (!best_hi || hi > *best_hi) best_hi = hi;
      }
    cuts.emplace_back(*best_lo, *best_hi);
  }
  return CutFamily<T>(alpha, std::move(cuts));
}

// ---------------------------------------------------------------------------
// Staircase vs oracle

/// Double-precision copy of a truth value for fast windowed queries.
class PiecewiseView {
 public:
  explicit PiecewiseView(const TruthValue& f) {
    for (const auto& x : f.breakpoints()) xs_.push_back(to_double(x));
    for (const auto& v : f.point_values()) vs_.push_back(to_double(v));
    for (const auto& s : f.segments()) {
      left_.push_back(to_double(s.left));
      right_.push_back(to_double(s.right));
    }
  }

  double operator()(double x) const {
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
    if (xs_[i] == x || i + 1 == xs_.size()) return vs_[i];
    return affine(i, x);
  }

  /// sup over the closed window [lo, hi].
  double sup_on(double lo, double hi) const {
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
    double best = std::max((*this)(lo), (*this)(hi));
    auto it = std::upper_bound(xs_.begin(), xs_.end(), lo);
    std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
    for (; i + 1 < xs_.size() && xs_[i] < hi; ++i) {
      if (xs_[i] >= lo) best = std::max(best, vs_[i]);
      double a = std::max(xs_[i], lo), b = std::min(xs_[i + 1], hi);
      best = std::max({best, affine(i, a), affine(i, b)});
    }
    return best;
  }

 private:
  double affine(std::size_t i, double x) const {
    if (left_[i] == right_[i]) return left_[i];
    return left_[i] + (right_[i] - left_[i]) * (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
  }

  std::vector<double> xs_, vs_, left_, right_;
};

/// Fiber lower bound at a single point z: for each a on a resolution-N grid
/// (plus f's breakpoints and z itself), bisection over doubles finds
/// {b : |a*b - z| <= halfwidth} and g's supremum there is read off exactly.
/// Every value returned is realized by a pair with a*b inside the window.
class FiberOracle {
 public:
  FiberOracle(const TruthValue& f, const TruthValue& g, TnormSpec star, TnormSpec tri, int resolution)
      : star_(std::move(star)), tri_(std::move(tri)), f_(f), g_(g) {
    if (resolution < 16) throw std::invalid_argument("FiberOracle: resolution must be >= 16");
    for (int i = 0; i <= resolution; ++i) as_.push_back(static_cast<double>(i) / resolution);
    // inexact breakpoints enter from both sides so jumps there are seen
    for (const auto& x : f.breakpoints()) {
      const double d = to_double(x);
      as_.push_back(d);
      if (Rational(d) != x) {
        as_.push_back(std::nextafter(d, 0.0));
        as_.push_back(std::nextafter(d, 1.0));
      }
    }
    std::sort(as_.begin(), as_.end());
    as_.erase(std::unique(as_.begin(), as_.end()), as_.end());
    for (double a : as_) fa_.push_back(to_double(f_(Rational(a))));
  }

  double value_near(double z, double halfwidth) const {
    double best = 0;
    auto visit = [&](double a, double fa) {
      auto lo = first_at_least(a, z - halfwidth);
      if (!lo) return;
      double hi = last_at_most(a, z + halfwidth);
      if (*lo > hi) return;
      best = std::max(best, tri_(fa, g_.sup_on(*lo, hi)));
    };
    for (std::size_t i = 0; i < as_.size(); ++i) visit(as_[i], fa_[i]);
    visit(z, to_double(f_(Rational(z))));
    return best;
  }

 private:
  static constexpr int kSteps = 200;

  // smallest b with star(a, b) >= t
  std::optional<double> first_at_least(double a, double t) const {
    if (star_(a, 0.0) >= t) return 0.0;
    if (star_(a, 1.0) < t) return std::nullopt;
    double lo = 0, hi = 1;
    for (int k = 0; k < kSteps; ++k) {
      double mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      (star_(a, mid) >= t ? hi : lo) = mid;
    }
    return hi;
  }

  // largest b with star(a, b) <= t
  double last_at_most(double a, double t) const {
    if (star_(a, 1.0) <= t) return 1.0;
    if (star_(a, 0.0) > t) return -1.0;
    double lo = 0, hi = 1;
    for (int k = 0; k < kSteps; ++k) {
      double mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      (star_(a, mid) <= t ? lo : hi) = mid;
    }
    return lo;
  }

  TnormSpec star_;
  TnormSpec tri_;
  TruthValue f_;
  PiecewiseView g_;
  std::vector<double> as_;
  std::vector<double> fa_;
};

// ---------------------------------------------------------------------------
// Exact section preimages for continuous t-norms

namespace detail {

struct BlockHit {
  Rational lo, hi;
  InnerNorm inner;
};

inline std::optional<BlockHit> open_block_of(const TnormSpec& star, const Rational& a) {
  if (star.kind() == TnormKind::product && a > 0 && a < 1) return BlockHit{0, 1, InnerNorm::product};
  if (star.kind() == TnormKind::lukasiewicz && a > 0 && a < 1) return BlockHit{0, 1, InnerNorm::lukasiewicz};
  if (star.kind() == TnormKind::ordinal_sum)
    for (const auto& s : star.summands())
      if (s.lo < a && a < s.hi) return BlockHit{s.lo, s.hi, s.inner};
  return std::nullopt;
}

// Inside a block, b -> a*b is b on [0, lo], the rescaled inner norm on
// [lo, hi] rising to a, then constant a.  Preimages solve the inner norm.
inline Rational inner_solve(const BlockHit& blk, const Rational& a, const Rational& p) {
  Rational w = blk.hi - blk.lo;
  Rational pa = (a - blk.lo) / w, pp = (p - blk.lo) / w;
  Rational pb = blk.inner == InnerNorm::product ? Rational(pp / pa) : Rational(pp + 1 - pa);
  return Rational(blk.lo + w * pb);
}

}  // namespace detail

/// inf{b : a*b >= p}, or nothing when a*1 = a < p.  Continuous zoo only.
inline std::optional<Rational> section_lower_preimage(const TnormSpec& star, const Rational& a, const Rational& p) {
  if (!star.is_continuous()) throw NotContinuous("section_lower_preimage: " + star.name() + " is not continuous");
  if (p <= 0) return Rational(0);
  if (a < p) return std::nullopt;
  auto blk = detail::open_block_of(star, a);
  if (!blk || p <= blk->lo) return p;
  return detail::inner_solve(*blk, a, p);
}

/// sup{b : a*b <= p}.  Continuous zoo only.
inline Rational section_upper_preimage(const TnormSpec& star, const Rational& a, const Rational& p) {
  if (!star.is_continuous()) throw NotContinuous("section_upper_preimage: " + star.name() + " is not continuous");
  if (a <= p) return 1;
  auto blk = detail::open_block_of(star, a);
  if (!blk || p < blk->lo) return p;
  return detail::inner_solve(*blk, a, p);
}

/// Rigorous upper bound on (f *_tri g)(p).  [0,1] is split at i/N and at f's
/// breakpoints.  Each knot a contributes tri(f(a), sup g on its b-preimage);
/// on each open a-cell every fiber point has b between the preimages at the
/// two cell ends, and monotonicity of tri bounds the cell's contribution by
/// tri(sup f on the open cell, sup g on that b-range).
inline Rational convolution_upper_bound(const TruthValue& f, const TruthValue& g, const TnormSpec& star,
                                        const TnormSpec& tri, const Rational& p, int resolution) {
  if (resolution < 1) throw std::invalid_argument("convolution_upper_bound: resolution must be >= 1");
  std::vector<Rational> as;
  for (int i = 0; i <= resolution; ++i) as.push_back(ratio(i, resolution));
  for (const auto& x : f.breakpoints()) as.push_back(x);
  std::sort(as.begin(), as.end());
  as.erase(std::unique(as.begin(), as.end()), as.end());
  Rational best = 0;
  auto consider = [&](const Rational& fa, const Rational& a_hi, const Rational& a_lo) {
    auto bmin = section_lower_preimage(star, a_hi, p);
    if (!bmin) return;
    Rational bmax = section_upper_preimage(star, a_lo, p);
    if (*bmin > bmax) return;
    Rational v = tri(fa, sup_on(g, *bmin, bmax));
    if (v > best) best = v;
  };
  for (std::size_t i = 0; i < as.size(); ++i) {
    consider(f(as[i]), as[i], as[i]);
    if (i + 1 < as.size()) consider(sup_on_open(f, as[i], as[i + 1]), as[i + 1], as[i]);
  }
  return best;
}

struct OracleDiscrepancy {
  double oracle_excess = 0;     // oracle above the staircase
  double staircase_excess = 0;  // staircase above the oracle
  double worst_x = 0;
  double value() const { return std::max(oracle_excess, staircase_excess); }
};

/// Oracle point k aggregates every a*b that rounds to k/n, so it is compared
/// with the staircase supremum over [x_k - 1/2n, x_k + 1/2n].  In the other
/// direction the staircase value at x_k is compared with the oracle maximum over
/// k-w..k+w: moving each factor of an optimal tuple to the adjacent grid point
/// on the side of its factor's peak loses no value and shifts a*b by at most
/// arity/n for 1-Lipschitz *, so w = arity + 1 points suffice.
inline OracleDiscrepancy compare_with_oracle(const TruthValue& staircase, const SampledFunction& oracle,
                                             int window = 3) {
  PiecewiseView h(staircase);
  OracleDiscrepancy d;
  const int n = oracle.n;
  const double half = 0.5 / n + 1e-9;  // slack for products rounding onto a cell boundary
  for (int k = 0; k <= n; ++k) {
    const double x = oracle.x(k);
    const double ov = oracle.point_best[static_cast<std::size_t>(k)];
    double up = ov - h.sup_on(x - half, x + half);
    double near = 0;
    for (int j = std::max(0, k - window); j <= std::min(n, k + window); ++j)
      near = std::max(near, oracle.point_best[static_cast<std::size_t>(j)]);
    double down = h(x) - near;
    if (up > d.oracle_excess) {
      d.oracle_excess = up;
      if (up >= d.staircase_excess) d.worst_x = x;
    }
    if (down > d.staircase_excess) {
      d.staircase_excess = down;
      if (down >= d.oracle_excess) d.worst_x = x;
    }
  }
  return d;
}

}  // namespace t2conv
