#pragma once

// Binary operations on [0,1]: the built-in t-norm zoo, ordinal sums of
// product/Lukasiewicz summands, and finite-grid probes for continuity and
// conditional cancellativity.
//
// Every operation is templated on the scalar so the same code runs on
// doubles (fast engines) and on exact rationals (exact checks).  The double
// versions are written so that they stay monotone, commutative and keep 1 as
// an exact unit under IEEE rounding; the frontier scan in convolution.hpp
// relies on that.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "t2conv/error.hpp"
#include "t2conv/rational.hpp"

namespace t2conv {

enum class TnormKind { minimum, product, lukasiewicz, drastic, nilpotent_minimum, ordinal_sum };
enum class InnerNorm { product, lukasiewicz };
enum class ContinuityClass { continuous, right_continuous, left_continuous, neither };
enum class ContinuityVerdict { continuous, right_continuous_only, left_continuous_only, neither };

inline std::string to_string(TnormKind k) {
  switch (k) {
    case TnormKind::minimum: return "minimum";
    case TnormKind::product: return "product";
    case TnormKind::lukasiewicz: return "lukasiewicz";
    case TnormKind::drastic: return "drastic";
    case TnormKind::nilpotent_minimum: return "nilpotent_minimum";
    case TnormKind::ordinal_sum: return "ordinal_sum";
  }
  return "?";
}

inline std::string to_string(InnerNorm k) {
  return k == InnerNorm::product ? "product" : "lukasiewicz";
}

inline std::string to_string(ContinuityClass c) {
  switch (c) {
    case ContinuityClass::continuous: return "continuous";
    case ContinuityClass::right_continuous: return "right_continuous";
    case ContinuityClass::left_continuous: return "left_continuous";
    case ContinuityClass::neither: return "neither";
  }
  return "?";
}

inline std::string to_string(ContinuityVerdict v) {
  switch (v) {
    case ContinuityVerdict::continuous: return "continuous";
    case ContinuityVerdict::right_continuous_only: return "right_continuous_only";
    case ContinuityVerdict::left_continuous_only: return "left_continuous_only";
    case ContinuityVerdict::neither: return "neither";
  }
  return "?";
}

/// Accepts the canonical names plus the short aliases used on the command line.
inline std::optional<TnormKind> parse_tnorm_kind(std::string_view s) {
  if (s == "minimum" || s == "min") return TnormKind::minimum;
  if (s == "product" || s == "prod") return TnormKind::product;
  if (s == "lukasiewicz" || s == "luk") return TnormKind::lukasiewicz;
  if (s == "drastic") return TnormKind::drastic;
  if (s == "nilpotent_minimum" || s == "nm") return TnormKind::nilpotent_minimum;
  if (s == "ordinal_sum") return TnormKind::ordinal_sum;
  return std::nullopt;
}

inline std::optional<InnerNorm> parse_inner_norm(std::string_view s) {
  if (s == "product") return InnerNorm::product;
  if (s == "lukasiewicz") return InnerNorm::lukasiewicz;
  return std::nullopt;
}

/// One block [lo, hi] of an ordinal sum, carrying a rescaled copy of `inner`.
struct Summand {
  Rational lo;
  Rational hi;
  InnerNorm inner = InnerNorm::product;

  bool operator==(const Summand& o) const { return lo == o.lo && hi == o.hi && inner == o.inner; }
};

namespace detail {

template <class T>
T lukasiewicz(const T& x, const T& y) {
  // max(x + y - 1, 0) evaluated as q - (1 - p): symmetric, exact at the unit,
  // and 1 - p is exact (Sterbenz) whenever the result can be positive.
  const T& p = x < y ? y : x;
  const T& q = x < y ? x : y;
  T r = q - (T(1) - p);
  return r > T(0) ? r : T(0);
}

template <class T>
T nilpotent_minimum(const T& x, const T& y) {
  const T& p = x < y ? y : x;
  const T& q = x < y ? x : y;
  return q > T(1) - p ? T(q) : T(0);
}

template <class T>
T drastic(const T& x, const T& y) {
  if (x == T(1)) return y;
  if (y == T(1)) return x;
  return T(0);
}

template <class T>
T inner_eval(InnerNorm k, const T& x, const T& y) {
  if (k == InnerNorm::product) return T(x * y);
  return lukasiewicz(x, y);
}

}  // namespace detail

/// Descriptor of a binary operation on [0,1] with its analytic continuity class.
class TnormSpec {
 public:
  static TnormSpec minimum() { return TnormSpec(TnormKind::minimum, {}); }
  static TnormSpec product() { return TnormSpec(TnormKind::product, {}); }
  static TnormSpec lukasiewicz() { return TnormSpec(TnormKind::lukasiewicz, {}); }
  static TnormSpec drastic() { return TnormSpec(TnormKind::drastic, {}); }
  static TnormSpec nilpotent_minimum() { return TnormSpec(TnormKind::nilpotent_minimum, {}); }

  /// Built-in kinds only; ordinal sums go through ordinal_sum().
  static TnormSpec of_kind(TnormKind k) {
    if (k == TnormKind::ordinal_sum) throw std::invalid_argument("of_kind: use ordinal_sum() for ordinal sums");
    return TnormSpec(k, {});
  }

  friend TnormSpec ordinal_sum(std::vector<Summand> summands);

  TnormKind kind() const { return kind_; }
  const std::vector<Summand>& summands() const { return summands_; }

  ContinuityClass declared_class() const {
    switch (kind_) {
      case TnormKind::drastic: return ContinuityClass::right_continuous;
      case TnormKind::nilpotent_minimum: return ContinuityClass::left_continuous;
      default: return ContinuityClass::continuous;
    }
  }

  bool is_continuous() const { return declared_class() == ContinuityClass::continuous; }
  bool is_right_continuous() const {
    auto c = declared_class();
    return c == ContinuityClass::continuous || c == ContinuityClass::right_continuous;
  }

  std::string name() const {
    if (kind_ != TnormKind::ordinal_sum) return to_string(kind_);
    std::string s = "ordinal_sum[";
    for (std::size_t i = 0; i < summands_.size(); ++i) {
      if (i) s += ",";
      s += "(" + format_rational(summands_[i].lo) + "," + format_rational(summands_[i].hi) + "," +
           to_string(summands_[i].inner) + ")";
    }
    return s + "]";
  }

  bool operator==(const TnormSpec& o) const { return kind_ == o.kind_ && summands_ == o.summands_; }

  template <class T>
  T operator()(const T& x, const T& y) const {
    switch (kind_) {
      case TnormKind::minimum: return smin(x, y);
      case TnormKind::product: return T(x * y);
      case TnormKind::lukasiewicz: return detail::lukasiewicz(x, y);
      case TnormKind::drastic: return detail::drastic(x, y);
      case TnormKind::nilpotent_minimum: return detail::nilpotent_minimum(x, y);
      case TnormKind::ordinal_sum: return eval_ordinal(x, y);
    }
    return T(0);
  }

  double operator()(double x, double y) const { return this->operator()<double>(x, y); }

 private:
  struct Bounds {
    double lo;
    double hi;
  };

  TnormSpec(TnormKind k, std::vector<Summand> s) : kind_(k), summands_(std::move(s)) {
    for (const auto& b : summands_) bounds_.push_back({to_double(b.lo), to_double(b.hi)});
  }

  template <class T>
  T eval_ordinal(const T& x, const T& y) const {
    for (std::size_t i = 0; i < summands_.size(); ++i) {
      T lo, hi;
      if constexpr (std::is_same_v<T, Rational>) {
        lo = summands_[i].lo;
        hi = summands_[i].hi;
      } else {
        lo = static_cast<T>(bounds_[i].lo);
        hi = static_cast<T>(bounds_[i].hi);
      }
      if (x < lo || x > hi || y < lo || y > hi) continue;
      // Edges of the block are fixed by the unit and the annihilator of the
      // inner norm; returning them directly keeps double evaluation monotone.
      if (x == hi || y == hi) return smin(x, y);
      if (x == lo || y == lo) return lo;
      T width = hi - lo;
      T u = (x - lo) / width;
      T v = (y - lo) / width;
      T r = lo + width * detail::inner_eval(summands_[i].inner, u, v);
      T cap = smin(x, y);
      if (r > cap) r = cap;
      if (r < lo) r = lo;
      return r;
    }
    return smin(x, y);
  }

  TnormKind kind_;
  std::vector<Summand> summands_;
  std::vector<Bounds> bounds_;
};

/// Ordinal sum of rescaled product/Lukasiewicz blocks; the empty list is the minimum.
inline TnormSpec ordinal_sum(std::vector<Summand> summands) {
  if (summands.empty()) return TnormSpec::minimum();
  for (const auto& s : summands) {
    if (!(s.lo < s.hi))
      throw DegenerateSummand("summand (" + format_rational(s.lo) + ", " + format_rational(s.hi) +
                              ") needs lo < hi");
    if (s.lo < 0 || s.hi > 1)
      throw DegenerateSummand("summand (" + format_rational(s.lo) + ", " + format_rational(s.hi) +
                              ") is not inside [0,1]");
  }
  std::sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < summands.size(); ++i) {
    // open intervals (a,b) and (c,d) with a <= c are disjoint iff b <= c
    if (summands[i - 1].hi > summands[i].lo)
      throw OverlappingSummands("summands (" + format_rational(summands[i - 1].lo) + ", " +
                                format_rational(summands[i - 1].hi) + ") and (" + format_rational(summands[i].lo) +
                                ", " + format_rational(summands[i].hi) + ") overlap");
  }
  return TnormSpec(TnormKind::ordinal_sum, std::move(summands));
}

inline double tnorm_eval(const TnormSpec& spec, double x, double y) { return spec(x, y); }
inline Rational tnorm_eval(const TnormSpec& spec, const Rational& x, const Rational& y) { return spec(x, y); }

// ---------------------------------------------------------------------------
// Probes.  These are finite-evidence classifiers, not proofs.

/// A section x*(-) whose one-sided limit at y differs from its value at y.
struct SectionJump {
  double x = 0;
  double y = 0;
  double value = 0;
  double limit = 0;
  bool from_above = false;
};

struct ContinuityProbe {
  ContinuityVerdict verdict = ContinuityVerdict::continuous;
  std::optional<SectionJump> right_jump;  // witness against right-continuity
  std::optional<SectionJump> left_jump;   // witness against left-continuity
};

/// Walks every grid section x*(-) and approaches every grid point y from above
/// and below along y +- 2^-k.  A side is discontinuous when the gap persists
/// for all k in the sequence.
inline ContinuityProbe probe_continuity(const TnormSpec& spec, int grid_size) {
  if (grid_size < 16) throw std::invalid_argument("probe_continuity: grid_size must be >= 16");
  constexpr double kGap = 1e-6;
  const int exponents[] = {20, 30, 40};
  ContinuityProbe out;
  const double n = grid_size;
  for (int i = 0; i <= grid_size && !(out.right_jump && out.left_jump); ++i) {
    const double x = i / n;
    for (int j = 0; j <= grid_size; ++j) {
      const double y = j / n;
      const double v = spec(x, y);
      if (!out.right_jump && j < grid_size) {
        bool jump = true;
        double lim = v;
        for (int k : exponents) {
          lim = spec(x, y + std::ldexp(1.0, -k));
          if (std::abs(lim - v) <= kGap) {
            jump = false;
            break;
          }
        }
        if (jump) out.right_jump = SectionJump{x, y, v, lim, true};
      }
      if (!out.left_jump && j > 0) {
        bool jump = true;
        double lim = v;
        for (int k : exponents) {
          lim = spec(x, y - std::ldexp(1.0, -k));
          if (std::abs(lim - v) <= kGap) {
            jump = false;
            break;
          }
        }
        if (jump) out.left_jump = SectionJump{x, y, v, lim, false};
      }
    }
  }
  if (!out.right_jump && !out.left_jump)
    out.verdict = ContinuityVerdict::continuous;
  else if (!out.right_jump)
    out.verdict = ContinuityVerdict::right_continuous_only;
  else if (!out.left_jump)
    out.verdict = ContinuityVerdict::left_continuous_only;
  else
    out.verdict = ContinuityVerdict::neither;
  return out;
}

struct CancellationWitness {
  double x1 = 0;
  double x2 = 0;
  double y = 0;
  double value = 0;
};

struct CancellativityProbe {
  bool cancellative = true;
  std::optional<CancellationWitness> witness;
};

/// Searches the grid for x1 != x2 with x1*y = x2*y > 0.  Sections are monotone,
/// so equal values at any two grid points imply equal values at adjacent ones.
inline CancellativityProbe probe_conditional_cancellativity(const TnormSpec& spec, int grid_size) {
  if (grid_size < 16) throw std::invalid_argument("probe_conditional_cancellativity: grid_size must be >= 16");
  const bool exact = spec.kind() != TnormKind::product && spec.kind() != TnormKind::ordinal_sum;
  const double rel_tol = exact ? 0.0 : 1e-12;
  const double n = grid_size;
  CancellativityProbe out;
  for (int j = 0; j <= grid_size; ++j) {
    const double y = j / n;
    double prev = spec(0.0, y);
    for (int i = 1; i <= grid_size; ++i) {
      const double x = i / n;
      const double v = spec(x, y);
      if (v > 0 && std::abs(v - prev) <= rel_tol * std::max(std::abs(v), std::abs(prev))) {
        out.cancellative = false;
        out.witness = CancellationWitness{(i - 1) / n, x, y, v};
        return out;
      }
      prev = v;
    }
  }
  return out;
}

}  // namespace t2conv
