#pragma once

// JSON and CSV encodings.
//
// Rationals are written as JSON numbers when the shortest decimal of the
// nearest double reads back as the same rational (0.5, 0.3, 1/1024, ...), and
// as "p/q" strings otherwise.  Readers accept numbers, decimal strings and
// "p/q" strings; a JSON number is read through its shortest decimal form, so
// 0.3 means 3/10 exactly.

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"
#include "t2conv/convolution.hpp"
#include "t2conv/error.hpp"
#include "t2conv/interval.hpp"
#include "t2conv/rational.hpp"
#include "t2conv/tnorm.hpp"
#include "t2conv/truth_value.hpp"

namespace t2conv {

using json = nlohmann::json;

/// Shortest decimal that reads back as the same double.
inline std::string shortest_decimal(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Scalars

inline json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  const double d = to_double(q);
  const std::string s = shortest_decimal(d);
  if (s.find_first_of("eE") == std::string::npos && parse_rational(s) == q) return d;
  return format_rational(q);
}

inline Rational rational_from_json(const json& j, const std::string& field) {
  try {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()), 10);
    if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()), 10);
    if (j.is_number_float()) {
      std::string s = shortest_decimal(j.get<double>());
      auto e = s.find_first_of("eE");
      if (e == std::string::npos) return parse_rational(s);
      // d.ddd e-k: scale the mantissa exactly
      Rational mant = parse_rational(s.substr(0, e));
      int exp10 = std::stoi(s.substr(e + 1));
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
      Rational r = exp10 < 0 ? Rational(mant / Rational(p)) : Rational(mant * Rational(p));
      r.canonicalize();
      return r;
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError("field '" + field + "': " + e.what());
  }
  throw ParseError("field '" + field + "': expected a number or a rational string");
}

template <class T>
json scalar_to_json(const T& x) {
  if constexpr (std::is_same_v<T, Rational>)
    return rational_to_json(x);
  else
    return static_cast<double>(x);
}

template <class T>
T scalar_from_json(const json& j, const std::string& field) {
  if constexpr (std::is_same_v<T, Rational>) {
    return rational_from_json(j, field);
  } else {
    if (j.is_number()) return j.get<double>();
    return static_cast<T>(to_double(rational_from_json(j, field)));
  }
}

namespace detail {

inline const json& require(const json& j, const std::string& key, const std::string& context) {
  if (!j.is_object()) throw ParseError(context + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(context + ": missing field '" + key + "'");
  return *it;
}

inline const json& require_array(const json& j, const std::string& key, const std::string& context) {
  const json& a = require(j, key, context);
  if (!a.is_array()) throw ParseError(context + ": field '" + key + "' must be an array");
  return a;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// TnormSpec: {"kind": "...", "summands": [{"lo", "hi", "inner"}]}

inline json to_json(const TnormSpec& t) {
  json j{{"kind", to_string(t.kind())}};
  if (t.kind() == TnormKind::ordinal_sum) {
    json arr = json::array();
    for (const auto& s : t.summands())
      arr.push_back({{"lo", rational_to_json(s.lo)}, {"hi", rational_to_json(s.hi)}, {"inner", to_string(s.inner)}});
    j["summands"] = arr;
  }
  return j;
}

inline TnormSpec tnorm_from_json(const json& j) {
  const json& kind = detail::require(j, "kind", "t-norm");
  if (!kind.is_string()) throw ParseError("t-norm: field 'kind' must be a string");
  auto k = parse_tnorm_kind(kind.get<std::string>());
  if (!k) throw ParseError("t-norm: field 'kind' has unknown value '" + kind.get<std::string>() + "'");
  if (*k != TnormKind::ordinal_sum) return TnormSpec::of_kind(*k);
  std::vector<Summand> summands;
  const json& arr = detail::require_array(j, "summands", "t-norm");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string ctx = "t-norm summands[" + std::to_string(i) + "]";
    const json& inner = detail::require(arr[i], "inner", ctx);
    auto in = inner.is_string() ? parse_inner_norm(inner.get<std::string>()) : std::nullopt;
    if (!in) throw ParseError(ctx + ": field 'inner' must be \"product\" or \"lukasiewicz\"");
    summands.push_back({rational_from_json(detail::require(arr[i], "lo", ctx), ctx + ".lo"),
                        rational_from_json(detail::require(arr[i], "hi", ctx), ctx + ".hi"), *in});
  }
  return ordinal_sum(std::move(summands));
}

// ---------------------------------------------------------------------------
// TruthValue: segments[i] = {"left_val", "right_val"} are the one-sided limits
// at the left and right end of (x_i, x_{i+1}).

inline json to_json(const TruthValue& f) {
  json xs = json::array(), vs = json::array(), segs = json::array();
  for (const auto& x : f.breakpoints()) xs.push_back(rational_to_json(x));
  for (const auto& v : f.point_values()) vs.push_back(rational_to_json(v));
  for (const auto& s : f.segments())
    segs.push_back({{"left_val", rational_to_json(s.left)}, {"right_val", rational_to_json(s.right)}});
  return {{"breakpoints", xs}, {"point_values", vs}, {"segments", segs}};
}

inline TruthValue truth_value_from_json(const json& j) {
  const std::string ctx = "truth value";
  std::vector<Rational> xs, vs;
  std::vector<Segment> segs;
  const json& jx = detail::require_array(j, "breakpoints", ctx);
  const json& jv = detail::require_array(j, "point_values", ctx);
  const json& js = detail::require_array(j, "segments", ctx);
  for (std::size_t i = 0; i < jx.size(); ++i) xs.push_back(rational_from_json(jx[i], "breakpoints[" + std::to_string(i) + "]"));
  for (std::size_t i = 0; i < jv.size(); ++i)
    vs.push_back(rational_from_json(jv[i], "point_values[" + std::to_string(i) + "]"));
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string sctx = "segments[" + std::to_string(i) + "]";
    segs.push_back({rational_from_json(detail::require(js[i], "left_val", sctx), sctx + ".left_val"),
                    rational_from_json(detail::require(js[i], "right_val", sctx), sctx + ".right_val")});
  }
  if (segs.size() + 1 != xs.size())
    throw ParseError("truth value: field 'segments' needs exactly one entry fewer than 'breakpoints'");
  if (vs.size() != xs.size()) throw ParseError("truth value: field 'point_values' must match 'breakpoints' in length");
  try {
    return TruthValue(std::move(xs), std::move(vs), std::move(segs));
  } catch (const BadShape& e) {
    throw ParseError(std::string("truth value: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// CutFamily: {"alpha_grid": [...], "cuts": [{"lo", "hi"}]}

template <class T>
json to_json(const CutFamily<T>& c) {
  json grid = json::array(), cuts = json::array();
  for (const auto& a : c.alpha_grid()) grid.push_back(scalar_to_json(a));
  for (const auto& iv : c.cuts()) cuts.push_back({{"lo", scalar_to_json(iv.lo())}, {"hi", scalar_to_json(iv.hi())}});
  return {{"alpha_grid", grid}, {"cuts", cuts}};
}

template <class T = double>
CutFamily<T> cut_family_from_json(const json& j) {
  const std::string ctx = "cut family";
  std::vector<T> grid;
  std::vector<Interval<T>> cuts;
  const json& jg = detail::require_array(j, "alpha_grid", ctx);
  const json& jc = detail::require_array(j, "cuts", ctx);
  for (std::size_t i = 0; i < jg.size(); ++i) grid.push_back(scalar_from_json<T>(jg[i], "alpha_grid[" + std::to_string(i) + "]"));
  try {
    for (std::size_t i = 0; i < jc.size(); ++i) {
      const std::string cctx = "cuts[" + std::to_string(i) + "]";
      cuts.emplace_back(scalar_from_json<T>(detail::require(jc[i], "lo", cctx), cctx + ".lo"),
                        scalar_from_json<T>(detail::require(jc[i], "hi", cctx), cctx + ".hi"));
    }
    return CutFamily<T>(std::move(grid), std::move(cuts));
  } catch (const BadShape& e) {
    throw ParseError(std::string("cut family: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Files

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// ---------------------------------------------------------------------------
// CSV

namespace detail {

inline std::string csv_number(double x) { return shortest_decimal(x); }

}  // namespace detail

/// Columns x,value,witness_a,witness_b; witnesses are empty where no pair landed.
inline void write_csv(std::ostream& os, const SampledFunction& s) {
  os << "x,value,witness_a,witness_b\n";
  for (int k = 0; k <= s.n; ++k) {
    const auto& w = s.witness[static_cast<std::size_t>(k)];
    os << detail::csv_number(s.x(k)) << ',' << detail::csv_number(s.point_best[static_cast<std::size_t>(k)]) << ',';
    if (w) os << detail::csv_number(w->a) << ',' << detail::csv_number(w->b);
    else os << ',';
    os << '\n';
  }
}

/// Columns x,value as a polyline: at each breakpoint the limit from the left,
/// the value, and the limit from the right, in that order.
inline void write_csv(std::ostream& os, const TruthValue& f) {
  const auto& xs = f.breakpoints();
  os << "x,value\n";
  auto row = [&](const Rational& x, const Rational& v) {
    os << detail::csv_number(to_double(x)) << ',' << detail::csv_number(to_double(v)) << '\n';
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) row(xs[i], f.segments()[i - 1].right);
    row(xs[i], f.point_values()[i]);
    if (i + 1 < xs.size()) row(xs[i], f.segments()[i].left);
  }
}

/// Columns alpha,lo,hi.
template <class T>
void write_csv(std::ostream& os, const CutFamily<T>& c) {
  os << "alpha,lo,hi\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    os << detail::csv_number(as_double(c.alpha_grid()[i])) << ',' << detail::csv_number(as_double(c[i].lo())) << ','
       << detail::csv_number(as_double(c[i].hi())) << '\n';
}

}  // namespace t2conv
