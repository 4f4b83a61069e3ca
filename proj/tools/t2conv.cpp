// Command-line front end.  Exit codes: 0 success, 1 a checked law failed (or
// the demo found no counterexample), 2 bad input.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "t2conv/t2conv.hpp"

namespace fs = std::filesystem;
using namespace t2conv;

namespace {

constexpr int kOk = 0;
constexpr int kLawFailed = 1;
constexpr int kInputError = 2;

const char* kFooter = R"(CSV columns:
  truth value      x,value              (polyline: left limit, value, right limit per breakpoint)
  cut family       alpha,lo,hi
  oracle samples   x,value,witness_a,witness_b   (witness empty where no grid pair landed)

--star/--tri take a t-norm name (minimum|min, product|prod, lukasiewicz|luk, drastic,
nilpotent_minimum|nm), a path to a t-norm JSON file, or inline JSON.
The default seed is read from T2CONV_SEED when set.)";

struct Options {
  std::string f, g, h;
  std::string star = "minimum", tri = "minimum";
  int m = 128;
  int n = 2000;
  std::size_t trials = 100;
  std::size_t assoc_trials = 50;
  std::uint64_t seed = 1;
  std::string out, csv;
  std::string format = "json";
  std::vector<std::string> xs;
  std::string which = "case1";
  std::string a = "1/2", b = "1/2", u, v;
  std::size_t summand = 0;
  std::string engine = "cuts";
  bool details = false;
};

TruthValue load_tv(const std::string& path, const char* flag) {
  if (path.empty()) throw ParseError(std::string("missing required option ") + flag);
  try {
    return truth_value_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(std::string(flag) + " '" + path + "': " + e.what());
  }
}

TnormSpec load_tnorm(const std::string& arg, const char* flag) {
  try {
    if (auto k = parse_tnorm_kind(arg); k && *k != TnormKind::ordinal_sum) return TnormSpec::of_kind(*k);
    if (!arg.empty() && arg.front() == '{') return tnorm_from_json(json::parse(arg));
    if (fs::exists(arg)) return tnorm_from_json(read_json_file(arg));
  } catch (const json::exception& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
  throw ParseError(std::string(flag) + ": '" + arg + "' is neither a t-norm name nor a readable JSON file");
}

Rational arg_rational(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
}

/// Writes to --out when given, stdout otherwise.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(o.out);
  if (!os) throw ParseError("cannot write '" + o.out + "'");
  os << text;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot write '" + path.string() + "'");
  os << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <class Writer>
std::string to_csv(Writer&& w) {
  std::ostringstream os;
  w(os);
  return os.str();
}

int cmd_eval(const Options& o) {
  TruthValue f = load_tv(o.f, "--f");
  std::vector<Rational> pts;
  for (const auto& x : o.xs) {
    pts.push_back(arg_rational(x, "--x"));
    if (pts.back() < 0 || pts.back() > 1) throw ParseError("--x: " + x + " is outside [0,1]");
  }
  if (o.format == "csv") {
    std::ostringstream os;
    os << "x,value\n";
    for (const auto& q : pts) os << shortest_decimal(to_double(q)) << ',' << shortest_decimal(to_double(f(q))) << '\n';
    emit(o, os.str());
    return kOk;
  }
  auto p = properties(f);
  json values = json::array();
  for (const auto& q : pts) values.push_back({{"x", rational_to_json(q)}, {"value", rational_to_json(f(q))}});
  json props{{"normal", p.normal}, {"convex", p.convex}, {"usc", p.usc}, {"attains_one", p.attains_one}};
  if (p.witness) props["witness"] = rational_to_json(*p.witness);
  emit(o, dump({{"properties", props}, {"values", values}}));
  return kOk;
}

int cmd_cuts(const Options& o) {
  TruthValue f = load_tv(o.f, "--f");
  auto c = cuts_of<double>(f, uniform_grid<double>(o.m));
  emit(o, o.format == "csv" ? to_csv([&](std::ostream& os) { write_csv(os, c); }) : dump(to_json(c)));
  return kOk;
}

int cmd_convolve(const Options& o) {
  TruthValue f = load_tv(o.f, "--f"), g = load_tv(o.g, "--g");
  TnormSpec star = load_tnorm(o.star, "--star"), tri = load_tnorm(o.tri, "--tri");
  if (o.engine == "oracle") {
    auto s = convolve_oracle(f, g, star, tri, o.n);
    emit(o, to_csv([&](std::ostream& os) { write_csv(os, s); }));
    return kOk;
  }
  const auto grid = uniform_grid<double>(o.m);
  auto h = convolve_cuts(cuts_of<double>(f, grid), cuts_of<double>(g, grid), star, tri);
  if (!o.csv.empty()) write_file(o.csv, to_csv([&](std::ostream& os) { write_csv(os, tv_from_cuts(h)); }));
  emit(o, o.format == "csv" ? to_csv([&](std::ostream& os) { write_csv(os, h); }) : dump(to_json(h)));
  return kOk;
}

int cmd_meet(const Options& o) {
  TruthValue r = meet_min(load_tv(o.f, "--f"), load_tv(o.g, "--g"));
  emit(o, o.format == "csv" ? to_csv([&](std::ostream& os) { write_csv(os, r); }) : dump(to_json(r)));
  return kOk;
}

int cmd_order(const Options& o) {
  TruthValue f = load_tv(o.f, "--f"), g = load_tv(o.g, "--g");
  auto grid = adapted_grid(f, g, o.m);
  bool by_meet = leq_convolution(f, g);
  bool by_cuts = leq_cutwise(cuts_of<Rational>(f, grid), cuts_of<Rational>(g, grid));
  emit(o, dump({{"leq_convolution", by_meet}, {"leq_cutwise", by_cuts}, {"grid_levels", grid.size()}}));
  return kOk;
}

int reports_exit(const Options& o, const std::string& mode, const std::vector<AxiomReport>& rs) {
  emit(o, dump({{"mode", mode}, {"reports", to_json(rs)}}));
  return all_passed(rs) ? kOk : kLawFailed;
}

int cmd_check_axioms(const Options& o) {
  TnormSpec star = load_tnorm(o.star, "--star"), tri = load_tnorm(o.tri, "--tri");
  if (star.is_continuous() && tri.is_right_continuous())
    return reports_exit(o, "cut_engine",
                        check_axioms(star, tri, o.trials, o.m, o.seed, {o.assoc_trials, std::min(o.n, 200)}));
  // Outside the engine's contract only the oracle can speak.
  return reports_exit(o, "oracle", check_closure_oracle(star, tri, o.trials, o.n, o.seed));
}

int cmd_check_tr(const Options& o) {
  TnormSpec star = load_tnorm(o.star, "--star"), tri = load_tnorm(o.tri, "--tri");
  return reports_exit(o, "cut_engine", check_tr_norm(star, tri, o.trials, o.seed));
}

int cmd_demo(const Options& o) {
  TnormSpec tri = load_tnorm(o.tri, "--tri");
  auto which = parse_necessity_case(o.which);
  if (!which) throw ParseError("--case: expected case1 or case2, got '" + o.which + "'");
  NecessityParams p;
  p.a = arg_rational(o.a, "--a");
  p.b = arg_rational(o.b, "--b");
  if (!o.u.empty()) p.u = arg_rational(o.u, "--u");
  if (!o.v.empty()) p.v = arg_rational(o.v, "--v");
  if (*which == NecessityCase::case2_ordinal_star && o.star != "minimum") p.star = load_tnorm(o.star, "--star");
  p.summand = o.summand;
  try {
    auto d = necessity_demo(tri, *which, p, o.n);
    emit(o, dump(o.details ? to_json(d) : to_json(d.witness)));
    return kOk;
  } catch (const NotACounterexample& e) {
    std::cerr << "t2conv: " << e.what() << "\n";
    return kLawFailed;
  }
}

int cmd_plot(const Options& o) {
  if (o.out.empty()) throw ParseError("plot-data needs --out DIR");
  fs::create_directories(o.out);
  const fs::path dir(o.out);
  const auto grid = uniform_grid<double>(o.m);
  TruthValue f = load_tv(o.f, "--f");
  auto fc = cuts_of<double>(f, grid);
  write_file(dir / "f.csv", to_csv([&](std::ostream& os) { write_csv(os, f); }));
  write_file(dir / "f_cuts.csv", to_csv([&](std::ostream& os) { write_csv(os, fc); }));
  if (o.g.empty()) return kOk;
  TruthValue g = load_tv(o.g, "--g");
  TnormSpec star = load_tnorm(o.star, "--star"), tri = load_tnorm(o.tri, "--tri");
  auto gc = cuts_of<double>(g, grid);
  write_file(dir / "g.csv", to_csv([&](std::ostream& os) { write_csv(os, g); }));
  write_file(dir / "g_cuts.csv", to_csv([&](std::ostream& os) { write_csv(os, gc); }));
  auto s = convolve_oracle(f, g, star, tri, o.n);
  write_file(dir / "oracle.csv", to_csv([&](std::ostream& os) { write_csv(os, s); }));
  if (star.is_continuous() && tri.is_right_continuous()) {
    auto h = convolve_cuts(fc, gc, star, tri);
    write_file(dir / "convolution_cuts.csv", to_csv([&](std::ostream& os) { write_csv(os, h); }));
    write_file(dir / "convolution.csv", to_csv([&](std::ostream& os) { write_csv(os, tv_from_cuts(h)); }));
  }
  return kOk;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("T2CONV_SEED");
  if (!env || !*env) return 1;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw ParseError(std::string("T2CONV_SEED: not an unsigned integer: '") + env + "'");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  try {
    o.seed = default_seed();
  } catch (const Error& e) {
    std::cerr << "t2conv: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App app{"Sup-convolutions of fuzzy truth values under pairs of t-norms"};
  app.footer(kFooter);
  app.require_subcommand(1);

  auto tv_opt = [&](CLI::App* c, const char* name, std::string& dst, const char* what) {
    c->add_option(name, dst, what)->type_name("FILE");
  };
  auto norms = [&](CLI::App* c) {
    c->add_option("--star", o.star, "outer t-norm (default minimum)");
    c->add_option("--tri", o.tri, "inner t-norm (default minimum)");
  };
  auto m_opt = [&](CLI::App* c) { c->add_option("--m", o.m, "alpha-grid levels")->check(CLI::Range(16, 1 << 20)); };
  auto n_opt = [&](CLI::App* c) { c->add_option("--n", o.n, "oracle resolution")->check(CLI::Range(16, 1 << 20)); };
  auto io_opts = [&](CLI::App* c) {
    c->add_option("--out", o.out, "output file (stdout when omitted)");
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto runs = [&](CLI::App* c) {
    c->add_option("--trials", o.trials, "trials per law")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30));
    c->add_option("--seed", o.seed, "seed (default T2CONV_SEED or 1)");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&)>> cmds;

  auto* eval = app.add_subcommand("eval", "evaluate a truth value and report its properties");
  tv_opt(eval, "--f", o.f, "truth value JSON");
  eval->add_option("--x", o.xs, "points, e.g. 0.25 or 1/3");
  io_opts(eval);
  cmds.emplace_back(eval, cmd_eval);

  auto* cuts = app.add_subcommand("cuts", "alpha-cuts on the uniform m-level grid");
  tv_opt(cuts, "--f", o.f, "truth value JSON");
  m_opt(cuts);
  io_opts(cuts);
  cmds.emplace_back(cuts, cmd_cuts);

  auto* conv = app.add_subcommand("convolve", "convolution via the cut engine (or the grid oracle)");
  tv_opt(conv, "--f", o.f, "truth value JSON");
  tv_opt(conv, "--g", o.g, "truth value JSON");
  norms(conv);
  m_opt(conv);
  n_opt(conv);
  conv->add_option("--engine", o.engine, "cuts or oracle")->check(CLI::IsMember({"cuts", "oracle"}));
  conv->add_option("--csv", o.csv, "also write the staircase as CSV here");
  io_opts(conv);
  cmds.emplace_back(conv, cmd_convolve);

  auto* meet = app.add_subcommand("meet", "exact convolution for min/min");
  tv_opt(meet, "--f", o.f, "truth value JSON");
  tv_opt(meet, "--g", o.g, "truth value JSON");
  io_opts(meet);
  cmds.emplace_back(meet, cmd_meet);

  auto* order = app.add_subcommand("order", "convolution order, by meet and cutwise");
  tv_opt(order, "--f", o.f, "truth value JSON");
  tv_opt(order, "--g", o.g, "truth value JSON");
  m_opt(order);
  order->add_option("--out", o.out, "output file (stdout when omitted)");
  cmds.emplace_back(order, cmd_order);

  auto* axioms = app.add_subcommand("check-axioms", "t-norm laws of the convolution on random inputs");
  norms(axioms);
  m_opt(axioms);
  n_opt(axioms);
  runs(axioms);
  axioms->add_option("--assoc-trials", o.assoc_trials, "associativity triples")->check(CLI::PositiveNumber);
  axioms->add_option("--out", o.out, "output file (stdout when omitted)");
  cmds.emplace_back(axioms, cmd_check_axioms);

  auto* tr = app.add_subcommand("check-tr", "singleton, interval and boundary laws");
  norms(tr);
  runs(tr);
  tr->add_option("--out", o.out, "output file (stdout when omitted)");
  cmds.emplace_back(tr, cmd_check_tr);

  auto* demo = app.add_subcommand("demo-necessity", "counterexample to closure for a non-right-continuous tri");
  demo->add_option("--tri", o.tri, "inner t-norm")->required();
  demo->add_option("--case", o.which, "case1 (min outer) or case2 (ordinal-sum outer)");
  demo->add_option("--star", o.star, "ordinal-sum outer t-norm for case2");
  demo->add_option("--a", o.a, "first coordinate of the jump point");
  demo->add_option("--b", o.b, "second coordinate of the jump point");
  demo->add_option("--u", o.u, "location parameter u");
  demo->add_option("--v", o.v, "location parameter v (case2)");
  demo->add_option("--summand", o.summand, "summand index for case2");
  demo->add_flag("--details", o.details, "include the inputs and the oracle cross-check");
  n_opt(demo);
  demo->add_option("--out", o.out, "output file (stdout when omitted)");
  cmds.emplace_back(demo, cmd_demo);

  auto* plot = app.add_subcommand("plot-data", "CSV files for plotting f, g and their convolution");
  tv_opt(plot, "--f", o.f, "truth value JSON");
  tv_opt(plot, "--g", o.g, "truth value JSON (optional)");
  norms(plot);
  m_opt(plot);
  n_opt(plot);
  plot->add_option("--out", o.out, "output directory")->required();
  cmds.emplace_back(plot, cmd_plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    for (const auto& [sub, run] : cmds)
      if (sub->parsed()) return run(o);
  } catch (const std::exception& e) {
    std::cerr << "t2conv: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
