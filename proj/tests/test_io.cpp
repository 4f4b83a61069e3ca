#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace t2conv;
using ref::q;

namespace {

template <class F>
std::string message_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(IoRational, DecimalsReadExactly) {
  EXPECT_EQ(rational_from_json(json::parse("0.3"), "x"), q(3, 10));
  EXPECT_EQ(rational_from_json(json::parse("0.1"), "x"), q(1, 10));
  EXPECT_EQ(rational_from_json(json::parse("1e-3"), "x"), q(1, 1000));
  EXPECT_EQ(rational_from_json(json::parse("2.5e2"), "x"), Rational(250));
  EXPECT_EQ(rational_from_json(json::parse("7"), "x"), Rational(7));
  EXPECT_EQ(rational_from_json(json::parse("\"1/3\""), "x"), q(1, 3));
  EXPECT_EQ(rational_from_json(json::parse("\"2/6\""), "x"), q(1, 3));
  EXPECT_EQ(rational_from_json(json::parse("\"0.25\""), "x"), q(1, 4));
}

TEST(IoRational, Errors) {
  EXPECT_NE(message_of([] { rational_from_json(json::parse("true"), "lo"); }).find("field 'lo'"), std::string::npos);
  EXPECT_NE(message_of([] { rational_from_json(json::parse("\"1/0\""), "hi"); }).find("field 'hi'"), std::string::npos);
  EXPECT_THROW(rational_from_json(json::parse("\"abc\""), "x"), ParseError);
}

TEST(IoRational, RoundTrip) {
  for (const Rational& r : {q(0, 1), q(1, 1), q(3, 10), q(1, 3), q(37, 60), q(1, 1024), q(-5, 7), q(123456789, 1000)}) {
    json j = rational_to_json(r);
    EXPECT_EQ(rational_from_json(json::parse(j.dump()), "x"), r) << j.dump();
  }
  EXPECT_TRUE(rational_to_json(q(1, 3)).is_string());
  EXPECT_TRUE(rational_to_json(q(1, 4)).is_number());
  EXPECT_TRUE(rational_to_json(q(2, 1)).is_number_integer());
}

TEST(IoTnorm, RoundTrip) {
  std::vector<TnormSpec> all = ref::zoo();
  all.push_back(ordinal_sum({{q(1, 10), q(1, 3), InnerNorm::lukasiewicz}, {q(1, 2), q(9, 10), InnerNorm::product}}));
  for (const auto& t : all) EXPECT_EQ(tnorm_from_json(json::parse(to_json(t).dump())), t) << t.name();
}

TEST(IoTnorm, Errors) {
  EXPECT_NE(message_of([] { tnorm_from_json(json::parse(R"({"kind":"hamacher"})")); })
                .find("field 'kind' has unknown value"),
            std::string::npos);
  EXPECT_NE(message_of([] { tnorm_from_json(json::parse(R"({"type":"product"})")); }).find("missing field 'kind'"),
            std::string::npos);
  EXPECT_THROW(tnorm_from_json(json::parse(R"({"kind":"ordinal_sum"})")), ParseError);
  EXPECT_THROW(tnorm_from_json(json::parse(R"({"kind":"ordinal_sum","summands":[{"lo":0,"hi":1,"inner":"minimum"}]})")),
               ParseError);
  EXPECT_THROW(tnorm_from_json(json::parse(R"({"kind":"ordinal_sum","summands":[{"lo":0.5,"hi":0.5,"inner":"product"}]})")),
               std::exception);
}

TEST(IoTruthValue, RoundTrip) {
  for (int k = 0; k < 100; ++k) {
    TruthValue f = sample_lu(trial_seed(71, 0, k), Shape::mixed, 60);
    EXPECT_EQ(truth_value_from_json(json::parse(to_json(f).dump())), f);
  }
  TruthValue g = triangle_tv(q(1, 3), q(1, 2), q(2, 3));
  EXPECT_EQ(truth_value_from_json(json::parse(to_json(g).dump())), g);
}

TEST(IoTruthValue, ReadsDataFile) {
  TruthValue f = truth_value_from_json(read_json_file(T2CONV_DATA_DIR "/triangle.json"));
  EXPECT_EQ(f, triangle_tv(q(1, 4), q(1, 2), q(3, 4)));
  TruthValue s = truth_value_from_json(read_json_file(T2CONV_DATA_DIR "/step_usc.json"));
  EXPECT_EQ(s(q(1, 3)), q(1, 2));
  EXPECT_TRUE(properties(s).usc);
  EXPECT_FALSE(properties(truth_value_from_json(read_json_file(T2CONV_DATA_DIR "/not_usc.json"))).usc);
}

TEST(IoTruthValue, ShapeErrors) {
  const char* short_segs = R"({"breakpoints":[0,0.5,1],"point_values":[0,1,0],"segments":[{"left_val":0,"right_val":1}]})";
  EXPECT_NE(message_of([&] { truth_value_from_json(json::parse(short_segs)); }).find("segments"), std::string::npos);
  const char* short_vals = R"({"breakpoints":[0,1],"point_values":[0],"segments":[{"left_val":0,"right_val":1}]})";
  EXPECT_NE(message_of([&] { truth_value_from_json(json::parse(short_vals)); }).find("point_values"), std::string::npos);
  const char* bad_val = R"({"breakpoints":[0,1],"point_values":[0,2],"segments":[{"left_val":0,"right_val":1}]})";
  EXPECT_THROW(truth_value_from_json(json::parse(bad_val)), ParseError);
  const char* missing = R"({"breakpoints":[0,1],"point_values":[0,1],"segments":[{"left_val":0}]})";
  EXPECT_NE(message_of([&] { truth_value_from_json(json::parse(missing)); }).find("right_val"), std::string::npos);
  EXPECT_THROW(read_json_file(T2CONV_DATA_DIR "/no_such_file.json"), ParseError);
}

TEST(IoCutFamily, RoundTrip) {
  TruthValue f = sample_lu(trial_seed(72, 0, 0), Shape::mixed, 64);
  auto cd = cuts_of<double>(f, uniform_grid<double>(64));
  EXPECT_EQ(cut_family_from_json<double>(json::parse(to_json(cd).dump())), cd);
  auto cr = cuts_of<Rational>(f, uniform_grid<Rational>(24));
  EXPECT_EQ(cut_family_from_json<Rational>(json::parse(to_json(cr).dump())), cr);
  EXPECT_THROW(cut_family_from_json<double>(json::parse(R"({"alpha_grid":[0.5],"cuts":[{"lo":0,"hi":1}]})")), ParseError);
}

TEST(IoCsv, Columns) {
  std::ostringstream a, b, c;
  write_csv(a, triangle_tv(q(1, 4), q(1, 2), q(3, 4)));
  auto la = lines(a.str());
  ASSERT_EQ(la.front(), "x,value");
  EXPECT_EQ(la.size(), 1u + 3 * 5 - 2);
  EXPECT_EQ(la[la.size() / 2 + 1], "0.5,1");

  write_csv(b, cuts_of<double>(interval_tv(q(1, 4), q(3, 4)), uniform_grid<double>(4)));
  auto lb = lines(b.str());
  ASSERT_EQ(lb.size(), 5u);
  EXPECT_EQ(lb[0], "alpha,lo,hi");
  EXPECT_EQ(lb[1], "0.25,0.25,0.75");
  EXPECT_EQ(lb[4], "1,0.25,0.75");

  auto s = convolve_oracle(point_tv(q(1, 2)), point_tv(q(1, 2)), TnormSpec::minimum(), TnormSpec::minimum(), 20);
  write_csv(c, s);
  auto lc = lines(c.str());
  ASSERT_EQ(lc.size(), 22u);
  EXPECT_EQ(lc[0], "x,value,witness_a,witness_b");
  EXPECT_EQ(lc[11], "0.5,1,0.5,0.5");
}
