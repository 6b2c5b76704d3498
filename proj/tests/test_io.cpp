#include <gtest/gtest.h>

#include "spq/io.hpp"
#include "support.hpp"

namespace spq {
namespace {

using testing::Rng;

TEST(ParseSpace, ThreeSpellingsAgree) {
  const auto json_form = parse_space(R"({"p":5,"n":2,"R":[1,2,0,0],"Q":[0,0,1,3]})");
  const auto inline_form = parse_space("p=5 n=2 R=1,2,0,0 Q=0,0,1,3");
  const auto lens_form = parse_space("lens p=5 r=1,2 rp=1,3");
  EXPECT_EQ(json_form, inline_form);
  EXPECT_EQ(json_form, lens_form);
  EXPECT_EQ(parse_space("  p=5 R=1,2,0,0 Q=0,0,1,3"), json_form);
}

TEST(ParseSpace, NormalizesUnreducedEntries) {
  const auto X = parse_space(R"({"p":5,"R":[6,-3,0,0],"Q":[0,0,11,13]})");
  EXPECT_EQ(X.R(), (std::vector<int>{1, 2, 0, 0}));
  EXPECT_EQ(X.Q(), (std::vector<int>{0, 0, 1, 3}));
}

TEST(ParseSpace, Errors) {
  EXPECT_THROW(parse_space(""), ParseError);
  EXPECT_THROW(parse_space("{not json"), ParseError);
  EXPECT_THROW(parse_space(R"({"p":5,"R":[1,2,0,0]})"), ParseError);
  EXPECT_THROW(parse_space(R"({"p":"5","R":[1,2,0,0],"Q":[0,0,1,3]})"), ParseError);
  EXPECT_THROW(parse_space(R"({"p":5,"R":[1,2.5,0,0],"Q":[0,0,1,3]})"), ParseError);
  EXPECT_THROW(parse_space("[1,2]"), ParseError);
  EXPECT_THROW(parse_space("p=5 R=1,x,0,0 Q=0,0,1,3"), ParseError);
  EXPECT_THROW(parse_space("p=5 R=1,2,0,0"), ParseError);
  EXPECT_THROW(parse_space("p=5 R=1,2,0,0 Q=0,0,1,3 z=1"), ParseError);
  EXPECT_THROW(parse_space("p=5 p=7 R=1,2,0,0 Q=0,0,1,3"), ParseError);
  EXPECT_THROW(parse_space("p=5 R=1,2,0,0 Q=2,4,0,0"), InvalidSpan);
  EXPECT_THROW(parse_space("p=6 R=1,2,0,0 Q=0,0,1,3"), InvalidPrime);
  EXPECT_THROW(parse_space("lens p=5 r=1,0 rp=1,3"), InvalidRotation);
}

TEST(ParseSpace, JsonRoundTrip) {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const Prime p{std::array{3, 5, 7, 11}[static_cast<std::size_t>(trial % 4)]};
    const int n = testing::uniform(rng, 2, 4);
    RawRotationData raw{p, n, testing::random_vector(rng, p, 2 * static_cast<std::size_t>(n)),
                        testing::random_vector(rng, p, 2 * static_cast<std::size_t>(n))};
    std::optional<RotationData> X;
    try {
      X = validate(raw);
    } catch (const InvalidSpan&) {
      continue;
    }
    EXPECT_EQ(parse_space(to_json(*X).dump()), *X);
    EXPECT_EQ(rotation_from_json(to_json(*X)), *X);
  }
}

TEST(ToJson, Shapes) {
  const auto X = parse_space("lens p=5 r=1,1 rp=1,4");
  const auto k = k_invariant(X);
  EXPECT_EQ(to_json(k.first), json::parse(R"({"deg":2,"coeffs":[1,0,0]})"));
  EXPECT_EQ(to_json(k), json::parse(R"({"first":{"deg":2,"coeffs":[1,0,0]},"second":{"deg":2,"coeffs":[0,0,4]}})"));
  EXPECT_EQ(to_json(Mat2(Prime(5), 1, 2, 3, 4)), json::parse("[[1,2],[3,4]]"));

  const auto free_report = to_json(is_free(X));
  EXPECT_EQ(free_report, json::parse(R"({"free":true,"violating_element":null,"violating_pair":null})"));
  const auto bad = to_json(is_free(parse_space("p=5 R=1,0,1,0 Q=0,1,0,1")));
  EXPECT_EQ(bad, json::parse(R"({"free":false,"violating_element":[1,0],"violating_pair":[2,2]})"));

  const auto verdict = to_json(homotopy_equivalent(X, X));
  EXPECT_EQ(verdict, json::parse(R"({"equivalent":true,"level":"homotopy","witness":{"A":[[1,0],[0,1]],"B":[[1,0],[0,1]]},"checked_pairs":1})"));
  const auto homeo = to_json(homeomorphic(X, parse_space("lens p=5 r=1,1 rp=1,2")));
  EXPECT_EQ(homeo.at("equivalent"), false);
  EXPECT_TRUE(homeo.at("witness").is_null());
  EXPECT_EQ(homeo.at("level"), "homeomorphism");
  EXPECT_EQ(homeo.at("checked_pairs"), 480 * 240);

  const TotalClass cls{7, 3, {{4, HomogeneousForm(Prime(7), {1, 2, 3})}}};
  EXPECT_EQ(to_json(cls), json::parse(R"({"4":{"deg":2,"coeffs":[1,2,3]}})"));
}

}  // namespace
}  // namespace spq
