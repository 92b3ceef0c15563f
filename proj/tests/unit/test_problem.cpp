#include <gtest/gtest.h>

#include "nmz/problem.hpp"

using namespace nmz;

TEST(Problem, BothTermForms) {
  auto pf = parse_problem(R"({"dims": [2, 0, 1],
    "terms": [[[2,0,2], 1], {"exp": [1,1,2], "coef": "1"}, [[0,3,3], "3/6"]]})");
  EXPECT_TRUE(pf.three_block);
  EXPECT_EQ(pf.dims, (Partition{2, 0, 1}));
  EXPECT_EQ(pf.poly.size(), 3u);
  EXPECT_EQ(pf.poly.coefficient({0, 3, 3}), Rat(1, 2));
}

TEST(Problem, TwoBlockDims) {
  auto pf = parse_problem(R"({"dims": [1, 1], "terms": [[[1,1], 1]]})");
  EXPECT_FALSE(pf.three_block);
  EXPECT_EQ(pf.dims, (Partition{1, 1, 0}));
}

TEST(Problem, Options) {
  auto pf = parse_problem(
      R"({"dims": [1,1], "terms": [[[1,1],1]], "options": {"primes": [5,7], "bound": 4, "depth": 6, "budget": 1000}})");
  EXPECT_EQ(pf.options.primes, (std::vector<std::int64_t>{5, 7}));
  EXPECT_EQ(pf.options.bound, 4);
  EXPECT_EQ(pf.options.depth, 6);
  EXPECT_EQ(pf.options.budget, 1000u);
}

TEST(Problem, PowerOfThirdBlockPart) {
  auto pf = parse_problem(R"({"dims": [1,1,1], "terms": [[[1,1,0],1]], "h": [[[1],1]], "options": {"N": 4}})");
  EXPECT_EQ(pf.poly.size(), 2u);
  EXPECT_EQ(pf.poly.coefficient({0, 0, 4}), Rat(1));
}

TEST(Problem, MalformedJsonHasPosition) {
  try {
    parse_problem("{\"dims\": [1,1],\n  \"terms\": [[[1,1],1],]}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(Problem, SemanticErrors) {
  EXPECT_THROW(parse_problem(R"({"terms": []})"), ParseError);
  EXPECT_THROW(parse_problem(R"({"dims": [1,1], "terms": [[[1],1]]})"), ParseError);
  EXPECT_THROW(parse_problem(R"({"dims": [1,1], "terms": [[[1,-1],1]]})"), ParseError);
  EXPECT_THROW(parse_problem(R"({"dims": [1,1], "terms": [[[1,1],"x"]]})"), ParseError);
  EXPECT_THROW(parse_problem(R"({"dims": [1,1], "terms": [], "h": [[[1],1]]})"), ParseError);
}

TEST(Problem, ZeroCoefficientsVanish) {
  auto pf = parse_problem(R"({"dims": [1,1], "terms": [[[1,1],"0"], [[1,1], 0]]})");
  EXPECT_TRUE(pf.poly.is_zero());
}

TEST(Problem, EmitRoundTrips) {
  auto pf = parse_problem(R"({"dims": [1,1,1], "terms": [[[1,1,0],"2/3"], [[0,0,2],1]], "options": {"N": 2}})");
  auto again = parse_problem(emit_problem(pf));
  EXPECT_EQ(again.poly, pf.poly);
  EXPECT_EQ(again.dims, pf.dims);
  EXPECT_EQ(again.options.N, 2);
  EXPECT_EQ(emit_poly(pf.poly), R"([{"coef":"1","exp":[0,0,2]},{"coef":"2/3","exp":[1,1,0]}])");
}

TEST(Problem, ConeSpecs) {
  auto a = parse_cone_spec(R"({"dim": 2, "weak": [[1,0]], "strict": [[0,1]], "l": [1,1], "lp": [1,2]})");
  EXPECT_EQ(a.constraints.weak.size(), 1u);
  EXPECT_EQ(a.constraints.strict.size(), 1u);
  auto b = parse_cone_spec(R"({"generators": [[1,0],[1,2]], "open": true, "l": [1,1]})");
  EXPECT_EQ(b.lp, (IntVec{1, 1}));
  EXPECT_THROW(parse_cone_spec(R"({"dim": 2, "l": [1]})"), ParseError);
}
