#include <gtest/gtest.h>

#include <regex>

#include "nmz/report.hpp"

using namespace nmz;

namespace {
const char* kWorked = R"({"dims": [2,0,1], "terms": [[[2,0,2],1],[[1,1,2],1],[[0,3,3],1]]})";
}

TEST(Report, NewtonListsCompactFaces) {
  auto r = cmd_newton(parse_problem(kWorked), {});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.json.find("\"compact_face_count\": 5"), std::string::npos);
  EXPECT_NE(r.json.find("\"coords\": [\n"), std::string::npos);
}

TEST(Report, NewtonEmptySupport) {
  auto r = cmd_newton(parse_problem(R"({"dims": [1,1], "terms": []})"), {});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.json.find("empty support"), std::string::npos);
}

TEST(Report, FanNeedsSecondBlock) {
  auto r = cmd_fan(parse_problem(R"({"dims": [2,0], "terms": [[[1,1],1]]})"), {});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.json.find("n2 must be >= 1"), std::string::npos);
}

TEST(Report, FanPaperDiffNote) {
  RunOptions opt;
  opt.paper_diff = true;
  auto r = cmd_fan(parse_problem(kWorked), opt);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.json.find("expected cell P1P2:{1} is not the normal cone"), std::string::npos);
  opt.paper_diff = false;
  EXPECT_EQ(cmd_fan(parse_problem(kWorked), opt).json.find("expected cell"), std::string::npos);
}

TEST(Report, Deterministic) {
  RunOptions opt;
  opt.paper_diff = true;
  auto pf = parse_problem(R"({"dims": [1,1,1], "terms": [[[1,1,0],1]], "h": [[[1],1]], "options": {"N": 3}})");
  EXPECT_EQ(cmd_conjecture(pf, opt).json, cmd_conjecture(pf, opt).json);
  EXPECT_EQ(cmd_fan(parse_problem(kWorked), opt).json, cmd_fan(parse_problem(kWorked), opt).json);
}

TEST(Report, TextCarriesTheSameNumbers) {
  auto r = cmd_oracle_count(parse_problem(R"({"dims": [1,0], "terms": [[[2],1]]})"), {}, 7);
  EXPECT_EQ(r.exit_code, 0);
  std::regex num(R"(-?\d+(/\d+)?)");
  auto collect = [&](const std::string& s) {
    std::multiset<std::string> out;
    for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it)
      out.insert(it->str());
    return out;
  };
  EXPECT_EQ(collect(r.json), collect(r.text));
}

TEST(Report, ConjectureExitCodes) {
  auto ok = cmd_conjecture(parse_problem(R"({"dims": [1,1,1], "terms": [[[1,1,1],1]]})"), {});
  EXPECT_EQ(ok.exit_code, 0);
  auto bad = cmd_conjecture(parse_problem(R"({"dims": [1,1], "terms": [[[2,1],1]]})"), {});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.json.find("\"result\""), std::string::npos);
}

TEST(Report, OracleJets) {
  auto r = cmd_oracle_jets(parse_problem(R"({"dims": [1,1], "terms": [[[1,1],1]]})"), {}, {1, 1}, 2, 3);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.json.find("\"total\": \"36\""), std::string::npos);
  EXPECT_EQ(cmd_oracle_jets(parse_problem(R"({"dims": [1,1], "terms": [[[1,1],1]]})"), {}, {1}, 2, 3).exit_code, 1);
}

TEST(Report, OracleSeriesAgrees) {
  RunOptions opt;
  opt.depth = 6;
  auto r = cmd_oracle_series(parse_cone_spec(R"({"generators": [[1,0],[1,2]], "open": true, "l": [1,1]})"), opt);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.json.find("\"agree\": true"), std::string::npos);
}

TEST(Report, MilnorPullbackShowsBothForms) {
  auto r = cmd_milnor(parse_problem(R"({"dims": [1,1,1], "terms": [[[1,1,0],1],[[0,0,2],1]]})"), {}, 1);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.json.find("\"all_arcs\""), std::string::npos);
  EXPECT_NE(r.json.find("\"consistent\": true"), std::string::npos);
}
