#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nmz/newton.hpp"

using namespace nmz;
using test::iv;
using test::poly;

namespace {
std::vector<std::string> labels(const CanonicalPartition& part) {
  std::vector<std::string> out;
  for (const auto& c : part.cells) out.push_back(c.label);
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST(Newton, WorkedExampleVerticesAndCompactFaces) {
  auto P = newton_polyhedron(test::worked_example());
  ASSERT_EQ(P.vertices().size(), 3u);
  EXPECT_EQ(P.vertices()[0], (Exponent{2, 0, 2}));
  EXPECT_EQ(P.vertices()[1], (Exponent{1, 1, 2}));
  EXPECT_EQ(P.vertices()[2], (Exponent{0, 3, 3}));
  std::vector<std::string> compact;
  for (auto id : P.compact_faces()) compact.push_back(P.face(id).label);
  std::sort(compact.begin(), compact.end());
  EXPECT_EQ(compact, (std::vector<std::string>{"P1", "P1P2", "P2", "P2P3", "P3"}));
}

TEST(Newton, SingleMonomialHasOrthantFacets) {
  auto P = newton_polyhedron(poly(2, {{{1, 1}, 1}}));
  EXPECT_EQ(P.vertices().size(), 1u);
  EXPECT_EQ(P.facets().size(), 2u);
  EXPECT_EQ(P.compact_faces().size(), 1u);
}

TEST(Newton, SupportFunction) {
  auto P = newton_polyhedron(test::worked_example());
  auto s = l_gamma(P, iv({1, 1, 1}));
  EXPECT_EQ(s.value, Int(4));
  EXPECT_EQ(P.face(s.face).label, "P1P2");
  auto whole = l_gamma(P, iv({0, 0, 0}));
  EXPECT_TRUE(P.face(whole.face).whole);
  EXPECT_THROW(l_gamma(P, iv({-1, 0, 0})), DomainError);
}

TEST(Newton, LeantFacesOfFirstVertex) {
  auto P = newton_polyhedron(test::worked_example());
  auto p1 = P.find_face({0}, {});
  ASSERT_TRUE(p1);
  auto sets = leant_faces(P, *p1);
  std::sort(sets.begin(), sets.end());
  EXPECT_EQ(sets, (std::vector<IndexSet>{{}, {0}, {0, 2}, {2}}));
}

TEST(Newton, FacePolynomial) {
  auto g = test::worked_example();
  auto P = newton_polyhedron(g);
  auto edge = P.find_face({0, 1}, {});
  ASSERT_TRUE(edge);
  auto f = face_poly(g, P, *edge);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient({2, 0, 2}), Rat(1));
  EXPECT_EQ(f.coefficient({1, 1, 2}), Rat(1));
}

TEST(Newton, WorkedExamplePartitionCoversBox) {
  auto P = newton_polyhedron(test::worked_example());
  auto part = canonical_partition(P, 2);
  EXPECT_EQ(labels(part), (std::vector<std::string>{"P1:{1}", "P1:{}", "P1P2:{1,2}", "P1P2:{}", "P2:{2}", "P2:{}",
                                                    "P2P3:{2}", "P2P3:{}", "P3:{2}", "P3:{}"}));
  auto cov = partition_coverage(part, 3, 2, 12);
  EXPECT_EQ(cov.points, 13u * 13u * 12u);
  EXPECT_TRUE(cov.ok());
  std::vector<RationalCone> closed;
  for (const auto& c : part.cells) closed.push_back(c.cone.closure());
  EXPECT_TRUE(fan_check(closed, 2).ok);
}

TEST(Newton, PartitionDiffExplainsEdgeCell) {
  auto P = newton_polyhedron(test::worked_example());
  auto part = canonical_partition(P, 2);
  auto d = partition_diff(part, {"P1:{}", "P1:{1}", "P2:{}", "P2:{2}", "P3:{}", "P3:{2}", "P1P2:{}", "P1P2:{1}",
                                 "P2P3:{}", "P2P3:{2}"});
  EXPECT_EQ(d.missing, (std::vector<std::string>{"P1P2:{1}"}));
  EXPECT_EQ(d.extra, (std::vector<std::string>{"P1P2:{1,2}"}));
  ASSERT_EQ(d.notes.size(), 1u);
  EXPECT_NE(d.notes[0].find("P1P2:{1}"), std::string::npos);
}

TEST(Newton, SingleInteriorVertexGivesAllSubsets) {
  auto P = newton_polyhedron(poly(3, {{{1, 2, 1}, 1}}));
  auto part = canonical_partition(P, 2);
  EXPECT_EQ(labels(part), (std::vector<std::string>{"P1:{1,2}", "P1:{1}", "P1:{2}", "P1:{}"}));
  EXPECT_TRUE(partition_coverage(part, 3, 2, 6).ok());
}

TEST(Newton, SigmaIsTheNormalCone) {
  auto P = newton_polyhedron(test::worked_example());
  for (const auto& f : P.faces()) {
    if (f.whole) continue;
    auto cone = sigma(P, f.id);
    for (long x = 0; x <= 3; ++x)
      for (long y = 0; y <= 3; ++y)
        for (long z = 0; z <= 3; ++z) {
          IntVec a = iv({x, y, z});
          if (x == 0 && y == 0 && z == 0) continue;
          EXPECT_EQ(cone.contains(a), l_gamma(P, a).face == f.id) << f.label;
        }
  }
}

TEST(Newton, VertexPositivity) {
  EXPECT_TRUE(vertex_positivity(newton_polyhedron(poly(2, {{{1, 1}, 1}}))));
  EXPECT_FALSE(vertex_positivity(newton_polyhedron(test::worked_example())));
}

TEST(Newton, RejectsEmptySupport) { EXPECT_THROW(newton_polyhedron({}, 2), DomainError); }
