#include <gtest/gtest.h>

#include <algorithm>

#include "tropcount/engine.hpp"
#include "tropcount/matching.hpp"

using namespace tropcount;

namespace {

CombType plane_line_type() {
  auto types = unmarked_types(Degree({End{{-1, 0}, 1}, End{{0, -1}, 1}, End{{1, 1}, 1}}));
  return types.at(0);
}

int edge_with_direction(const CombType& t, const LatticeVec& d) {
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    if (t.edges[i].direction == d) return static_cast<int>(i);
  return -1;
}

AffineConstraint point(std::initializer_list<long> p) { return make_constraint({}, RationalVec(p)); }

std::vector<RationalVec> sorted_vertices(const CombType& t, const Solution& s) {
  auto v = vertex_positions(t, s);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(MatchConstraints, PlaneLineThroughTwoPoints) {
  CombType t = plane_line_type();
  t.markings = {edge_with_direction(t, {-1, 0}), edge_with_direction(t, {1, 1})};
  std::vector<AffineConstraint> a{point({0, 0}), point({2, 1})};
  auto r = match_constraints(t, a);
  ASSERT_EQ(r.status, MatchStatus::unique);
  EXPECT_EQ(vertex_positions(t, *r.solution).at(0), (RationalVec{1, 0}));
  EXPECT_EQ(r.solution->mark_params, (std::vector<Rational>{1, 1}));
  EXPECT_TRUE(verify_general(t, *r.solution, a).general);
}

TEST(MatchConstraints, PlaneLineOnlyOneAssignmentFits) {
  CombType t = plane_line_type();
  std::vector<AffineConstraint> a{point({0, 0}), point({2, 1})};
  int unique = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      t.markings = {i, j};
      auto r = match_constraints(t, a);
      EXPECT_NE(r.status, MatchStatus::non_general);
      unique += r.status == MatchStatus::unique;
    }
  EXPECT_EQ(unique, 1);
}

TEST(MatchConstraints, BothMarksOnOneRayFindNothing) {
  CombType t = plane_line_type();
  const int ray = edge_with_direction(t, {0, -1});
  t.markings = {ray, ray};
  EXPECT_EQ(match_constraints(t, {point({0, 0}), point({2, 1})}).status, MatchStatus::none);
}

TEST(MatchConstraints, DegenerateLineThroughAPoint) {
  auto types = enumerate_types(Degree({End{{1, 0, 0}, 1}, End{{-1, 0, 0}, 1}}), 1);
  ASSERT_EQ(types.size(), 1u);
  auto r = match_constraints(types[0], {point({3, 5, 7})});
  ASSERT_EQ(r.status, MatchStatus::unique);
  EXPECT_EQ(r.solution->root_position[1], 5);
  EXPECT_EQ(r.solution->root_position[2], 7);
}

TEST(MatchConstraints, DimensionMismatchIsAnError) {
  CombType t = plane_line_type();
  t.markings = {0};
  try {
    match_constraints(t, {point({0, 0})});
    FAIL() << "expected an error";
  } catch (const DimensionMismatch& e) {
    EXPECT_STREQ(e.what(), "constraint codimensions do not sum to e+n-3");
  }
}

TEST(VerifyGeneral, VertexOnAConstraint) {
  CombType t = plane_line_type();
  t.markings = {edge_with_direction(t, {-1, 0}), edge_with_direction(t, {1, 1})};
  Solution s{RationalVec{1, 0}, std::vector<Rational>(3), {1, 0}};
  auto report = verify_general(t, s, {point({0, 0}), point({1, 0})});
  EXPECT_FALSE(report.general);
  EXPECT_NE(std::find(report.violations.begin(), report.violations.end(), Violation::vertex_on_constraint),
            report.violations.end());
}

TEST(VerifyGeneral, OverlappingEdgesInSpace) {
  // Vertex 0 sends an end along +x while its bounded edge also runs along +x.
  CombType t;
  t.rank = 3;
  t.vertex_count = 2;
  t.edges = {TypeEdge{0, 1, 1, {1, 0, 0}}, TypeEdge{0, -1, 1, {1, 0, 0}}, TypeEdge{0, -1, 2, {-1, 0, 0}},
             TypeEdge{1, -1, 1, {1, 1, 0}}, TypeEdge{1, -1, 1, {0, -1, 0}}};
  for (int v = 0; v < 2; ++v) ASSERT_TRUE(vertex_balanced(t, v));
  Solution s{RationalVec{0, 0, 0}, {1, 0, 0, 0, 0}, {}};
  auto report = verify_general(t, s, {});
  EXPECT_FALSE(report.general);
  EXPECT_NE(std::find(report.violations.begin(), report.violations.end(), Violation::not_embedded),
            report.violations.end());
}

TEST(GenerateConstraints, DeterministicAndWithinBound) {
  std::vector<ConstraintSpec> spec{{2, {}}, {1, {{0, 0, 1}}}};
  auto a = generate_constraints(spec, 3, 1, 100);
  auto b = generate_constraints(spec, 3, 1, 100);
  ASSERT_EQ(a.size(), 2u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].offset, b[i].offset);
    EXPECT_EQ(a[i].codim(), spec[i].codim);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_LE(abs(a[i].offset[k]), 100);
      EXPECT_EQ(a[i].offset[k].get_den(), 1);
    }
  }
  auto c = generate_constraints(spec, 3, 2, 100);
  EXPECT_NE(a[0].offset, c[0].offset);
  auto d = generate_constraints(spec, 3, 1, 100, 1);
  EXPECT_NE(a[0].offset, d[0].offset);
}

TEST(MatchedCurves, SatisfyConstraintsAndDoNotDependOnTheRoot) {
  for (unsigned long deg : {1ul, 2ul}) {
    CountReport r = count_invariant(plane_problem(deg));
    for (const auto& dr : r.per_degree)
      for (const auto& c : dr.curves) {
        for (std::size_t i = 0; i < r.constraints.size(); ++i)
          EXPECT_TRUE(r.constraints[i].contains(marked_point(c.type, c.solution, i)));
        for (const auto& len : c.solution.lengths) EXPECT_GE(len, 0);
        const auto image = sorted_vertices(c.type, c.solution);
        for (int root = 0; root < c.type.vertex_count; ++root) {
          CombType rerooted = reroot(c.type, root);
          auto m = match_constraints(rerooted, r.constraints);
          ASSERT_EQ(m.status, MatchStatus::unique);
          EXPECT_EQ(sorted_vertices(rerooted, *m.solution), image);
        }
      }
  }
}

TEST(MatchedCurves, FlagClassThroughTwoPointsIsGeneral) {
  Problem p = preset_flag3_problem(1, 1);
  CountReport r = count_invariant(p);
  EXPECT_EQ(r.total, 1);
  for (const auto& dr : r.per_degree)
    for (const auto& c : dr.curves) EXPECT_TRUE(verify_general(c.type, c.solution, r.constraints).general);
}
