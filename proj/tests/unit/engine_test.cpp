#include <gtest/gtest.h>

#include "tropcount/io.hpp"

using namespace tropcount;

namespace {

Integer sum_of_parts(const CountReport& r) {
  Integer s = 0;
  for (const auto& d : r.per_degree) {
    Integer sub = 0;
    for (const auto& c : d.curves) sub += c.multiplicity.total;
    EXPECT_EQ(sub, d.subtotal);
    s += sub;
  }
  return s;
}

Problem with_lines(Problem p, std::size_t points, const std::vector<LatticeVec>& lines) {
  p.constraints.spec.assign(points, ConstraintSpec{p.rank - 1, {}});
  for (const auto& l : lines) p.constraints.spec.push_back(ConstraintSpec{p.rank - 2, {l}});
  return p;
}

}  // namespace

TEST(KontsevichOracle, KnownValues) {
  EXPECT_EQ(kontsevich_oracle(1), 1);
  EXPECT_EQ(kontsevich_oracle(2), 1);
  EXPECT_EQ(kontsevich_oracle(3), 12);
  EXPECT_EQ(kontsevich_oracle(4), 620);
  EXPECT_EQ(kontsevich_oracle(5), 87304);
  EXPECT_THROW(kontsevich_oracle(0), std::invalid_argument);
}

TEST(DivisorAxiom, SpecExamples) {
  EXPECT_EQ(apply_divisor_axiom(1, {1, 1}, {1, 0}), 1);
  EXPECT_EQ(apply_divisor_axiom(5, {2}, {3}), 40);
  EXPECT_EQ(apply_divisor_axiom(7, {3, 4}, {0, 0}), 7);
  EXPECT_THROW(apply_divisor_axiom(1, {1}, {}), std::invalid_argument);
}

TEST(OddClassVanishing, OnlyForOctahedronInsertions) {
  Problem p = preset_octahedron_problem(1);
  EXPECT_FALSE(odd_class_vanishing(p).has_value());
  p.options.odd_insertions = 1;
  EXPECT_EQ(odd_class_vanishing(p), Integer(0));
  p.options.odd_insertions = 2;
  CountReport r = count_invariant(p);
  EXPECT_EQ(r.total, 0);
  EXPECT_FALSE(r.notes.empty());

  Problem f = preset_flag3_problem(1, 0);
  f.options.odd_insertions = 1;
  EXPECT_THROW(odd_class_vanishing(f), std::invalid_argument);
}

TEST(CountInvariant, KnownValuesForSmallClasses) {
  EXPECT_EQ(count_invariant(preset_flag3_problem(1, 0)).total, 1);
  EXPECT_EQ(count_invariant(preset_flag3_problem(0, 1)).total, 1);
  EXPECT_EQ(count_invariant(preset_flag3_problem(1, 1)).total, 1);
  CountReport oct = count_invariant(preset_octahedron_problem(1));
  EXPECT_EQ(oct.total, 4);
  ASSERT_EQ(oct.per_degree.size(), 4u);
  for (const auto& d : oct.per_degree) {
    ASSERT_EQ(d.curves.size(), 1u);
    EXPECT_EQ(d.curves[0].multiplicity.total, 1);
  }
}

// Quantum Monk on the flag manifold gives <pt, l1*, l2*> = 1 and <pt, li*, li*> = 0 in class (1,1).
TEST(CountInvariant, FlagLineInsertionsMatchQuantumSchubertCalculus) {
  const LatticeVec a{1, 0, 0}, b{0, 1, 0};
  EXPECT_EQ(count_invariant(with_lines(preset_flag3_problem(1, 1), 1, {a, b})).total, 1);
  EXPECT_EQ(count_invariant(with_lines(preset_flag3_problem(1, 1), 1, {a, a})).total, 0);
  EXPECT_EQ(count_invariant(with_lines(preset_flag3_problem(1, 1), 1, {b, b})).total, 0);
}

// The quantum relation H^4 = 16 q H^2 on the (2,2) complete intersection forces <pt, l, l> = 3 in
// class 2. Two lines in one ruling reproduce it.
TEST(CountInvariant, OctahedronParallelLinesMatchQuantumCohomology) {
  for (const auto& u : {LatticeVec{1, 0, 0}, LatticeVec{0, 1, 0}, LatticeVec{0, 1, 1}, LatticeVec{1, 0, 1}})
    EXPECT_EQ(count_invariant(with_lines(preset_octahedron_problem(2), 1, {u, u})).total, 3) << u;
}

TEST(CountInvariant, TotalIsTheSumOfParts) {
  for (const Problem& p : {preset_flag3_problem(1, 1), preset_octahedron_problem(1), plane_problem(2)}) {
    CountReport r = count_invariant(p);
    EXPECT_EQ(sum_of_parts(r), r.tropical_total);
    EXPECT_EQ(r.total, r.tropical_total);
  }
}

TEST(CountInvariant, WorkerCountDoesNotChangeTheReport) {
  Problem p = plane_problem(2);
  CountReport one = count_invariant(p);
  p.options.workers = 4;
  CountReport four = count_invariant(p);
  EXPECT_EQ(one.total, four.total);
  Json a = report_to_json(one), b = report_to_json(four);
  a.erase("seconds");
  b.erase("seconds");
  EXPECT_EQ(a, b);
}

TEST(CountInvariant, DivisorInsertionsMultiplyTheCount) {
  Problem p = preset_octahedron_problem(1);
  p.divisor = DivisorInsertions{{1}, {1}};
  CountReport r = count_invariant(p);
  EXPECT_EQ(r.tropical_total, 4);
  EXPECT_EQ(r.total, 4);
  p.divisor = DivisorInsertions{{3}, {2}};
  EXPECT_EQ(count_invariant(p).total, 36);
}

TEST(CountInvariant, DimensionMismatchGivesZeroWithANote) {
  Problem p = preset_flag3_problem(1, 1);
  p.constraints.spec.pop_back();
  CountReport r = count_invariant(p);
  EXPECT_EQ(r.total, 0);
  EXPECT_FALSE(r.notes.empty());
  for (const auto& d : r.per_degree) EXPECT_FALSE(d.dimension_ok);
}

TEST(CountInvariant, LongProblemsNeedTheOption) {
  Problem p = plane_problem(3);
  try {
    count_invariant(p);
    FAIL() << "expected an error";
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "long-running problem: enable the long option to run it");
  }
}

TEST(CountInvariant, ExplicitNonGeneralConstraintsAreAnError) {
  // Two points on one horizontal line: the left end of a plane line can hold both.
  Problem p = plane_problem(1);
  p.constraints.kind = ConstraintSource::Kind::explicit_list;
  p.constraints.constraints = {make_constraint({}, RationalVec{0, 0}), make_constraint({}, RationalVec{2, 1})};
  EXPECT_EQ(count_invariant(p).total, 1);
  p.constraints.constraints = {make_constraint({}, RationalVec{0, 0}), make_constraint({}, RationalVec{2, 0})};
  EXPECT_THROW(count_invariant(p), std::runtime_error);
}

TEST(CountInvariant, SeedsAgree) {
  for (std::uint64_t seed : {1, 2, 3}) {
    Problem p = preset_flag3_problem(1, 1);
    p.constraints.seed = seed;
    EXPECT_EQ(count_invariant(p).total, 1) << seed;
    Problem q = preset_octahedron_problem(1);
    q.constraints.seed = seed;
    EXPECT_EQ(count_invariant(q).total, 4) << seed;
  }
}

TEST(ExpandDegrees, PresetsRefineAndDeduplicate) {
  Problem p = preset_flag3_problem(1, 1);
  auto degrees = expand_degrees(p);
  EXPECT_EQ(degrees.size(), 2u);
  for (const auto& d : degrees) EXPECT_TRUE(d.balanced());
  Problem q = preset_octahedron_problem(2);
  // Ten coarse-degrees; those with a pair count of 2 also refine into weight-2 ends.
  EXPECT_EQ(expand_degrees(q).size(), 10u + 4u * 3u);
}

TEST(Io, ProblemRoundTrip) {
  for (const Problem& p : {preset_flag3_problem(2, 1), preset_octahedron_problem(2), plane_problem(2)}) {
    Json j = problem_to_json(p);
    EXPECT_EQ(problem_to_json(problem_from_json(j)), j);
  }
}

TEST(Io, RationalsAreReducedStrings) {
  EXPECT_EQ(rational_string(rational_from_json(Json("6/4"))), "3/2");
  EXPECT_EQ(rational_string(rational_from_json(Json("-4/2"))), "-2");
  EXPECT_THROW(rational_from_json(Json("1/0")), std::invalid_argument);
  EXPECT_EQ(rational_from_json(Json("3/6")), Rational(1, 2));
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
}

// Offsets this large overflow machine integers inside the search, which then redoes the
// type with exact arithmetic.
TEST(CountInvariant, HugeOffsetsGiveTheSameCounts) {
  for (unsigned long d : {1ul, 2ul}) {
    Problem p = plane_problem(d);
    p.constraints.bound = 1000000000000000000ull;
    EXPECT_EQ(count_invariant(p).total, 1) << d;
  }
  Problem f = preset_flag3_problem(1, 1);
  f.constraints.bound = 1000000000000000000ull;
  EXPECT_EQ(count_invariant(f).total, 1);
}
