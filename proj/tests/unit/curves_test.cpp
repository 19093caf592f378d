#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "tropcount/curves.hpp"

using namespace tropcount;

namespace {

Degree plane_line() { return Degree({End{{-1, 0}, 1}, End{{0, -1}, 1}, End{{1, 1}, 1}}); }

Degree plane_conic() {
  std::vector<End> ends;
  for (int i = 0; i < 2; ++i) {
    ends.push_back(End{{-1, 0}, 1});
    ends.push_back(End{{0, -1}, 1});
    ends.push_back(End{{1, 1}, 1});
  }
  return Degree(std::move(ends));
}

Degree flag_class_one_one() {
  return Degree({End{{-1, 0, 0}, 1}, End{{0, 1, 0}, 1}, End{{1, 0, -1}, 1}, End{{0, -1, 1}, 1}});
}

// Oracle: (2e - 5)!! by direct multiplication.
std::uint64_t double_factorial(long k) {
  std::uint64_t r = 1;
  for (; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

std::set<std::string> keys(const std::vector<CombType>& types) {
  std::set<std::string> out;
  for (const auto& t : types) out.insert(t.key);
  return out;
}

}  // namespace

TEST(ExpectedDimension, SpecExamples) {
  EXPECT_EQ(expected_dimension(4, 0, 3), 4);
  EXPECT_EQ(expected_dimension(3, 0, 2), 2);
  EXPECT_EQ(expected_dimension(6, 0, 3), 6);
}

TEST(ExpectedDimension, GenusZeroTrivalentIsEndsPlusRankMinusThree) {
  for (std::size_t e = 2; e < 12; ++e)
    for (std::size_t n = 2; n < 6; ++n) EXPECT_EQ(expected_dimension(e, 0, n), static_cast<long>(e + n) - 3);
}

TEST(Degree, RejectsBadEntries) {
  EXPECT_THROW(Degree({End{{2, 0}, 1}}), std::invalid_argument);
  EXPECT_THROW(Degree({End{{1, 0}, 0}}), std::invalid_argument);
  EXPECT_THROW(Degree({End{{1, 0}, 1}, End{{1, 0, 0}, 1}}), std::invalid_argument);
}

TEST(TrivalentTrees, CountIsDoubleFactorial) {
  for (std::size_t e = 3; e <= 8; ++e) {
    std::uint64_t visited = 0;
    std::set<std::set<std::set<int>>> splits;
    for_each_trivalent_tree(e, [&](const LeafTree& t) {
      ++visited;
      EXPECT_EQ(t.edges.size(), 2 * e - 3);
      // Each tree is determined by its set of leaf splits; all visited trees must differ.
      std::vector<std::vector<int>> adj(2 * e - 2);
      for (auto [a, b] : t.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
      }
      std::set<std::set<int>> tree_splits;
      for (auto [a, b] : t.edges) {
        std::set<int> side;
        std::vector<int> stack{b};
        std::set<int> seen{a, b};
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          if (v < static_cast<int>(e)) side.insert(v);
          for (int w : adj[static_cast<std::size_t>(v)])
            if (seen.insert(w).second) stack.push_back(w);
        }
        if (!side.contains(0)) {
          std::set<int> other;
          for (int i = 0; i < static_cast<int>(e); ++i)
            if (!side.contains(i)) other.insert(i);
          side = other;
        }
        tree_splits.insert(side);
      }
      splits.insert(tree_splits);
    });
    EXPECT_EQ(visited, double_factorial(2 * static_cast<long>(e) - 5)) << e;
    EXPECT_EQ(trivalent_tree_count(e), visited);
    EXPECT_EQ(splits.size(), visited);
  }
}

TEST(BalancePropagate, SpecExamples) {
  LeafTree four{4, {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 5}}};
  auto t = balance_propagate(four, Degree({End{{-1, 0, 0}, 1}, End{{0, -1, 0}, 1}, End{{1, 0, 0}, 1}, End{{0, 1, 0}, 1}}));
  ASSERT_TRUE(t.has_value());
  auto bounded = t->bounded_edges();
  ASSERT_EQ(bounded.size(), 1u);
  const auto& e = t->edges[static_cast<std::size_t>(bounded[0])];
  EXPECT_EQ(e.weight, 1);
  EXPECT_TRUE(e.direction == LatticeVec({1, 1, 0}) || e.direction == LatticeVec({-1, -1, 0}));

  LeafTree three{3, {{0, 3}, {1, 3}, {2, 3}}};
  auto line = balance_propagate(three, plane_line());
  ASSERT_TRUE(line.has_value());
  EXPECT_EQ(line->vertex_count, 1);
  EXPECT_TRUE(line->bounded_edges().empty());

  auto zero = balance_propagate(four, Degree({End{{1, 0, 0}, 1}, End{{-1, 0, 0}, 1}, End{{0, 1, 0}, 1}, End{{0, -1, 0}, 1}}));
  EXPECT_FALSE(zero.has_value());
}

TEST(EnumerateTypes, SpecExamples) {
  auto lines = enumerate_types(Degree({End{{1, 0, 0}, 1}, End{{-1, 0, 0}, 1}}), 1);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_TRUE(lines[0].degenerate_line);
  EXPECT_EQ(lines[0].markings, std::vector<int>{0});

  auto marked = enumerate_types(plane_line(), 2);
  EXPECT_EQ(marked.size(), 9u);
  std::size_t repeated = 0;
  for (const auto& t : marked) repeated += t.markings[0] == t.markings[1];
  EXPECT_EQ(repeated, 3u);
}

TEST(EnumerateTypes, InvariantUnderEntryOrder) {
  Degree d = plane_conic();
  auto base = keys(enumerate_types(d, 1));
  std::vector<End> ends = d.ends();
  std::sort(ends.begin(), ends.end());
  int permutations = 0;
  do {
    if (++permutations % 37 != 0) continue;
    EXPECT_EQ(keys(enumerate_types(Degree(ends), 1)), base);
  } while (std::next_permutation(ends.begin(), ends.end()));
}

TEST(EnumerateTypes, TypesAreBalancedAndReadBackTheirDegree) {
  for (const Degree& d : {plane_line(), plane_conic(), flag_class_one_one()}) {
    auto types = unmarked_types(d);
    EXPECT_FALSE(types.empty());
    for (const auto& t : types) {
      for (int v = 0; v < t.vertex_count; ++v) EXPECT_TRUE(vertex_balanced(t, v));
      EXPECT_EQ(degree_of(t), d);
      EXPECT_EQ(t.end_count(), d.size());
      EXPECT_EQ(static_cast<std::size_t>(t.vertex_count), d.size() - 2);
      for (int b : t.bounded_edges()) EXPECT_FALSE(t.edges[static_cast<std::size_t>(b)].direction.is_zero());
    }
    auto sorted = keys(types);
    EXPECT_EQ(sorted.size(), types.size());
  }
}

TEST(EnumerateTypes, ConicHasExpectedTypeCount) {
  // Unmarked conic types: labelled trees (7!! = 105) collapse under the two-fold symmetry
  // of every end direction; each tree's splits must have nonzero sums.
  auto types = unmarked_types(plane_conic());
  std::set<std::string> seen;
  for_each_trivalent_tree(6, [&](const LeafTree& tree) {
    if (auto t = balance_propagate(tree, plane_conic())) seen.insert(canonicalize(*t).key);
  });
  EXPECT_EQ(keys(types), seen);
}

TEST(Canonicalize, RerootingKeepsTheKey) {
  for (auto t : enumerate_types(plane_conic(), 2)) {
    for (int r = 0; r < t.vertex_count; ++r) EXPECT_EQ(canonicalize(reroot(t, r)).key, t.key);
  }
}

TEST(Weight, SpecExamples) {
  auto line = enumerate_types(plane_line(), 1);
  for (const auto& t : line) EXPECT_EQ(weight(t), 1);

  // A weight-2 bounded edge: ends (-1,0) twice on one side.
  Degree heavy({End{{-1, 0}, 1}, End{{-1, 0}, 1}, End{{1, 1}, 1}, End{{1, -1}, 1}});
  bool found = false;
  for (const auto& t : enumerate_types(heavy, 1)) {
    auto b = t.bounded_edges();
    if (b.size() == 1 && t.edges[static_cast<std::size_t>(b[0])].weight == 2 &&
        t.edges[static_cast<std::size_t>(t.markings[0])].weight == 1) {
      EXPECT_EQ(weight(t), 2);
      found = true;
    }
  }
  EXPECT_TRUE(found);

  auto heavy_line = enumerate_types(Degree({End{{1, 0}, 2}, End{{-1, 0}, 2}}), 1);
  ASSERT_EQ(heavy_line.size(), 1u);
  EXPECT_EQ(weight(heavy_line[0]), 2);
}
