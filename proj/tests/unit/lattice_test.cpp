#include <gtest/gtest.h>

#include <random>
#include <algorithm>

#include "tropcount/lattice.hpp"

using namespace tropcount;

namespace {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

bool is_diagonal_chain(const IntMatrix& d, const std::vector<Integer>& diag) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (d(i, i) != diag[i] || diag[i] < 0) return false;
    if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
    if (i + 1 < diag.size() && diag[i] == 0 && diag[i + 1] != 0) return false;
  }
  return true;
}

// Oracle: lattice points of Z^2 in the half-open parallelogram {s a + t b : 0 <= s, t < 1},
// one per coset of the lattice spanned by a and b.
long coset_count(const LatticeVec& a, const LatticeVec& b) {
  const long a0 = a[0].get_si(), a1 = a[1].get_si(), b0 = b[0].get_si(), b1 = b[1].get_si();
  const long det = a0 * b1 - a1 * b0;
  const long lo_x = std::min({0L, a0, b0, a0 + b0}), hi_x = std::max({0L, a0, b0, a0 + b0});
  const long lo_y = std::min({0L, a1, b1, a1 + b1}), hi_y = std::max({0L, a1, b1, a1 + b1});
  long count = 0;
  for (long x = lo_x; x <= hi_x; ++x)
    for (long y = lo_y; y <= hi_y; ++y) {
      // (x, y) = s a + t b with s = (x b1 - y b0) / det and t = (y a0 - x a1) / det.
      Rational s(x * b1 - y * b0, det), t(y * a0 - x * a1, det);
      s.canonicalize();
      t.canonicalize();
      if (s >= 0 && s < 1 && t >= 0 && t < 1) ++count;
    }
  return count;
}

}  // namespace

TEST(Primitive, SpecExamples) {
  auto p = primitive(LatticeVec{2, 4, 6});
  EXPECT_EQ(p.direction, (LatticeVec{1, 2, 3}));
  EXPECT_EQ(p.multiple, 2);
  p = primitive(LatticeVec{0, -3});
  EXPECT_EQ(p.direction, (LatticeVec{0, -1}));
  EXPECT_EQ(p.multiple, 3);
  p = primitive(LatticeVec{1, 0, 0});
  EXPECT_EQ(p.direction, (LatticeVec{1, 0, 0}));
  EXPECT_EQ(p.multiple, 1);
}

TEST(Primitive, ZeroVectorIsRejected) {
  try {
    primitive(LatticeVec{0, 0});
    FAIL() << "expected an error";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "zero vector has no direction");
  }
}

TEST(Primitive, RandomVectorsReconstruct) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coord(-1000000, 1000000);
  for (int trial = 0; trial < 2000; ++trial) {
    LatticeVec v{coord(rng), coord(rng), coord(rng)};
    if (v.is_zero()) continue;
    auto p = primitive(v);
    EXPECT_TRUE(is_primitive(p.direction));
    EXPECT_GT(p.multiple, 0);
    EXPECT_EQ(p.multiple * p.direction, v);
  }
}

TEST(SmithNormalForm, SpecExamples) {
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(2)).diagonal, (std::vector<Integer>{1, 1}));
  EXPECT_EQ(smith_normal_form(int_matrix({{2, 4}, {6, 8}})).diagonal, (std::vector<Integer>{2, 4}));
  EXPECT_EQ(smith_normal_form(int_matrix({{2, 0}, {0, 0}})).diagonal, (std::vector<Integer>{2, 0}));
}

TEST(SmithNormalForm, RandomMatricesFactor) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(size(rng), size(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    auto snf = smith_normal_form(m);
    EXPECT_EQ(abs(determinant(snf.left)), 1);
    EXPECT_EQ(abs(determinant(snf.right)), 1);
    EXPECT_TRUE(is_diagonal_chain(snf.left * m * snf.right, snf.diagonal));
    if (m.rows() == m.cols()) {
      Integer prod = 1;
      for (const auto& d : snf.diagonal) prod *= d;
      EXPECT_EQ(prod, abs(determinant(m)));
    }
  }
}

TEST(HermiteNormalForm, MembershipMatchesSolving) {
  auto hnf = hermite_normal_form(int_matrix({{2, 0}, {1, 3}}));
  EXPECT_TRUE(hnf_contains(hnf, LatticeVec{3, 3}));
  EXPECT_TRUE(hnf_contains(hnf, LatticeVec{0, 6}));
  EXPECT_FALSE(hnf_contains(hnf, LatticeVec{1, 0}));
  EXPECT_FALSE(hnf_contains(hnf, LatticeVec{0, 3}));
}

TEST(Saturate, SpecExamples) {
  std::vector<LatticeVec> axes{{2, 0, 0}, {0, 3, 0}};
  auto s = saturate(axes, 3);
  std::vector<LatticeVec> expect{{1, 0, 0}, {0, 1, 0}};
  EXPECT_EQ(lattice_index(s, expect, 3), 1);
  EXPECT_EQ(lattice_index(expect, s, 3), 1);

  std::vector<LatticeVec> diag{{1, 1}};
  EXPECT_EQ(saturate(diag, 2), diag);

  std::vector<LatticeVec> two{{2, 2, 0}};
  auto t = saturate(two, 3);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(primitive(t[0]).direction == LatticeVec({1, 1, 0}) || primitive(t[0]).direction == LatticeVec({-1, -1, 0}),
            true);
  EXPECT_EQ(primitive(t[0]).multiple, 1);
}

TEST(Saturate, DependentInputIsRejected) {
  std::vector<LatticeVec> dep{{1, 2}, {2, 4}};
  EXPECT_THROW(saturate(dep, 2), std::invalid_argument);
}

TEST(Saturate, IdempotentAndIndexOneExactlyWhenSaturated) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<LatticeVec> basis{{entry(rng), entry(rng), entry(rng)}, {entry(rng), entry(rng), entry(rng)}};
    if (rank(basis, 3) < 2) continue;
    auto s = saturate(basis, 3);
    EXPECT_EQ(lattice_index(s, saturate(s, 3), 3), 1);
    const Integer idx = lattice_index(basis, s, 3);
    EXPECT_GE(idx, 1);
    // The basis is saturated exactly when the gcd of its 2x2 minors is 1.
    Integer g = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        Integer minor = basis[0][i] * basis[1][j] - basis[0][j] * basis[1][i];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
      }
    EXPECT_EQ(idx, g);
  }
}

TEST(LatticeIndex, SpecExamples) {
  std::vector<LatticeVec> z2{{1, 0}, {0, 1}};
  std::vector<LatticeVec> twice{{2, 0}, {0, 2}};
  EXPECT_EQ(lattice_index(twice, z2, 2), 4);
  EXPECT_EQ(lattice_index(z2, z2, 2), 1);
  std::vector<LatticeVec> skew{{1, 1}, {1, -1}};
  EXPECT_EQ(lattice_index(skew, z2, 2), 2);
  EXPECT_EQ(coset_count(skew[0], skew[1]), 2);
}

TEST(LatticeIndex, AgreesWithCosetEnumeration) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-5, 5);
  std::vector<LatticeVec> z2{{1, 0}, {0, 1}};
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<LatticeVec> sub{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
    if (rank(sub, 2) < 2) continue;
    EXPECT_EQ(lattice_index(sub, z2, 2), coset_count(sub[0], sub[1]));
  }
}

TEST(LatticeIndex, RejectsNonContainment) {
  std::vector<LatticeVec> sub{{1, 0}};
  std::vector<LatticeVec> super{{2, 0}};
  EXPECT_THROW(lattice_index(sub, super, 2), std::invalid_argument);
  std::vector<LatticeVec> other{{0, 1}};
  EXPECT_THROW(lattice_index(sub, other, 2), std::invalid_argument);
}

TEST(QuotientProjection, KillsTheSublatticeAndIsSurjective) {
  std::vector<LatticeVec> l{{1, 2, 3}};
  auto p = quotient_projection(l, 3);
  ASSERT_EQ(p.rows(), 3u);
  ASSERT_EQ(p.cols(), 2u);
  for (std::size_t c = 0; c < 2; ++c) {
    Integer s = 0;
    for (std::size_t k = 0; k < 3; ++k) s += p(k, c) * l[0][k];
    EXPECT_EQ(s, 0);
  }
  // Surjective onto Z^2: the 2x2 minors of the projection are coprime.
  EXPECT_EQ(smith_normal_form(p).diagonal, (std::vector<Integer>{1, 1}));
}

TEST(CompleteBasis, IsUnimodular) {
  std::vector<LatticeVec> l{{2, 3, 5}};
  auto b = complete_basis(l, 3);
  ASSERT_EQ(b.size(), 2u);
  b.insert(b.begin(), l.front());
  EXPECT_EQ(abs(determinant(matrix_from_rows(b, 3))), 1);
}

TEST(SolveRational, SpecExamples) {
  RatMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
  auto r = solve_rational(id, RationalVec{1, 2, 3});
  ASSERT_TRUE(std::holds_alternative<UniqueSolution>(r));
  EXPECT_EQ(std::get<UniqueSolution>(r).x, (RationalVec{1, 2, 3}));

  RatMatrix row(1, 2);
  row(0, 0) = row(0, 1) = 1;
  r = solve_rational(row, RationalVec{0});
  ASSERT_TRUE(std::holds_alternative<SolutionFamily>(r));
  const auto& fam = std::get<SolutionFamily>(r);
  EXPECT_EQ(fam.particular, (RationalVec{0, 0}));
  ASSERT_EQ(fam.kernel.size(), 1u);
  EXPECT_EQ(fam.kernel[0][0], -fam.kernel[0][1]);
  EXPECT_NE(fam.kernel[0][0], 0);

  RatMatrix col(2, 1);
  col(0, 0) = col(1, 0) = 1;
  EXPECT_TRUE(std::holds_alternative<Infeasible>(solve_rational(col, RationalVec{0, 1})));
}

TEST(SolveRational, SolutionsSubstituteBack) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> entry(-7, 7);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    RatMatrix a(size(rng), size(rng));
    RationalVec b(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a(i, j) = Rational(entry(rng), 1 + (trial % 3));
        a(i, j).canonicalize();
      }
      b[i] = entry(rng);
    }
    auto check = [&](const RationalVec& x) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        EXPECT_EQ(s, b[i]);
      }
    };
    auto r = solve_rational(a, b);
    if (auto* u = std::get_if<UniqueSolution>(&r)) {
      check(u->x);
    } else if (auto* f = std::get_if<SolutionFamily>(&r)) {
      check(f->particular);
      RationalVec moved = f->particular;
      for (const auto& k : f->kernel) moved += Rational(3, 2) * k;
      check(moved);
    }
  }
}

TEST(IntegerEchelon, MatchesRationalEchelon) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 5;
    IntegerEchelon ie(n);
    RowEchelon re(n);
    for (int k = 0; k < 7; ++k) {
      std::vector<Integer> row(n);
      std::vector<Rational> qrow(n);
      for (std::size_t j = 0; j < n; ++j) qrow[j] = row[j] = (entry(rng) > 1 ? entry(rng) : 0);
      const Integer rhs = entry(rng);
      const auto a = ie.add(row, rhs);
      const auto b = re.add(qrow, Rational(rhs));
      ASSERT_EQ(a, b);
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(ie.is_pivot(j), re.is_pivot(j));
      std::vector<Integer> form(n);
      std::vector<Rational> qform(n);
      for (std::size_t j = 0; j < n; ++j) qform[j] = form[j] = entry(rng);
      Rational value;
      const bool determined = re.evaluate(qform, Rational(1), value);
      const auto sign = ie.sign_if_determined(form, 1);
      ASSERT_EQ(determined, sign.has_value());
      if (determined) EXPECT_EQ(*sign, sgn(value));
    }
    if (ie.complete()) EXPECT_EQ(ie.solution(), re.solution());
  }
}

TEST(IntegerEchelon, PopRestoresPivots) {
  IntegerEchelon e(3);
  ASSERT_EQ(e.add(std::vector<Integer>{0, 2, 4}, 2), IntegerEchelon::AddResult::independent);
  ASSERT_EQ(e.add(std::vector<Integer>{1, 1, 0}, 1), IntegerEchelon::AddResult::independent);
  EXPECT_TRUE(e.is_pivot(0));
  EXPECT_TRUE(e.is_pivot(1));
  e.pop();
  EXPECT_FALSE(e.is_pivot(0));
  EXPECT_EQ(e.add(std::vector<Integer>{0, 1, 2}, 1), IntegerEchelon::AddResult::redundant);
  EXPECT_EQ(e.add(std::vector<Integer>{0, 1, 2}, 2), IntegerEchelon::AddResult::inconsistent);
}
