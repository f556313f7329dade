#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schubert/ihsolver.hpp"

using namespace schubert;

namespace {

const SchubertParams kSmall(2, 4, 4, 7);

std::vector<SchubertParams> geometric_box(int k_max, int l_max) {
  std::vector<SchubertParams> out;
  for (int k = 1; k <= k_max; ++k)
    for (int l = k; l <= l_max; ++l)
      for (int i = 0; i <= k; ++i)
        for (int j = k; j <= l; ++j)
          if (classify(SchubertParams(i, j, k, l)) == ParamClass::Geometric) out.emplace_back(i, j, k, l);
  return out;
}

}  // namespace

TEST(IHSolver, SmallTupleBackSubstitution) {
  const auto table = solve_backsub(kSmall);
  ASSERT_EQ(table.entries.size(), 3u);
  EXPECT_EQ(table.at(1), Polynomial::constant(1));
  const Polynomial g21 = shift(oracle::gauss(1, 1), 6);
  EXPECT_EQ(table.at(2), resolution_poincare(kSmall, 2) - g21 * table.at(1));
  EXPECT_EQ(table.at(2), oracle::gauss(1, 3) * oracle::gauss(4, 5));
  EXPECT_EQ(table.at(3), oracle::gauss(2, 3) * oracle::gauss(4, 6));
}

TEST(IHSolver, TransitionMatrixShape) {
  const auto n = transition_matrix(kSmall);
  ASSERT_EQ(n.size(), 3u);
  // rows and columns run p = 3, 2, 1
  EXPECT_EQ(n.at(0, 1), transition_entry(kSmall, 3, 2));
  EXPECT_TRUE(n.at(0, 2).is_zero());
  EXPECT_EQ(n.at(1, 2), Polynomial::monomial(1, 6));
  EXPECT_FALSE(n.at(0, 1).is_zero());
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b <= a; ++b) EXPECT_TRUE(n.at(a, b).is_zero());
}

TEST(IHSolver, TwoByTwoCase) {
  // r = 1: one transition entry, I_2 = H_2 - g_21 H_1
  const SchubertParams s(2, 4, 3, 6);
  ASSERT_EQ(s.r(), 1);
  ASSERT_EQ(classify(s), ParamClass::Geometric);
  const auto table = solve_neumann(s);
  ASSERT_EQ(table.entries.size(), 2u);
  EXPECT_EQ(table.at(2), resolution_poincare(s, 2) - transition_entry(s, 2, 1) * resolution_poincare(s, 1));
  EXPECT_EQ(table.at(2), ih_closed_form(s, 2));
}

TEST(IHSolver, RequiresGeometric) {
  EXPECT_THROW(solve_backsub(SchubertParams(0, 5, 3, 8)), InvalidParams);
  EXPECT_THROW(solve_neumann(SchubertParams(3, 2, 4, 9)), InvalidParams);
}

TEST(IHSolverProperty, AgreesWithClosedFormAndNeumann) {
  for (const auto& s : geometric_box(8, 14)) {
    const auto back = solve_backsub(s);
    const auto neumann = solve_neumann(s);
    ASSERT_EQ(back.entries.size(), static_cast<std::size_t>(s.r() + 1));
    for (int p = 1; p <= s.r() + 1; ++p) {
      EXPECT_EQ(back.at(p), ih_closed_form(s, p)) << to_string(s) << " p=" << p;
      EXPECT_EQ(neumann.at(p), back.at(p)) << to_string(s) << " p=" << p;
    }
  }
}

TEST(IHSolverProperty, PalindromicWithUnitEnds) {
  for (const auto& s : geometric_box(7, 12)) {
    const auto table = solve_backsub(s);
    for (int p = 1; p <= s.r() + 1; ++p) {
      const auto& ip = table.at(p);
      const auto center = static_cast<std::size_t>(2 * dim_stratum(s, p));
      EXPECT_TRUE(is_palindromic(ip, center)) << to_string(s) << " p=" << p;
      EXPECT_EQ(ip.coefficient(0), 1);
      EXPECT_EQ(ip.coefficient(center), 1);
    }
  }
}

TEST(IHSolverProperty, ReconstructsResolution) {
  for (const auto& s : geometric_box(7, 12)) {
    const auto table = solve_backsub(s);
    for (int p = 1; p <= s.r() + 1; ++p) {
      Polynomial sum = table.at(p);
      for (int q = 1; q < p; ++q) sum += transition_entry(s, p, q) * table.at(q);
      EXPECT_EQ(sum, resolution_poincare(s, p));
    }
  }
}
