#include <gtest/gtest.h>

#include "random_matrices.hpp"
#include "selfcomp/enumeration.hpp"
#include "selfcomp/minor_summation.hpp"
#include "selfcomp/paths.hpp"
#include "selfcomp/pfaffian.hpp"

using namespace selfcomp;
using selfcomp::testing::random_matrix;
using selfcomp::testing::random_skew;

TEST(Determinant, Examples) {
  EXPECT_EQ(det_bareiss(IntMatrix::identity(3)), 1);
  EXPECT_EQ(det_bareiss(IntMatrix{{0, 0}, {1, 1}}), 0);
  EXPECT_EQ(det_bareiss(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(det_bareiss(IntMatrix(0, 0)), 1);
  const IntMatrix t = t_matrix(normalize({2, 1, 3}));
  EXPECT_EQ(det_bareiss(t.select_columns({0, 2})), 0);
}

TEST(Determinant, BareissMatchesCofactor) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int rep = 0; rep < 40; ++rep) {
      const IntMatrix m = random_matrix(rng, n, n, -4, 4);
      EXPECT_EQ(det_bareiss(m), det_cofactor(m));
    }
}

TEST(Determinant, IsMultiplicative) {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 30; ++rep) {
    const IntMatrix l = random_matrix(rng, 5, 5, -9, 9);
    const IntMatrix r = random_matrix(rng, 5, 5, -9, 9);
    EXPECT_EQ(det_bareiss(l * r), det_bareiss(l) * det_bareiss(r));
  }
}

TEST(Pfaffian, Examples) {
  EXPECT_EQ(pf_combinatorial(IntMatrix{{0, 7}, {-7, 0}}), 7);
  EXPECT_EQ(pf_elimination(IntMatrix{{0, 7}, {-7, 0}}), 7);
  EXPECT_EQ(pfaffian(IntMatrix(0, 0)), 1);
  const IntMatrix block{{0, 3, 0, 0}, {-3, 0, 0, 0}, {0, 0, 0, 5}, {0, 0, -5, 0}};
  EXPECT_EQ(pf_elimination(block), 15);
  EXPECT_THROW(pf_combinatorial(IntMatrix(3, 3)), std::invalid_argument);
  EXPECT_THROW(pf_elimination(IntMatrix(3, 3)), std::invalid_argument);
  EXPECT_THROW(pf_elimination(IntMatrix{{1, 0}, {0, 0}}), std::invalid_argument);
}

TEST(Pfaffian, FourByFourExpansion) {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 50; ++rep) {
    const IntMatrix m = random_skew(rng, 4, -9, 9);
    const BigInt want = m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
    EXPECT_EQ(pf_combinatorial(m), want);
    EXPECT_EQ(pf_elimination(m), want);
  }
}

TEST(Pfaffian, SquareIsDeterminant) {
  std::mt19937_64 rng(14);
  for (std::size_t n = 2; n <= 10; n += 2)
    for (int rep = 0; rep < 30; ++rep) {
      const IntMatrix m = random_skew(rng, n, -5, 5);
      const BigInt pf = pf_elimination(m);
      EXPECT_EQ(pf * pf, det_bareiss(m));
      if (n <= 8) EXPECT_EQ(pf_combinatorial(m), pf);
    }
}

TEST(Pfaffian, SparseInputsNeedPivoting) {
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 60; ++rep) {
    const IntMatrix m = random_skew(rng, 8, -1, 1);
    EXPECT_EQ(pf_elimination(m), pf_combinatorial(m));
  }
}

TEST(Pfaffian, CongruenceScalesByDeterminant) {
  std::mt19937_64 rng(16);
  for (int rep = 0; rep < 30; ++rep) {
    const IntMatrix a = random_skew(rng, 6, -4, 4);
    const IntMatrix b = random_matrix(rng, 6, 6, -3, 3);
    EXPECT_EQ(pf_elimination(b * a * b.transpose()), det_bareiss(b) * pf_elimination(a));
  }
}

TEST(Pfaffian, SwappingTwoIndicesFlipsSign) {
  std::mt19937_64 rng(17);
  const IntMatrix m = random_skew(rng, 6, -6, 6);
  const IntMatrix swapped = m.submatrix({1, 0, 2, 3, 4, 5}, {1, 0, 2, 3, 4, 5});
  EXPECT_EQ(pf_elimination(swapped), -pf_elimination(m));
}

TEST(Lgv, Examples) {
  const auto entry = [](LatticePoint s, LatticePoint e) { return single_path_signed_count(s, e); };
  EXPECT_EQ(lgv_determinant({{0, 2}}, {{3, 0}}, entry), single_path_signed_count({0, 2}, {3, 0}));
  const auto starts = start_points(2, 1);
  const auto ends = end_points(2, 1, 1);
  EXPECT_EQ(lgv_determinant(starts, {ends[0], ends[2]}, entry), 0);

  // (2,2,2): the symmetric endpoint pairs sum, with the endpoint and global
  // signs, to the signed count.
  const NormalizedBox nb = normalize({2, 2, 2});
  const auto s = start_points(2, 2);
  const auto e = end_points(2, 2, nb.x());
  BigInt total = 0;
  for (const auto& sel : symmetric_selections(2, 2)) {
    int factor = 1;
    for (auto j : sel) factor *= endpoint_sign(j, 2, 2);
    total += factor * lgv_determinant(s, {e[static_cast<std::size_t>(sel[0] - 1)], e[static_cast<std::size_t>(sel[1] - 1)]}, entry);
  }
  EXPECT_EQ(global_sign(nb) * total, 2);
}

TEST(MinorSummation, IdentityWithIdentityFactor) {
  std::mt19937_64 rng(18);
  const IntMatrix a = random_skew(rng, 4, -5, 5);
  const auto sides = iw_sides(a, IntMatrix::identity(4));
  EXPECT_EQ(sides.lhs, pf_elimination(a));
  EXPECT_TRUE(sides.holds());
}

TEST(MinorSummation, RandomInstances) {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 40; ++rep) {
    EXPECT_TRUE(iw_identity_check(random_skew(rng, 4, -3, 3), random_matrix(rng, 4, 2, -3, 3)));
    EXPECT_TRUE(iw_identity_check(random_skew(rng, 6, -3, 3), random_matrix(rng, 6, 4, -3, 3)));
  }
  EXPECT_THROW(iw_sides(random_skew(rng, 4, -3, 3), random_matrix(rng, 4, 3, -3, 3)), std::invalid_argument);
}

TEST(PairedMinorSum, Examples) {
  const IntMatrix s{{2, 5}, {-1, 4}};
  EXPECT_EQ(okkor_sum(s), 2 * 4 - 5 * -1);
  EXPECT_EQ(okkor_minor_sum(s), 13);
  std::mt19937_64 rng(20);
  for (int rep = 0; rep < 40; ++rep) {
    const IntMatrix s24 = random_matrix(rng, 2, 4, -5, 5);
    EXPECT_EQ(okkor_sum(s24), okkor_minor_sum(s24));
    const IntMatrix s46 = random_matrix(rng, 4, 6, -5, 5);
    EXPECT_EQ(okkor_sum(s46), okkor_minor_sum(s46));
    EXPECT_EQ(pf_elimination(okkor_entry_matrix(s46)), okkor_sum(s46));
  }
  EXPECT_THROW(okkor_sum(IntMatrix(4, 2)), std::invalid_argument);
}
