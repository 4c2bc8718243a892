#include <gtest/gtest.h>

#include <set>

#include "selfcomp/formulas.hpp"
#include "selfcomp/plane_partition.hpp"

using namespace selfcomp;

namespace {

std::int64_t symmetric_difference(const HeightMatrix& p, const HeightMatrix& q) {
  std::int64_t n = 0;
  for (std::int64_t r = 0; r < p.rows(); ++r)
    for (std::int64_t s = 0; s < p.cols(); ++s) n += std::abs(p(r, s) - q(r, s));
  return n;
}

}  // namespace

TEST(EnumeratePP, SmallBoxes) {
  std::vector<HeightMatrix> seen;
  enumerate_pp({1, 1, 1}, [&](const HeightMatrix& m) { seen.push_back(m); });
  ASSERT_EQ(seen.size(), 2u);
  EXPECT_EQ(seen[0], (HeightMatrix({1, 1, 1}, {{1}})));
  EXPECT_EQ(seen[1], (HeightMatrix({1, 1, 1}, {{0}})));
  EXPECT_EQ(count_pp({2, 2, 2}), 20);
  EXPECT_EQ(count_pp({0, 3, 4}), 1);
  EXPECT_EQ(count_pp({3, 0, 4}), 1);
}

TEST(EnumeratePP, CountMatchesMacMahon) {
  for (std::int64_t a = 1; a <= 27; ++a)
    for (std::int64_t b = 1; a * b <= 27; ++b)
      for (std::int64_t c = 1; a * b * c <= 27; ++c) EXPECT_EQ(count_pp({a, b, c}), macmahon_B(a, b, c));
}

TEST(EnumeratePP, StreamIsValidAndDistinct) {
  std::set<std::vector<std::int64_t>> seen;
  enumerate_pp({2, 3, 2}, [&](const HeightMatrix& m) {
    EXPECT_TRUE(m.is_plane_partition());
    EXPECT_TRUE(seen.insert(m.row_major()).second);
  });
  EXPECT_EQ(static_cast<std::int64_t>(seen.size()), macmahon_B(2, 3, 2));
}

TEST(EnumeratePP, BudgetGuard) {
  EXPECT_THROW(count_pp({4, 4, 5}), BudgetExceeded);
  EXPECT_NO_THROW(count_pp({4, 4, 5}, Budget::uniform(80)));
}

TEST(SelfComplementary, Examples) {
  EXPECT_TRUE(is_self_complementary(HeightMatrix({2, 2, 2}, {{2, 2}, {0, 0}})));
  EXPECT_FALSE(is_self_complementary(HeightMatrix({2, 2, 2}, {{2, 2}, {2, 0}})));
  EXPECT_FALSE(is_self_complementary(HeightMatrix({1, 1, 1}, {{0}})));
  EXPECT_FALSE(is_self_complementary(HeightMatrix({1, 1, 1}, {{1}})));
}

TEST(EnumerateSC, ListsInOrder) {
  const auto sc222 = collect_sc({2, 2, 2});
  const std::vector<HeightMatrix> want222{HeightMatrix({2, 2, 2}, {{2, 2}, {0, 0}}),
                                          HeightMatrix({2, 2, 2}, {{2, 1}, {1, 0}}),
                                          HeightMatrix({2, 2, 2}, {{2, 0}, {2, 0}}),
                                          HeightMatrix({2, 2, 2}, {{1, 1}, {1, 1}})};
  EXPECT_EQ(sc222, want222);
  const auto sc213 = collect_sc({2, 1, 3});
  const std::vector<HeightMatrix> want213{HeightMatrix({2, 1, 3}, {{3}, {0}}), HeightMatrix({2, 1, 3}, {{2}, {1}})};
  EXPECT_EQ(sc213, want213);
  EXPECT_TRUE(collect_sc({3, 1, 1}).empty());
}

TEST(EnumerateSC, AgreesWithFilteredFullEnumeration) {
  for (std::int64_t a = 1; a <= 4; ++a)
    for (std::int64_t b = 1; b <= 4; ++b)
      for (std::int64_t c = 1; a * b * c <= 48; ++c) {
        std::vector<HeightMatrix> filtered;
        enumerate_pp({a, b, c}, [&](const HeightMatrix& m) {
          if (is_self_complementary(m)) filtered.push_back(m);
        }, Budget::uniform(64));
        EXPECT_EQ(collect_sc({a, b, c}, Budget::uniform(64)), filtered) << a << b << c;
      }
}

TEST(EnumerateSC, CountMatchesStanley) {
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t b = 1; b <= 6; ++b)
      for (std::int64_t c = 1; c <= 6; ++c) {
        if (sc_free_cells({a, b, c}) > 32) continue;
        EXPECT_EQ(count_sc({a, b, c}), stanley_SC(a, b, c)) << a << b << c;
      }
}

TEST(Reference, Examples) {
  EXPECT_EQ(reference_pp({2, 2, 2}), HeightMatrix({2, 2, 2}, {{2, 2}, {0, 0}}));
  EXPECT_EQ(reference_pp({1, 4, 4}), HeightMatrix({1, 4, 4}, {{4, 4, 0, 0}}));
  EXPECT_EQ(reference_pp({2, 1, 3}), HeightMatrix({2, 1, 3}, {{3}, {0}}));
  EXPECT_THROW(reference_pp({3, 3, 3}), std::invalid_argument);
  for (std::int64_t a = 1; a <= 5; ++a)
    for (std::int64_t b = 1; b <= 5; ++b)
      for (std::int64_t c = 1; c <= 5; ++c) {
        if (a % 2 && b % 2 && c % 2) continue;
        const auto ref = reference_pp({a, b, c});
        EXPECT_TRUE(ref.is_plane_partition());
        EXPECT_TRUE(is_self_complementary(ref));
      }
}

TEST(Sign, Examples) {
  const auto ref = reference_pp({2, 2, 2});
  EXPECT_EQ(sign_of(ref, ref), 1);
  EXPECT_EQ(sign_of(HeightMatrix({2, 2, 2}, {{2, 1}, {1, 0}}), ref), -1);
  EXPECT_EQ(sign_of(HeightMatrix({2, 2, 2}, {{1, 1}, {1, 1}}), ref), 1);
}

TEST(Sign, SignedCounts) {
  EXPECT_EQ(signed_count_pp({2, 2, 2}), 2);
  EXPECT_EQ(signed_count_pp({2, 1, 3}), 0);
  EXPECT_EQ(signed_count_pp({1, 4, 4}), 2);
  EXPECT_EQ(signed_count_pp({3, 3, 3}), 0);

  std::vector<int> signs;
  const auto ref = reference_pp({1, 4, 4});
  enumerate_sc({1, 4, 4}, [&](const HeightMatrix& p) { signs.push_back(sign_of(p, ref)); });
  EXPECT_EQ(signs, (std::vector<int>{1, -1, 1, 1, -1, 1}));
}

// Every SC partition has exactly half of the cubes of each orbit, so two of
// them differ by an even number of cubes; half of that is the number of moves.
TEST(Sign, RelativeSignIsMoveParity) {
  for (std::int64_t a = 1; a <= 2; ++a)
    for (std::int64_t b = 1; b <= 2; ++b)
      for (std::int64_t c = 1; c <= 2; ++c) {
        if (a % 2 && b % 2 && c % 2) continue;
        const auto ref = reference_pp({a, b, c});
        const auto all = collect_sc({a, b, c});
        for (const auto& p : all)
          for (const auto& q : all) {
            const auto diff = symmetric_difference(p, q);
            ASSERT_EQ(diff % 2, 0);
            EXPECT_EQ(sign_of(p, ref) * sign_of(q, ref), (diff / 2) % 2 == 0 ? 1 : -1);
          }
      }
}

TEST(Sign, MagnitudeMatchesClosedForm) {
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t b = 1; b <= 6; ++b)
      for (std::int64_t c = 1; c <= 6; ++c) {
        if (sc_free_cells({a, b, c}) > 32) continue;
        EXPECT_EQ(abs(signed_count_pp({a, b, c})), minus_one_closed(a, b, c).magnitude) << a << b << c;
      }
}

TEST(PermuteAxes, PreservesCubesAndSelfComplementarity) {
  const std::array<int, 3> perm{2, 0, 1};
  for (const auto& p : collect_sc({2, 3, 4})) {
    const auto q = permute_axes(p, perm);
    EXPECT_EQ(q.dims(), (BoxDims{4, 2, 3}));
    EXPECT_TRUE(q.is_plane_partition());
    EXPECT_TRUE(is_self_complementary(q));
    EXPECT_EQ(q.cube_count(), p.cube_count());
    for (std::int64_t i = 1; i <= 2; ++i)
      for (std::int64_t j = 1; j <= 3; ++j)
        for (std::int64_t k = 1; k <= 4; ++k) EXPECT_EQ(p.contains(i, j, k), q.contains(k, i, j));
  }
}
