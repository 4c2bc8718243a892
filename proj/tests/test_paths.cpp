#include <gtest/gtest.h>

#include <set>

#include "selfcomp/formulas.hpp"
#include "selfcomp/paths.hpp"
#include "selfcomp/plane_partition.hpp"

using namespace selfcomp;

TEST(Points, Examples) {
  EXPECT_EQ(start_points(4, 3), (std::vector<LatticePoint>{{0, 3}, {1, 4}, {2, 5}, {3, 6}}));
  EXPECT_TRUE(start_points(0, 5).empty());
  EXPECT_EQ(start_points(2, 1), (std::vector<LatticePoint>{{0, 1}, {1, 2}}));
  EXPECT_EQ(end_points(2, 1, 1), (std::vector<LatticePoint>{{1, 0}, {2, 1}, {3, 2}}));
  const auto e = end_points(4, 3, 1);
  ASSERT_EQ(e.size(), 7u);
  EXPECT_EQ(e[1], (LatticePoint{2, 1}));
  EXPECT_EQ(e[2], (LatticePoint{3, 2}));
  EXPECT_EQ(e[4], (LatticePoint{5, 4}));
  EXPECT_EQ(e[5], (LatticePoint{6, 5}));
}

TEST(SinglePath, Examples) {
  EXPECT_EQ(single_path_signed_count({0, 1}, {1, 0}), 0);
  EXPECT_EQ(single_path_signed_count({3, 3}, {3, 3}), 1);
  EXPECT_EQ(single_path_signed_count({0, 1}, {2, 1}), 1);
  EXPECT_EQ(single_path_signed_count({2, 0}, {1, 0}), 0);
}

TEST(TEntry, Examples) {
  EXPECT_EQ(t_entry(1, 1, 2, 1, 1), 0);
  EXPECT_EQ(t_entry(2, 3, 2, 1, 1), 1);
  EXPECT_EQ(t_entry(1, 3, 1, 4, 0), 2);
}

TEST(TEntry, MatchesBruteForcePathSum) {
  for (std::int64_t a = 1; a <= 4; ++a)
    for (std::int64_t b = 1; b <= 4; ++b)
      for (std::int64_t x = 0; x <= 3; ++x) {
        const auto s = start_points(a, b);
        const auto e = end_points(a, b, x);
        for (std::int64_t i = 1; i <= a; ++i)
          for (std::int64_t j = 1; j <= a + b; ++j)
            EXPECT_EQ(t_entry(i, j, a, b, x),
                      single_path_signed_count(s[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(j - 1)]))
                << a << b << x << i << j;
      }
}

TEST(TEntry, ExponentFormsAgree) {
  for (std::int64_t x = 0; x <= 3; ++x)
    for (std::int64_t i = 1; i <= 4; ++i)
      for (std::int64_t j = 1; j <= 8; ++j) EXPECT_EQ(parity_sign((x + j - i) * (j - 1)), parity_sign((x - i) * (j - 1)));
}

TEST(Selections, ClosedUnderReflection) {
  EXPECT_EQ(symmetric_selections(2, 1), (std::vector<std::vector<std::int64_t>>{{1, 3}}));
  EXPECT_EQ(symmetric_selections(1, 4), (std::vector<std::vector<std::int64_t>>{{3}}));
  EXPECT_TRUE(symmetric_selections(3, 3).empty());
  EXPECT_EQ(symmetric_selections(64, 1).size(), 1u);
  for (std::int64_t a = 0; a <= 6; ++a)
    for (std::int64_t b = 0; b <= 6; ++b) {
      if ((a + b) % 2 == 0 && a % 2 == 1) continue;
      const auto sels = symmetric_selections(a, b);
      EXPECT_EQ(BigInt(sels.size()), binom((a + b) / 2, a / 2));
      for (const auto& k : sels) {
        ASSERT_EQ(static_cast<std::int64_t>(k.size()), a);
        for (std::size_t t = 0; t < k.size(); ++t) EXPECT_EQ(k[t] + k[k.size() - 1 - t], a + b + 1);
      }
    }
}

TEST(GlobalSign, Examples) {
  EXPECT_EQ(global_sign(BoxDims{2, 1, 3}), 1);
  EXPECT_EQ(global_sign(BoxDims{1, 4, 4}), 1);
  EXPECT_EQ(global_sign(BoxDims{4, 3, 5}), -1);
  EXPECT_THROW(global_sign(BoxDims{3, 3, 3}), std::domain_error);
}

TEST(GlobalSign, ClosedFormsMatchReferenceFamily) {
  for (std::int64_t a = 1; a <= 8; ++a)
    for (std::int64_t b = 1; b <= 8; ++b)
      for (std::int64_t c = b; c <= 10; c += 2) {
        const NormalizedBox nb = normalize({a, b, c});
        if (nb.parity == ParityCase::OOO) continue;
        EXPECT_EQ(global_sign(nb), reference_family_weight(nb)) << a << b << c;
      }
}

// Regression for the all-even boxes, where the sign comes from the path
// family of the reference partition.
TEST(GlobalSign, AllEvenPattern) {
  for (std::int64_t a = 2; a <= 10; a += 2)
    for (std::int64_t b = 2; b <= 10; b += 2)
      for (std::int64_t c = b; c <= 12; c += 2) {
        const NormalizedBox nb = normalize({a, b, c});
        if (nb.a() != a) continue;
        EXPECT_EQ(global_sign(nb), parity_sign(a * (a - 2) / 8 + (a / 2) * (nb.x() + 1))) << a << b << c;
      }
}

TEST(Families, BijectionWithSelfComplementaryPartitions) {
  for (std::int64_t a = 1; a <= 4; ++a)
    for (std::int64_t b = 1; b <= 5; ++b)
      for (std::int64_t c = 1; c <= 6; ++c) {
        const NormalizedBox nb = normalize({a, b, c});
        if (nb.parity == ParityCase::OOO || sc_free_cells(nb.dims) > 32) continue;
        const auto ref = reference_pp(nb.dims);
        std::set<std::vector<std::vector<char>>> images;
        for (const auto& p : collect_sc(nb.dims)) {
          const auto fam = family_from_partition(nb, p);
          EXPECT_TRUE(is_nonintersecting(fam));
          EXPECT_EQ(sign_of(p, ref), global_sign(nb) * family_weight(fam, nb.a(), nb.b(), nb.x()))
              << nb.a() << nb.b() << nb.c() << ' ' << p;
          std::vector<std::vector<char>> key;
          for (const auto& path : fam) {
            std::vector<char> steps;
            for (auto s : path.steps) steps.push_back(static_cast<char>(s));
            key.push_back(steps);
          }
          images.insert(key);
        }
        EXPECT_EQ(BigInt(images.size()), count_families(nb.dims)) << a << b << c;
        EXPECT_EQ(BigInt(images.size()), stanley_SC(nb.dims)) << a << b << c;
      }
}

TEST(Families, MiddleEndpointIsForcedForOneRow) {
  const NormalizedBox nb = normalize({1, 4, 4});
  std::vector<std::int64_t> ends;
  enumerate_families(nb, [&](const std::vector<MonotonePath>& fam, int) {
    ASSERT_EQ(fam.size(), 1u);
    ends.push_back(endpoint_index(fam[0].end(), nb.x()));
  });
  EXPECT_EQ(ends, std::vector<std::int64_t>(6, 3));
}

TEST(Families, SignedCounts) {
  EXPECT_EQ(signed_count_paths({2, 1, 3}), 0);
  EXPECT_EQ(signed_count_paths({1, 4, 4}), 2);
  EXPECT_EQ(signed_count_paths({2, 2, 2}), 2);
  EXPECT_THROW(signed_count_paths({3, 3, 3}), std::domain_error);
  EXPECT_THROW(signed_count_paths({10, 10, 10}), BudgetExceeded);
}
