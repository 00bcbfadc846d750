#include "sk1/whitehead_rank.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sk1/error.hpp"
#include "sk1/genetic.hpp"
#include "sk1/metacyclic.hpp"

namespace sk1 {
namespace {

TEST(WhiteheadRank, SquareAbelianCounts) {
  EXPECT_EQ(irrep_counts_square_abelian(3, 1), (IrrepCounts{9, 5, 5}));
  EXPECT_EQ(irrep_counts_square_abelian(3, 2), (IrrepCounts{81, 41, 17}));
  EXPECT_EQ(irrep_counts_square_abelian(3, 3), (IrrepCounts{729, 365, 53}));
}

TEST(WhiteheadRank, SquareAbelianRank) {
  EXPECT_EQ(rank_square_abelian(3, 1), 0);
  EXPECT_EQ(rank_square_abelian(3, 2), 24);
  EXPECT_EQ(rank_square_abelian(5, 1), 6);
}

TEST(WhiteheadRank, MetacyclicCounts) {
  EXPECT_EQ(irrep_counts_metacyclic(3, 3), (IrrepCounts{11, 6, 6}));
  EXPECT_EQ(irrep_counts_metacyclic(3, 4), (IrrepCounts{33, 17, 9}));
  EXPECT_EQ(irrep_counts_metacyclic(3, 5), (IrrepCounts{99, 50, 12}));
}

TEST(WhiteheadRank, MetacyclicRank) {
  EXPECT_EQ(rank_metacyclic(3, 3), 0);
  EXPECT_EQ(rank_metacyclic(3, 4), 8);
  EXPECT_EQ(rank_metacyclic(5, 3), 7);
}

TEST(WhiteheadRank, RankEqualsRealMinusRational) {
  for (std::int64_t p : {3, 5, 7}) {
    for (int n = 1; n <= 4; ++n) {
      const auto c = irrep_counts_square_abelian(p, n);
      EXPECT_EQ(rank_square_abelian(p, n), c.real - c.rational) << p << " " << n;
      EXPECT_LE(c.rational, c.real);
      EXPECT_LE(c.real, c.complex);
      EXPECT_GE(rank_square_abelian(p, n), 0);
    }
    for (int n = 3; n <= 6; ++n) {
      const auto c = irrep_counts_metacyclic(p, n);
      EXPECT_EQ(rank_metacyclic(p, n), c.real - c.rational) << p << " " << n;
      EXPECT_LE(c.rational, c.real);
      EXPECT_GE(rank_metacyclic(p, n), 0);
    }
  }
}

TEST(WhiteheadRank, RationalCountMatchesBasisSize) {
  for (auto [p, max_n] : {std::pair<std::int64_t, int>{3, 3}, {5, 2}}) {
    for (int n = 1; n <= max_n; ++n) {
      const auto o = oracle::ipow(p, n);
      EXPECT_EQ(irrep_counts_square_abelian(p, n).rational,
                static_cast<std::int64_t>(genetic_basis_abelian(make_group(p, {o, o})).size()));
    }
  }
  for (int n = 3; n <= 5; ++n) {
    EXPECT_EQ(irrep_counts_metacyclic(3, n).rational,
              static_cast<std::int64_t>(genetic_basis_metacyclic(make_metacyclic(3, n)).size()));
  }
}

TEST(WhiteheadRank, BadParams) {
  auto expect_bad = [](auto&& fn) {
    try {
      fn();
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadParams);
    }
  };
  expect_bad([] { rank_square_abelian(2, 2); });
  expect_bad([] { rank_square_abelian(3, 0); });
  expect_bad([] { irrep_counts_square_abelian(15, 1); });
  expect_bad([] { rank_metacyclic(3, 2); });
  expect_bad([] { irrep_counts_metacyclic(4, 3); });
}

}  // namespace
}  // namespace sk1
