#include "sk1/abelian_group.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sk1/error.hpp"

namespace sk1 {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::BadParams;
}

TEST(AbelianGroup, MakeNormalizes) {
  const auto g = make_group(3, {9, 9});
  EXPECT_EQ(std::vector<std::int64_t>(g.orders().begin(), g.orders().end()),
            (std::vector<std::int64_t>{9, 9}));
  EXPECT_EQ(g.exponent(), 9);
  EXPECT_EQ(g.order(), 81);

  const auto h = make_group(3, {3, 27});
  EXPECT_EQ(std::vector<std::int64_t>(h.orders().begin(), h.orders().end()),
            (std::vector<std::int64_t>{27, 3}));
}

TEST(AbelianGroup, MakeRejectsBadInput) {
  EXPECT_EQ(code_of([] { make_group(2, {4, 4}); }), ErrorCode::NonOddPrime);
  EXPECT_EQ(code_of([] { make_group(9, {9}); }), ErrorCode::NonOddPrime);
  EXPECT_EQ(code_of([] { make_group(3, {9, 6}); }), ErrorCode::NotPPower);
  EXPECT_EQ(code_of([] { make_group(3, {1}); }), ErrorCode::NotPPower);
}

TEST(AbelianGroup, Multiplication) {
  const auto g = make_group(3, {9, 9});
  EXPECT_EQ(g.mul(g.element({1, 0}), g.element({0, 1})), g.element({1, 1}));
  EXPECT_EQ(g.mul(g.element({8, 0}), g.element({1, 0})), g.identity());
  EXPECT_EQ(g.mul(g.element({5, 7}), g.element({5, 7})), g.element({1, 5}));
  EXPECT_EQ(code_of([&] { g.mul(Element{{1}}, g.identity()); }), ErrorCode::DimensionMismatch);
}

TEST(AbelianGroup, ElementOrderExamples) {
  const auto g = make_group(3, {9, 9});
  EXPECT_EQ(g.element_order(g.identity()), 1);
  const auto h = make_group(3, {27, 9});
  EXPECT_EQ(h.element_order(h.element({3, 3})), 9);
  EXPECT_EQ(h.element_order(h.element({1, 0})), 27);
}

TEST(AbelianGroup, ElementOrderMatchesRepeatedMultiplication) {
  for (const auto& orders : oracle::p_groups(3, 6, 6)) {
    const auto g = make_group(3, orders);
    for (const auto& x : g.enumerate_elements()) {
      const auto ord = g.element_order(x);
      ASSERT_EQ(ord, oracle::element_order(g, x));
      ASSERT_EQ(g.exponent() % ord, 0);
    }
  }
}

TEST(AbelianGroup, EnumerationOrderAndIndex) {
  const auto c3 = make_group(3, {3});
  const auto e = c3.enumerate_elements();
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], Element{{0}});
  EXPECT_EQ(e[2], Element{{2}});

  const auto g = make_group(3, {3, 3});
  const auto all = g.enumerate_elements();
  ASSERT_EQ(all.size(), 9u);
  EXPECT_EQ(all.front(), g.element({0, 0}));
  EXPECT_EQ(all.back(), g.element({2, 2}));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));

  const auto h = make_group(3, {9, 9});
  const auto elems = h.enumerate_elements();
  EXPECT_EQ(elems.size(), 81u);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    EXPECT_EQ(h.index_of(elems[i]), static_cast<std::int64_t>(i));
  }
  EXPECT_EQ(code_of([&] { h.enumerate_elements(80); }), ErrorCode::TooLarge);
}

TEST(AbelianGroup, GroupAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (const auto& orders : oracle::p_groups(5, 5, 3)) {
    const auto g = make_group(5, orders);
    auto random_element = [&] {
      std::vector<std::int64_t> c;
      for (auto o : g.orders())
        c.push_back(std::uniform_int_distribution<std::int64_t>(0, o - 1)(rng));
      return g.element(c);
    };
    for (int t = 0; t < 50; ++t) {
      const auto x = random_element();
      const auto y = random_element();
      const auto z = random_element();
      ASSERT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
      ASSERT_EQ(g.mul(x, y), g.mul(y, x));
      ASSERT_EQ(g.mul(x, g.identity()), x);
      ASSERT_EQ(g.mul(x, g.inverse(x)), g.identity());
      ASSERT_EQ(g.pow(x, -3), g.inverse(g.pow(x, 3)));
    }
  }
}

}  // namespace
}  // namespace sk1
