#include "sk1/sk1_abelian.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sk1/error.hpp"

namespace sk1 {
namespace {

using Row = std::vector<std::int64_t>;

CyclicDecomposition dec(std::vector<std::pair<std::int64_t, std::int64_t>> counts) {
  return CyclicDecomposition::from_multiplicities(counts);
}

AbelianPGroup square(std::int64_t p, int n) {
  const auto o = oracle::ipow(p, n);
  return make_group(p, {o, o});
}

// psi_row entries keyed by the defining tuple of each column.
std::map<Row, std::int64_t> named_row(const AbelianPGroup& g,
                                      const std::vector<GeneticSubgroupA>& basis, const Element& h,
                                      const Element& gen) {
  const auto row = psi_row(g, basis, h, gen);
  const auto target = TargetProduct::from_basis(basis);
  std::map<Row, std::int64_t> out;
  for (std::size_t i = 0; i < row.size(); ++i) out[target.columns[i].subgroup.hom().tuple] = row[i];
  return out;
}

TEST(Sk1Abelian, PsiRowExamples) {
  const auto g = make_group(3, {3, 3});
  const auto basis = genetic_basis_abelian(g);
  const auto a = g.generator(0);
  const auto b = g.generator(1);
  // <a> = ker (0,1), <ab> = ker (1,2), <a^2 b> = ker (1,1), <b> = ker (1,0).
  const Row sub_a{0, 1}, sub_ab{1, 2}, sub_a2b{1, 1}, sub_b{1, 0};

  auto r = named_row(g, basis, b, a);
  EXPECT_EQ(r[sub_a], 0);
  EXPECT_EQ(r[sub_ab], 0);
  EXPECT_EQ(r[sub_a2b], 0);
  EXPECT_EQ(r[sub_b], 1);

  r = named_row(g, basis, a, a);
  for (const auto& [k, v] : r) EXPECT_EQ(v, 0);

  r = named_row(g, basis, g.identity(), b);
  EXPECT_EQ(r[sub_a], 1);
  EXPECT_EQ(r[sub_ab], 2);
  EXPECT_EQ(r[sub_a2b], 1);
  EXPECT_EQ(r[sub_b], 0);

  // Canonical column order sorts by (index, tuple).
  EXPECT_EQ(psi_row(g, basis, g.identity(), b), (Row{1, 0, 1, 2}));
}

TEST(Sk1Abelian, TargetProductSkipsFullGroup) {
  const auto g = make_group(3, {9, 3});
  const auto basis = genetic_basis_abelian(g);
  const auto target = TargetProduct::from_basis(basis);
  EXPECT_EQ(target.columns.size(), basis.size() - 1);
  for (const auto& c : target.columns) EXPECT_GT(c.order, 1);
}

TEST(Sk1Abelian, RelationMatrixShape) {
  const auto g = make_group(3, {3, 3});
  const auto basis = genetic_basis_abelian(g);
  const auto rel = relation_matrix(g, basis, Strategy::Representatives);
  EXPECT_EQ(rel.seed_rows, 4u);
  EXPECT_EQ(rel.matrix.cols(), 4u);
  for (std::size_t i = 0; i < rel.seed_rows; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(rel.matrix.at(i, j), i == j ? 3 : 0);
  }
  EXPECT_TRUE(reduce_relations(rel, 3, SnfRoute::Exact).is_trivial());
  std::set<Row> rows;
  for (std::size_t i = 0; i < rel.matrix.rows(); ++i) {
    const auto row = rel.matrix.row(i);
    EXPECT_TRUE(rows.emplace(row.begin(), row.end()).second) << "duplicate row " << i;
  }
}

TEST(Sk1Abelian, Examples) {
  EXPECT_TRUE(sk1(square(3, 1)).is_trivial());
  EXPECT_EQ(sk1(square(3, 2)), dec({{3, 2}}));
  EXPECT_EQ(sk1(square(3, 3)), dec({{3, 8}, {9, 2}}));
  EXPECT_EQ(sk1(square(3, 4)), dec({{3, 22}, {9, 12}, {27, 2}}));
}

TEST(Sk1Abelian, CyclicGroupsAreTrivial) {
  for (std::int64_t p : {3, 5}) {
    for (int e = 1; e <= 4; ++e) {
      const auto g = make_group(p, {oracle::ipow(p, e)});
      for (auto strategy : {Strategy::Representatives, Strategy::Exhaustive}) {
        PipelineOptions o;
        o.strategy = strategy;
        o.max_order = 1000;
        EXPECT_TRUE(sk1(g, o).is_trivial()) << p << "^" << e;
      }
    }
  }
}

TEST(Sk1Abelian, StrategyInvariance) {
  auto groups = oracle::p_groups(3, 6, 3);
  for (const auto& g5 : oracle::p_groups(5, 3, 2)) groups.push_back(g5);
  for (const auto& orders : groups) {
    const std::int64_t p = orders.front() % 3 == 0 ? 3 : 5;
    const auto g = make_group(p, orders);
    PipelineOptions rep;
    PipelineOptions exh;
    exh.strategy = Strategy::Exhaustive;
    EXPECT_EQ(sk1(g, rep), sk1(g, exh))
        << "p=" << p << " rank=" << orders.size() << " o1=" << orders.front();
  }
}

TEST(Sk1Abelian, ExtraRowsNeverChangeTheResult) {
  std::mt19937_64 rng(21);
  for (const auto& orders :
       std::vector<std::vector<std::int64_t>>{{27, 27}, {27, 9}, {9, 3, 3}, {81, 3}}) {
    const auto g = make_group(3, orders);
    const auto basis = genetic_basis_abelian(g);
    auto rel = relation_matrix(g, basis, Strategy::Representatives);
    const auto before = reduce_relations(rel, 3, SnfRoute::Exact);
    const auto elems = g.enumerate_elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    std::vector<Row> extra;
    for (int t = 0; t < 20; ++t) {
      const auto& h = elems[pick(rng)];
      const auto& x = elems[pick(rng)];
      extra.push_back(psi_row(g, basis, h, x));
    }
    append_unique_rows(rel, extra);
    EXPECT_EQ(reduce_relations(rel, 3, SnfRoute::Exact), before);
  }
}

TEST(Sk1Abelian, ExponentBound) {
  for (auto [p, max_n] : {std::pair<std::int64_t, int>{3, 5}, {5, 3}, {7, 2}}) {
    for (int n = 1; n <= max_n; ++n) {
      const auto d = sk1(square(p, n));
      const BigInt bound = oracle::ipow(p, std::max(n - 1, 0));
      for (const auto& [divisor, count] : d.multiplicities()) {
        EXPECT_EQ(bound % divisor, 0) << p << " " << n << " " << divisor.get_str();
      }
    }
  }
}

TEST(Sk1Abelian, RoutesAgree) {
  for (const auto& orders :
       std::vector<std::vector<std::int64_t>>{{27, 27}, {81, 81}, {27, 9, 3}, {243, 9}}) {
    const auto g = make_group(3, orders);
    PipelineOptions local;
    PipelineOptions exact;
    exact.route = SnfRoute::Exact;
    EXPECT_EQ(sk1(g, local), sk1(g, exact));
  }
  PipelineOptions exact;
  exact.route = SnfRoute::Exact;
  EXPECT_EQ(sk1(square(5, 2), exact), sk1(square(5, 2)));
}

TEST(Sk1Abelian, ThreadCountDoesNotMatter) {
  const auto g = square(3, 4);
  PipelineOptions one;
  one.threads = 1;
  PipelineOptions four;
  four.threads = 4;
  const auto basis = genetic_basis_abelian(g);
  EXPECT_EQ(relation_matrix(g, basis, Strategy::Representatives, kDefaultMaxOrder, 1).matrix,
            relation_matrix(g, basis, Strategy::Representatives, kDefaultMaxOrder, 4).matrix);
  EXPECT_EQ(sk1(g, one), sk1(g, four));
}

TEST(Sk1Abelian, ExhaustiveGuard) {
  PipelineOptions exh;
  exh.strategy = Strategy::Exhaustive;
  try {
    sk1(square(3, 4), exh);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  exh.max_order = 6561;
  EXPECT_EQ(sk1(square(3, 4), exh), dec({{3, 22}, {9, 12}, {27, 2}}));
}

}  // namespace
}  // namespace sk1
