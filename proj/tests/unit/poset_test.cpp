#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "reeskit/error.hpp"
#include "reeskit/families.hpp"
#include "reeskit/poset.hpp"

using namespace reeskit;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::PreconditionFailed;
}

FinitePoset vee() { return FinitePoset::from_covers({"0", "a", "b"}, {{0, 1}, {0, 2}}); }

/// Random graded poset: `levels` ranks, each element covering some nonempty
/// set of elements one rank down.
FinitePoset random_graded(std::mt19937& rng, std::size_t levels, std::size_t width) {
  std::vector<std::string> names;
  std::vector<Cover> covers;
  std::vector<std::vector<Element>> rank(levels);
  std::uniform_int_distribution<std::size_t> w(1, width);
  for (std::size_t r = 0; r < levels; ++r) {
    const std::size_t k = w(rng);
    for (std::size_t i = 0; i < k; ++i) {
      const Element x = names.size();
      names.push_back("r" + std::to_string(r) + "_" + std::to_string(i));
      rank[r].push_back(x);
      if (r == 0) continue;
      bool any = false;
      for (Element y : rank[r - 1])
        if (rng() % 2) {
          covers.emplace_back(y, x);
          any = true;
        }
      if (!any) covers.emplace_back(rank[r - 1][rng() % rank[r - 1].size()], x);
    }
  }
  return FinitePoset::from_covers(names, covers);
}

}  // namespace

TEST(FromCovers, BuildsChain) {
  auto p = FinitePoset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}});
  EXPECT_TRUE(are_isomorphic(p, chain(2)));
  EXPECT_EQ(p.length(), 2U);
}

TEST(FromCovers, RejectsBadInput) {
  EXPECT_EQ(code_of([] { FinitePoset::from_covers({"a", "b"}, {{0, 1}, {1, 0}}); }), ErrorCode::CycleDetected);
  EXPECT_EQ(code_of([] { FinitePoset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}); }),
            ErrorCode::NotReduced);
  EXPECT_EQ(code_of([] { FinitePoset::from_covers({"a", "b"}, {{0, 2}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { FinitePoset::from_covers({"a", "a"}, {}); }), ErrorCode::DuplicateDescriptor);
}

TEST(FromCovers, AutoReduceDropsImpliedCovers) {
  auto p = FinitePoset::from_covers({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}, {.auto_reduce = true});
  EXPECT_EQ(p.covers().size(), 2U);
  EXPECT_TRUE(p.leq(0, 2));
}

TEST(Rank, Examples) {
  EXPECT_EQ(chain(3).rank(3), 3U);
  auto b3 = boolean(3);
  EXPECT_EQ(b3.rank(*b3.index_of("{1,2}")), 2U);
  for (Element m : b3.minimal_elements()) EXPECT_EQ(b3.rank(m), 0U);
}

TEST(Purity, Examples) {
  auto c2 = chain(2);
  EXPECT_TRUE(c2.is_semipure());
  EXPECT_TRUE(c2.is_pure());
  EXPECT_TRUE(c2.is_bounded());
  auto v = vee();
  EXPECT_TRUE(v.is_semipure());
  EXPECT_TRUE(v.is_pure());
  EXPECT_FALSE(v.is_bounded());
  // top covers a and c, where a < b < top as well: chains of length 1 and 2 below top
  auto bad = FinitePoset::from_covers({"a", "b", "c", "top"}, {{0, 1}, {1, 3}, {2, 3}});
  EXPECT_FALSE(bad.is_semipure());
  EXPECT_EQ(code_of([&] { bad.rank(3); }), ErrorCode::NotSemipure);
}

TEST(Bounds, AdjoinAndRemove) {
  EXPECT_EQ(adjoin_bounds(FinitePoset()).size(), 2U);
  EXPECT_TRUE(are_isomorphic(adjoin_bounds(chain(1)), chain(3)));
  auto b3hat = adjoin_bounds(boolean(3));
  EXPECT_EQ(b3hat.size(), 10U);
  EXPECT_EQ(b3hat.length(), 5U);
  EXPECT_EQ(*b3hat.unique_minimum(), 0U);
  EXPECT_EQ(*b3hat.unique_maximum(), 9U);

  EXPECT_EQ(remove_min(boolean(3)).size(), 7U);
  EXPECT_TRUE(remove_min(chain(0)).empty());
  EXPECT_EQ(code_of([] { remove_min(remove_min(boolean(2))); }), ErrorCode::NoUniqueMinimum);
  EXPECT_EQ(code_of([] { remove_max(vee()); }), ErrorCode::NoUniqueMaximum);

  auto diamond = adjoin_max(vee());
  EXPECT_EQ(diamond.size(), 4U);
  EXPECT_TRUE(are_isomorphic(diamond, boolean(2)));
  EXPECT_TRUE(are_isomorphic(adjoin_min(remove_min(boolean(2))), boolean(2)));
}

TEST(Rees, BooleanMinusTimesChain) {
  auto r = rees_product(remove_min(boolean(3)), chain(2));
  EXPECT_EQ(r.size(), 12U);
  std::map<std::size_t, std::size_t> by_rank;
  for (Element x = 0; x < r.size(); ++x) ++by_rank[r.rank(x)];
  EXPECT_EQ(by_rank, (std::map<std::size_t, std::size_t>{{0, 3}, {1, 6}, {2, 3}}));
  auto hat = adjoin_bounds(r);
  EXPECT_EQ(hat.count_maximal_chains(), 24U);
}

TEST(Rees, SmallExamples) {
  auto p = boolean(2);
  EXPECT_TRUE(are_isomorphic(rees_product(p, chain(0)), p));
  auto cc = rees_product(chain(2), chain(2));
  EXPECT_EQ(cc.size(), 6U);
  EXPECT_EQ(cc.covers().size(), 6U);
  EXPECT_TRUE(are_isomorphic(rees_product(chain(2), tary_tree(1, 0)), chain(2)));
  auto bad = FinitePoset::from_covers({"a", "b", "c", "top"}, {{0, 1}, {1, 3}, {2, 3}});
  EXPECT_EQ(code_of([&] { rees_product(bad, chain(1)); }), ErrorCode::NotSemipure);
}

TEST(Rees, MatchesBruteForceOnFamilies) {
  const std::vector<std::pair<FinitePoset, FinitePoset>> cases = {
      {remove_min(boolean(3)), chain(2)},
      {boolean(3), tary_tree(2, 2)},
      {chain_product({2, 1}), tary_tree(2, 3)},
      {noncrossing(4), chain(3)},
      {remove_min(subspace_lattice(2, 2)), tary_tree(3, 1)},
  };
  for (const auto& [p, q] : cases) {
    auto r = rees_product(p, q);
    auto o = oracle::rees(oracle::order_of(p), oracle::order_of(q));
    ASSERT_EQ(r.size(), o.size());
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < o.size(); ++i) pos[o.names[i]] = i;
    for (Element x = 0; x < r.size(); ++x) {
      ASSERT_TRUE(pos.count(r.descriptor(x))) << r.descriptor(x);
      for (Element y = 0; y < r.size(); ++y)
        EXPECT_EQ(r.leq(x, y), o.le[pos[r.descriptor(x)]][pos[r.descriptor(y)]]);
    }
  }
}

TEST(RankSelection, Examples) {
  auto b3 = boolean(3);
  std::vector<std::size_t> all{0, 1, 2, 3}, mid{1, 2}, ends{0, 3};
  EXPECT_TRUE(are_isomorphic(rank_selected(b3, all), b3));
  auto proper = rank_selected(b3, mid);
  EXPECT_EQ(proper.size(), 6U);
  EXPECT_EQ(proper.covers().size(), 6U);
  EXPECT_TRUE(are_isomorphic(rank_selected(chain(3), ends), chain(1)));
  auto bad = FinitePoset::from_covers({"a", "b", "c"}, {{0, 1}});
  EXPECT_EQ(code_of([&] { rank_selected(bad, ends); }), ErrorCode::NotPure);
}

TEST(Chains, Counts) {
  EXPECT_EQ(boolean(3).count_maximal_chains(), 6U);
  EXPECT_EQ(chain(5).count_maximal_chains(), 1U);
  EXPECT_EQ(boolean(4).maximal_chains().size(), 24U);
  std::size_t seen = 0;
  boolean(4).for_each_maximal_chain([&](const ChainInPoset& c) {
    EXPECT_EQ(c.length(), 4U);
    return ++seen < 5;
  });
  EXPECT_EQ(seen, 5U);
}

TEST(Mobius, Examples) {
  auto nc4 = noncrossing(4);
  EXPECT_EQ(nc4.mobius(*nc4.unique_minimum(), *nc4.unique_maximum()), -5);
  auto b4 = boolean(4);
  EXPECT_EQ(b4.mobius(0, *b4.unique_maximum()), 1);
  EXPECT_EQ(b4.mobius(3, 3), 1);
  auto v = vee();
  EXPECT_EQ(code_of([&] { v.mobius(1, 2); }), ErrorCode::NotComparable);
}

TEST(Mobius, MatchesRecursionOnRandomPosets) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_graded(rng, 4, 3);
    auto o = oracle::order_of(p);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y)
        if (p.leq(x, y)) EXPECT_EQ(p.mobius(x, y), oracle::mobius(o, x, y));
  }
}

TEST(Order, LeqMatchesClosureOnRandomPosets) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_graded(rng, 5, 3);
    auto o = oracle::order_of(p);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) EXPECT_EQ(p.leq(x, y), o.le[x][y]);
  }
}

TEST(Subposets, IntervalAndInduced) {
  auto b3 = boolean(3);
  auto iv = closed_interval(b3, *b3.index_of("{1}"), *b3.unique_maximum());
  EXPECT_TRUE(are_isomorphic(iv, boolean(2)));
  std::vector<Element> keep{*b3.index_of("{}"), *b3.index_of("{1,2,3}")};
  EXPECT_TRUE(are_isomorphic(induced_subposet(b3, keep), chain(1)));
  EXPECT_FALSE(are_isomorphic(boolean(2), chain(2)));
}
