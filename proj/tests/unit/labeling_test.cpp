#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "reeskit/error.hpp"
#include "reeskit/families.hpp"
#include "reeskit/homology.hpp"
#include "reeskit/labeling.hpp"

using namespace reeskit;

namespace {

bool oracle_el(const FinitePoset& p, const EdgeLabeling& lam) {
  const LabelPoset& L = lam.target();
  return oracle::is_el(
      oracle::order_of(p), [&](std::size_t x, std::size_t y) { return lam.label(x, y); },
      [&](const std::vector<int>& a, const std::vector<int>& b) { return L.leq(a, b); });
}

EdgeLabeling b3_minus_hat() {
  auto b3 = boolean(3);
  return hat_of_minus(b3, boolean_labeling(b3, 3));
}

}  // namespace

TEST(LabelPoset, Shapes) {
  auto t3 = LabelPoset::total_order(3);
  auto pr = LabelPoset::product(t3, LabelPoset::adjoin_bottom(LabelPoset::total_order(2)));
  EXPECT_EQ(pr.width(), 3U);
  EXPECT_EQ(pr.describe(), "Product(Total(3),Bottom(Total(2)))");
  EXPECT_TRUE(pr.contains(std::vector<int>{2, 1, 2}));
  EXPECT_TRUE(pr.contains(LabelPoset::pair({2}, pr.second().bottom())));
  EXPECT_FALSE(t3.contains(std::vector<int>{4}));
  auto bot = LabelPoset::adjoin_bottom(t3);
  EXPECT_TRUE(bot.less(bot.bottom(), bot.lift({1})));
  EXPECT_FALSE(bot.leq(bot.lift({2}), bot.lift({1})));
  auto p1 = LabelPoset::product(t3, t3);
  EXPECT_FALSE(p1.leq(std::vector<int>{1, 2}, std::vector<int>{2, 1}));
  EXPECT_FALSE(p1.leq(std::vector<int>{2, 1}, std::vector<int>{1, 2}));
  EXPECT_TRUE(p1.leq(std::vector<int>{1, 1}, std::vector<int>{2, 1}));
}

TEST(SeqLex, Examples) {
  auto t = LabelPoset::total_order(3);
  std::vector<Label> a{{1}, {2}}, b{{2}, {1}};
  EXPECT_EQ(seq_lex_less(a, b, t), LexOrder::Before);
  EXPECT_EQ(seq_lex_less(b, a, t), LexOrder::NotBefore);
  std::vector<Label> c{{1}, {1}};
  EXPECT_EQ(seq_lex_less(c, c, t), LexOrder::NotBefore);
  std::vector<Label> prefix{{1}};
  EXPECT_EQ(seq_lex_less(prefix, c, t), LexOrder::Before);

  auto inner = LabelPoset::adjoin_bottom(LabelPoset::total_order(2));
  auto pr = LabelPoset::product(LabelPoset::total_order(2), inner);
  std::vector<Label> x{LabelPoset::pair({1}, inner.bottom())}, y{LabelPoset::pair({2}, inner.lift({1}))};
  EXPECT_EQ(seq_lex_less(x, y, pr), LexOrder::Before);
  auto pp = LabelPoset::product(t, t);
  std::vector<Label> u{{1, 2}}, v{{2, 1}};
  EXPECT_EQ(seq_lex_less(u, v, pp), LexOrder::Incomparable);
}

TEST(ElLabeling, BooleanOfTwo) {
  auto b2 = boolean(2);
  EXPECT_TRUE(is_el_labeling(b2, boolean_labeling(b2, 2)).ok);
  std::map<Cover, Label> m;
  const Element bot = *b2.index_of("{}"), one = *b2.index_of("{1}"), two = *b2.index_of("{2}"),
                top = *b2.index_of("{1,2}");
  m[{bot, one}] = {1};
  m[{one, top}] = {2};
  m[{bot, two}] = {1};
  m[{two, top}] = {2};
  auto lam = EdgeLabeling::from_map(b2, LabelPoset::total_order(2), m);
  auto v = is_el_labeling(b2, lam);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.x, bot);
  EXPECT_EQ(v.y, top);
  EXPECT_EQ(v.chains.size(), 2U);
  EXPECT_FALSE(is_semi_el_labeling(b2, lam).ok);
}

TEST(ElLabeling, Errors) {
  auto v = FinitePoset::from_covers({"0", "a", "b"}, {{0, 1}, {0, 2}});
  EXPECT_THROW(is_el_labeling(v, constant_labeling(v)), Error);
  EXPECT_TRUE(is_semi_el_labeling(v, constant_labeling(v)).ok);
  auto b2 = boolean(2);
  EXPECT_THROW(EdgeLabeling::from_map(b2, LabelPoset::total_order(2), {}), Error);
  EXPECT_THROW(EdgeLabeling::build(b2, LabelPoset::total_order(1), [](Element, Element) { return Label{5}; }), Error);
  EXPECT_THROW(boolean_labeling(b2, 2).label(0, 0), Error);
}

TEST(SemiEl, TreesAndChains) {
  auto t = tary_tree(2, 2);
  EXPECT_TRUE(is_semi_el_labeling(t, constant_labeling(t)).ok);
  for (std::size_t n = 0; n <= 4; ++n) {
    auto c = chain(n);
    EXPECT_TRUE(is_semi_el_labeling(c, constant_labeling(c)).ok);
    EXPECT_TRUE(is_el_labeling(c, constant_labeling(c)).ok);
  }
}

TEST(ElLabeling, FamiliesAgreeWithDefinition) {
  for (unsigned n = 1; n <= 4; ++n) {
    auto b = boolean(n);
    auto lam = boolean_labeling(b, n);
    EXPECT_TRUE(is_el_labeling(b, lam).ok);
    EXPECT_TRUE(oracle_el(b, lam));
    auto h = hat_of_minus(b, lam);
    auto bh = adjoin_bounds(remove_min(b));
    EXPECT_TRUE(is_el_labeling(bh, h).ok);
    EXPECT_TRUE(oracle_el(bh, h));
  }
  for (const WeakComposition& mu : {WeakComposition{2, 1}, WeakComposition{2, 2}, WeakComposition{3, 1, 1}}) {
    auto b = chain_product(mu);
    auto lam = chain_product_labeling(b, mu);
    EXPECT_TRUE(is_el_labeling(b, lam).ok);
    EXPECT_TRUE(oracle_el(b, lam));
    auto ext = hat_extension(b, lam);
    EXPECT_TRUE(is_el_labeling(adjoin_bounds(b), ext).ok);
  }
  for (unsigned n = 2; n <= 5; ++n) {
    auto nc = noncrossing(n);
    auto lam = noncrossing_labeling(nc, n);
    EXPECT_TRUE(is_el_labeling(nc, lam).ok) << n;
    if (n <= 4) EXPECT_TRUE(oracle_el(nc, lam));
  }
}

TEST(ElLabeling, RandomLabelingsAgreeWithDefinition) {
  std::mt19937 rng(99);
  const std::vector<FinitePoset> posets = {boolean(2), boolean(3), chain_product({2, 1}), chain(3), noncrossing(3),
                                           subspace_lattice(2, 2)};
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto& p = posets[trial % posets.size()];
    auto lam = EdgeLabeling::build(p, LabelPoset::total_order(3),
                                   [&](Element, Element) { return Label{static_cast<int>(rng() % 3) + 1}; });
    const bool lib = is_el_labeling(p, lam).ok;
    EXPECT_EQ(lib, oracle_el(p, lam)) << trial;
    positives += lib;
  }
  EXPECT_GT(positives, 0);
}

TEST(Rees, LabelingOfBooleanTimesChain) {
  auto b3 = boolean(3);
  auto c2 = chain(2);
  auto rl = rees_el_labeling(remove_min(b3), b3_minus_hat(), c2, constant_labeling(c2));
  EXPECT_EQ(rl.hat.size(), 14U);
  EXPECT_TRUE(is_el_labeling(rl.hat, rl.labeling).ok);
  EXPECT_TRUE(oracle_el(rl.hat, rl.labeling));
  EXPECT_EQ(descent_profile(rl.hat, rl.labeling).ascent_free_count(rl.hat.length()), 2U);
}

TEST(Rees, LabelingOfChainProductTimesTree) {
  auto b = chain_product({2, 1});
  auto lam = chain_product_labeling(b, {2, 1});
  auto t = tary_tree(2, 2);
  auto rl = rees_el_labeling(remove_min(b), hat_of_minus(b, lam), t, constant_labeling(t));
  EXPECT_TRUE(is_el_labeling(rl.hat, rl.labeling).ok);
  EXPECT_TRUE(oracle_el(rl.hat, rl.labeling));
}

TEST(Rees, LengthMismatch) {
  auto b3 = boolean(3);
  auto c5 = chain(5);
  try {
    rees_el_labeling(remove_min(b3), b3_minus_hat(), c5, constant_labeling(c5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(Rees, RejectsNonElInput) {
  auto b2 = boolean(2);
  auto bad = EdgeLabeling::build(adjoin_bounds(remove_min(b2)), LabelPoset::total_order(1),
                                 [](Element, Element) { return Label{1}; });
  auto c1 = chain(1);
  try {
    rees_el_labeling(remove_min(b2), bad, c1, constant_labeling(c1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}

TEST(DescentProfile, ChainHasOnlyTheIncreasingChain) {
  auto c = chain(4);
  auto prof = descent_profile(c, constant_labeling(c));
  EXPECT_EQ(prof.chains.size(), 1U);
  EXPECT_EQ(prof.count({}), 1U);
  EXPECT_EQ(prof.count({1}), 0U);
}

TEST(RankSelectedBetti, Boolean) {
  auto b3 = boolean(3);
  auto lam = boolean_labeling(b3, 3);
  EXPECT_EQ(rank_selected_betti(b3, lam, {1, 2}), 1U);
  EXPECT_EQ(rank_selected_betti(b3, lam, {}), 1U);
  EXPECT_EQ(rank_selected_betti(b3, lam, {1}), 2U);
}

TEST(RankSelectedBetti, MatchesHomologyOfRankSelection) {
  struct Case {
    FinitePoset p;
    EdgeLabeling lam;
  };
  auto b4 = boolean(4);
  auto nc5 = noncrossing(5);
  auto b221 = chain_product({2, 2, 1});
  std::vector<Case> cases = {{b4, boolean_labeling(b4, 4)},
                             {nc5, noncrossing_labeling(nc5, 5)},
                             {b221, chain_product_labeling(b221, {2, 2, 1})}};
  for (const auto& c : cases) {
    const std::size_t n = c.p.length();
    for (unsigned mask = 1; mask < (1U << (n - 1)); ++mask) {
      std::vector<std::size_t> S;
      for (std::size_t i = 1; i < n; ++i)
        if (mask & (1U << (i - 1))) S.push_back(i);
      const auto b = betti(rank_selected(c.p, S));
      EXPECT_EQ(rank_selected_betti(c.p, c.lam, S), b.at(static_cast<int>(S.size()) - 1));
      for (int k = -1; k < static_cast<int>(S.size()) - 1; ++k) EXPECT_EQ(b.at(k), 0U);
    }
  }
}
