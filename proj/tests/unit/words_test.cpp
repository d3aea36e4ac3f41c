#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "reeskit/error.hpp"
#include "reeskit/words.hpp"

using namespace reeskit;

namespace {

std::vector<Word> all_barrings(const std::vector<Letters>& words) {
  std::vector<Word> out;
  for (const auto& w : words)
    for (unsigned mask = 0; mask < (1U << w.size()); ++mask) {
      Word b{w, std::vector<bool>(w.size())};
      for (std::size_t i = 0; i < w.size(); ++i) b.bars[i] = mask & (1U << i);
      out.push_back(b);
    }
  return out;
}

bool banner_by_definition(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0 || w.barred(n - 1)) return false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w.letters[i] < w.letters[i + 1] && w.barred(i)) return false;
    if (w.letters[i] > w.letters[i + 1] && !w.barred(i)) return false;
  }
  return true;
}

bool barred_permutation_by_definition(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0 || !w.barred(n - 1)) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (w.letters[i] < w.letters[i + 1] && (!w.barred(i) || w.barred(i + 1))) return false;
  return true;
}

template <class T>
std::set<T> as_set(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

StatPolynomial brute_joint(unsigned n, unsigned (*s1)(const oracle::Perm&), unsigned (*s2)(const oracle::Perm&)) {
  StatPolynomial p;
  for (const auto& w : oracle::all_permutations(n)) p += stat::tq(s2(w), s1(w));
  return p;
}

}  // namespace

TEST(Stats, AdmissibleInversionExample) {
  const Letters s{6, 4, 3, 1, 2, 7, 5};
  EXPECT_EQ(inv(s), 11U);
  EXPECT_EQ(ai(s), 2U);
  EXPECT_EQ(des(s), 4U);
  EXPECT_EQ(aid(s), 6U);
  EXPECT_EQ(descent_set(s), (std::vector<std::size_t>{1, 2, 3, 6}));
  EXPECT_EQ(oracle::ai(s), 2U);
}

TEST(Stats, TwoLineExcedances) {
  TwoLineWord w{{1, 1, 1, 2, 3, 3, 4}, {3, 2, 3, 1, 4, 1, 1}};
  EXPECT_EQ(exc(w), 4U);
  EXPECT_EQ(TwoLineWord::of({3, 2, 3, 1, 4, 1, 1}), w);
  EXPECT_EQ(stats(w).exc, 4U);
}

TEST(Stats, IncreasingWord) {
  auto st = stats(Word{{1, 2, 3, 4}, {}});
  EXPECT_EQ(st.des, 0U);
  EXPECT_EQ(st.maj, 0U);
  EXPECT_EQ(st.inv, 0U);
  EXPECT_EQ(st.asc, 3U);
  EXPECT_EQ(st.ai, 0U);
  EXPECT_FALSE(stats(Word{{1, 1, 2}, {}}).ai.has_value());
  EXPECT_THROW(ai({1, 1}), Error);
}

TEST(Stats, AgreeWithBruteForce) {
  for (unsigned n = 1; n <= 6; ++n)
    for (const auto& w : oracle::all_permutations(n)) {
      EXPECT_EQ(des(w), oracle::des(w));
      EXPECT_EQ(maj(w), oracle::maj(w));
      EXPECT_EQ(inv(w), oracle::inv(w));
      EXPECT_EQ(asc(w), oracle::asc(w));
      EXPECT_EQ(ai(w), oracle::ai(w));
      EXPECT_EQ(aid(w), oracle::aid(w));
      EXPECT_EQ(exc(TwoLineWord::of(w)), oracle::exc(w));
    }
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Letters w(1 + rng() % 8);
    for (auto& c : w) c = 1 + rng() % 3;
    EXPECT_EQ(des(w), oracle::des(w));
    EXPECT_EQ(maj(w), oracle::maj(w));
    EXPECT_EQ(inv(w), oracle::inv(w));
    EXPECT_EQ(asc(w), oracle::asc(w));
    EXPECT_EQ(exc(TwoLineWord::of(w)), oracle::multiset_exc(w));
  }
}

TEST(Stats, NamedStatistics) {
  for (auto s : {Statistic::maj, Statistic::exc, Statistic::des, Statistic::inv, Statistic::asc, Statistic::ai,
                 Statistic::aid})
    EXPECT_EQ(statistic_from_string(to_string(s)), s);
  EXPECT_THROW(statistic_from_string("foo"), Error);
  EXPECT_EQ(evaluate(Statistic::aid, {6, 4, 3, 1, 2, 7, 5}), 6U);
}

TEST(Generators, Derangements) {
  EXPECT_EQ(derangements(3), (std::vector<Letters>{{2, 3, 1}, {3, 1, 2}}));
  for (unsigned n = 0; n <= 7; ++n) {
    EXPECT_EQ(derangements(n).size(), oracle::derangement_number(n));
    if (n <= 6) EXPECT_EQ(as_set(derangements(n)), as_set(oracle::derangements(n)));
  }
  EXPECT_EQ(permutations(5).size(), 120U);
}

TEST(Generators, MultisetDerangements) {
  EXPECT_TRUE(multiset_derangements({1, 1, 2}).empty());
  for (const WeakComposition& mu : {WeakComposition{2, 2}, WeakComposition{1, 1, 1}, WeakComposition{2, 1, 1},
                                    WeakComposition{2, 2, 2}, WeakComposition{3, 1, 2}}) {
    const auto md = multiset_derangements(multiset_of(mu));
    std::set<Letters> bottoms;
    for (const auto& w : md) {
      EXPECT_EQ(w.top, multiset_of(mu));
      bottoms.insert(w.bottom);
    }
    EXPECT_EQ(bottoms, as_set(oracle::multiset_derangements(mu)));
  }
}

TEST(Generators, Smirnov) {
  EXPECT_EQ(smirnov_words({1, 1, 2}), (std::vector<Letters>{{1, 2, 1}}));
  EXPECT_EQ(smirnov_words({1, 2}), (std::vector<Letters>{{1, 2}, {2, 1}}));
  EXPECT_TRUE(smirnov_words({1, 1}).empty());
  for (const WeakComposition& mu : {WeakComposition{2, 2}, WeakComposition{2, 1, 1}, WeakComposition{3, 2, 2}})
    EXPECT_EQ(as_set(smirnov_words(multiset_of(mu))), as_set(oracle::smirnov(mu)));
}

TEST(Generators, WordsAndMultisets) {
  EXPECT_EQ(all_words(3, 2).size(), 8U);
  EXPECT_EQ(all_words(4, 3), oracle::words(4, 3));
  EXPECT_EQ(multiset_permutations({2, 1, 1}), oracle::rearrangements({1, 1, 2}));
  EXPECT_EQ(multiset_of({2, 0, 1}), (Letters{1, 1, 3}));
  try {
    all_words(20, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
  }
}

TEST(Generators, ParkingFunctions) {
  EXPECT_EQ(as_set(parking_functions(2)), (std::set<Letters>{{1, 1}, {1, 2}, {2, 1}}));
  EXPECT_EQ(parking_functions(3).size(), 16U);
  EXPECT_EQ(parking_functions(4).size(), 125U);
  for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(as_set(parking_functions(n)), as_set(oracle::parking_functions(n)));
  for (const auto& mu : parking_compositions(4)) {
    unsigned s = 0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
      s += mu[j];
      EXPECT_GE(s, j + 1);
    }
    EXPECT_EQ(s, 4U);
  }
}

TEST(Generators, NoDoubleAscentsOrDescents) {
  EXPECT_EQ(ndd(2, 2).size(), 4U);
  EXPECT_TRUE(nda(3, 2, {.first = Step::Descent, .last = Step::Descent}).empty());
  for (unsigned m = 1; m <= 3; ++m)
    for (std::size_t n = 0; n <= 5; ++n) {
      std::set<Letters> a, d;
      for (const auto& w : oracle::words(static_cast<unsigned>(n), m)) {
        bool da = false, dd = false;
        for (std::size_t i = 0; i + 2 < n; ++i) {
          da = da || (w[i] <= w[i + 1] && w[i + 1] <= w[i + 2]);
          dd = dd || (w[i] > w[i + 1] && w[i + 1] > w[i + 2]);
        }
        EXPECT_EQ(has_double_ascent(w), da);
        EXPECT_EQ(has_double_descent(w), dd);
        if (!da) a.insert(w);
        if (!dd) d.insert(w);
      }
      EXPECT_EQ(as_set(nda(n, m)), a);
      EXPECT_EQ(as_set(ndd(n, m)), d);
    }
  BoundaryFilter f{.first = Step::Ascent, .last = Step::Descent};
  for (const auto& w : ndd(5, 3, f)) {
    EXPECT_LE(w[0], w[1]);
    EXPECT_GT(w[3], w[4]);
  }
  EXPECT_FALSE(passes({1}, f));
  EXPECT_TRUE(passes({1}, {}));
}

TEST(Banners, MatchDefinition) {
  EXPECT_EQ(banners(1, 3).size(), 3U);
  for (const auto& w : banners(1, 3)) EXPECT_EQ(w.bar_count(), 0U);
  for (unsigned m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 4; ++n) {
      std::set<Word> expect;
      for (const auto& w : all_barrings(oracle::words(static_cast<unsigned>(n), m)))
        if (banner_by_definition(w)) expect.insert(w);
      EXPECT_EQ(as_set(banners(n, m)), expect);
      for (const auto& w : expect) EXPECT_TRUE(is_banner(w));
    }
}

TEST(BarredPermutations, SmallSets) {
  const auto two = barred_permutations({1, 2});
  EXPECT_EQ(as_set(two), (std::set<Word>{parse_word("21'"), parse_word("2'1'")}));
  EXPECT_EQ(barred_permutations({1}), (std::vector<Word>{parse_word("1'")}));
  for (unsigned n = 1; n <= 5; ++n) {
    std::set<Word> expect;
    for (const auto& w : all_barrings(oracle::all_permutations(n)))
      if (barred_permutation_by_definition(w)) expect.insert(w);
    Letters X(n);
    for (unsigned i = 0; i < n; ++i) X[i] = i + 1;
    EXPECT_EQ(as_set(barred_permutations(X)), expect);
  }
}

TEST(PhiPsi, InversePairWithStatistics) {
  for (unsigned n = 1; n <= 6; ++n) {
    Letters X(n);
    for (unsigned i = 0; i < n; ++i) X[i] = 2 * i + 3;
    const auto W = barred_permutations(X);
    std::set<Letters> image;
    for (const auto& w : W) {
      const Letters s = phi(w);
      image.insert(s);
      EXPECT_EQ(psi(s), w);
      EXPECT_EQ(des(s) + 1, w.bar_count());
      EXPECT_EQ(ai(s) + inv(w.letters), n * (n - 1) / 2);
    }
    EXPECT_EQ(image.size(), W.size());
    EXPECT_EQ(image, as_set(oracle::rearrangements(X)));
  }
  EXPECT_THROW(phi(parse_word("12")), Error);
  EXPECT_THROW(psi({1, 1}), Error);
}

TEST(WordText, RoundTrip) {
  EXPECT_EQ(to_string(parse_word("2'1'3")), "2'1'3");
  EXPECT_EQ(to_string(Letters{1, 12, 3}), "1,12,3");
  EXPECT_EQ(parse_word("1,12',3").letters, (Letters{1, 12, 3}));
  EXPECT_TRUE(parse_word("1,12',3").barred(1));
  EXPECT_THROW(parse_word("1a"), Error);
}

TEST(Polynomials, JointDistributions) {
  auto p = joint_polynomial(3, Statistic::maj, Statistic::exc);
  StatPolynomial expect = stat::constant(1) + stat::tq(1, 1, 2) + stat::tq(1, 2) + stat::tq(1, 3) + stat::tq(2, 2);
  EXPECT_EQ(p, expect);
  EXPECT_EQ(joint_polynomial(3, Statistic::aid, Statistic::des), expect);
  EXPECT_EQ(joint_polynomial(1, Statistic::inv, Statistic::asc), stat::constant(1));
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(joint_polynomial(n, Statistic::maj, Statistic::exc), brute_joint(n, oracle::maj, oracle::exc));
    EXPECT_EQ(joint_polynomial(n, Statistic::aid, Statistic::des), brute_joint(n, oracle::aid, oracle::des));
    EXPECT_EQ(joint_polynomial(n, Statistic::inv, Statistic::des), brute_joint(n, oracle::inv, oracle::des));
  }
}

TEST(Polynomials, QAnalogues) {
  auto f3 = stat::constant(1) + stat::q_pow(1, 2) + stat::q_pow(2, 2) + stat::q_pow(3);
  EXPECT_EQ(q_factorial(3), f3);
  EXPECT_EQ(aid_polynomial(3), f3);
  EXPECT_EQ(aid_polynomial(1), stat::constant(1));
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_EQ(oracle::from_library(q_factorial(n)), oracle::q_factorial(n));
    EXPECT_EQ(oracle::from_library(aid_polynomial(n)), oracle::q_factorial(n));
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(oracle::from_library(q_binomial(n, k)), oracle::q_binomial(n, k));
  }
  EXPECT_EQ(q_integer(0), StatPolynomial());
}

TEST(Polynomials, AidRecurrence) {
  auto v = check_aid_recurrence(6);
  EXPECT_TRUE(v.ok) << v.reason;
  EXPECT_EQ(v.n, 6U);
}
