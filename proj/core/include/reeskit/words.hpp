#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reeskit/families.hpp"
#include "reeskit/polynomial.hpp"

namespace reeskit {

using Letters = std::vector<unsigned>;

/// A word over the positive integers; `bars` is either empty or has one
/// flag per letter.
struct Word {
  Letters letters;
  std::vector<bool> bars;

  std::size_t size() const noexcept { return letters.size(); }
  bool barred(std::size_t i) const { return !bars.empty() && bars.at(i); }
  std::size_t bar_count() const;
  /// The word with its bars removed.
  Word absolute() const { return Word{letters, {}}; }

  friend bool operator==(const Word&, const Word&);
  friend bool operator<(const Word& a, const Word& b);
};

/// Two-row array with a weakly increasing top row; both rows rearrange the
/// same multiset.
struct TwoLineWord {
  Letters top;
  Letters bottom;

  /// The top row is the sorted bottom row.
  static TwoLineWord of(const Letters& bottom);
  friend bool operator==(const TwoLineWord&, const TwoLineWord&) = default;
};

struct WordStats {
  std::size_t exc = 0;
  std::vector<std::size_t> Des;
  std::size_t des = 0;
  std::size_t maj = 0;
  std::size_t inv = 0;
  std::size_t asc = 0;
  std::optional<std::size_t> ai;
  std::optional<std::size_t> aid;
  std::size_t bars = 0;
};

/// All statistics; excedances are taken against the sorted rearrangement of
/// the letters. ai and aid are present only when letters are distinct.
WordStats stats(const Word& w);
WordStats stats(const TwoLineWord& w);

std::size_t exc(const TwoLineWord& w);
std::vector<std::size_t> descent_set(const Letters& w);
std::size_t des(const Letters& w);
std::size_t maj(const Letters& w);
std::size_t inv(const Letters& w);
/// Positions i with w_i <= w_{i+1}.
std::size_t asc(const Letters& w);
/// Admissible inversions; throws NotAPermutation on a repeated letter.
std::size_t ai(const Letters& w);
std::size_t aid(const Letters& w);
bool has_double_ascent(const Letters& w);
bool has_double_descent(const Letters& w);

struct WordBounds {
  std::size_t max_length = 12;
  std::size_t max_count = 2'000'000;
};

/// Weak relation between two adjacent letters.
enum class Step { Ascent, Descent };

/// Optional constraints on w_1 vs w_2 and w_{n-1} vs w_n.
struct BoundaryFilter {
  std::optional<Step> first;
  std::optional<Step> last;
};

/// A multiset given by multiplicities: mu_i copies of letter i.
Letters multiset_of(const WeakComposition& mu);

std::vector<Letters> permutations(std::size_t n, const WordBounds& bounds = {});
std::vector<Letters> derangements(std::size_t n, const WordBounds& bounds = {});
/// Lexicographic list of the rearrangements of `multiset`.
std::vector<Letters> multiset_permutations(Letters multiset, const WordBounds& bounds = {});
std::vector<TwoLineWord> multiset_derangements(const Letters& multiset, const WordBounds& bounds = {});
std::vector<Letters> smirnov_words(const Letters& multiset, const WordBounds& bounds = {});
/// All of [m]^n in lexicographic order.
std::vector<Letters> all_words(std::size_t n, unsigned m, const WordBounds& bounds = {});
std::vector<Letters> parking_functions(std::size_t n, const WordBounds& bounds = {});
std::vector<WeakComposition> parking_compositions(std::size_t n, const WordBounds& bounds = {});
std::vector<Letters> nda(std::size_t n, unsigned m, BoundaryFilter filter = {},
                         const WordBounds& bounds = {});
std::vector<Letters> ndd(std::size_t n, unsigned m, BoundaryFilter filter = {},
                         const WordBounds& bounds = {});
/// True when the boundary comparisons of w satisfy the filter; a filter on a
/// word shorter than two letters is never satisfied.
bool passes(const Letters& w, const BoundaryFilter& filter);

/// Barred words over [m] of length n: last letter unbarred, letters before a
/// strict rise unbarred, letters before a strict fall barred.
std::vector<Word> banners(std::size_t n, unsigned m, const WordBounds& bounds = {});
bool is_banner(const Word& w);
/// Barred permutations of X: last letter barred, and a letter followed by a
/// larger one is barred while its successor is not.
std::vector<Word> barred_permutations(const Letters& X, const WordBounds& bounds = {});
bool is_barred_permutation(const Word& w);

/// Throws NotInDomain unless w is a barred permutation as above.
Letters phi(const Word& w);
/// Throws NotAPermutation on repeated letters.
Word psi(const Letters& s);

enum class Statistic { maj, exc, des, inv, asc, ai, aid };
std::string_view to_string(Statistic s);
/// Throws ParseError.
Statistic statistic_from_string(std::string_view name);
std::size_t evaluate(Statistic s, const Letters& permutation);

/// Sum over S_n of q^{s1} t^{s2}.
StatPolynomial joint_polynomial(std::size_t n, Statistic s1, Statistic s2,
                                const WordBounds& bounds = {});
/// Sum over S_n of q^{aid}.
StatPolynomial aid_polynomial(std::size_t n, const WordBounds& bounds = {});

/// [n]_q = 1 + q + ... + q^{n-1}, [n]_q!, and the Gaussian binomial, as
/// polynomials in q.
StatPolynomial q_integer(std::size_t n);
StatPolynomial q_factorial(std::size_t n);
StatPolynomial q_binomial(std::size_t n, std::size_t k);

struct AidRecurrenceVerdict {
  bool ok = true;
  /// Largest n for which all checks ran.
  std::size_t n = 0;
  std::string reason;
};

/// For every m <= n: the aid polynomial equals [m]_q!, it satisfies the
/// Gaussian-binomial recurrence, and each recurrence term matches the
/// permutations with m in the corresponding position.
AidRecurrenceVerdict check_aid_recurrence(std::size_t n, const WordBounds& bounds = {});

/// Letters concatenated when all are single digits, otherwise separated by
/// commas; a barred letter is followed by an apostrophe, e.g. "2'1'".
std::string to_string(const Word& w);
std::string to_string(const Letters& w);
/// Throws ParseError.
Word parse_word(std::string_view text);

}  // namespace reeskit
