#include "reeskit/words.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace reeskit {

std::size_t Word::bar_count() const {
  return static_cast<std::size_t>(std::count(bars.begin(), bars.end(), true));
}

namespace {
std::vector<bool> normalized_bars(const Word& w) {
  return w.bars.empty() ? std::vector<bool>(w.letters.size(), false) : w.bars;
}
}  // namespace

bool operator==(const Word& a, const Word& b) {
  return a.letters == b.letters && normalized_bars(a) == normalized_bars(b);
}

bool operator<(const Word& a, const Word& b) {
  if (a.letters != b.letters) return a.letters < b.letters;
  return normalized_bars(a) < normalized_bars(b);
}

TwoLineWord TwoLineWord::of(const Letters& bottom) {
  TwoLineWord w{bottom, bottom};
  std::sort(w.top.begin(), w.top.end());
  return w;
}

std::size_t exc(const TwoLineWord& w) {
  if (w.top.size() != w.bottom.size())
    throw Error(ErrorCode::PreconditionFailed, "two-line word rows differ in length");
  std::size_t e = 0;
  for (std::size_t j = 0; j < w.top.size(); ++j)
    if (w.top[j] < w.bottom[j]) ++e;
  return e;
}

std::vector<std::size_t> descent_set(const Letters& w) {
  std::vector<std::size_t> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.push_back(i + 1);
  return d;
}

std::size_t des(const Letters& w) { return descent_set(w).size(); }

std::size_t maj(const Letters& w) {
  std::size_t s = 0;
  for (std::size_t i : descent_set(w)) s += i;
  return s;
}

std::size_t inv(const Letters& w) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++s;
  return s;
}

std::size_t asc(const Letters& w) {
  std::size_t s = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] <= w[i + 1]) ++s;
  return s;
}

namespace {
void require_distinct(const Letters& w) {
  std::set<unsigned> seen(w.begin(), w.end());
  if (seen.size() != w.size()) throw Error(ErrorCode::NotAPermutation, "word has a repeated letter");
}
}  // namespace

std::size_t ai(const Letters& w) {
  require_distinct(w);
  std::size_t count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    // With 1-based positions the first condition reads: i > 1 and w(i-1) < w(i).
    const bool after_rise = i > 0 && w[i - 1] < w[i];
    unsigned between_max = 0;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j] && (after_rise || between_max > w[i])) ++count;
      between_max = std::max(between_max, w[j]);
    }
  }
  return count;
}

std::size_t aid(const Letters& w) { return ai(w) + des(w); }

bool has_double_ascent(const Letters& w) {
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (w[i] <= w[i + 1] && w[i + 1] <= w[i + 2]) return true;
  return false;
}

bool has_double_descent(const Letters& w) {
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (w[i] > w[i + 1] && w[i + 1] > w[i + 2]) return true;
  return false;
}

WordStats stats(const Word& w) {
  WordStats s = stats(TwoLineWord::of(w.letters));
  s.bars = w.bar_count();
  return s;
}

WordStats stats(const TwoLineWord& w) {
  WordStats s;
  const Letters& b = w.bottom;
  s.exc = exc(w);
  s.Des = descent_set(b);
  s.des = s.Des.size();
  s.maj = maj(b);
  s.inv = inv(b);
  s.asc = asc(b);
  std::set<unsigned> seen(b.begin(), b.end());
  if (seen.size() == b.size()) {
    s.ai = ai(b);
    s.aid = *s.ai + s.des;
  }
  return s;
}

namespace {

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_count(const Integer& count, const WordBounds& bounds, const char* what) {
  if (count > bounds.max_count)
    throw Error(ErrorCode::BoundExceeded, std::string(what) + ": " + count.str() +
                                              " words exceed the bound " +
                                              std::to_string(bounds.max_count));
}

void require_length(std::size_t n, const WordBounds& bounds) {
  if (n > bounds.max_length)
    throw Error(ErrorCode::BoundExceeded, "word length " + std::to_string(n) + " exceeds the bound " +
                                              std::to_string(bounds.max_length));
}

Integer multinomial(const Letters& multiset) {
  std::map<unsigned, std::size_t> mult;
  for (unsigned a : multiset) ++mult[a];
  Integer r = factorial(multiset.size());
  for (const auto& [a, k] : mult) r /= factorial(k);
  return r;
}

Integer int_pow(unsigned base, std::size_t e) {
  Integer r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Letters multiset_of(const WeakComposition& mu) {
  Letters m;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (unsigned k = 0; k < mu[i]; ++k) m.push_back(static_cast<unsigned>(i + 1));
  return m;
}

std::vector<Letters> multiset_permutations(Letters multiset, const WordBounds& bounds) {
  require_length(multiset.size(), bounds);
  require_count(multinomial(multiset), bounds, "multiset permutations");
  std::sort(multiset.begin(), multiset.end());
  std::vector<Letters> out;
  do {
    out.push_back(multiset);
  } while (std::next_permutation(multiset.begin(), multiset.end()));
  return out;
}

std::vector<Letters> permutations(std::size_t n, const WordBounds& bounds) {
  Letters id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<unsigned>(i + 1);
  return multiset_permutations(id, bounds);
}

std::vector<Letters> derangements(std::size_t n, const WordBounds& bounds) {
  std::vector<Letters> out;
  for (auto& p : permutations(n, bounds)) {
    bool fixed = false;
    for (std::size_t i = 0; i < n; ++i)
      if (p[i] == i + 1) fixed = true;
    if (!fixed) out.push_back(std::move(p));
  }
  return out;
}

std::vector<TwoLineWord> multiset_derangements(const Letters& multiset, const WordBounds& bounds) {
  std::vector<TwoLineWord> out;
  for (auto& p : multiset_permutations(multiset, bounds)) {
    TwoLineWord w = TwoLineWord::of(p);
    bool clash = false;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (w.top[j] == w.bottom[j]) clash = true;
    if (!clash) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Letters> smirnov_words(const Letters& multiset, const WordBounds& bounds) {
  std::vector<Letters> out;
  for (auto& p : multiset_permutations(multiset, bounds)) {
    bool repeat = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] == p[i + 1]) repeat = true;
    if (!repeat) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Letters> all_words(std::size_t n, unsigned m, const WordBounds& bounds) {
  require_length(n, bounds);
  require_count(int_pow(m, n), bounds, "words");
  std::vector<Letters> out;
  if (m == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  Letters w(n, 1);
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == m) w[--i] = 1;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

std::vector<Letters> parking_functions(std::size_t n, const WordBounds& bounds) {
  std::vector<Letters> out;
  for (auto& w : all_words(n, static_cast<unsigned>(n), bounds)) {
    Letters u = w;
    std::sort(u.begin(), u.end());
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] > i + 1) ok = false;
    if (ok) out.push_back(std::move(w));
  }
  if (n == 0) out = {Letters{}};
  return out;
}

std::vector<WeakComposition> parking_compositions(std::size_t n, const WordBounds& bounds) {
  require_length(n, bounds);
  std::vector<WeakComposition> out;
  WeakComposition mu(n, 0);
  // Place parts left to right keeping every partial sum at least its index.
  std::function<void(std::size_t, unsigned)> place = [&](std::size_t j, unsigned used) {
    if (j == n) {
      if (used == n) out.push_back(mu);
      return;
    }
    for (unsigned v = 0; used + v <= n; ++v) {
      if (used + v < j + 1) continue;
      mu[j] = v;
      place(j + 1, used + v);
    }
    mu[j] = 0;
  };
  place(0, 0);
  return out;
}

bool passes(const Letters& w, const BoundaryFilter& filter) {
  auto check = [&](std::optional<Step> s, std::size_t i) {
    if (!s) return true;
    if (w.size() < 2) return false;
    const bool ascent = w[i] <= w[i + 1];
    return (*s == Step::Ascent) == ascent;
  };
  return check(filter.first, 0) && check(filter.last, w.size() < 2 ? 0 : w.size() - 2);
}

std::vector<Letters> nda(std::size_t n, unsigned m, BoundaryFilter filter, const WordBounds& bounds) {
  std::vector<Letters> out;
  for (auto& w : all_words(n, m, bounds))
    if (!has_double_ascent(w) && passes(w, filter)) out.push_back(std::move(w));
  return out;
}

std::vector<Letters> ndd(std::size_t n, unsigned m, BoundaryFilter filter, const WordBounds& bounds) {
  std::vector<Letters> out;
  for (auto& w : all_words(n, m, bounds))
    if (!has_double_descent(w) && passes(w, filter)) out.push_back(std::move(w));
  return out;
}

bool is_banner(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return true;
  if (w.barred(n - 1)) return false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w.letters[i] < w.letters[i + 1] && w.barred(i)) return false;
    if (w.letters[i] > w.letters[i + 1] && !w.barred(i)) return false;
  }
  return true;
}

std::vector<Word> banners(std::size_t n, unsigned m, const WordBounds& bounds) {
  std::vector<Word> out;
  for (auto& letters : all_words(n, m, bounds)) {
    std::vector<std::size_t> free;
    std::vector<bool> bars(n, false);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (letters[i] > letters[i + 1]) bars[i] = true;
      if (letters[i] == letters[i + 1]) free.push_back(i);
    }
    if (free.size() >= 63) throw Error(ErrorCode::BoundExceeded, "too many free bar positions");
    const std::uint64_t choices = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < choices; ++mask) {
      for (std::size_t f = 0; f < free.size(); ++f) bars[free[f]] = ((mask >> f) & 1U) != 0;
      out.push_back(Word{letters, bars});
    }
    if (out.size() > bounds.max_count) throw Error(ErrorCode::BoundExceeded, "too many banners");
  }
  return out;
}

bool is_barred_permutation(const Word& w) {
  const std::size_t n = w.size();
  std::set<unsigned> seen(w.letters.begin(), w.letters.end());
  if (seen.size() != n) return false;
  if (n == 0) return true;
  if (!w.barred(n - 1)) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (w.letters[i] < w.letters[i + 1] && (!w.barred(i) || w.barred(i + 1))) return false;
  return true;
}

std::vector<Word> barred_permutations(const Letters& X, const WordBounds& bounds) {
  const std::size_t n = X.size();
  require_count(factorial(n) * int_pow(2, n), bounds, "barred permutations");
  std::vector<Word> out;
  for (const auto& p : multiset_permutations(X, bounds)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Word w{p, std::vector<bool>(n, false)};
      for (std::size_t i = 0; i < n; ++i) w.bars[i] = ((mask >> (n - 1 - i)) & 1U) != 0;
      if (is_barred_permutation(w)) out.push_back(std::move(w));
    }
  }
  return out;
}

namespace {

Letters phi_rec(const Word& w) {
  if (w.size() == 0) return {};
  const auto it = std::max_element(w.letters.begin(), w.letters.end());
  const std::size_t p = static_cast<std::size_t>(it - w.letters.begin());
  const unsigned m = *it;
  auto slice = [&](std::size_t from, std::size_t to) {
    Word s;
    s.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(from),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(to));
    for (std::size_t i = from; i < to; ++i) s.bars.push_back(w.barred(i));
    return s;
  };
  if (w.barred(p)) {
    if (p != 0) throw Error(ErrorCode::NotInDomain, "barred maximum is not the first letter");
    Letters out{m};
    auto rest = phi_rec(slice(1, w.size()));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  if (p + 1 == w.size()) throw Error(ErrorCode::NotInDomain, "unbarred maximum is the last letter");
  Letters out = phi_rec(slice(p + 1, w.size()));
  out.push_back(m);
  auto alpha = phi_rec(slice(0, p));
  out.insert(out.end(), alpha.begin(), alpha.end());
  return out;
}

Word psi_rec(const Letters& s) {
  if (s.empty()) return {};
  const auto it = std::max_element(s.begin(), s.end());
  const std::size_t p = static_cast<std::size_t>(it - s.begin());
  const unsigned m = *it;
  Letters gamma(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p));
  Letters delta(s.begin() + static_cast<std::ptrdiff_t>(p) + 1, s.end());
  Word out;
  auto append = [&](const Word& part) {
    out.letters.insert(out.letters.end(), part.letters.begin(), part.letters.end());
    for (std::size_t i = 0; i < part.size(); ++i) out.bars.push_back(part.barred(i));
  };
  if (p == 0) {
    out.letters.push_back(m);
    out.bars.push_back(true);
    append(psi_rec(delta));
    return out;
  }
  append(psi_rec(delta));
  out.letters.push_back(m);
  out.bars.push_back(false);
  append(psi_rec(gamma));
  return out;
}

}  // namespace

Letters phi(const Word& w) {
  if (!is_barred_permutation(w)) throw Error(ErrorCode::NotInDomain, to_string(w) + " is not admissible");
  return phi_rec(w);
}

Word psi(const Letters& s) {
  require_distinct(s);
  Word w = psi_rec(s);
  if (w.bars.empty()) w.bars.assign(w.size(), false);
  return w;
}

std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::maj: return "maj";
    case Statistic::exc: return "exc";
    case Statistic::des: return "des";
    case Statistic::inv: return "inv";
    case Statistic::asc: return "asc";
    case Statistic::ai: return "ai";
    case Statistic::aid: return "aid";
  }
  return "";
}

Statistic statistic_from_string(std::string_view name) {
  for (Statistic s : {Statistic::maj, Statistic::exc, Statistic::des, Statistic::inv, Statistic::asc,
                      Statistic::ai, Statistic::aid})
    if (to_string(s) == name) return s;
  throw Error(ErrorCode::ParseError, "unknown statistic '" + std::string(name) + "'");
}

std::size_t evaluate(Statistic s, const Letters& p) {
  switch (s) {
    case Statistic::maj: return maj(p);
    case Statistic::exc: return exc(TwoLineWord::of(p));
    case Statistic::des: return des(p);
    case Statistic::inv: return inv(p);
    case Statistic::asc: return asc(p);
    case Statistic::ai: return ai(p);
    case Statistic::aid: return aid(p);
  }
  return 0;
}

StatPolynomial joint_polynomial(std::size_t n, Statistic s1, Statistic s2, const WordBounds& bounds) {
  require_count(factorial(n), bounds, "permutations");
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> counts;
  Letters p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<unsigned>(i + 1);
  do {
    ++counts[{evaluate(s1, p), evaluate(s2, p)}];
  } while (std::next_permutation(p.begin(), p.end()));
  StatPolynomial out;
  for (const auto& [k, c] : counts)
    out.add_term({static_cast<unsigned>(k.second), static_cast<unsigned>(k.first)}, c);
  return out;
}

StatPolynomial aid_polynomial(std::size_t n, const WordBounds& bounds) {
  require_count(factorial(n), bounds, "permutations");
  std::map<std::size_t, std::uint64_t> counts;
  Letters p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<unsigned>(i + 1);
  do {
    ++counts[aid(p)];
  } while (std::next_permutation(p.begin(), p.end()));
  StatPolynomial out;
  for (const auto& [k, c] : counts) out.add_term({0, static_cast<unsigned>(k)}, c);
  return out;
}

StatPolynomial q_integer(std::size_t n) {
  StatPolynomial out;
  for (std::size_t i = 0; i < n; ++i) out.add_term({0, static_cast<unsigned>(i)}, 1);
  return out;
}

StatPolynomial q_factorial(std::size_t n) {
  StatPolynomial out = stat::constant(1);
  for (std::size_t i = 2; i <= n; ++i) out *= q_integer(i);
  return out;
}

StatPolynomial q_binomial(std::size_t n, std::size_t k) {
  if (k > n) return {};
  std::vector<std::vector<StatPolynomial>> c(n + 1);
  for (std::size_t a = 0; a <= n; ++a) {
    c[a].resize(a + 1);
    c[a][0] = stat::constant(1);
    c[a][a] = stat::constant(1);
    for (std::size_t b = 1; b < a; ++b)
      c[a][b] = c[a - 1][b - 1] + stat::q_pow(static_cast<unsigned>(b)) * c[a - 1][b];
  }
  return c[n][k];
}

AidRecurrenceVerdict check_aid_recurrence(std::size_t n, const WordBounds& bounds) {
  AidRecurrenceVerdict v;
  std::vector<StatPolynomial> F;
  for (std::size_t m = 0; m <= n; ++m) {
    F.push_back(aid_polynomial(m, bounds));
    if (!(F[m] == q_factorial(m))) {
      v.ok = false;
      v.reason = "F_" + std::to_string(m) + " = " + stat::to_string(F[m]) + " differs from [" +
                 std::to_string(m) + "]_q!";
      return v;
    }
    if (m >= 2) {
      const StatPolynomial one_plus_q = stat::constant(1) + stat::q_pow(1);
      StatPolynomial rhs = one_plus_q * F[m - 1];
      std::vector<StatPolynomial> term(m + 1);
      term[1] = F[m - 1];
      term[m] = stat::q_pow(1) * F[m - 1];
      for (std::size_t j = 2; j + 1 <= m; ++j) {
        term[j] = q_binomial(m - 1, j - 1) * stat::q_pow(static_cast<unsigned>(j)) * F[j - 1] * F[m - j];
        rhs += term[j];
      }
      if (!(rhs == F[m])) {
        v.ok = false;
        v.reason = "recurrence fails at n = " + std::to_string(m);
        return v;
      }
      // Refinement by the position n - j + 1 (1-based) of the largest letter.
      std::vector<StatPolynomial> by_position(m + 1);
      Letters p(m);
      for (std::size_t i = 0; i < m; ++i) p[i] = static_cast<unsigned>(i + 1);
      do {
        const std::size_t pos = static_cast<std::size_t>(
                                    std::find(p.begin(), p.end(), static_cast<unsigned>(m)) - p.begin()) +
                                1;
        by_position[m - pos + 1].add_term({0, static_cast<unsigned>(aid(p))}, 1);
      } while (std::next_permutation(p.begin(), p.end()));
      for (std::size_t j = 1; j <= m; ++j)
        if (!(by_position[j] == term[j])) {
          v.ok = false;
          v.reason = "position refinement fails at n = " + std::to_string(m) + ", j = " + std::to_string(j);
          return v;
        }
    }
    v.n = m;
  }
  return v;
}

std::string to_string(const Word& w) {
  const bool wide = std::any_of(w.letters.begin(), w.letters.end(), [](unsigned a) { return a > 9; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i != 0) s += ',';
    s += std::to_string(w.letters[i]);
    if (w.barred(i)) s += '\'';
  }
  return s;
}

std::string to_string(const Letters& w) { return to_string(Word{w, {}}); }

Word parse_word(std::string_view text) {
  Word w;
  const bool wide = text.find(',') != std::string_view::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] < '0' || text[i] > '9')
      throw Error(ErrorCode::ParseError, "unexpected character in word '" + std::string(text) + "'");
    unsigned v = 0;
    if (wide) {
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + unsigned(text[i++] - '0');
    } else {
      v = unsigned(text[i++] - '0');
    }
    if (v == 0) throw Error(ErrorCode::ParseError, "letters must be positive");
    bool bar = false;
    if (i < text.size() && text[i] == '\'') {
      bar = true;
      ++i;
    }
    w.letters.push_back(v);
    w.bars.push_back(bar);
    if (wide && i < text.size()) {
      if (text[i] != ',') throw Error(ErrorCode::ParseError, "expected ',' in word '" + std::string(text) + "'");
      ++i;
    }
  }
  if (!w.bar_count()) w.bars.clear();
  return w;
}

}  // namespace reeskit
