#include "reeskit/formulas.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace reeskit {

std::string_view to_string(TreeMode m) {
  switch (m) {
    case TreeMode::MaxOnly: return "max-only";
    case TreeMode::MinAndMax: return "min-and-max";
    case TreeMode::GeneralTop: return "general-top";
    case TreeMode::GeneralPlus: return "general-plus";
  }
  return "";
}

TreeMode tree_mode_from_string(std::string_view name) {
  for (TreeMode m : {TreeMode::MaxOnly, TreeMode::MinAndMax, TreeMode::GeneralTop, TreeMode::GeneralPlus})
    if (to_string(m) == name) return m;
  throw Error(ErrorCode::ParseError, "unknown tree mode '" + std::string(name) + "'");
}

StatPolynomial LengthTable::at(int dim) const {
  auto it = by_dimension.find(dim);
  return it == by_dimension.end() ? StatPolynomial{} : it->second;
}

StatPolynomial LengthTable::total() const {
  StatPolynomial s;
  for (const auto& [d, poly] : by_dimension) s += poly;
  return s;
}

bool operator==(const LengthTable& a, const LengthTable& b) {
  auto nonzero = [](const LengthTable& x) {
    std::map<int, StatPolynomial> m;
    for (const auto& [d, poly] : x.by_dimension)
      if (!poly.is_zero()) m.emplace(d, poly);
    return m;
  };
  return nonzero(a) == nonzero(b);
}

namespace {

void require_mode(const FinitePoset& p, TreeMode mode) {
  if (!p.is_semipure()) throw Error(ErrorCode::NotSemipure, "the Rees product needs a semipure poset");
  const bool has_max = p.unique_maximum().has_value();
  const bool has_min = p.unique_minimum().has_value();
  switch (mode) {
    case TreeMode::MaxOnly:
      if (!has_max) throw Error(ErrorCode::ModeMismatch, "max-only needs a unique maximum");
      break;
    case TreeMode::MinAndMax:
      if (!has_max || !has_min) throw Error(ErrorCode::ModeMismatch, "min-and-max needs a bounded poset");
      break;
    case TreeMode::GeneralPlus:
      if (!has_min) throw Error(ErrorCode::ModeMismatch, "general-plus needs a unique minimum");
      break;
    case TreeMode::GeneralTop:
      break;
  }
}

bool plus_mode(TreeMode mode) { return mode == TreeMode::MinAndMax || mode == TreeMode::GeneralPlus; }

/// Label-id sequence of every maximal chain of the completed poset.
std::vector<std::vector<LabelId>> hat_label_words(const FinitePoset& phat, const EdgeLabeling& lam) {
  std::vector<std::vector<LabelId>> out;
  phat.for_each_maximal_chain([&](const ChainInPoset& c) {
    std::vector<LabelId> w;
    for (std::size_t i = 0; i + 1 < c.elements.size(); ++i) w.push_back(lam.id(c.elements[i], c.elements[i + 1]));
    out.push_back(std::move(w));
    return true;
  });
  return out;
}

struct WordView {
  const EdgeLabeling& lam;
  bool le(LabelId a, LabelId b) const { return lam.id_leq(a, b); }
  std::size_t ascents(const std::vector<LabelId>& w) const {
    std::size_t s = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (le(w[i], w[i + 1])) ++s;
    return s;
  }
  bool no_double_ascent(const std::vector<LabelId>& w) const {
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
      if (le(w[i], w[i + 1]) && le(w[i + 1], w[i + 2])) return false;
    return true;
  }
};

StatPolynomial weight(std::size_t t_exp, long long one_plus_t_exp) {
  if (one_plus_t_exp < 0) throw Error(ErrorCode::PreconditionFailed, "negative exponent of 1 + t");
  return stat::t_pow(static_cast<unsigned>(t_exp)) * stat::one_plus_t_pow(static_cast<unsigned>(one_plus_t_exp));
}

void verify_labeling(const FinitePoset& phat, const EdgeLabeling& lam) {
  const ElVerdict v = is_el_labeling(phat, lam);
  if (!v.ok) throw Error(ErrorCode::PreconditionFailed, "labeling is not EL: " + v.reason);
}

}  // namespace

LengthTable betti_poly_tree_product(const FinitePoset& p, const EdgeLabeling& lam_hat, TreeMode mode,
                                    bool trusted) {
  require_mode(p, mode);
  const FinitePoset phat = adjoin_bounds(p);
  if (!trusted) verify_labeling(phat, lam_hat);
  const WordView view{lam_hat};
  const std::size_t n = p.length();

  // Group the relevant label words with their chain multiplicities.
  std::map<std::vector<LabelId>, std::uint64_t> c;
  for (const auto& hw : hat_label_words(phat, lam_hat)) {
    std::vector<LabelId> w;
    switch (mode) {
      case TreeMode::MaxOnly: w.assign(hw.begin(), hw.end() - 1); break;
      case TreeMode::MinAndMax: w.assign(hw.begin() + 1, hw.end() - 1); break;
      case TreeMode::GeneralTop: w = hw; break;
      case TreeMode::GeneralPlus: w.assign(hw.begin() + 1, hw.end()); break;
    }
    ++c[w];
  }

  LengthTable table;
  auto add = [&](int dim, const StatPolynomial& poly, std::uint64_t mult) {
    table.by_dimension[dim] += poly * Integer(mult);
  };
  for (const auto& [w, mult] : c) {
    if (!view.no_double_ascent(w)) continue;
    const std::size_t asc = view.ascents(w);
    const long long a = static_cast<long long>(asc);
    switch (mode) {
      case TreeMode::MaxOnly: {
        table.by_dimension.try_emplace(static_cast<int>(n));
        if (n == 0) break;
        if (view.le(w[0], w[1]) || view.le(w[n - 1], w[n])) break;
        add(static_cast<int>(n), weight(asc + 1, static_cast<long long>(n) - 1 - 2 * a), mult);
        break;
      }
      case TreeMode::MinAndMax: {
        if (n == 0) {
          add(-1, stat::constant(1), mult);
          break;
        }
        table.by_dimension.try_emplace(static_cast<int>(n) - 1);
        if (n >= 2 && view.le(w[n - 2], w[n - 1])) break;
        add(static_cast<int>(n) - 1, weight(asc + 1, static_cast<long long>(n) - 1 - 2 * a), mult);
        break;
      }
      case TreeMode::GeneralTop: {
        const std::size_t m = w.size() - 2;
        table.by_dimension.try_emplace(static_cast<int>(m));
        if (view.le(w[0], w[1])) break;
        const bool last_ascent = view.le(w[m], w[m + 1]);
        add(static_cast<int>(m), weight(asc, static_cast<long long>(m) + (last_ascent ? 1 : 0) - 2 * a), mult);
        break;
      }
      case TreeMode::GeneralPlus: {
        const std::size_t m = w.size() - 1;
        if (m == 0) {
          add(-1, stat::constant(1), mult);
          break;
        }
        table.by_dimension.try_emplace(static_cast<int>(m) - 1);
        const bool last_ascent = view.le(w[m - 1], w[m]);
        add(static_cast<int>(m) - 1, weight(asc, static_cast<long long>(m) + (last_ascent ? 1 : 0) - 2 * a),
            mult);
        break;
      }
    }
  }
  return table;
}

LengthTable betti_poly_by_partition(const FinitePoset& p, const EdgeLabeling& lam_hat, TreeMode mode) {
  require_mode(p, mode);
  const FinitePoset phat = adjoin_bounds(p);
  const WordView view{lam_hat};
  const bool plus = plus_mode(mode);
  LengthTable table;
  for (const auto& l : hat_label_words(phat, lam_hat)) {
    // l = (l_0, ..., l_{m+1}) for the chain x_0 < ... < x_m of p.
    const std::size_t m = l.size() - 2;
    const int dim = plus ? static_cast<int>(m) - 1 : static_cast<int>(m);
    StatPolynomial& slot = table.by_dimension[dim];
    if (!plus && view.le(l[0], l[1])) continue;
    if (m > 24) throw Error(ErrorCode::BoundExceeded, "chain too long for the rank-jump enumeration");
    for (std::uint32_t d = 0; d < (std::uint32_t{1} << m); ++d) {
      auto bit = [&](std::size_t i) { return i >= 1 && i <= m && ((d >> (i - 1)) & 1U) != 0; };
      bool ok = true;
      for (std::size_t i = 1; i <= m && ok; ++i)
        if (view.le(l[i], l[i + 1]) && !(bit(i) && !bit(i + 1))) ok = false;
      if (ok) slot += stat::t_pow(static_cast<unsigned>(__builtin_popcount(d)));
    }
  }
  return table;
}

Integer partition_chain_total(const FinitePoset& p, unsigned t) {
  Integer total = 0;
  p.for_each_maximal_chain([&](const ChainInPoset& c) {
    Integer w = 1;
    for (std::size_t i = 0; i < c.length(); ++i) w *= (1 + t);
    total += w;
    return true;
  });
  return total;
}

std::vector<std::vector<std::size_t>> stable_subsets(long long lo, long long hi) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, long long next) -> void {
    out.push_back(cur);
    for (long long v = next; v <= hi; ++v) {
      cur.push_back(static_cast<std::size_t>(v));
      self(self, v + 2);
      cur.pop_back();
    }
  };
  if (lo < 0) lo = 0;
  rec(rec, lo);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(RankSelectionVariant v) {
  switch (v) {
    case RankSelectionVariant::MaxOnly: return "max";
    case RankSelectionVariant::MinAndMax: return "minmax";
    case RankSelectionVariant::General: return "general";
    case RankSelectionVariant::GeneralMin: return "general-min";
  }
  return "";
}

RankSelectionVariant rank_selection_variant_from_string(std::string_view name) {
  for (RankSelectionVariant v : {RankSelectionVariant::MaxOnly, RankSelectionVariant::MinAndMax,
                                 RankSelectionVariant::General, RankSelectionVariant::GeneralMin})
    if (to_string(v) == name) return v;
  throw Error(ErrorCode::ParseError, "unknown rank-selection variant '" + std::string(name) + "'");
}

namespace {

/// Sum over stable S in [1, hi] of beta(P_{[lo, top] \ S}) t^{|S| + shift} (1+t)^{n - 2|S| - shift}.
StatPolynomial stable_sum(std::size_t n, const RankBetti& beta, std::size_t lo, long long top, long long hi,
                          unsigned shift) {
  StatPolynomial s;
  for (const auto& S : stable_subsets(1, hi)) {
    std::vector<std::size_t> ranks;
    for (long long r = static_cast<long long>(lo); r <= top; ++r)
      if (!std::binary_search(S.begin(), S.end(), static_cast<std::size_t>(r)))
        ranks.push_back(static_cast<std::size_t>(r));
    const long long e = static_cast<long long>(n) - 2 * static_cast<long long>(S.size()) - shift;
    s += beta(ranks) * weight(S.size() + shift, e);
  }
  return s;
}

}  // namespace

StatPolynomial betti_poly_rank_selection(std::size_t n, const RankBetti& beta, RankSelectionVariant v) {
  const long long N = static_cast<long long>(n);
  if (n == 0) throw Error(ErrorCode::PreconditionFailed, "rank selection needs a poset of positive length");
  switch (v) {
    case RankSelectionVariant::MaxOnly: return stable_sum(n, beta, 0, N - 1, N - 2, 1);
    case RankSelectionVariant::MinAndMax: return stable_sum(n, beta, 1, N - 1, N - 2, 1);
    case RankSelectionVariant::General:
      return stable_sum(n, beta, 0, N, N - 1, 0) + stable_sum(n, beta, 0, N - 1, N - 2, 1);
    case RankSelectionVariant::GeneralMin:
      return stable_sum(n, beta, 1, N, N - 1, 0) + stable_sum(n, beta, 1, N - 1, N - 2, 1);
  }
  return {};
}

RankBetti rank_betti_from_labeling(const FinitePoset& p, const EdgeLabeling& lam_hat, bool trusted) {
  if (!p.is_pure()) throw Error(ErrorCode::NotPure, "rank selection needs a pure poset");
  auto phat = std::make_shared<FinitePoset>(adjoin_bounds(p));
  if (!trusted) verify_labeling(*phat, lam_hat);
  auto profile = std::make_shared<DescentProfile>(descent_profile(*phat, lam_hat));
  const std::size_t n = p.length();
  return [profile, n](const std::vector<std::size_t>& ranks) {
    std::vector<std::size_t> S;
    for (std::size_t r : ranks) {
      if (r > n) throw Error(ErrorCode::IndexOutOfRange, "rank " + std::to_string(r) + " exceeds the length");
      S.push_back(r + 1);
    }
    std::sort(S.begin(), S.end());
    return stat::constant(profile->count(S));
  };
}

RankBetti rank_betti_from_homology(const FinitePoset& p, const HomologyBounds& bounds) {
  auto keep = std::make_shared<FinitePoset>(p);
  return [keep, bounds](const std::vector<std::size_t>& ranks) {
    const FinitePoset sub = rank_selected(*keep, ranks);
    const BettiVector b = betti(sub, BettiOptions{bounds, false, false});
    return stat::constant(b.at(static_cast<int>(ranks.size()) - 1));
  };
}

RankBetti rank_betti_subspace(std::size_t n) {
  auto perms = std::make_shared<std::vector<Letters>>(permutations(n));
  return [perms, n](const std::vector<std::size_t>& ranks) {
    std::vector<std::size_t> T(ranks);
    std::sort(T.begin(), T.end());
    if (T.empty()) return stat::constant(1);
    if (T.front() == 0 || T.back() >= n) return StatPolynomial{};
    StatPolynomial s;
    for (const auto& sigma : *perms)
      if (descent_set(sigma) == T) s += stat::q_pow(static_cast<unsigned>(inv(sigma)));
    return s;
  };
}

RankBetti rank_betti_noncrossing(std::size_t n) {
  auto pf = std::make_shared<std::vector<Letters>>(parking_functions(n));
  return [pf, n](const std::vector<std::size_t>& ranks) {
    std::vector<std::size_t> T(ranks);
    std::sort(T.begin(), T.end());
    if (T.empty()) return stat::constant(1);
    if (T.front() == 0 || T.back() >= n) return StatPolynomial{};
    std::vector<std::size_t> complement;
    for (std::size_t i = 1; i < n; ++i)
      if (!std::binary_search(T.begin(), T.end(), i)) complement.push_back(i);
    std::uint64_t count = 0;
    for (const auto& w : *pf)
      if (descent_set(w) == complement) ++count;
    return stat::constant(count);
  };
}

namespace {

std::size_t need_n(const FormulaParams& p, std::string_view name) {
  if (!p.n) throw Error(ErrorCode::PreconditionFailed, std::string(name) + " needs n");
  return *p.n;
}

const WeakComposition& need_mu(const FormulaParams& p, std::string_view name) {
  if (!p.mu) throw Error(ErrorCode::PreconditionFailed, std::string(name) + " needs mu");
  return *p.mu;
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer power(const Integer& b, std::size_t e) {
  Integer r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

/// Sum over [m]^len of t^des.
StatPolynomial descent_generating(std::size_t len, unsigned m, const WordBounds& bounds) {
  std::map<std::size_t, std::uint64_t> counts;
  for (const auto& w : all_words(len, m, bounds)) ++counts[des(w)];
  StatPolynomial s;
  for (const auto& [d, c] : counts) s.add_term({static_cast<unsigned>(d), 0}, c);
  return s;
}

/// Sum over the permutations or derangements of [n] of q^{C(n,2) - maj + exc} t^{exc}.
StatPolynomial maj_exc_sum(const std::vector<Letters>& perms, std::size_t n, bool with_t) {
  StatPolynomial s;
  const std::size_t c2 = n * (n - 1) / 2;
  for (const auto& sigma : perms) {
    const std::size_t e = exc(TwoLineWord::of(sigma));
    const std::size_t qexp = c2 + e - maj(sigma);
    s += stat::tq(with_t ? static_cast<unsigned>(e) : 0U, static_cast<unsigned>(qexp));
  }
  return s;
}

StatPolynomial thm71_first(std::size_t n, const WordBounds& bounds) {
  if (n == 0) throw Error(ErrorCode::PreconditionFailed, "thm7.1 needs n >= 1");
  StatPolynomial s;
  for (std::size_t k = 0; k + 1 <= n; ++k)
    s += stat::t_pow(static_cast<unsigned>(k), binomial(n - 1, k)) *
         descent_generating(n - k, static_cast<unsigned>(n + 1), bounds);
  return s.exact_divide(n + 1);
}

StatPolynomial thm71_second(std::size_t n, const WordBounds& bounds) {
  if (n == 0) throw Error(ErrorCode::PreconditionFailed, "thm7.1 needs n >= 1");
  StatPolynomial inner;
  for (std::size_t r = 0; r + 1 <= n; ++r) {
    StatPolynomial part;
    for (std::size_t k = 0; k + 1 + r <= n; ++k)
      part += stat::t_pow(static_cast<unsigned>(k), binomial(n - 1 - r, k)) *
              descent_generating(n - k - r, static_cast<unsigned>(n + 1), bounds);
    Integer coeff = binomial(n + 1, r);
    if (r % 2 == 1) coeff = -coeff;
    inner += part * coeff;
  }
  return stat::constant(n % 2 == 0 ? 1 : -1) + inner.exact_divide(n + 1);
}

}  // namespace

std::vector<std::string> formula_names() {
  return {"jonsson",       "qan",           "tree1",          "tree1-corrected", "tree2",
          "eq5.1",         "eq5.1-corrected", "eq5.2",        "eq6.3",           "thm7.1-first",
          "thm7.1-first-corrected", "thm7.1-second", "cor7.2-first", "cor7.2-second", "inv-rank"};
}

StatPolynomial formula_rhs(std::string_view name, const FormulaParams& params) {
  const WordBounds& bounds = params.bounds;
  if (name == "jonsson") return stat::constant(derangements(need_n(params, name), bounds).size());
  if (name == "qan") {
    const std::size_t n = need_n(params, name);
    return maj_exc_sum(derangements(n, bounds), n, false);
  }
  if (name == "tree1" || name == "tree1-corrected") {
    const std::size_t n = need_n(params, name);
    const StatPolynomial s = maj_exc_sum(derangements(n, bounds), n, true);
    return name == "tree1" ? stat::t_pow(1) * s : s;
  }
  if (name == "tree2") {
    const std::size_t n = need_n(params, name);
    return stat::t_pow(1) * maj_exc_sum(permutations(n, bounds), n, true);
  }
  if (name == "eq5.1" || name == "eq5.1-corrected") {
    const unsigned shift = name == "eq5.1" ? 1 : 0;
    StatPolynomial s;
    for (const auto& w : multiset_derangements(multiset_of(need_mu(params, name)), bounds))
      s += stat::t_pow(static_cast<unsigned>(exc(w)) + shift);
    return s;
  }
  if (name == "eq5.2") {
    StatPolynomial s;
    for (const auto& w : smirnov_words(multiset_of(need_mu(params, name)), bounds))
      s += stat::t_pow(static_cast<unsigned>(des(w)) + 1);
    return s;
  }
  if (name == "eq6.3") {
    const std::size_t n = need_n(params, name);
    const std::size_t c2 = n * (n - 1) / 2;
    StatPolynomial s;
    for (const auto& sigma : permutations(n, bounds))
      s += stat::tq(static_cast<unsigned>(des(sigma)) + 1, static_cast<unsigned>(c2 - ai(sigma)));
    return s;
  }
  if (name == "thm7.1-first") return thm71_first(need_n(params, name), bounds);
  if (name == "thm7.1-first-corrected") return stat::t_pow(1) * thm71_first(need_n(params, name), bounds);
  if (name == "thm7.1-second") return thm71_second(need_n(params, name), bounds);
  if (name == "cor7.2-first") {
    const std::size_t n = need_n(params, name);
    if (n == 0) throw Error(ErrorCode::PreconditionFailed, "cor7.2 needs n >= 1");
    return stat::constant(power(n + 2, n - 1));
  }
  if (name == "cor7.2-second") {
    const std::size_t n = need_n(params, name);
    if (n == 0) throw Error(ErrorCode::PreconditionFailed, "cor7.2 needs n >= 1");
    Integer num = power(n + 1, n + 1) + (n % 2 == 0 ? Integer(n + 3) : Integer(-Integer(n + 3)));
    return stat::constant(num).exact_divide(power(n + 2, 2));
  }
  if (name == "inv-rank") {
    const std::size_t n = need_n(params, name);
    if (!params.ranks) throw Error(ErrorCode::PreconditionFailed, "inv-rank needs ranks");
    return rank_betti_subspace(n)(*params.ranks);
  }
  throw Error(ErrorCode::UnknownFormula, "unknown formula '" + std::string(name) + "'");
}

}  // namespace reeskit
