#include "reeskit/series.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace reeskit {

namespace sym {

namespace {
SymMonomial zero_monomial(std::size_t m) { return SymMonomial(m + 1, 0U); }
}  // namespace

SymPoly one(std::size_t m) { return SymPoly::constant(1, zero_monomial(m)); }

SymPoly t(std::size_t m, unsigned power) {
  SymMonomial mono = zero_monomial(m);
  mono[0] = power;
  return SymPoly::monomial(mono);
}

SymPoly x(std::size_t i, std::size_t m) {
  if (i == 0 || i > m) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  SymMonomial mono = zero_monomial(m);
  mono[i] = 1;
  return SymPoly::monomial(mono);
}

SymPoly x_word(const Letters& w, std::size_t m) {
  SymMonomial mono = zero_monomial(m);
  for (unsigned a : w) {
    if (a == 0 || a > m) throw Error(ErrorCode::IndexOutOfRange, "letter exceeds the number of variables");
    ++mono[a];
  }
  return SymPoly::monomial(mono);
}

SymPoly t_integer(std::size_t n, std::size_t m) {
  SymPoly s;
  for (std::size_t i = 0; i < n; ++i) s += t(m, static_cast<unsigned>(i));
  return s;
}

SymPoly one_plus_t_pow(unsigned e, std::size_t m) { return (one(m) + t(m)).pow(e); }

namespace {
SymPoly selections(std::size_t i, std::size_t m, bool strict) {
  SymPoly s;
  std::vector<unsigned> idx;
  std::function<void(unsigned)> rec = [&](unsigned from) {
    if (idx.size() == i) {
      s += x_word(idx, m);
      return;
    }
    for (unsigned v = from; v <= m; ++v) {
      idx.push_back(v);
      rec(strict ? v + 1 : v);
      idx.pop_back();
    }
  };
  rec(1);
  return s;
}
}  // namespace

SymPoly e(std::size_t i, std::size_t m) { return selections(i, m, true); }
SymPoly h(std::size_t i, std::size_t m) { return selections(i, m, false); }

bool is_symmetric(const SymPoly& p, std::size_t m) {
  for (std::size_t a = 1; a < m; ++a) {
    SymPoly swapped;
    for (const auto& [mono, c] : p.terms()) {
      SymMonomial s = mono;
      std::swap(s[a], s[a + 1]);
      swapped.add_term(s, c);
    }
    if (!(swapped == p)) return false;
  }
  return true;
}

StatPolynomial specialize_ones(const SymPoly& p, std::size_t k) {
  StatPolynomial out;
  for (const auto& [mono, c] : p.terms()) {
    bool vanishes = false;
    for (std::size_t i = k + 1; i < mono.size(); ++i)
      if (mono[i] != 0) vanishes = true;
    if (!vanishes) out.add_term({mono[0], 0}, c);
  }
  return out;
}

std::string to_string(const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    std::vector<std::string> factors;
    if (mono[0] != 0) factors.push_back(mono[0] == 1 ? "t" : "t^" + std::to_string(mono[0]));
    for (std::size_t i = 1; i < mono.size(); ++i)
      if (mono[i] != 0)
        factors.push_back("x" + std::to_string(i) + (mono[i] == 1 ? "" : "^" + std::to_string(mono[i])));
    if (factors.empty() || mag != 1) {
      os << reeskit::to_string(mag);
      if (!factors.empty()) os << '*';
    }
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

}  // namespace sym

TruncatedSeries::TruncatedSeries(std::size_t degree, std::size_t variables)
    : m_(variables), coeffs_(degree + 1) {}

TruncatedSeries TruncatedSeries::one(std::size_t degree, std::size_t variables) {
  TruncatedSeries s(degree, variables);
  s.coeffs_[0] = sym::one(variables);
  return s;
}

namespace {
void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.degree() != b.degree() || a.variables() != b.variables())
    throw Error(ErrorCode::PreconditionFailed, "series with different truncation or variables");
}
}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_compatible(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_compatible(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  TruncatedSeries out(a.degree(), a.variables());
  for (std::size_t i = 0; i <= a.degree(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.degree(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  const SymPoly unit = sym::one(m_);
  Integer sign;
  if (coeffs_[0] == unit)
    sign = 1;
  else if (coeffs_[0] == -unit)
    sign = -1;
  else
    throw Error(ErrorCode::PreconditionFailed, "reciprocal needs constant term 1 or -1");
  TruncatedSeries b(degree(), m_);
  b.coeffs_[0] = coeffs_[0];
  for (std::size_t k = 1; k <= degree(); ++k) {
    SymPoly s;
    for (std::size_t i = 1; i <= k; ++i)
      if (!coeffs_[i].is_zero()) s += coeffs_[i] * b.coeffs_[k - i];
    b.coeffs_[k] = s * Integer(-sign);
  }
  return b;
}

TruncatedSeries TruncatedSeries::negate_z() const {
  TruncatedSeries out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); k += 2) out.coeffs_[k] *= Integer(-1);
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeries e_series(std::size_t N, std::size_t m) {
  TruncatedSeries s(N, m);
  for (std::size_t i = 0; i <= N; ++i) s[i] = sym::e(i, m);
  return s;
}

TruncatedSeries h_series(std::size_t N, std::size_t m) {
  TruncatedSeries s(N, m);
  for (std::size_t i = 0; i <= N; ++i) s[i] = sym::h(i, m);
  return s;
}

namespace {
TruncatedSeries denominator(std::size_t N, std::size_t m, const std::function<SymPoly(std::size_t)>& f) {
  TruncatedSeries s = TruncatedSeries::one(N, m);
  for (std::size_t i = 2; i <= N; ++i) s[i] = -(sym::t(m) * sym::t_integer(i - 1, m) * f(i));
  return s;
}
}  // namespace

TruncatedSeries e_denominator(std::size_t N, std::size_t m) {
  return denominator(N, m, [m](std::size_t i) { return sym::e(i, m); });
}

TruncatedSeries h_denominator(std::size_t N, std::size_t m) {
  return denominator(N, m, [m](std::size_t i) { return sym::h(i, m); });
}

std::vector<std::string> identity_names() {
  return {"ges1", "ges1-corrected", "ges2", "ges3", "ges3-corrected", "ges4", "banner", "macderang", "smirnov"};
}

TruncatedSeries rhs_series(std::string_view name, std::size_t m, std::size_t N) {
  if (name == "ges1" || name == "ges1-corrected" || name == "macderang") return e_denominator(N, m).reciprocal();
  if (name == "ges2" || name == "smirnov") return e_series(N, m) * e_denominator(N, m).reciprocal();
  if (name == "ges3" || name == "ges3-corrected") return h_denominator(N, m).reciprocal();
  if (name == "ges4" || name == "banner") return h_series(N, m) * h_denominator(N, m).reciprocal();
  throw Error(ErrorCode::UnknownIdentity, "unknown identity '" + std::string(name) + "'");
}

namespace {

bool le(unsigned a, unsigned b) { return a <= b; }

/// Term of one word for the NDA/NDD identities; nullopt when the word is
/// outside the summation range.
std::optional<SymPoly> gessel_term(std::string_view name, const Letters& w, std::size_t m) {
  const std::size_t n = w.size();
  const bool ascents = name.substr(0, 4) == "ges1" || name == "ges2";
  const bool both_ends = name.substr(0, 4) == "ges1" || name.substr(0, 4) == "ges3";
  const bool corrected = name.size() > 4 && name.substr(4) == "-corrected";
  if (ascents ? has_double_ascent(w) : has_double_descent(w)) return std::nullopt;
  // ascent for NDA words is w_i <= w_{i+1}; the selected end condition is its
  // negation (descent) for ges1/ges2 and an ascent for ges3/ges4.
  auto end_ok = [&](std::size_t i) { return ascents ? !le(w[i], w[i + 1]) : le(w[i], w[i + 1]); };
  std::size_t stat = 0;
  if (both_ends) {
    if (n < 2) return std::nullopt;
    if (!end_ok(0) || !end_ok(n - 2)) return std::nullopt;
  } else if (n >= 2 && !end_ok(n - 2)) {
    return std::nullopt;
  }
  stat = ascents ? asc(w) : des(w);
  const long long e = static_cast<long long>(n) - (both_ends ? 2 : 1) - 2 * static_cast<long long>(stat);
  if (e < 0) throw Error(ErrorCode::PreconditionFailed, "negative exponent of 1 + t");
  return sym::t(m, static_cast<unsigned>(stat + (corrected ? 1 : 0))) *
         sym::one_plus_t_pow(static_cast<unsigned>(e), m) * sym::x_word(w, m);
}

}  // namespace

TruncatedSeries lhs_series(std::string_view name, std::size_t m, std::size_t N) {
  const auto names = identity_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw Error(ErrorCode::UnknownIdentity, "unknown identity '" + std::string(name) + "'");
  TruncatedSeries s = TruncatedSeries::one(N, m);
  for (std::size_t n = 1; n <= N; ++n) {
    SymPoly c;
    if (name == "banner") {
      for (const auto& w : banners(n, static_cast<unsigned>(m)))
        c += sym::t(m, static_cast<unsigned>(w.bar_count())) * sym::x_word(w.letters, m);
    } else {
      for (const auto& w : all_words(n, static_cast<unsigned>(m))) {
        if (name == "macderang") {
          const TwoLineWord tw = TwoLineWord::of(w);
          bool clash = false;
          for (std::size_t j = 0; j < n; ++j)
            if (tw.top[j] == tw.bottom[j]) clash = true;
          if (!clash) c += sym::t(m, static_cast<unsigned>(exc(tw))) * sym::x_word(w, m);
        } else if (name == "smirnov") {
          bool repeat = false;
          for (std::size_t j = 0; j + 1 < n; ++j)
            if (w[j] == w[j + 1]) repeat = true;
          if (!repeat) c += sym::t(m, static_cast<unsigned>(des(w))) * sym::x_word(w, m);
        } else if (auto term = gessel_term(name, w, m)) {
          c += *term;
        }
      }
    }
    s[n] = std::move(c);
  }
  return s;
}

IdentityVerdict compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  IdentityVerdict v;
  v.m = lhs.variables();
  v.N = lhs.degree();
  for (std::size_t k = 0; k <= std::min(lhs.degree(), rhs.degree()); ++k) {
    if (lhs[k] == rhs[k]) continue;
    v.ok = false;
    const SymPoly diff = lhs[k] - rhs[k];
    const SymMonomial& mono = diff.terms().begin()->first;
    SymPoly marker = SymPoly::monomial(mono);
    SeriesMismatch mm;
    mm.degree = k;
    mm.monomial = sym::to_string(marker);
    mm.lhs = reeskit::to_string(lhs[k].coefficient(mono));
    mm.rhs = reeskit::to_string(rhs[k].coefficient(mono));
    v.mismatch = mm;
    return v;
  }
  return v;
}

IdentityVerdict verify_identity(std::string_view name, std::size_t m, std::size_t N) {
  IdentityVerdict v = compare_series(lhs_series(name, m, N), rhs_series(name, m, N));
  v.name = std::string(name);
  return v;
}

ConvolutionVerdict gn_from_fn(std::size_t N, std::size_t m, bool corrected) {
  ConvolutionVerdict v;
  const TruncatedSeries F = lhs_series("ges4", m, N);
  const TruncatedSeries G = lhs_series(corrected ? "ges3-corrected" : "ges3", m, N);
  const TruncatedSeries conv = F * e_series(N, m).negate_z();
  for (std::size_t n = 0; n <= N; ++n)
    if (!(G[n] == conv[n])) {
      v.ok = false;
      v.degree = n;
      v.reason = "G_" + std::to_string(n) + " = " + sym::to_string(G[n]) + " but the convolution gives " +
                 sym::to_string(conv[n]);
      return v;
    }
  return v;
}

ConvolutionVerdict gmu_specialization(std::size_t N) {
  ConvolutionVerdict v;
  auto binom = [](std::size_t n, std::size_t k) {
    Integer r = 1;
    if (k > n) return Integer(0);
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (std::size_t n = 1; n <= N; ++n) {
    const unsigned letters = static_cast<unsigned>(n + 1);
    StatPolynomial lhs;
    for (const auto& w : all_words(n, letters)) {
      if (n < 2 || has_double_descent(w) || w[0] > w[1] || w[n - 2] > w[n - 1]) continue;
      const std::size_t d = des(w);
      const long long e = static_cast<long long>(n) - 2 - 2 * static_cast<long long>(d);
      lhs += stat::t_pow(static_cast<unsigned>(d + 1)) * stat::one_plus_t_pow(static_cast<unsigned>(e));
    }
    StatPolynomial rhs = stat::constant(Integer(n % 2 == 0 ? 1 : -1) * Integer(n + 1));
    for (std::size_t r = 0; r + 1 <= n; ++r) {
      StatPolynomial part;
      for (std::size_t k = 0; k + r + 1 <= n; ++k) {
        StatPolynomial words;
        for (const auto& u : all_words(n - r - k, letters)) words += stat::t_pow(static_cast<unsigned>(des(u)));
        part += stat::t_pow(static_cast<unsigned>(k), binom(n - r - 1, k)) * words;
      }
      rhs += part * (r % 2 == 0 ? binom(n + 1, r) : Integer(-binom(n + 1, r)));
    }
    if (!(lhs == rhs)) {
      v.ok = false;
      v.degree = n;
      v.reason = "at n = " + std::to_string(n) + ": " + stat::to_string(lhs) + " vs " + stat::to_string(rhs);
      return v;
    }
  }
  return v;
}

}  // namespace reeskit
