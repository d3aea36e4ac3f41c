#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "reeskit/error.hpp"

namespace reeskit {

using Integer = boost::multiprecision::cpp_int;

namespace detail {

inline std::array<unsigned, 2> monomial_product(const std::array<unsigned, 2>& a,
                                                const std::array<unsigned, 2>& b) {
  return {a[0] + b[0], a[1] + b[1]};
}

inline std::vector<unsigned> monomial_product(const std::vector<unsigned>& a,
                                              const std::vector<unsigned>& b) {
  std::vector<unsigned> out(std::max(a.size(), b.size()), 0U);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace detail

/// Sparse polynomial with exact integer coefficients. `Monomial` is an
/// exponent vector; only nonzero terms are stored, in monomial order.
template <class Monomial>
class SparsePolynomial {
 public:
  using monomial_type = Monomial;
  using term_map = std::map<Monomial, Integer>;

  SparsePolynomial() = default;

  static SparsePolynomial constant(const Integer& c, Monomial zero = Monomial{}) {
    SparsePolynomial p;
    if (c != 0) p.terms_.emplace(std::move(zero), c);
    return p;
  }

  static SparsePolynomial monomial(Monomial m, const Integer& c = 1) {
    SparsePolynomial p;
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
  }

  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SparsePolynomial& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator-(SparsePolynomial a) { return a *= Integer(-1); }
  friend SparsePolynomial operator*(SparsePolynomial a, const Integer& s) { return a *= s; }
  friend SparsePolynomial operator*(const Integer& s, SparsePolynomial a) { return a *= s; }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(detail::monomial_product(ma, mb), ca * cb);
    return out;
  }
  SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

  SparsePolynomial pow(unsigned e) const {
    SparsePolynomial result = constant(1, one_monomial_zero());
    SparsePolynomial base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// Divides every coefficient by `d`; throws InexactDivision if any remainder.
  SparsePolynomial exact_divide(const Integer& d) const {
    if (d == 0) throw Error(ErrorCode::InexactDivision, "division by zero");
    SparsePolynomial out;
    for (const auto& [m, c] : terms_) {
      if (c % d != 0) throw Error(ErrorCode::InexactDivision, "coefficient not divisible");
      out.terms_.emplace(m, c / d);
    }
    return out;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  // The zero monomial of the same shape as existing terms (vector monomials
  // carry their length).
  Monomial one_monomial_zero() const {
    if (terms_.empty()) return Monomial{};
    Monomial m = terms_.begin()->first;
    for (auto& e : m) e = 0;
    return m;
  }

  term_map terms_;
};

/// Polynomial in the formal variables t (index 0) and q (index 1).
using StatMonomial = std::array<unsigned, 2>;
using StatPolynomial = SparsePolynomial<StatMonomial>;

namespace stat {

inline StatPolynomial constant(const Integer& c) { return StatPolynomial::constant(c, {0, 0}); }
inline StatPolynomial t_pow(unsigned k, const Integer& c = 1) {
  return StatPolynomial::monomial({k, 0}, c);
}
inline StatPolynomial q_pow(unsigned k, const Integer& c = 1) {
  return StatPolynomial::monomial({0, k}, c);
}
inline StatPolynomial tq(unsigned tk, unsigned qk, const Integer& c = 1) {
  return StatPolynomial::monomial({tk, qk}, c);
}
/// (1+t)^e
StatPolynomial one_plus_t_pow(unsigned e);

Integer evaluate(const StatPolynomial& p, const Integer& t, const Integer& q = 1);
/// Substitutes a value for t only, leaving a polynomial in q.
StatPolynomial evaluate_t(const StatPolynomial& p, const Integer& t);
/// Substitutes a value for q only, leaving a polynomial in t.
StatPolynomial evaluate_q(const StatPolynomial& p, const Integer& q);

/// Coefficient list in t of a q-free polynomial, lowest degree first.
std::vector<Integer> t_coefficients(const StatPolynomial& p);
bool is_palindromic_in_t(const StatPolynomial& p);
bool is_unimodal_in_t(const StatPolynomial& p);

/// Human-readable form, e.g. "2*t^2*q + t".
std::string to_string(const StatPolynomial& p);

}  // namespace stat

std::string to_string(const Integer& v);

}  // namespace reeskit
