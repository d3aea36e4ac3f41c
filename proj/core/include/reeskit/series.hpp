#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reeskit/polynomial.hpp"
#include "reeskit/words.hpp"

namespace reeskit {

/// Polynomial in t and x_1..x_m; every monomial has exactly m + 1 exponents,
/// t first.
using SymMonomial = std::vector<unsigned>;
using SymPoly = SparsePolynomial<SymMonomial>;

namespace sym {

SymPoly one(std::size_t m);
SymPoly t(std::size_t m, unsigned power = 1);
/// x_i for 1 <= i <= m.
SymPoly x(std::size_t i, std::size_t m);
/// Product of x_{w_j} over the letters of w.
SymPoly x_word(const Letters& w, std::size_t m);
/// [n]_t = 1 + t + ... + t^{n-1}.
SymPoly t_integer(std::size_t n, std::size_t m);
SymPoly one_plus_t_pow(unsigned e, std::size_t m);
/// Elementary and complete homogeneous symmetric polynomials in m variables.
SymPoly e(std::size_t i, std::size_t m);
SymPoly h(std::size_t i, std::size_t m);
/// True when swapping any two variables leaves p unchanged.
bool is_symmetric(const SymPoly& p, std::size_t m);
/// Sets x_1..x_k to 1 and the remaining variables to 0; the result is a
/// polynomial in t.
StatPolynomial specialize_ones(const SymPoly& p, std::size_t k);
std::string to_string(const SymPoly& p);

}  // namespace sym

/// Power series in z truncated after degree N, with SymPoly coefficients.
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t degree, std::size_t variables);
  static TruncatedSeries one(std::size_t degree, std::size_t variables);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::size_t variables() const noexcept { return m_; }
  const SymPoly& operator[](std::size_t k) const { return coeffs_.at(k); }
  SymPoly& operator[](std::size_t k) { return coeffs_.at(k); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Requires a constant term of 1 or -1; throws PreconditionFailed otherwise.
  TruncatedSeries reciprocal() const;
  /// f(z) -> f(-z).
  TruncatedSeries negate_z() const;
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::size_t m_;
  std::vector<SymPoly> coeffs_;
};

/// sum_i e_i z^i and sum_i h_i z^i, and the denominators
/// 1 - sum_{i>=2} t [i-1]_t e_i z^i, 1 - sum_{i>=2} t [i-1]_t h_i z^i.
TruncatedSeries e_series(std::size_t N, std::size_t m);
TruncatedSeries h_series(std::size_t N, std::size_t m);
TruncatedSeries e_denominator(std::size_t N, std::size_t m);
TruncatedSeries h_denominator(std::size_t N, std::size_t m);

/// Identity names: ges1, ges2, ges3, ges4, banner, macderang, smirnov, and
/// ges1-corrected, ges3-corrected whose left sides carry one more power of
/// t in every term.
std::vector<std::string> identity_names();

/// Closed-form side. Throws UnknownIdentity.
TruncatedSeries rhs_series(std::string_view name, std::size_t m, std::size_t N);
/// Enumerated side over words in [m]^n for n <= N. Throws UnknownIdentity.
TruncatedSeries lhs_series(std::string_view name, std::size_t m, std::size_t N);

struct SeriesMismatch {
  std::size_t degree = 0;
  std::string monomial;
  std::string lhs;
  std::string rhs;
};

struct IdentityVerdict {
  bool ok = true;
  std::string name;
  std::size_t m = 0;
  std::size_t N = 0;
  std::optional<SeriesMismatch> mismatch;
};

/// Compares the two series coefficient by coefficient (first difference
/// reported).
IdentityVerdict compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
IdentityVerdict verify_identity(std::string_view name, std::size_t m, std::size_t N);

struct ConvolutionVerdict {
  bool ok = true;
  std::string reason;
  /// First degree at which the check failed, if any.
  std::optional<std::size_t> degree;
};

/// G_n = sum_r (-1)^r e_r F_{n-r} for n <= N in m variables, where F and G
/// are enumerated from the ges4 and ges3 (or ges3-corrected) word classes.
ConvolutionVerdict gn_from_fn(std::size_t N, std::size_t m, bool corrected = false);

/// For 1 <= n <= N: sum over weak compositions mu of n into n + 1 parts of
///   sum_{w in S_mu, no double descent, w_1 <= w_2, w_{n-1} <= w_n} t^{des+1} (1+t)^{n-2-2des}
/// equals (-1)^n (n+1) + sum_r (-1)^r C(n+1, r) sum_k C(n-r-1, k) t^k sum_{[n+1]^{n-r-k}} t^des,
/// the specialization of the corrected convolution at x_1 = ... = x_{n+1} = 1.
ConvolutionVerdict gmu_specialization(std::size_t N);

}  // namespace reeskit
