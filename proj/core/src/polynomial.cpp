#include "reeskit/polynomial.hpp"

#include <sstream>

namespace reeskit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateDescriptor: return "DuplicateDescriptor";
    case ErrorCode::NotSemipure: return "NotSemipure";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NoUniqueMinimum: return "NoUniqueMinimum";
    case ErrorCode::NoUniqueMaximum: return "NoUniqueMaximum";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::UnknownFormula: return "UnknownFormula";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::UnknownTarget: return "UnknownTarget";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::SizeBound: return "SizeBound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InexactDivision: return "InexactDivision";
  }
  return "Unknown";
}

std::string to_string(const Integer& v) { return v.str(); }

namespace stat {

StatPolynomial one_plus_t_pow(unsigned e) {
  // Binomial expansion avoids repeated squaring of sparse maps.
  StatPolynomial out;
  Integer c = 1;
  for (unsigned k = 0; k <= e; ++k) {
    out.add_term({k, 0}, c);
    c = c * (e - k) / (k + 1);
  }
  return out;
}

namespace {
Integer ipow(const Integer& base, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}
}  // namespace

Integer evaluate(const StatPolynomial& p, const Integer& t, const Integer& q) {
  Integer sum = 0;
  for (const auto& [m, c] : p.terms()) sum += c * ipow(t, m[0]) * ipow(q, m[1]);
  return sum;
}

StatPolynomial evaluate_t(const StatPolynomial& p, const Integer& t) {
  StatPolynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term({0, m[1]}, c * ipow(t, m[0]));
  return out;
}

StatPolynomial evaluate_q(const StatPolynomial& p, const Integer& q) {
  StatPolynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term({m[0], 0}, c * ipow(q, m[1]));
  return out;
}

std::vector<Integer> t_coefficients(const StatPolynomial& p) {
  std::vector<Integer> out;
  for (const auto& [m, c] : p.terms()) {
    if (m[1] != 0) throw Error(ErrorCode::PreconditionFailed, "polynomial depends on q");
    if (out.size() <= m[0]) out.resize(m[0] + 1, 0);
    out[m[0]] = c;
  }
  return out;
}

bool is_palindromic_in_t(const StatPolynomial& p) {
  auto c = t_coefficients(p);
  if (c.empty()) return true;
  std::size_t lo = 0;
  while (c[lo] == 0) ++lo;
  std::size_t hi = c.size() - 1;
  while (lo < hi) {
    if (c[lo] != c[hi]) return false;
    ++lo;
    --hi;
  }
  return true;
}

bool is_unimodal_in_t(const StatPolynomial& p) {
  auto c = t_coefficients(p);
  std::size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  std::size_t i = lo + 1;
  while (i < c.size() && c[i] >= c[i - 1]) ++i;
  while (i < c.size() && c[i] <= c[i - 1]) ++i;
  return i >= c.size();
}

std::string to_string(const StatPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = m[0] != 0 || m[1] != 0;
    bool wrote = false;
    if (!has_var || mag != 1) {
      os << mag;
      wrote = true;
    }
    auto var = [&](const char* name, unsigned e) {
      if (e == 0) return;
      if (wrote) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      wrote = true;
    };
    var("t", m[0]);
    var("q", m[1]);
  }
  return os.str();
}

}  // namespace stat
}  // namespace reeskit
