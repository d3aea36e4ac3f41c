#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "reeskit/polynomial.hpp"
#include "reeskit/poset.hpp"

namespace reeskit {

/// Parts may be zero; n is the sum of the parts.
using WeakComposition = std::vector<unsigned>;

struct EnumerationBounds {
  unsigned boolean_rank = 12;
  std::size_t elements = 5000;
};

/// q = p^e, validated on construction.
struct PrimePower {
  unsigned q = 2;
  unsigned p = 2;
  unsigned e = 1;

  /// Throws NotPrimePower.
  static PrimePower of(unsigned q);
};

/// Arithmetic tables for the field with q elements, elements encoded 0..q-1
/// as base-p coefficient vectors of a polynomial modulo an irreducible.
class FiniteField {
 public:
  explicit FiniteField(PrimePower q);

  unsigned order() const noexcept { return q_.q; }
  unsigned add(unsigned a, unsigned b) const { return add_[a * q_.q + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_.q + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned inv(unsigned a) const;

 private:
  PrimePower q_;
  std::vector<unsigned> add_;
  std::vector<unsigned> mul_;
  std::vector<unsigned> neg_;
  std::vector<unsigned> inv_;
};

/// C_n: n + 1 elements "0" < ... < "n".
FinitePoset chain(std::size_t n);
/// B_n: subsets of [n] under inclusion, descriptors "{}", "{1,3}", ...
FinitePoset boolean(unsigned n, const EnumerationBounds& bounds = {});
/// B_mu: product of chains C_{mu_i}, descriptors "[x_1,...,x_k]".
FinitePoset chain_product(const WeakComposition& mu, const EnumerationBounds& bounds = {});
/// B_n(q): subspaces of F_q^n given by reduced row-echelon bases.
FinitePoset subspace_lattice(unsigned n, unsigned q, const EnumerationBounds& bounds = {});
/// T_{t,n}: words over [t] of length at most n under prefix order; the root
/// is "^".
FinitePoset tary_tree(unsigned t, unsigned n, const EnumerationBounds& bounds = {});
/// NC_n: noncrossing partitions of [n] under reverse refinement, blocks
/// sorted by minimum, e.g. "1,4|2,3".
FinitePoset noncrossing(unsigned n, const EnumerationBounds& bounds = {});

/// Factory for "C:n", "B:n", "Bmu:2,1", "Bq:n,q", "T:t,n", "NC:n". Throws
/// ParseError on malformed input.
FinitePoset family_from_spec(std::string_view spec, const EnumerationBounds& bounds = {});

/// Gaussian binomial coefficient [n choose k]_q evaluated at an integer q.
Integer gaussian_binomial(unsigned n, unsigned k, unsigned q);
Integer catalan(unsigned n);

}  // namespace reeskit
