#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reeskit/polynomial.hpp"
#include "reeskit/poset.hpp"

namespace reeskit {

struct HomologyBounds {
  /// Total number of faces, the empty face included.
  std::uint64_t max_faces = 200'000;
};

/// Every chain of a poset, graded by dimension. A k-face is a chain of k + 1
/// elements stored as a sorted tuple of element indices; faces of each
/// dimension are kept in lexicographic order.
class OrderComplex {
 public:
  /// Dimension of the largest face; -1 for the complex whose only face is empty.
  int dimension() const noexcept { return static_cast<int>(flat_.size()) - 2; }
  /// Number of k-faces for k >= -1.
  std::size_t count(int k) const;
  std::size_t total_faces() const;
  /// f_{-1}, f_0, ..., f_d.
  std::vector<std::size_t> f_vector() const;
  std::span<const Element> face(int k, std::size_t i) const;
  std::vector<std::vector<Element>> faces(int k) const;
  /// Position of a sorted tuple among the faces of its dimension.
  std::optional<std::size_t> find(std::span<const Element> face) const;

 private:
  friend OrderComplex order_complex(const FinitePoset& p, const HomologyBounds& bounds);
  std::vector<std::vector<Element>> flat_;  // flat_[k + 1]: k-faces, k + 1 entries each
};

/// Number of chains of p including the empty one (saturating at UINT64_MAX).
std::uint64_t count_faces(const FinitePoset& p);

/// Throws SizeBound when count_faces(p) exceeds the bound.
OrderComplex order_complex(const FinitePoset& p, const HomologyBounds& bounds = {});

struct BettiVector {
  /// Reduced Betti numbers over Q; entry k + 1 holds the value in dimension k.
  std::vector<std::uint64_t> rational;
  std::optional<std::vector<std::uint64_t>> mod2;
  std::optional<std::vector<std::uint64_t>> mod3;
  /// Torsion coefficients of integral reduced homology per dimension (same
  /// indexing), present when a Smith normal form was requested.
  std::optional<std::vector<std::vector<Integer>>> torsion;

  std::uint64_t at(int k) const;
  /// Largest k with a nonzero rational Betti number, if any.
  std::optional<int> top_nonzero() const;
  long long alternating_sum() const;
};

struct BettiOptions {
  HomologyBounds bounds;
  bool field_ranks = true;
  bool smith = false;
};

/// Reduced homology of the order complex of p. The empty poset has
/// reduced Betti number 1 in dimension -1.
BettiVector betti(const FinitePoset& p, const BettiOptions& options = {});

/// Sum over k >= -1 of (-1)^k f_k.
long long reduced_euler(const FinitePoset& p, const HomologyBounds& bounds = {});

struct SphericityVerdict {
  bool ok = false;
  std::string reason;
  BettiVector betti;
};

/// Rational homology concentrated in `expected_dim`, and the mod-2 and
/// mod-3 Betti numbers agree with the rational ones.
SphericityVerdict is_spherical(const FinitePoset& p, int expected_dim, const HomologyBounds& bounds = {});

/// Rank over Q (prime == 0) or over F_prime of the boundary map from
/// k-faces to (k-1)-faces, for k >= 0.
std::size_t boundary_rank(const OrderComplex& c, int k, unsigned prime = 0);

/// Elementary divisors of an integer matrix given densely as rows.
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m);

}  // namespace reeskit
