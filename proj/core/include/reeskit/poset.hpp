#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reeskit/error.hpp"

namespace reeskit {

using Element = std::size_t;
using Cover = std::pair<Element, Element>;

/// A chain x_0 < x_1 < ... < x_k of element indices. `saturated` records
/// whether consecutive entries are cover pairs.
struct ChainInPoset {
  std::vector<Element> elements;
  bool saturated = false;

  std::size_t length() const noexcept { return elements.empty() ? 0 : elements.size() - 1; }
  friend bool operator==(const ChainInPoset&, const ChainInPoset&) = default;
};

struct FromCoversOptions {
  /// Silently drop covers implied by composition instead of raising NotReduced.
  bool auto_reduce = false;
};

/// Finite poset stored as its (transitively reduced) cover relation over
/// opaque, unique element descriptors. Immutable after construction and safe
/// to share across threads.
class FinitePoset {
 public:
  FinitePoset();

  /// Throws CycleDetected, NotReduced, IndexOutOfRange or DuplicateDescriptor.
  static FinitePoset from_covers(std::vector<std::string> descriptors, std::vector<Cover> covers,
                                 FromCoversOptions options = {});

  std::size_t size() const noexcept { return descriptors_.size(); }
  bool empty() const noexcept { return descriptors_.empty(); }

  const std::string& descriptor(Element x) const { return descriptors_.at(x); }
  const std::vector<std::string>& descriptors() const noexcept { return descriptors_; }
  std::optional<Element> index_of(std::string_view descriptor) const;

  /// Covers sorted by (lower, upper).
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  const std::vector<Element>& upper_covers(Element x) const { return up_.at(x); }
  const std::vector<Element>& lower_covers(Element x) const { return down_.at(x); }
  bool is_cover(Element x, Element y) const;

  bool leq(Element x, Element y) const;
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  /// Elements in an order compatible with the partial order.
  const std::vector<Element>& topological_order() const noexcept { return topo_; }

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;
  std::optional<Element> unique_minimum() const;
  std::optional<Element> unique_maximum() const;

  bool is_semipure() const noexcept { return semipure_; }
  bool is_pure() const noexcept { return pure_; }
  bool is_bounded() const { return unique_minimum().has_value() && unique_maximum().has_value(); }

  /// Length of a maximal chain below x. Throws NotSemipure.
  std::size_t rank(Element x) const;
  /// Longest chain length (0 for the single point; 0 for the empty poset).
  std::size_t length() const noexcept { return length_; }
  /// Longest chain from a minimal element up to x.
  std::size_t height(Element x) const { return max_below_.at(x); }

  /// Visits every maximal chain once, lexicographically by element index.
  /// Returning false from the visitor stops the enumeration.
  void for_each_maximal_chain(const std::function<bool(const ChainInPoset&)>& visit) const;
  std::vector<ChainInPoset> maximal_chains() const;
  std::uint64_t count_maximal_chains() const;

  /// Saturated chains from x to y (the maximal chains of [x, y]).
  void for_each_saturated_chain(Element x, Element y,
                                const std::function<void(const std::vector<Element>&)>& visit) const;

  /// Möbius function of the closed interval [x, y]; throws NotComparable.
  long long mobius(Element x, Element y) const;

 private:
  struct Reachability;

  void finish_construction();
  const Reachability& reachability() const;

  std::vector<std::string> descriptors_;
  std::vector<Cover> covers_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<Element> topo_;
  std::vector<std::size_t> min_below_;
  std::vector<std::size_t> max_below_;
  std::unordered_map<std::string, Element> index_;
  bool semipure_ = true;
  bool pure_ = true;
  std::size_t length_ = 0;
  std::shared_ptr<Reachability> reach_;
};

/// The poset with a fresh minimum (index 0) and a fresh maximum (last index)
/// adjoined unconditionally; original element i becomes i + 1.
FinitePoset adjoin_bounds(const FinitePoset& p);
/// Removes the unique minimum; throws NoUniqueMinimum. Indices above it shift down.
FinitePoset remove_min(const FinitePoset& p);
/// Removes the unique maximum; throws NoUniqueMaximum.
FinitePoset remove_max(const FinitePoset& p);
/// Appends a maximum (last index) above all maximal elements.
FinitePoset adjoin_max(const FinitePoset& p);
/// Prepends a minimum (index 0) below all minimal elements.
FinitePoset adjoin_min(const FinitePoset& p);

/// Pairs (x, y) with rank(x) >= rank(y). Throws NotSemipure.
FinitePoset rees_product(const FinitePoset& p, const FinitePoset& q);
/// Descriptor used by rees_product for the pair (x, y).
std::string pair_descriptor(std::string_view a, std::string_view b);

/// Induced subposet on the ranks in `ranks`, with covers recomputed between
/// consecutive selected ranks. Throws NotPure.
FinitePoset rank_selected(const FinitePoset& p, std::span<const std::size_t> ranks);

/// Induced subposet on the closed interval [x, y].
FinitePoset closed_interval(const FinitePoset& p, Element x, Element y);
/// Induced subposet on an arbitrary subset (covers recomputed). Keeps the
/// given order of elements.
FinitePoset induced_subposet(const FinitePoset& p, std::span<const Element> elements);

/// Brute-force isomorphism test for desk-scale posets.
bool are_isomorphic(const FinitePoset& a, const FinitePoset& b);

}  // namespace reeskit
