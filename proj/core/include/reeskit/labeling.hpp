#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reeskit/families.hpp"
#include "reeskit/poset.hpp"

namespace reeskit {

/// A label is a flat integer tuple whose layout follows its LabelPoset:
/// TotalOrder(k) uses one entry in 1..k, Product concatenates, and
/// AdjoinBottom prepends a flag (0 for the new bottom, 1 otherwise).
using Label = std::vector<int>;

class LabelPoset {
 public:
  enum class Kind { TotalOrder, Product, AdjoinBottom };

  static LabelPoset total_order(std::size_t size);
  static LabelPoset product(const LabelPoset& a, const LabelPoset& b);
  static LabelPoset adjoin_bottom(const LabelPoset& a);

  Kind kind() const noexcept;
  /// Number of integers in a label.
  std::size_t width() const noexcept;
  /// Size of the total order (TotalOrder only).
  std::size_t size() const;
  /// Components of Product (first, second) or the wrapped poset of AdjoinBottom.
  LabelPoset first() const;
  LabelPoset second() const;

  bool contains(std::span<const int> label) const;
  bool leq(std::span<const int> a, std::span<const int> b) const;
  bool less(std::span<const int> a, std::span<const int> b) const;

  /// The new bottom of an AdjoinBottom poset, and the embedding of an
  /// original label into it.
  Label bottom() const;
  Label lift(const Label& inner) const;
  /// Concatenates component labels of a Product.
  static Label pair(const Label& a, const Label& b);

  std::string format(std::span<const int> label) const;
  /// Structural description, e.g. "Total(3)", "Product(Total(3),Bottom(Total(1)))".
  std::string describe() const;

  friend bool operator==(const LabelPoset& a, const LabelPoset& b);

 private:
  struct Node;
  explicit LabelPoset(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using LabelId = std::uint32_t;

/// Edge labeling of a specific poset. Labels are interned; comparisons
/// between interned labels are answered from a precomputed table.
class EdgeLabeling {
 public:
  /// Builds the labeling by calling `f` on every cover of `p`. Throws
  /// PreconditionFailed if a label is not an element of `target`.
  static EdgeLabeling build(const FinitePoset& p, LabelPoset target,
                            const std::function<Label(Element, Element)>& f);
  /// From an explicit map; throws PreconditionFailed if not total on Cov(p).
  static EdgeLabeling from_map(const FinitePoset& p, LabelPoset target,
                               const std::map<Cover, Label>& labels);

  const LabelPoset& target() const noexcept { return target_; }
  /// Throws IndexOutOfRange if (x, y) is not a cover.
  const Label& label(Element x, Element y) const { return distinct_[id(x, y)]; }
  LabelId id(Element x, Element y) const;
  const Label& label_of(LabelId id) const { return distinct_.at(id); }
  std::size_t distinct_count() const noexcept { return distinct_.size(); }
  bool id_leq(LabelId a, LabelId b) const { return leq_[a * distinct_.size() + b] != 0; }

  const std::vector<Cover>& covers() const noexcept { return covers_; }

 private:
  LabelPoset target_ = LabelPoset::total_order(1);
  std::vector<Cover> covers_;
  std::vector<LabelId> ids_;
  std::vector<Label> distinct_;
  std::vector<unsigned char> leq_;
};

enum class LexOrder { Before, NotBefore, Incomparable };

/// Lexicographic comparison: decided at the first differing index, a proper
/// prefix comes first, equal sequences are NotBefore.
LexOrder seq_lex_less(std::span<const Label> a, std::span<const Label> b, const LabelPoset& L);
LexOrder seq_lex_less_ids(std::span<const LabelId> a, std::span<const LabelId> b,
                          const EdgeLabeling& lam);

struct ElVerdict {
  bool ok = true;
  std::optional<Element> x;
  std::optional<Element> y;
  std::string reason;
  /// Maximal chains of the offending interval (element indices).
  std::vector<std::vector<Element>> chains;
};

/// Checks every closed interval for a unique weakly increasing maximal chain
/// that is strictly lexicographically first. Throws NoUniqueMinimum /
/// NoUniqueMaximum if `phat` is not bounded.
ElVerdict is_el_labeling(const FinitePoset& phat, const EdgeLabeling& lam);
/// EL condition on [0, m] for every maximal m. Throws NoUniqueMinimum.
ElVerdict is_semi_el_labeling(const FinitePoset& p, const EdgeLabeling& lam);

struct ChainDescents {
  std::vector<Element> elements;
  std::vector<LabelId> labels;
  /// 1-based positions i with label_i not <= label_{i+1}.
  std::vector<std::size_t> descents;
};

struct DescentProfile {
  std::vector<ChainDescents> chains;
  std::map<std::vector<std::size_t>, std::uint64_t> counts;

  std::uint64_t count(const std::vector<std::size_t>& descent_set) const;
  /// Chains whose descent set is every position (ascent free).
  std::uint64_t ascent_free_count(std::size_t chain_length) const;
};

DescentProfile descent_profile(const FinitePoset& phat, const EdgeLabeling& lam);

/// c(S) from the descent profile; S is a set of ranks of `phat` strictly
/// between 0 and its length. Verifies the labeling unless `trusted`.
std::uint64_t rank_selected_betti(const FinitePoset& phat, const EdgeLabeling& lam,
                                  const std::vector<std::size_t>& S, bool trusted = false);

struct ReesLabeled {
  FinitePoset hat;  // adjoin_bounds(rees_product(p1, p2))
  EdgeLabeling labeling;
};

/// The Rees-product labeling on the completed Rees product. `lam1` labels
/// adjoin_bounds(p1), `lam2` labels p2 (which needs a unique minimum).
/// Throws LengthMismatch; with `verify`, PreconditionFailed when lam1 is
/// not EL or lam2 is not semi-EL.
ReesLabeled rees_el_labeling(const FinitePoset& p1, const EdgeLabeling& lam1,
                             const FinitePoset& p2, const EdgeLabeling& lam2, bool verify = true);

/// Edge raising coordinate i gets label i, as a labeling of chain_product(mu).
EdgeLabeling chain_product_labeling(const FinitePoset& bmu, const WeakComposition& mu);
/// B_n by the index of the added element.
EdgeLabeling boolean_labeling(const FinitePoset& bn, unsigned n);
/// Every edge labeled 1; a semi-EL labeling of chains and trees.
EdgeLabeling constant_labeling(const FinitePoset& p);
/// Merging blocks B, B' with min B < min B' is labeled min B'.
EdgeLabeling noncrossing_labeling(const FinitePoset& nc, unsigned n);

/// For a bounded p with a TotalOrder(k) labeling: labeling of
/// adjoin_bounds(p) with the bottom edge 1, original edges shifted by one,
/// and the top edge k + 2.
EdgeLabeling hat_extension(const FinitePoset& p, const EdgeLabeling& lam);
/// For a bounded p with a TotalOrder(k) labeling: labeling of
/// adjoin_bounds(remove_min(p)) where the new minimum plays the role of the
/// removed one and the top edge gets k + 1.
EdgeLabeling hat_of_minus(const FinitePoset& p, const EdgeLabeling& lam);

}  // namespace reeskit
