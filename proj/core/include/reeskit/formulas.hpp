#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reeskit/families.hpp"
#include "reeskit/homology.hpp"
#include "reeskit/labeling.hpp"
#include "reeskit/polynomial.hpp"
#include "reeskit/words.hpp"

namespace reeskit {

/// Which variant of the Rees product with a t-ary tree is being counted.
///  - MaxOnly:     P has a unique maximum; counts P * T.
///  - MinAndMax:   P is bounded; counts (P * T)^-.
///  - GeneralTop:  any semipure P; counts P * T per homology dimension.
///  - GeneralPlus: P has a unique minimum; counts (P * T)^- per dimension.
enum class TreeMode { MaxOnly, MinAndMax, GeneralTop, GeneralPlus };

std::string_view to_string(TreeMode m);
/// Accepts "max-only", "min-and-max", "general-top", "general-plus".
TreeMode tree_mode_from_string(std::string_view name);

/// Betti polynomials in t keyed by the dimension of the reduced homology
/// group they describe.
struct LengthTable {
  std::map<int, StatPolynomial> by_dimension;

  StatPolynomial at(int dim) const;
  StatPolynomial total() const;
  friend bool operator==(const LengthTable& a, const LengthTable& b);
};

/// Ascent-free chain count of the tree Rees product, grouped by label word.
/// `lam_hat` is an EL-labeling of adjoin_bounds(p), verified unless
/// `trusted`. Throws ModeMismatch when p lacks the bounds the mode needs.
LengthTable betti_poly_tree_product(const FinitePoset& p, const EdgeLabeling& lam_hat, TreeMode mode,
                                    bool trusted = false);

/// The same count, obtained chain by chain from the 0/1 rank-jump sequences
/// of the second coordinate rather than from word conditions.
LengthTable betti_poly_by_partition(const FinitePoset& p, const EdgeLabeling& lam_hat, TreeMode mode);

/// Number of maximal chains of the completed tree product at a fixed t,
/// summed over rank-jump sequences (t^j chains for j jumps).
Integer partition_chain_total(const FinitePoset& p, unsigned t);

/// Stable subsets (no two consecutive integers) of {lo, ..., hi}, in
/// lexicographic order; a single empty set when lo > hi.
std::vector<std::vector<std::size_t>> stable_subsets(long long lo, long long hi);

/// Betti number of the rank-selected subposet P_T for T a set of ranks of P,
/// possibly a polynomial in q.
using RankBetti = std::function<StatPolynomial(const std::vector<std::size_t>& ranks)>;

enum class RankSelectionVariant { MaxOnly, MinAndMax, General, GeneralMin };

std::string_view to_string(RankSelectionVariant v);
/// Accepts "max", "minmax", "general", "general-min".
RankSelectionVariant rank_selection_variant_from_string(std::string_view name);

/// Sum over stable sets of rank-selected Betti numbers times powers of t and
/// 1 + t, for a pure poset of length n. Matches MaxOnly, MinAndMax,
/// GeneralTop and GeneralPlus in the top dimension.
StatPolynomial betti_poly_rank_selection(std::size_t n, const RankBetti& beta, RankSelectionVariant v);

/// Rank-selected Betti numbers from the descent sets of an EL-labeling of
/// adjoin_bounds(p).
RankBetti rank_betti_from_labeling(const FinitePoset& p, const EdgeLabeling& lam_hat, bool trusted = false);
/// Rank-selected Betti numbers from the homology of P_T.
RankBetti rank_betti_from_homology(const FinitePoset& p, const HomologyBounds& bounds = {});
/// The subspace lattice of rank n over a field with q elements, symbolic in
/// q: permutations of [n] with descent set T weighted by q^inv.
RankBetti rank_betti_subspace(std::size_t n);
/// Noncrossing partitions of [n + 1]: parking functions of length n whose
/// descent set is the complement of T in [n - 1].
RankBetti rank_betti_noncrossing(std::size_t n);

struct FormulaParams {
  std::optional<std::size_t> n;
  std::optional<WeakComposition> mu;
  std::optional<std::vector<std::size_t>> ranks;
  WordBounds bounds;
};

/// Closed-form right-hand sides by name:
///   jonsson, qan, tree1, tree2        (n)
///   eq5.1, eq5.2                      (mu)
///   eq6.3, thm7.1-first, thm7.1-second, cor7.2-first, cor7.2-second (n)
///   inv-rank                          (n, ranks)
/// and eq5.1-corrected, tree1-corrected, thm7.1-first-corrected, which drop
/// or add the factor of t by which the plain forms differ from the homology.
/// Throws UnknownFormula, or PreconditionFailed on missing parameters.
StatPolynomial formula_rhs(std::string_view name, const FormulaParams& params);
std::vector<std::string> formula_names();

}  // namespace reeskit
