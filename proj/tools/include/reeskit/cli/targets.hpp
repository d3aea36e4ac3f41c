#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reeskit/cli/report.hpp"
#include "reeskit/families.hpp"
#include "reeskit/homology.hpp"
#include "reeskit/labeling.hpp"
#include "reeskit/words.hpp"

namespace reeskit::cli {

enum class RouteSelection { All, Formula, Shelling, Homology };
/// Accepts "all", "formula", "shelling", "homology". Throws ParseError.
RouteSelection route_selection_from_string(std::string_view s);

/// Printed formulas as stated, or the variants consistent with homology
/// (the tree1, eq5.1 and thm7.1-first formulas and the ges1, ges3 identities
/// differ by a factor of t).
enum class FormulaVariant { Printed, Corrected };
FormulaVariant formula_variant_from_string(std::string_view s);

struct VerifyOptions {
  std::optional<std::size_t> n;
  std::optional<WeakComposition> mu;
  std::optional<unsigned> t;
  std::optional<unsigned> q;
  std::optional<std::size_t> m;
  /// Family spec of the poset for thm3.1-el (default "B:3"), and whether
  /// its minimum is removed.
  std::optional<std::string> poset;
  bool minus = false;
  RouteSelection routes = RouteSelection::All;
  FormulaVariant variant = FormulaVariant::Printed;
  HomologyBounds faces;
  EnumerationBounds elements;
  WordBounds words;
  bool timing = false;
};

std::vector<std::string> target_names();

/// Runs one verification target; some targets produce several reports, one
/// per statement. Throws UnknownTarget.
std::vector<VerificationReport> run_target(std::string_view target, const VerifyOptions& options);

/// Runs the targets concurrently and returns the reports in the order given.
std::vector<VerificationReport> run_targets(const std::vector<std::string>& targets, const VerifyOptions& options);

/// Parses "2,1,0" into a weak composition. Throws ParseError.
WeakComposition parse_composition(std::string_view s);

/// A bounded family poset together with an EL-labeling of it, when one is
/// known: "C:n", "B:n", "Bmu:...", "NC:n". Throws PreconditionFailed for
/// other families.
struct LabeledFamily {
  FinitePoset poset;
  EdgeLabeling labeling;
};
LabeledFamily labeled_family(std::string_view spec, const EnumerationBounds& bounds = {});

}  // namespace reeskit::cli
