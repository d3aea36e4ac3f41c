#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "reeskit/cli/targets.hpp"

namespace reeskit::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 bad input or a
/// library error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitError = 2;

/// Family spec ("B:3") or path to a poset JSON file.
FinitePoset load_poset(const std::string& spec_or_path, const EnumerationBounds& bounds = {});

struct ReesOptions {
  bool minus = false;         // remove the minimum of the first factor
  bool minus_result = false;  // remove the minimum of the product
  bool plus = false;          // append a maximum to the product
  bool hat = false;           // adjoin both bounds to the product
  bool check_el = false;      // require equal lengths and verify the Rees EL-labeling
  EnumerationBounds bounds;
};
FinitePoset cmd_rees(const std::string& p, const std::string& q, const ReesOptions& options);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};
/// Parses "4" or "2..5".
std::pair<std::size_t, std::size_t> parse_range(const std::string& s);
/// Positive compositions of n in lexicographic order.
std::vector<WeakComposition> compositions(std::size_t n);
/// Formula values over n in [lo, hi] (or over the compositions of each n for
/// the eq5.x formulas and "thm5.1"), optionally evaluated at t and q.
Table cmd_table(const std::string& name, std::size_t lo, std::size_t hi, std::optional<unsigned> t,
                std::optional<unsigned> q, FormulaVariant variant, const WordBounds& bounds = {});
std::string table_to_text(const Table& t);
std::string table_to_csv(const Table& t);
Json table_to_json(const Table& t);

/// The command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace reeskit::cli
