#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reeskit/io.hpp"
#include "reeskit/polynomial.hpp"

namespace reeskit::cli {

inline constexpr int kSchemaVersion = 1;

enum class RouteKind { Formula, Shelling, Homology };
std::string_view to_string(RouteKind k);

struct Sample {
  Integer t = 1;
  Integer q = 1;
  Integer value = 0;
};

struct RouteResult {
  std::string name;
  RouteKind kind = RouteKind::Formula;
  bool computed = false;
  /// Why the route did not run (not selected, over a size bound).
  std::string skipped;
  /// Polynomial in t and q, when the route is symbolic.
  std::optional<StatPolynomial> symbolic;
  /// Values at fixed (t, q), when it is not.
  std::vector<Sample> samples;
};

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

enum class Verdict { Pass, Fail, Inconclusive };
std::string_view to_string(Verdict v);

struct VerificationReport {
  std::string target;
  Json params = Json::object();
  std::vector<RouteResult> routes;
  std::vector<Check> checks;
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  std::optional<double> wall_ms;
};

/// Compares every pair of computed routes exactly (symbolic routes are
/// evaluated at the other route's sample points) and folds in the checks.
/// Fewer than two computed routes and no checks is inconclusive.
void decide(VerificationReport& r);

Json report_to_json(const VerificationReport& r);
/// {"schema_version": 1, "ok": ..., "reports": [...]}
Json reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_text(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

/// True when no report failed.
bool all_ok(const std::vector<VerificationReport>& reports);

}  // namespace reeskit::cli
