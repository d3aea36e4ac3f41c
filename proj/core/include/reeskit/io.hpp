#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "reeskit/homology.hpp"
#include "reeskit/labeling.hpp"
#include "reeskit/poset.hpp"
#include "reeskit/series.hpp"

namespace reeskit {

using Json = nlohmann::ordered_json;

/// {"elements": [...], "covers": [[i, j], ...]} with elements sorted by
/// (height, descriptor) and covers sorted.
Json poset_to_json(const FinitePoset& p);
/// Validates structure, acyclicity and reduction. Throws ParseError or the
/// errors of FinitePoset::from_covers.
FinitePoset poset_from_json(const Json& j, FromCoversOptions options = {});
FinitePoset poset_from_json_text(std::string_view text, FromCoversOptions options = {});

/// {"kind": "total", "size": k}, {"kind": "product", "first": .., "second": ..}
/// or {"kind": "bottom", "inner": ..}.
Json label_poset_to_json(const LabelPoset& L);
LabelPoset label_poset_from_json(const Json& j);

/// {"target": <label poset>, "labels": {"[\"x\",\"y\"]": [..], ...}}: each
/// key is the JSON encoding of the descriptor pair of a cover.
Json labeling_to_json(const FinitePoset& p, const EdgeLabeling& lam);
EdgeLabeling labeling_from_json(const FinitePoset& p, const Json& j);

Json betti_to_json(const BettiVector& b);
Json identity_verdict_to_json(const IdentityVerdict& v);

}  // namespace reeskit
