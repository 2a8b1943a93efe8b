#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "granulex/classes.hpp"
#include "granulex/measures.hpp"
#include "granulex/morphisms.hpp"
#include "granulex/space.hpp"
#include "granulex/verify.hpp"

namespace granulex {

/// Key order is preserved so serialized output is stable.
using Json = nlohmann::ordered_json;

/// {"universe": ["1","2"], "blocks": [["1"],["2"]]} with blocks in canonical
/// order. Input accepts blocks and block elements in any order; the universe
/// array fixes element indices.
Json space_to_json(const ApproximationSpace& space);
ApproximationSpace space_from_json(const Json& json);

/// Read a space from a JSON file; domain_error on parse or validation
/// failure.
ApproximationSpace load_space(const std::string& path);

/// Labels of the members of s, in index order.
Json set_to_json(const ElementSet& s, const Universe& universe);

/// {"m": 9, "classes": [{"lower": [...], "upper": [...], "count": "4"}, ...]}
/// with counts as decimal strings. Member subsets are attached when present
/// and requested.
Json profile_to_json(const ClassProfile& profile, const Universe& universe,
                     bool include_members = false);

/// {"n": ..., "m": "...", "h_classical": ..., "g_classical": ...,
///  "h_new": ..., "g_new": ...} with doubles at 12 significant digits.
Json measure_report_to_json(const MeasureReport& report);

/// [{"count": "...", "log2_count": ...}, ...] aligned with profile.classes.
Json exact_terms_json(const ClassProfile& profile);

/// {"kind": ..., "verdict": ..., "g_source": ..., "g_target": ...}
Json comparison_to_json(MorphismKind kind, const ComparisonVerdict& verdict);

/// Report list for verify --json. Deterministic: wall-clock timings are
/// deliberately not serialized.
Json reports_to_json(const std::vector<TheoremReport>& reports);

}  // namespace granulex
