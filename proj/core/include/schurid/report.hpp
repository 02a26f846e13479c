#pragma once

// Structured documents for verification results. JSON is canonical; CSV and
// text are projections of the same document.

#include <nlohmann/json.hpp>

#include <string>

#include "schurid/haar.hpp"
#include "schurid/identity.hpp"
#include "schurid/measures.hpp"
#include "schurid/sampling.hpp"
#include "schurid/tracked_real.hpp"

namespace schurid {

using Json = nlohmann::ordered_json;

/// Without timing the document is a pure function of the inputs.
Json to_json(const VerificationReport& r, bool include_timing = false);
/// {"value": decimal string, "abs_error": decimal string rounded up}.
Json to_json(const TrackedReal& x, int digits);
Json to_json(const ZBracket& z);
Json to_json(const MCEstimate& e);
Json to_json(const ConvergenceTable& t, int digits);
Json to_json(const SamplerCheck& c);

/// {"columns": [...], "rows": [[...], ...]} tables that the CSV projection uses.
Json failure_table(const VerificationReport& r);
Json convergence_table(const ConvergenceTable& t, int digits);
Json frequency_table(const SamplerCheck& c);

/// Pretty JSON, two-space indent, trailing newline.
std::string render_json(const Json& doc);
/// The document's "table" member as CSV; documents without one render as
/// key,value rows of their scalar leaves.
std::string render_csv(const Json& doc);
/// One "path: value" line per scalar leaf.
std::string render_text(const Json& doc);

}  // namespace schurid
