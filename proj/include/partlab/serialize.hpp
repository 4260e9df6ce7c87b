#pragma once

#include <string>

#include "json.hpp"
#include "partlab/bijections.hpp"
#include "partlab/qseries.hpp"
#include "partlab/verification.hpp"

namespace partlab {

using Json = nlohmann::ordered_json;

/// Direction, k, input, per-step decomposition/digits and emitted parts,
/// output, and weight accounting.
Json to_json(const BijectionTrace& trace);

/// Schema: theorem, k, range, rows[], bijection_stats, threshold_finding, verdict.
Json to_json(const VerificationReport& report);

/// One line per n: n,lhs,rhs,equal,counted,<detail columns>.
std::string to_csv(const VerificationReport& report);

/// "n,coefficient" lines.
std::string series_to_csv(const Series& s);
/// Array of decimal-string coefficients.
Json series_to_json(const Series& s);

}  // namespace partlab
