#pragma once

#include "sumrules/bounds.hpp"
#include "sumrules/identities.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace sumrules::cli {

struct RunSummary;

enum class Format { Plain, Json, Csv };

std::optional<Format> parse_format(std::string_view text);

using Json = nlohmann::ordered_json;

/// Rounds to 17 significant digits, the precision bound reports carry.
double to_double17(const Real& value);

/// Schema: identity, mode, params, lhs, rhs, equal, elapsed_ms, plus
/// lhs_coefficients/rhs_coefficients for polynomial identities and
/// residual/diagnostic for diagnostic ones. Exact values are decimal strings.
Json to_json(const IdentityReport& report);

/// Schema: bound, params, exact, bound_value, satisfied, slack, and for the
/// sandwich lower/lower_slack. Log-domain floats; null marks an infinite slack.
Json to_json(const BoundReport& report);

Json to_json(const RunSummary& summary);

/// "n=3 r=0" / "n=3;r=0"
std::string params_text(const Params& params, char separator);

std::string plain_line(const IdentityReport& report);
std::string csv_header_identity();
std::string csv_line(const IdentityReport& report);

std::string plain_line(const BoundReport& report);
std::string csv_header_bound();
std::string csv_line(const BoundReport& report);

std::string plain_line(const RunSummary& summary);

/// 17 significant digits, for text output of log-domain values.
std::string format17(const Real& value);

}  // namespace sumrules::cli
