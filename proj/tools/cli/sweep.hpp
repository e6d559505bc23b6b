#pragma once

#include "sumrules/identities.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sumrules::cli {

/// Integer bound that may reference an earlier parameter: `7`, `n`, `n-1`, `r+1`.
struct BoundExpr {
  std::optional<std::string> param;
  long long offset = 0;

  long long resolve(const Params& outer) const;
};

/// One parameter's values: a union of inclusive segments `a..b` or single values.
struct ParamRange {
  std::string name;
  std::vector<std::pair<BoundExpr, BoundExpr>> segments;
};

/// Parses "n=1..10,r=0..n-1" or "n=10,50,100,200". A bare value after a
/// parameter's segment extends that parameter. Upper bounds may carry a
/// "to:" prefix. Throws UsageError on malformed text, duplicate names,
/// references to unknown or later parameters, or a constant empty range.
std::vector<ParamRange> parse_ranges(std::string_view text);

/// Cartesian expansion in lexicographic order (first parameter outermost),
/// resolving dependent bounds per outer value. Values within a parameter are
/// sorted and deduplicated. Throws ResourceLimitError past max_points.
std::vector<Params> expand(const std::vector<ParamRange>& ranges, std::size_t max_points = 1'000'000);

struct SweepSpec {
  IdentityId id{};
  EvalMode mode = EvalMode::Corrected;
  std::vector<ParamRange> ranges;
  unsigned parallelism = 1;
};

struct RunSummary {
  std::size_t total = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  /// Points outside the identity's domain, excluded from `total`.
  std::size_t skipped = 0;
  std::optional<nlohmann::ordered_json> first_failure;
  double wall_ms = 0.0;

  int exit_code() const { return failures == 0 ? 0 : 1; }
};

struct SweepResult {
  std::vector<IdentityReport> reports;  // lexicographic parameter order
  RunSummary summary;
};

/// Checks that the ranges name exactly the identity's parameters.
void validate(const SweepSpec& spec);

/// Largest absolute parameter value a sweep may request for an identity.
long long parameter_cap(IdentityId id);

/// Evaluates every admissible point, fanning out to `parallelism` workers.
/// Report order is independent of completion order. Throws UsageError when
/// the spec is invalid or no point is admissible, ResourceLimitError past
/// the parameter cap.
SweepResult run_sweep(const SweepSpec& spec);

}  // namespace sumrules::cli
