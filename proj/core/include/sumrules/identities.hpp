#pragma once

#include "sumrules/bigint.hpp"
#include "sumrules/polynomial.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace sumrules {

enum class IdentityId {
  MainSumRule,
  FallingMoment,
  MomentBell,
  GeneratingPoly,
  DeutschElizalde,
  EulerRecurrence,
  WeightedPnk,
  BinomialSumRule,
  NestedSchlomilch,
  NormalizedNested,
  BellDouble,
  BellBinomial,
  DobinskiFinite,
};

/// AS_WRITTEN evaluates the uncorrected form of a formula, CORRECTED the
/// repaired one. Identities with a single form ignore the mode.
enum class EvalMode { AsWritten, Corrected };

std::span<const IdentityId> all_identities();

/// Upper-snake tag, e.g. "MAIN_SUM_RULE".
std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view tag);

/// "as-written" / "corrected".
std::string_view to_string(EvalMode mode);
std::optional<EvalMode> parse_mode(std::string_view text);

/// Parameter names an identity needs, in canonical sweep order.
std::span<const std::string_view> required_params(IdentityId id);

struct IdentityReport {
  IdentityId id{};
  EvalMode mode = EvalMode::Corrected;
  Params params;
  Rat lhs;
  Rat rhs;
  bool equal = false;
  double elapsed_ms = 0.0;

  // GENERATING_POLY: both sides as polynomials in t; lhs/rhs hold their
  // values at t = 1 and `equal` is the coefficient-wise comparison.
  std::optional<IntPolynomial> lhs_poly;
  std::optional<IntPolynomial> rhs_poly;

  // DOBINSKI_FINITE: lhs - e * rhs. A diagnostic report never fails.
  std::optional<Real> residual;
  bool diagnostic = false;

  bool passed() const { return diagnostic || equal; }
};

/// Throws UsageError if a required parameter is missing or an unknown one
/// is present.
void check_params(IdentityId id, const Params& params);

/// True when the parameter point satisfies the identity's mathematical
/// preconditions (e.g. 0 <= r+1 <= n). Assumes check_params passed.
bool admissible(IdentityId id, const Params& params);

/// Evaluates both sides exactly.
/// Throws UsageError for missing/unknown params, DomainError when the point
/// is not admissible.
IdentityReport verify_identity(IdentityId id, EvalMode mode, const Params& params);

/// k^i via sum_{l=0}^{floor((k-1)i/k)} (-1)^l C(i,l) C(k(i-l), i).
/// Throws DomainError for k = 0.
Nat vassilev_power(unsigned k, unsigned i);

/// s(q,i) via the Schlomilch double sum over 0 <= j <= h <= q-i.
Int schlomilch_stirling1(unsigned q, unsigned i);

/// CORRECTED: sum_j <i j> C(k+j, i) (= k^i).
/// AS_WRITTEN: sum_j <i j> C(k+j, j).
Nat worpitzky_power(unsigned k, unsigned i, EvalMode mode);

/// Per-k summands of the Stirling and falling-factorial forms of the sum rule;
/// equal for every k.
Int main_sum_rule_term(unsigned n, long r, unsigned k);
Int falling_moment_term(unsigned n, long r, unsigned k);

}  // namespace sumrules
