#include "sumrules/identities.hpp"

#include "sumrules/combinat.hpp"
#include "sumrules/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <functional>

#include <boost/math/constants/constants.hpp>

namespace sumrules {
namespace {

struct IdentityInfo {
  IdentityId id;
  std::string_view tag;
  std::span<const std::string_view> params;
};

constexpr std::array<std::string_view, 2> kNR{"n", "r"};
constexpr std::array<std::string_view, 2> kNQ{"n", "q"};
constexpr std::array<std::string_view, 2> kNK{"n", "k"};
constexpr std::array<std::string_view, 1> kN{"n"};
constexpr std::array<std::string_view, 1> kQ{"q"};

constexpr std::array<IdentityInfo, 13> kIdentities{{
    {IdentityId::MainSumRule, "MAIN_SUM_RULE", kNR},
    {IdentityId::FallingMoment, "FALLING_MOMENT", kNR},
    {IdentityId::MomentBell, "MOMENT_BELL", kNQ},
    {IdentityId::GeneratingPoly, "GENERATING_POLY", kN},
    {IdentityId::DeutschElizalde, "DEUTSCH_ELIZALDE", kN},
    {IdentityId::EulerRecurrence, "EULER_RECURRENCE", kN},
    {IdentityId::WeightedPnk, "WEIGHTED_PNK", kNK},
    {IdentityId::BinomialSumRule, "BINOMIAL_SUM_RULE", kNR},
    {IdentityId::NestedSchlomilch, "NESTED_SCHLOMILCH", kNR},
    {IdentityId::NormalizedNested, "NORMALIZED_NESTED", kNR},
    {IdentityId::BellDouble, "BELL_DOUBLE", kQ},
    {IdentityId::BellBinomial, "BELL_BINOMIAL", kNQ},
    {IdentityId::DobinskiFinite, "DOBINSKI_FINITE", kQ},
}};

constexpr std::array<IdentityId, 13> kAllIds = [] {
  std::array<IdentityId, 13> ids{};
  for (std::size_t i = 0; i < kIdentities.size(); ++i) ids[i] = kIdentities[i].id;
  return ids;
}();

const IdentityInfo& info(IdentityId id) {
  return *std::find_if(kIdentities.begin(), kIdentities.end(), [id](const auto& e) { return e.id == id; });
}

long long param(const Params& params, const char* name) { return params.at(name); }

// k^i for the Vassilev-expanded sums; the k = 0 summand is the direct power.
Int power_by_vassilev(unsigned k, unsigned i) {
  if (k == 0) return Int(i == 0 ? 1 : 0);
  return vassilev_power(k, i);
}

// base^exponent replaced by its Vassilev expansion, with a configurable lower
// index in the second binomial (the uncorrected normalized form uses a
// different one). base = 0 is evaluated directly.
Int vassilev_expansion(long base, long exponent, long lower) {
  if (base == 0) return Int(exponent == 0 ? 1 : 0);
  Int acc = 0;
  const long upper = (base - 1) * exponent / base;
  for (long t = 0; t <= upper; ++t) {
    Int term = binomial_signed(exponent, t) * binomial_signed(base * (exponent - t), lower);
    if (t % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

// Signed j-sum of the Schlomilch expression for fixed h, before the 1/h!:
// sum_j (-1)^{j+h} C(h,j) C(r+h, r+1-i+h) C(2r+2-i, r+1-i-h) P(h-j).
Int schlomilch_h_sum(long r, long i, long h, const std::function<Int(long base)>& power_of) {
  const Int outer = binomial_signed(r + h, r + 1 - i + h) * binomial_signed(2 * r + 2 - i, r + 1 - i - h);
  if (outer == 0) return Int(0);
  Int acc = 0;
  for (long j = 0; j <= h; ++j) {
    Int term = binomial_signed(h, j) * power_of(h - j);
    if ((j + h) % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc * outer;
}

Int divexact(Int value, const Int& divisor) {
  if (!mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()))
    throw std::logic_error("Schlomilch j-sum not divisible by h!");
  mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  return value;
}

// The Schlomilch sum for s(r+1,i) with (h-j)^N re-expanded by Vassilev.
// with_factorial restores the 1/h! missing from the uncorrected forms;
// lower_index(h) picks the second binomial's lower index in the t-expansion.
Rat nested_schlomilch_factor(long r, long i, bool with_factorial, const std::function<long(long h)>& lower_index) {
  Rat acc = 0;
  for (long h = 0; h <= r + 1 - i; ++h) {
    const long exponent = r + 1 - i + h;
    const long lower = lower_index(h);
    Int jsum = schlomilch_h_sum(r, i, h, [&](long base) { return vassilev_expansion(base, exponent, lower); });
    if (with_factorial) acc += ratio(jsum, factorial(static_cast<unsigned>(h)));
    else acc += Rat(jsum);
  }
  return acc;
}

// sum_{m=0}^{len} (-1)^m / m!
Rat alternating_exp_partial(unsigned len) {
  Rat acc = 0;
  for (unsigned m = 0; m <= len; ++m) {
    Rat term = ratio(Int(1), factorial(m));
    if (m % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

void evaluate(IdentityReport& rep) {
  const Params& p = rep.params;
  const bool corrected = rep.mode == EvalMode::Corrected;
  switch (rep.id) {
    case IdentityId::MainSumRule: {
      const auto n = static_cast<unsigned>(param(p, "n"));
      const long r = static_cast<long>(param(p, "r"));
      Int lhs = 0;
      for (unsigned k = 0; k <= n; ++k) lhs += main_sum_rule_term(n, r, k);
      rep.lhs = Rat(lhs);
      rep.rhs = Rat(factorial(n));
      break;
    }
    case IdentityId::FallingMoment: {
      const auto n = static_cast<unsigned>(param(p, "n"));
      const long r = static_cast<long>(param(p, "r"));
      Int lhs = 0;
      for (unsigned k = 0; k <= n; ++k) lhs += falling_moment_term(n, r, k);
      rep.lhs = Rat(lhs);
      rep.rhs = Rat(factorial(n));
      break;
    }
    case IdentityId::MomentBell: {
      const auto n = static_cast<unsigned>(param(p, "n"));
      const auto q = static_cast<unsigned>(param(p, "q"));
      Int lhs = 0;
      for (unsigned k = 0; k <= n; ++k) lhs += power(k, q) * rencontres(n, k);
      rep.lhs = Rat(lhs);
      rep.rhs = Rat(Int(bell(q) * factorial(n)));
      break;
    }
    case IdentityId::GeneratingPoly: {
      const auto n = static_cast<unsigned>(param(p, "n"));
      std::vector<Int> coeffs(n + 1);
      for (unsigned k = 0; k <= n; ++k) coeffs[k] = rencontres(n, k);
      IntPolynomial lhs(std::move(coeffs));
      IntPolynomial rhs;
      const IntPolynomial t_minus_one{-1, 1};
      for (unsigned i = 0; i <= n; ++i) {
        Int scale = factorial(n);
        mpz_divexact(scale.get_mpz_t(), scale.get_mpz_t(), factorial(i).get_mpz_t());
        rhs += t_minus_one.pow(i) * scale;
      }
      rep.lhs = Rat(lhs.evaluate(Int(1)));
      rep.rhs = Rat(rhs.evaluate(Int(1)));
      rep.lhs_poly = std::move(lhs);
      rep.rhs_poly = std::move(rhs);
      rep.equal = *rep.lhs_poly == *rep.rhs_poly;
      return;
    }
    case IdentityId::DeutschElizalde: {
      const auto n = static_cast<unsigned>(param(p, "n"));
      Int rhs = 0;
      for (unsigned k = 1; k <= n; ++k)
        rhs += Int(k - 1) * binomial(n, k) * derangement_alternating_sum(n - k);
      rep.lhs = Rat(rencontres(n, 0));
      rep.rhs = Rat(rhs);
      break;
    }
    case IdentityId::EulerRecurrence: {
      const auto n = static_cast<unsigned>(param(p, "n"));
      Int rhs = derangement_alternating_sum(n - 1) + derangement_alternating_sum(n - 2);
      rhs *= n - 1;
      rep.lhs = Rat(derangement_alternating_sum(n));
      rep.rhs = Rat(rhs);
      break;
    }
    case IdentityId::WeightedPnk: {
      const auto n = static_cast<unsigned>(param(p, "n"));
      const auto k = static_cast<unsigned>(param(p, "k"));
      Int inner = 0;
      for (unsigned l = 1; l <= n - k; ++l) inner += Int(l - 1) * rencontres(n - k, l);
      rep.lhs = Rat(rencontres(n, k));
      rep.rhs = Rat(Int(binomial(n, k) * inner));
      break;
    }
    case IdentityId::BinomialSumRule: {
      const auto n = static_cast<unsigned>(param(p, "n"));
      const long r = static_cast<long>(param(p, "r"));
      const auto q = static_cast<unsigned>(r + 1);
      Int lhs = 0;
      for (unsigned k = 0; k <= n; ++k) {
        Int inner = 0;
        for (unsigned i = 0; i <= q; ++i) inner += stirling1_signed(q, i) * power_by_vassilev(k, i);
        lhs += inner * rencontres(n, k);
      }
      rep.lhs = Rat(lhs);
      rep.rhs = Rat(factorial(n));
      break;
    }
    case IdentityId::NestedSchlomilch: {
      const auto n = static_cast<unsigned>(param(p, "n"));
      const long r = static_cast<long>(param(p, "r"));
      std::vector<Rat> stirling(static_cast<std::size_t>(r + 2));
      for (long i = 0; i <= r + 1; ++i) {
        stirling[i] = nested_schlomilch_factor(r, i, corrected, [&](long h) { return r + 1 - i + h; });
      }
      Rat lhs = 0;
      for (unsigned k = 0; k <= n; ++k) {
        Rat inner = 0;
        for (long i = 0; i <= r + 1; ++i) inner += stirling[i] * Rat(power_by_vassilev(k, static_cast<unsigned>(i)));
        lhs += inner * Rat(rencontres(n, k));
      }
      rep.lhs = lhs;
      rep.rhs = Rat(factorial(n));
      break;
    }
    case IdentityId::NormalizedNested: {
      const auto n = static_cast<unsigned>(param(p, "n"));
      const long r = static_cast<long>(param(p, "r"));
      Rat lhs = 0;
      for (unsigned k = 0; k <= n; ++k) {
        Rat inner = 0;
        for (long i = 0; i <= r + 1; ++i) {
          const Int vk = power_by_vassilev(k, static_cast<unsigned>(i));
          if (vk == 0) continue;
          auto lower = [&](long h) { return corrected ? r + 1 - i + h : r + 1 - i + static_cast<long>(k); };
          inner += nested_schlomilch_factor(r, i, corrected, lower) * Rat(vk);
        }
        lhs += inner * alternating_exp_partial(n - k) / Rat(factorial(k));
      }
      rep.lhs = lhs;
      rep.rhs = Rat(1);
      break;
    }
    case IdentityId::BellDouble: {
      const auto q = static_cast<unsigned>(param(p, "q"));
      const unsigned first = corrected ? 0 : 1;
      Rat lhs = 0;
      for (unsigned k = first; k <= q; ++k) {
        for (unsigned i = first; i <= k; ++i) {
          Rat term = corrected ? ratio(power(i, q), Int(factorial(i) * factorial(k - i)))
                               : ratio(power(i, q), factorial(k));
          if ((k - i) % 2 == 0) lhs += term;
          else lhs -= term;
        }
      }
      rep.lhs = lhs;
      rep.rhs = Rat(bell(q));
      break;
    }
    case IdentityId::BellBinomial: {
      const auto n = static_cast<unsigned>(param(p, "n"));
      const auto q = static_cast<unsigned>(param(p, "q"));
      Rat lhs = 0;
      for (unsigned k = 0; k <= n; ++k) {
        // The l-sum is k^q by Vassilev; k = 0 uses the direct power.
        Int lsum = 0;
        if (k == 0) {
          lsum = q == 0 ? 1 : 0;
        } else {
          const unsigned upper = (k - 1) * q / k;
          for (unsigned l = 0; l <= upper; ++l) {
            Int term = binomial(q, l) * binomial(static_cast<unsigned long>(k) * (q - l), q);
            if (l % 2 == 0) lsum += term;
            else lsum -= term;
          }
        }
        if (lsum == 0) continue;
        for (unsigned i = 0; i <= n - k; ++i) {
          Rat term = ratio(lsum, Int(factorial(k) * factorial(i)));
          if (i % 2 == 0) lhs += term;
          else lhs -= term;
        }
      }
      rep.lhs = lhs;
      rep.rhs = Rat(bell(q));
      break;
    }
    case IdentityId::DobinskiFinite: {
      const auto q = static_cast<unsigned>(param(p, "q"));
      Rat lhs = 0;
      for (unsigned k = 0; k <= q; ++k) lhs += ratio(power(k, q), factorial(k));
      rep.lhs = lhs;
      rep.rhs = Rat(bell(q));
      rep.residual = to_real(lhs) - boost::math::constants::e<Real>() * to_real(rep.rhs);
      rep.diagnostic = true;
      break;
    }
  }
  rep.equal = rep.lhs == rep.rhs;
}

}  // namespace

std::span<const IdentityId> all_identities() { return kAllIds; }

std::string_view to_string(IdentityId id) { return info(id).tag; }

std::optional<IdentityId> parse_identity(std::string_view tag) {
  std::string norm(tag);
  for (char& c : norm) c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& e : kIdentities)
    if (e.tag == norm) return e.id;
  return std::nullopt;
}

std::string_view to_string(EvalMode mode) { return mode == EvalMode::AsWritten ? "as-written" : "corrected"; }

std::optional<EvalMode> parse_mode(std::string_view text) {
  std::string norm(text);
  for (char& c : norm) c = c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (norm == "as-written") return EvalMode::AsWritten;
  if (norm == "corrected") return EvalMode::Corrected;
  return std::nullopt;
}

std::span<const std::string_view> required_params(IdentityId id) { return info(id).params; }

void check_params(IdentityId id, const Params& params) {
  const auto names = required_params(id);
  for (auto name : names) {
    if (!params.contains(std::string(name)))
      throw UsageError(std::string(to_string(id)) + ": missing parameter '" + std::string(name) + "'");
  }
  for (const auto& [name, value] : params) {
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw UsageError(std::string(to_string(id)) + ": unknown parameter '" + name + "'");
  }
}

bool admissible(IdentityId id, const Params& p) {
  auto get = [&](const char* name) { return p.at(name); };
  switch (id) {
    case IdentityId::MainSumRule:
    case IdentityId::FallingMoment:
    case IdentityId::BinomialSumRule:
    case IdentityId::NestedSchlomilch:
    case IdentityId::NormalizedNested:
      return get("n") >= 1 && get("r") + 1 >= 0 && get("r") + 1 <= get("n");
    case IdentityId::MomentBell:
    case IdentityId::BellBinomial:
      return get("q") >= 0 && get("q") <= get("n");
    case IdentityId::GeneratingPoly:
      return get("n") >= 0;
    case IdentityId::DeutschElizalde:
      return get("n") >= 1;
    case IdentityId::EulerRecurrence:
      return get("n") >= 2;
    case IdentityId::WeightedPnk:
      return get("k") >= 0 && get("k") < get("n");
    case IdentityId::BellDouble:
    case IdentityId::DobinskiFinite:
      return get("q") >= 0;
  }
  return false;
}

IdentityReport verify_identity(IdentityId id, EvalMode mode, const Params& params) {
  check_params(id, params);
  if (!admissible(id, params)) {
    std::string msg = std::string(to_string(id)) + ": parameters outside the identity's domain (";
    bool first = true;
    for (const auto& [name, value] : params) {
      msg += (first ? "" : ", ") + name + "=" + std::to_string(value);
      first = false;
    }
    throw DomainError(msg + ")");
  }

  IdentityReport rep;
  rep.id = id;
  rep.mode = mode;
  rep.params = params;
  const auto start = std::chrono::steady_clock::now();
  evaluate(rep);
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Nat vassilev_power(unsigned k, unsigned i) {
  if (k == 0) throw DomainError("vassilev_power: k = 0 leaves the floor bound (k-1)i/k undefined");
  Int acc = 0;
  const unsigned long upper = static_cast<unsigned long>(k - 1) * i / k;
  for (unsigned long l = 0; l <= upper; ++l) {
    Int term = binomial(i, l) * binomial(static_cast<unsigned long>(k) * (i - l), i);
    if (l % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

Int schlomilch_stirling1(unsigned q, unsigned i) {
  if (i > q) return Int(0);
  const long r = static_cast<long>(q) - 1;
  const long il = i;
  Int acc = 0;
  for (long h = 0; h <= r + 1 - il; ++h) {
    const unsigned long exponent = static_cast<unsigned long>(r + 1 - il + h);
    Int jsum = schlomilch_h_sum(r, il, h, [&](long base) { return power(base, exponent); });
    acc += divexact(std::move(jsum), factorial(static_cast<unsigned>(h)));
  }
  return acc;
}

Nat worpitzky_power(unsigned k, unsigned i, EvalMode mode) {
  Nat acc = 0;
  for (unsigned j = 0; j <= i; ++j) {
    const unsigned long lower = mode == EvalMode::Corrected ? i : j;
    acc += eulerian(i, j) * binomial(static_cast<unsigned long>(k) + j, lower);
  }
  return acc;
}

Int main_sum_rule_term(unsigned n, long r, unsigned k) {
  const auto q = static_cast<unsigned>(r + 1);
  const auto row = stirling1_row(q);
  Int poly = 0;
  for (unsigned i = 0; i <= q; ++i) poly += row[i] * power(k, i);
  return poly * rencontres(n, k);
}

Int falling_moment_term(unsigned n, long r, unsigned k) {
  return falling_factorial(k, static_cast<unsigned>(r + 1)) * rencontres(n, k);
}

}  // namespace sumrules
