#include "sumrules/bounds.hpp"

#include "sumrules/combinat.hpp"

#include <algorithm>

#include <boost/math/constants/constants.hpp>

namespace sumrules {
namespace {

// Relative slack allowed when an upper bound is met with equality (Adell at
// m = 0 is tight). Far below the 2^-60 accuracy the comparison must resolve.
const Real kTieTolerance("1e-30");

bool within_upper(const Real& exact, const Real& bound) {
  using std::abs;
  return exact <= bound + kTieTolerance * std::max(Real(1), abs(bound));
}

}  // namespace

std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::Adell:
      return "adell";
    case BoundId::LambdaSandwich:
      return "lambda";
    case BoundId::BerendTal:
      return "berend-tal";
  }
  return "";
}

LogValue log_of_nat(const Nat& x) {
  if (x <= 0) throw DomainError("log_of_nat: argument must be >= 1");
  const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  if (bits <= 128) return log(to_real(x));
  const std::size_t shift = bits - 128;
  Nat top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), x.get_mpz_t(), shift);
  return log(to_real(top)) + Real(shift) * boost::math::constants::ln_two<Real>();
}

BoundReport check_adell(unsigned n, unsigned m) {
  if (n < 2) throw DomainError("check_adell: n >= 2 required (log n must be positive)");
  if (m > n) throw DomainError("check_adell: m <= n required");

  BoundReport rep;
  rep.id = BoundId::Adell;
  rep.params = {{"n", n}, {"m", m}};

  const Real log_n = log(Real(n));
  rep.bound = log_of_nat(factorial(n)) + Real(m) * log(log_n) - log_of_nat(factorial(m)) + log(1 + Real(m) / log_n);

  const Nat magnitude = abs(stirling1_signed(n + 1, m + 1));
  if (magnitude == 0) {
    rep.satisfied = true;
    return rep;
  }
  rep.exact = log_of_nat(magnitude);
  rep.slack = rep.bound - *rep.exact;
  rep.satisfied = within_upper(*rep.exact, rep.bound);
  return rep;
}

Real lambda_sum(unsigned r, unsigned k) {
  if (r < 2) throw DomainError("lambda_sum: r >= 2 required (log r must be positive)");
  const Real log_r = log(Real(r));
  const Real r_fact = to_real(factorial(r));
  Real acc = 0;
  // i = 0 carries 1/(-1)! = 0.
  for (unsigned i = 1; i <= r + 1; ++i) {
    const Real a = Real(i - 1);
    acc += r_fact * pow(log_r, a) / to_real(factorial(i - 1)) * (1 + a / log_r) * pow(Real(k), Real(i));
  }
  return acc;
}

BoundReport check_lambda_sandwich(unsigned n, unsigned r) {
  if (r < 2) throw DomainError("check_lambda_sandwich: r >= 2 required");
  if (r + 1 > n) throw DomainError("check_lambda_sandwich: r + 1 <= n required");

  BoundReport rep;
  rep.id = BoundId::LambdaSandwich;
  rep.params = {{"n", n}, {"r", r}};

  const auto row = stirling1_row(r + 1);
  Nat middle = 0;
  Real right = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const Nat pnk = rencontres(n, k);
    Nat weight = 0;
    for (unsigned i = 0; i <= r + 1; ++i) weight += abs(row[i]) * power(k, i);
    middle += weight * pnk;
    right += lambda_sum(r, k) * to_real(pnk);
  }
  const Nat n_fact = factorial(n);
  rep.exact = log_of_nat(middle);
  rep.bound = log(right);
  rep.slack = rep.bound - *rep.exact;
  rep.lower = log_of_nat(n_fact);
  rep.lower_slack = *rep.exact - *rep.lower;
  rep.satisfied = n_fact <= middle && within_upper(*rep.exact, rep.bound);
  return rep;
}

BoundReport check_berend_tal(unsigned n) {
  if (n < 1) throw DomainError("check_berend_tal: n >= 1 required");
  BoundReport rep;
  rep.id = BoundId::BerendTal;
  rep.params = {{"n", n}};
  rep.exact = log_of_nat(bell(n));
  rep.bound = Real(n) * (log(Real("0.792")) + log(Real(n)) - log(log(Real(n + 1))));
  rep.slack = rep.bound - *rep.exact;
  rep.satisfied = *rep.exact < rep.bound;
  return rep;
}

Real BellAsymptotics::de_bruijn_error() const { return abs(de_bruijn - exact) / exact; }

Real BellAsymptotics::odlyzko_error() const { return abs(odlyzko - exact) / exact; }

BellAsymptotics bell_asymptotics(unsigned n) {
  if (n < 2) throw DomainError("bell_asymptotics: n >= 2 required");
  const Real x(n);
  const Real w = lambert_w(x);
  const Real log_n = log(x);
  const Real log_w = log(w);
  const Real e_w = x / w;  // e^{W(n)} = n / W(n)

  BellAsymptotics out;
  out.n = n;
  out.exact = log_of_nat(bell(n));
  out.de_bruijn = -log_n / 2 + (x + Real(0.5)) * (log_n - log_w) + x / w - x - 1;
  out.odlyzko = log_of_nat(factorial(n)) -
                log(2 * boost::math::constants::pi<Real>() * w * w * e_w) / 2 + (e_w - 1) - x * log_w;
  return out;
}

}  // namespace sumrules
