#pragma once

#include "sumrules/bigint.hpp"
#include "sumrules/errors.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string_view>

namespace sumrules {

/// Natural logarithm of a strictly positive quantity.
using LogValue = Real;

/// log(x) from the bit length and the leading 128 bits of x.
/// Throws DomainError for x = 0.
LogValue log_of_nat(const Nat& x);

/// Principal branch W(x) for x >= 0 by Halley iteration from a logarithmic
/// starting point, with step halving whenever an update would leave (0, inf).
template <class T>
T lambert_w(const T& x) {
  using std::abs;
  using std::exp;
  using std::log;
  if (x < 0) throw DomainError("lambert_w: negative argument (only the principal branch on [0,inf) is supported)");
  if (x == 0) return T(0);

  T w = x < T(3) ? T(log(T(1) + x)) : T(log(x) - log(log(x)));
  if (w <= 0) w = x;
  const T eps = std::numeric_limits<T>::epsilon();
  for (int iter = 0; iter < 100; ++iter) {
    const T ew = exp(w);
    const T f = w * ew - x;
    const T wp1 = w + 1;
    T step = f / (ew * wp1 - (w + 2) * f / (2 * wp1));
    T next = w - step;
    while (next <= 0) {
      step /= 2;
      next = w - step;
    }
    if (abs(next - w) <= 4 * eps * abs(next)) return next;
    w = next;
  }
  return w;
}

enum class BoundId { Adell, LambdaSandwich, BerendTal };

std::string_view to_string(BoundId id);

/// One upper-bound comparison in log domain. `satisfied` means
/// exact <= bound (strict for BerendTal) and slack = bound - exact.
/// LambdaSandwich also carries the lower side: lower <= exact with
/// lower_slack = exact - lower.
struct BoundReport {
  BoundId id{};
  Params params;
  /// Empty when the exact value is zero (trivially satisfied, infinite slack).
  std::optional<LogValue> exact;
  LogValue bound = 0;
  bool satisfied = false;
  std::optional<LogValue> slack;

  std::optional<LogValue> lower;
  std::optional<LogValue> lower_slack;
};

/// |s(n+1,m+1)| <= n! (log n)^m / m! * (1 + m / log n), n >= 2, m <= n.
BoundReport check_adell(unsigned n, unsigned m);

/// lambda_{r,k} = sum_{i=1}^{r+1} r! (log r)^{i-1}/(i-1)! (1 + (i-1)/log r) k^i.
/// The i = 0 term carries 1/(-1)! and is taken as zero. Requires r >= 2.
Real lambda_sum(unsigned r, unsigned k);

/// n! <= sum_k sum_i |s(r+1,i)| k^i p_n(k) <= sum_k lambda_{r,k} p_n(k),
/// for 2 <= r and r+1 <= n.
BoundReport check_lambda_sandwich(unsigned n, unsigned r);

/// B_n < (0.792 n / log(n+1))^n, n >= 1.
BoundReport check_berend_tal(unsigned n);

struct BellAsymptotics {
  unsigned n = 0;
  LogValue exact = 0;
  LogValue de_bruijn = 0;
  LogValue odlyzko = 0;

  Real de_bruijn_error() const;  // |estimate - exact| / exact
  Real odlyzko_error() const;
};

/// Log of both Lambert-W asymptotic forms of B_n next to log B_n; n >= 2.
BellAsymptotics bell_asymptotics(unsigned n);

}  // namespace sumrules
