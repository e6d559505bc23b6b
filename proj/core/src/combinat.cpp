#include "sumrules/combinat.hpp"

#include "sumrules/triangle_cache.hpp"

namespace sumrules {
namespace {

// Pascal rows are cached up to this index; larger n use GMP's product formula.
constexpr unsigned long kPascalRows = 256;

using Row = TriangleCache::Row;

const TriangleCache& factorial_cache() {
  static const TriangleCache cache("factorial", [](std::size_t n, const std::deque<Row>& prev) {
    if (n == 0) return Row{Int(1)};
    return Row{Int(prev[n - 1][0] * static_cast<unsigned long>(n))};
  });
  return cache;
}

const TriangleCache& pascal_cache() {
  static const TriangleCache cache("pascal", [](std::size_t n, const std::deque<Row>& prev) {
    Row row(n + 1, Int(1));
    for (std::size_t k = 1; k < n; ++k) row[k] = prev[n - 1][k - 1] + prev[n - 1][k];
    return row;
  });
  return cache;
}

const TriangleCache& derangement_cache() {
  static const TriangleCache cache("derangement-euler", [](std::size_t n, const std::deque<Row>& prev) {
    if (n == 0) return Row{Int(1)};
    if (n == 1) return Row{Int(0)};
    Int d = prev[n - 1][0] + prev[n - 2][0];
    d *= static_cast<unsigned long>(n - 1);
    return Row{d};
  });
  return cache;
}

const TriangleCache& stirling1_cache() {
  static const TriangleCache cache("stirling1-recurrence", [](std::size_t q, const std::deque<Row>& prev) {
    if (q == 0) return Row{Int(1)};
    // s(q,k) = s(q-1,k-1) - (q-1) s(q-1,k)
    const Row& above = prev[q - 1];
    Row row(q + 1);
    for (std::size_t k = 1; k <= q; ++k) {
      row[k] = above[k - 1];
      if (k < above.size()) row[k] -= above[k] * static_cast<unsigned long>(q - 1);
    }
    return row;
  });
  return cache;
}

const TriangleCache& stirling2_explicit_cache() {
  static const TriangleCache cache("stirling2-explicit", [](std::size_t q, const std::deque<Row>&) {
    std::vector<Int> powers(q + 1);
    for (std::size_t j = 0; j <= q; ++j) powers[j] = power(static_cast<long>(j), q);
    Row row(q + 1);
    for (std::size_t k = 0; k <= q; ++k) {
      Int acc = 0;
      for (std::size_t j = 0; j <= k; ++j) {
        Int term = binomial(k, j) * powers[j];
        if ((k - j) % 2 == 0) acc += term;
        else acc -= term;
      }
      mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), factorial(static_cast<unsigned>(k)).get_mpz_t());
      row[k] = std::move(acc);
    }
    return row;
  });
  return cache;
}

const TriangleCache& stirling2_recurrence_cache() {
  static const TriangleCache cache("stirling2-recurrence", [](std::size_t q, const std::deque<Row>& prev) {
    if (q == 0) return Row{Int(1)};
    const Row& above = prev[q - 1];
    Row row(q + 1);
    for (std::size_t k = 1; k <= q; ++k) {
      row[k] = above[k - 1];
      if (k < above.size()) row[k] += above[k] * static_cast<unsigned long>(k);
    }
    return row;
  });
  return cache;
}

const TriangleCache& eulerian_cache() {
  static const TriangleCache cache("eulerian-recurrence", [](std::size_t i, const std::deque<Row>& prev) {
    if (i == 0) return Row{Int(1)};
    const Row& above = prev[i - 1];
    Row row(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      if (j < above.size()) row[j] += above[j] * static_cast<unsigned long>(j + 1);
      if (j >= 1 && j - 1 < above.size()) row[j] += above[j - 1] * static_cast<unsigned long>(i - j);
    }
    return row;
  });
  return cache;
}

}  // namespace

Nat factorial(unsigned n) { return factorial_cache().row(n)[0]; }

Nat binomial(unsigned long n, unsigned long k) {
  if (k > n) return Nat(0);
  if (n <= kPascalRows) return pascal_cache().row(n)[k];
  Nat out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int binomial_signed(long n, long k) {
  if (k < 0) return Int(0);
  if (n >= 0) return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  Int out = binomial(static_cast<unsigned long>(-n + k - 1), static_cast<unsigned long>(k));
  if (k % 2 != 0) out = -out;
  return out;
}

Nat derangement(unsigned n) { return derangement_cache().row(n)[0]; }

Nat derangement_alternating_sum(unsigned n) {
  // n!/i! = (i+1)(i+2)...n, accumulated from i = n downward.
  Nat acc = 0;
  Nat ratio = 1;
  for (unsigned i = n + 1; i-- > 0;) {
    if (i % 2 == 0) acc += ratio;
    else acc -= ratio;
    ratio *= i;
  }
  return acc;
}

Nat rencontres(unsigned n, unsigned k) {
  if (k > n) return Nat(0);
  return binomial(n, k) * derangement(n - k);
}

Int stirling1_signed(unsigned q, unsigned k) { return k > q ? Int(0) : stirling1_cache().row(q)[k]; }

std::span<const Int> stirling1_row(unsigned q) { return stirling1_cache().row(q); }

Nat stirling2(unsigned q, unsigned k) { return k > q ? Nat(0) : stirling2_explicit_cache().row(q)[k]; }

std::span<const Nat> stirling2_row(unsigned q) { return stirling2_explicit_cache().row(q); }

Nat stirling2_recurrence(unsigned q, unsigned k) {
  return k > q ? Nat(0) : stirling2_recurrence_cache().row(q)[k];
}

Nat bell(unsigned q) { return bell_partial(q, q); }

Nat bell_partial(unsigned q, unsigned upper) {
  Nat sum = 0;
  for (unsigned k = 0; k <= upper; ++k) sum += stirling2(q, k);
  return sum;
}

Nat eulerian(unsigned i, unsigned j) { return j > i ? Nat(0) : eulerian_cache().row(i)[j]; }

std::span<const Nat> eulerian_row(unsigned i) { return eulerian_cache().row(i); }

IntPolynomial falling_factorial_poly(unsigned q) {
  IntPolynomial p = IntPolynomial::constant(Int(1));
  for (unsigned j = 0; j < q; ++j) p *= IntPolynomial{-static_cast<long>(j), 1};
  return p;
}

IntPolynomial rising_factorial_poly(unsigned n) {
  IntPolynomial p = IntPolynomial::constant(Int(1));
  for (unsigned j = 0; j < n; ++j) p *= IntPolynomial{static_cast<long>(j), 1};
  return p;
}

Int falling_factorial(long k, unsigned m) {
  Int out = 1;
  for (unsigned j = 0; j < m; ++j) out *= k - static_cast<long>(j);
  return out;
}

}  // namespace sumrules
