#include "sumrules/combinat.hpp"

#include "brute_force.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace sumrules;

TEST(Factorial, Examples) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(1), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(to_decimal(factorial(25)), "15511210043330985984000000");
}

TEST(Binomial, Examples) {
  for (unsigned n = 0; n < 12; ++n) EXPECT_EQ(binomial(n, 0), 1);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 7), 0);
  // Past the cached Pascal rows the product formula takes over.
  EXPECT_EQ(binomial(300, 2), 44850);
  EXPECT_EQ(binomial(1000, 1001), 0);
}

TEST(Binomial, SignedUpperIndex) {
  EXPECT_EQ(binomial_signed(-1, 0), 1);
  EXPECT_EQ(binomial_signed(-1, 3), -1);
  EXPECT_EQ(binomial_signed(-3, 2), 6);  // (-3)(-4)/2
  EXPECT_EQ(binomial_signed(4, -1), 0);
  EXPECT_EQ(binomial_signed(4, 2), 6);
}

TEST(Derangement, Examples) {
  EXPECT_EQ(derangement(0), 1);
  EXPECT_EQ(derangement(1), 0);
  // 24 permutations of 4 elements enumerated by hand/brute force.
  EXPECT_EQ(brute::fixed_point_histogram(4)[0], 9u);
  EXPECT_EQ(derangement(4), 9);
}

TEST(Derangement, EulerRecurrenceMatchesAlternatingSum) {
  for (unsigned n = 0; n <= 200; ++n) ASSERT_EQ(derangement(n), derangement_alternating_sum(n)) << n;
}

TEST(Rencontres, Examples) {
  EXPECT_EQ(rencontres(4, 0), 9);
  EXPECT_EQ(rencontres(4, 3), 0);
  for (unsigned n = 0; n < 15; ++n) EXPECT_EQ(rencontres(n, n), 1);
  EXPECT_EQ(rencontres(3, 5), 0);
}

TEST(Rencontres, MatchesBruteForceHistogram) {
  for (unsigned n = 0; n <= 7; ++n) {
    const auto h = brute::fixed_point_histogram(n);
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(rencontres(n, k), static_cast<unsigned long>(h[k])) << n << "," << k;
  }
}

TEST(Rencontres, RowSumsToFactorial) {
  for (unsigned n = 0; n <= 30; ++n) {
    Nat sum = 0;
    for (unsigned k = 0; k <= n; ++k) sum += rencontres(n, k);
    EXPECT_EQ(sum, factorial(n)) << n;
  }
}

TEST(Stirling1, Examples) {
  EXPECT_EQ(stirling1_signed(0, 0), 1);
  EXPECT_EQ(stirling1_signed(4, 2), 11);
  EXPECT_EQ(stirling1_signed(3, 5), 0);
  EXPECT_EQ(stirling1_signed(4, 3), -6);
  for (unsigned q = 1; q < 10; ++q) {
    EXPECT_EQ(stirling1_signed(q, 0), 0);
    EXPECT_EQ(stirling1_signed(0, q), 0);
  }
}

TEST(Stirling1, SignLaw) {
  for (unsigned q = 0; q <= 30; ++q) {
    for (unsigned k = 0; k <= q; ++k) {
      const Int s = stirling1_signed(q, k);
      if (s == 0) continue;
      EXPECT_EQ(sgn(s), (q - k) % 2 == 0 ? 1 : -1) << q << "," << k;
    }
  }
}

TEST(Stirling1, AlternatingRowSum) {
  for (unsigned q = 0; q <= 30; ++q) {
    Int sum = 0;
    for (unsigned k = 0; k <= q; ++k) sum += (k % 2 == 0 ? 1 : -1) * stirling1_signed(q, k);
    const Int expected = (q % 2 == 0 ? 1 : -1) * factorial(q);
    EXPECT_EQ(sum, expected) << q;
  }
}

TEST(FactorialPolynomials, Examples) {
  EXPECT_EQ(falling_factorial_poly(0), IntPolynomial{1});
  EXPECT_EQ(falling_factorial_poly(2), (IntPolynomial{0, -1, 1}));
  EXPECT_EQ(falling_factorial_poly(4), (IntPolynomial{0, -6, 11, -6, 1}));
  EXPECT_EQ(rising_factorial_poly(1), (IntPolynomial{0, 1}));
  EXPECT_EQ(rising_factorial_poly(3), (IntPolynomial{0, 2, 3, 1}));
  EXPECT_EQ(rising_factorial_poly(4).coefficient(2), 11);
}

TEST(FactorialPolynomials, CoherentWithStirlingTriangle) {
  for (unsigned q = 0; q <= 30; ++q) {
    const IntPolynomial falling = falling_factorial_poly(q);
    const IntPolynomial rising = rising_factorial_poly(q);
    for (unsigned k = 0; k <= q; ++k) {
      EXPECT_EQ(falling.coefficient(k), stirling1_signed(q, k));
      EXPECT_EQ(rising.coefficient(k), abs(stirling1_signed(q, k)));
    }
  }
}

TEST(FallingFactorial, VanishesBelowItsLength) {
  EXPECT_EQ(falling_factorial(2, 3), 0);
  EXPECT_EQ(falling_factorial(5, 0), 1);
  EXPECT_EQ(falling_factorial(5, 3), 60);
}

TEST(Stirling2, Examples) {
  for (unsigned q = 1; q < 20; ++q) EXPECT_EQ(stirling2(q, 1), 1);
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(3, 4), 0);
  EXPECT_EQ(brute::partition_block_histogram(4)[2], 7u);
}

TEST(Stirling2, ExplicitSumMatchesRecurrence) {
  for (unsigned q = 0; q <= 30; ++q)
    for (unsigned k = 0; k <= q; ++k) ASSERT_EQ(stirling2(q, k), stirling2_recurrence(q, k)) << q << "," << k;
}

TEST(Bell, Examples) {
  EXPECT_EQ(bell(0), 1);
  EXPECT_EQ(bell(4), 15);
  EXPECT_EQ(bell(5), 52);
  EXPECT_EQ(bell(10), 115975);
}

TEST(Bell, StableUnderExtendedUpperLimit) {
  for (unsigned q = 0; q <= 15; ++q)
    for (unsigned n = q; n <= q + 10; ++n) EXPECT_EQ(bell_partial(q, n), bell(q)) << q << "," << n;
}

TEST(Eulerian, Examples) {
  EXPECT_EQ(eulerian(1, 0), 1);
  EXPECT_EQ(eulerian(3, 1), 4);
  EXPECT_EQ(brute::ascent_histogram(3)[1], 4u);
  for (unsigned i = 1; i < 12; ++i) EXPECT_EQ(eulerian(i, i), 0);
}

TEST(Eulerian, RowMatchesBruteForce) {
  for (unsigned n = 1; n <= 7; ++n) {
    const auto h = brute::ascent_histogram(n);
    for (unsigned j = 0; j < n; ++j) EXPECT_EQ(eulerian(n, j), static_cast<unsigned long>(h[j]));
  }
}

TEST(Combinat, ConcurrentFirstTouchIsConsistent) {
  std::vector<Nat> results(8);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < 8; ++t) pool.emplace_back([&, t] { results[t] = bell(120 + t % 2) + stirling1_signed(90, 40); });
  }
  for (unsigned t = 0; t < 8; ++t) EXPECT_EQ(results[t], bell(120 + t % 2) + stirling1_signed(90, 40));
}
