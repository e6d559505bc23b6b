#pragma once

#include "sumrules/bigint.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace sumrules {

/// Dense polynomial with exact integer coefficients, index = degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const Int& c);
  /// c * x^degree
  static IntPolynomial monomial(const Int& c, std::size_t degree);

  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  /// Zero beyond the degree.
  Int coefficient(std::size_t k) const;
  std::span<const Int> coefficients() const { return coefficients_; }

  Int evaluate(const Int& x) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Int& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Int& s) { return a *= s; }

  /// Repeated squaring.
  IntPolynomial pow(unsigned exponent) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  void normalize();

  std::vector<Int> coefficients_;
};

}  // namespace sumrules
