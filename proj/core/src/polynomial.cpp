#include "sumrules/polynomial.hpp"

#include <algorithm>

namespace sumrules {

IntPolynomial::IntPolynomial(std::vector<Int> coefficients) : coefficients_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coefficients_.reserve(coefficients.size());
  for (long c : coefficients) coefficients_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const Int& c) { return IntPolynomial(std::vector<Int>{c}); }

IntPolynomial IntPolynomial::monomial(const Int& c, std::size_t degree) {
  std::vector<Int> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

Int IntPolynomial::coefficient(std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : Int(0);
}

Int IntPolynomial::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coefficients_[i].get_mpz_t(), b.coefficients_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) { return *this = *this * other; }

IntPolynomial& IntPolynomial::operator*=(const Int& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(Int(1));
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

void IntPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

}  // namespace sumrules
