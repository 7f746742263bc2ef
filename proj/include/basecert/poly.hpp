#pragma once

#include <string>
#include <vector>

#include "basecert/error.hpp"
#include "basecert/rational.hpp"

namespace basecert {

// Polynomial in one variable with exact integer coefficients.
// coefficients()[i] is the coefficient of q^i; the vector carries no
// trailing zeros, so the zero polynomial has an empty vector.
class IntPolynomial {
public:
  IntPolynomial() = default;

  static IntPolynomial constant(BigInt c);
  static IntPolynomial variable();
  static IntPolynomial monomial(BigInt coeff, unsigned degree);
  static IntPolynomial from_coefficients(std::vector<BigInt> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(unsigned i) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  const BigInt& leading() const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial pow(unsigned e) const;

  // Substitutes q = q0 + t and returns the result as a polynomial in t.
  IntPolynomial shifted(const BigInt& q0) const;

  BigInt operator()(const BigInt& q) const;

  std::string to_string(const std::string& var = "q") const;

  bool operator==(const IntPolynomial& rhs) const = default;

private:
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  void trim();

  std::vector<BigInt> coeffs_;
};

// Ratio of two integer polynomials. The denominator is never the zero
// polynomial; no cancellation is performed.
struct RationalExpr {
  IntPolynomial num;
  IntPolynomial den;

  RationalExpr() : num(), den(IntPolynomial::constant(1)) {}
  RationalExpr(IntPolynomial n);
  RationalExpr(IntPolynomial n, IntPolynomial d);

  RationalExpr operator*(const RationalExpr& rhs) const;
  RationalExpr operator/(const RationalExpr& rhs) const;
  RationalExpr pow(unsigned e) const;

  // Exact value at an integer point; throws Error if the denominator
  // vanishes there.
  Rational operator()(const BigInt& q) const;

  std::string to_string(const std::string& var = "q") const;
};

}  // namespace basecert
