#include "basecert/poly.hpp"

#include <sstream>
#include <utility>

namespace basecert {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  std::vector<BigInt> v;
  if (c != 0) v.push_back(std::move(c));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::variable() { return monomial(1, 1); }

IntPolynomial IntPolynomial::monomial(BigInt coeff, unsigned degree) {
  if (coeff == 0) return IntPolynomial();
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = std::move(coeff);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_coefficients(std::vector<BigInt> coeffs) {
  return IntPolynomial(std::move(coeffs));
}

BigInt IntPolynomial::coefficient(unsigned i) const {
  if (i >= coeffs_.size()) return 0;
  return coeffs_[i];
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw Error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] -= rhs.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> v(coeffs_);
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (coeffs_.empty() || rhs.coeffs_.empty()) return IntPolynomial();
  std::vector<BigInt> v(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

IntPolynomial IntPolynomial::shifted(const BigInt& q0) const {
  // Horner in polynomial arithmetic: fold in coefficients from the top,
  // multiplying by (t + q0) at each step.
  IntPolynomial t_plus_q0 = variable() + constant(q0);
  IntPolynomial result;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    result = result * t_plus_q0 + constant(coeffs_[i]);
  }
  return result;
}

BigInt IntPolynomial::operator()(const BigInt& q) const {
  BigInt result = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) result = result * q + coeffs_[i];
  return result;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

RationalExpr::RationalExpr(IntPolynomial n) : num(std::move(n)), den(IntPolynomial::constant(1)) {}

RationalExpr::RationalExpr(IntPolynomial n, IntPolynomial d)
    : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw Error("rational expression with zero denominator");
}

RationalExpr RationalExpr::operator*(const RationalExpr& rhs) const {
  return RationalExpr(num * rhs.num, den * rhs.den);
}

RationalExpr RationalExpr::operator/(const RationalExpr& rhs) const {
  if (rhs.num.is_zero()) throw Error("division by zero rational expression");
  return RationalExpr(num * rhs.den, den * rhs.num);
}

RationalExpr RationalExpr::pow(unsigned e) const {
  return RationalExpr(num.pow(e), den.pow(e));
}

Rational RationalExpr::operator()(const BigInt& q) const {
  BigInt d = den(q);
  if (d == 0) throw Error("rational expression denominator vanishes at q = " + q.str());
  return Rational(num(q), d);
}

std::string RationalExpr::to_string(const std::string& var) const {
  if (den == IntPolynomial::constant(1)) return num.to_string(var);
  return "(" + num.to_string(var) + ") / (" + den.to_string(var) + ")";
}

}  // namespace basecert
