#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace basecert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "n" for integers, "n/d" otherwise; the canonical wire form
std::string rational_string(const Rational& r);

BigInt big_pow(const BigInt& base, unsigned exp);

}  // namespace basecert
