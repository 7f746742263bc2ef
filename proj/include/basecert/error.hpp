#pragma once

#include <stdexcept>
#include <string>

namespace basecert {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a permutation whose image sequence is not a bijection
struct BadPermutation : Error {
  using Error::Error;
};

// closure enumeration grew past the configured cap
struct CapExceeded : Error {
  using Error::Error;
};

// binary subgroup operation on handles with different ambient groups
struct AmbientMismatch : Error {
  using Error::Error;
};

struct ElementNotInAmbient : Error {
  using Error::Error;
};

// declared generators do not lie inside the claimed ambient group
struct NotSubgroup : Error {
  using Error::Error;
};

struct NotHall : Error {
  using Error::Error;
};

struct NotPrime : Error {
  using Error::Error;
};

// tuple search exceeded the configured work budget
struct WorkBudgetExceeded : Error {
  using Error::Error;
};

struct UnknownFamily : Error {
  using Error::Error;
};

// the polynomial to certify has a non-positive leading coefficient
struct NotEventuallyPositive : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace basecert
