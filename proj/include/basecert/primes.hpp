#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace basecert {

// deterministic trial division; inputs are tiny group orders
bool is_prime(uint64_t n);

// (prime, exponent) pairs, ascending primes
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);

std::vector<uint64_t> prime_divisors(uint64_t n);

/// Sorted set of primes (the pi in pi-Hall).  Construction validates
/// primality of every member.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<uint64_t> primes);

  /// Parses "2,3,7"; an empty string yields the empty set.
  static PrimeSet parse(const std::string& text);

  bool contains(uint64_t p) const;
  bool empty() const { return primes_.empty(); }
  const std::vector<uint64_t>& primes() const { return primes_; }
  std::string to_string() const;

  bool operator==(const PrimeSet&) const = default;

 private:
  std::vector<uint64_t> primes_;
};

}  // namespace basecert
