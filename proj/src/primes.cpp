#include "basecert/primes.hpp"

#include <algorithm>
#include <sstream>

#include "basecert/error.hpp"

namespace basecert {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

PrimeSet::PrimeSet(std::vector<uint64_t> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (uint64_t p : primes_)
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

PrimeSet PrimeSet::parse(const std::string& text) {
  std::vector<uint64_t> primes;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    uint64_t v = 0;
    try {
      v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad prime list entry: " + tok);
    }
    if (pos != tok.size()) throw ParseError("bad prime list entry: " + tok);
    primes.push_back(v);
  }
  return PrimeSet(std::move(primes));
}

bool PrimeSet::contains(uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::string PrimeSet::to_string() const {
  std::string out;
  for (size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(primes_[i]);
  }
  return out;
}

}  // namespace basecert
