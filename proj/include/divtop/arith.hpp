#pragma once

#include <cstdint>
#include <vector>

namespace divtop {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  std::uint64_t value() const;
  auto operator<=>(const PrimePower&) const = default;
};

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, primes ascending.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime_above(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Number of positive divisors.
std::uint64_t divisor_count(std::uint64_t n);

}  // namespace divtop
