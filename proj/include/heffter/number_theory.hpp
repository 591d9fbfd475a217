#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace heffter {

struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t k = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A prime together with its multiplicity in some integer.
struct PrimeFactor {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;
};

bool is_prime(std::uint64_t n);

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimeFactor> factorize(std::uint64_t n);

/// Distinct primes dividing n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// (p, k) with n = p^k, or nullopt when n is not a prime power.
/// Throws Error(InvalidArgument) for n < 2.
std::optional<PrimePower> prime_power_decompose(std::uint64_t n);

/// Greatest odd divisor of k (k >= 1).
std::uint64_t odd_part(std::uint64_t k);

/// Product of the distinct primes of k; radical(1) == 1.
std::uint64_t radical(std::uint64_t k);

}  // namespace heffter
