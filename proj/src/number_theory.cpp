#include "heffter/number_theory.hpp"

#include <algorithm>

#include "heffter/error.hpp"

namespace heffter {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimeFactor> factorize(std::uint64_t n) {
  std::vector<PrimeFactor> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    PrimeFactor f{d, 0};
    while (n % d == 0) {
      n /= d;
      ++f.exponent;
    }
    out.push_back(f);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& f : factorize(n)) out.push_back(f.prime);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& f : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<PrimePower> prime_power_decompose(std::uint64_t n) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "prime_power_decompose: input must be >= 2");
  }
  const auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f.front().prime, f.front().exponent};
}

std::uint64_t odd_part(std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "odd_part: k must be >= 1");
  while (k % 2 == 0) k /= 2;
  return k;
}

std::uint64_t radical(std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "radical: k must be >= 1");
  std::uint64_t r = 1;
  for (auto p : prime_divisors(k)) r *= p;
  return r;
}

}  // namespace heffter
