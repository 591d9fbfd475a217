#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "heffter/heffter_array.hpp"
#include "heffter/number_theory.hpp"

namespace heffter {

/// Arithmetic classification of a pair (m, n).
struct PairClass {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t q = 0;  // 2mn + 1
  bool admissible = false;  // q a prime power and m, n > 2
  std::optional<PrimePower> prime_power;
  bool agreeable = false;         // distinct odd primes p | m, p' | n
  bool optimal_pair = false;      // agreeable, and neither m_o rad(m_o) | n_o nor n_o rad(n_o) | m_o
  bool perfect_eligible = false;  // m, n odd and coprime
  std::uint64_t m_o = 0;
  std::uint64_t n_o = 0;
  std::uint64_t rad_m_o = 0;
  std::uint64_t rad_n_o = 0;
  std::uint64_t lcm_odd = 0;
};

/// Split m = m1 m2, n = n1 n2 with coprime odd m1 | m_o, n1 | n_o, both > 1.
struct AgreeableParams {
  std::uint64_t m1 = 0;
  std::uint64_t n1 = 0;
  std::uint64_t m2 = 0;
  std::uint64_t n2 = 0;
  std::uint64_t e = 0;  // m2 * n2
};

/// (odd part, radical) of k >= 1; InvalidArgument for 0.
std::pair<std::uint64_t, std::uint64_t> odd_part_radical(std::uint64_t k);

/// InvalidArgument if m or n is 0.
PairClass classify_pair(std::uint64_t m, std::uint64_t n);

/// For optimal pairs, m1 n1 = lcm(m_o, n_o) via per-prime exponent comparison;
/// otherwise the smallest distinct odd primes p | m, p' | n. Throws
/// NotAgreeable.
AgreeableParams agreeable_parameters(std::uint64_t m, std::uint64_t n);

/// a_{ij} = r^{2n i} r^{2m j} (0-based i, j) over F_{2mn+1}.
/// Throws NotAdmissible or NotPerfectEligible.
HeffterArray construct_perfect(std::uint64_t m, std::uint64_t n);

/// Factors X = union of C^{2 m2 n}_i for i < m2 and Y = union of
/// C^{2 m n2}_{j m2} for j < n2, listed class by class, each class as
/// r^i, r^i rho, r^i rho^2, ... Only m1 and n1 of `params` are read.
/// Throws NotAdmissible, NotAgreeable or InvalidParams.
HeffterArray construct_agreeable(std::uint64_t m, std::uint64_t n,
                                 std::optional<AgreeableParams> params = std::nullopt);

}  // namespace heffter
