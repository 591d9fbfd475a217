#include "heffter/constructions.hpp"

#include <numeric>
#include <string>

#include "heffter/error.hpp"

namespace heffter {

namespace {

std::uint32_t exponent_of(std::uint64_t p, std::uint64_t k) {
  std::uint32_t e = 0;
  while (k % p == 0) {
    k /= p;
    ++e;
  }
  return e;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<std::uint64_t> odd_primes(std::uint64_t k) {
  auto primes = prime_divisors(k);
  std::erase(primes, std::uint64_t{2});
  return primes;
}

std::string pair_name(std::uint64_t m, std::uint64_t n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

FieldPtr field_for(const PairClass& c) {
  if (!c.admissible) {
    throw Error(ErrorKind::NotAdmissible, "pair " + pair_name(c.m, c.n) + " is not admissible");
  }
  return make_field(c.prime_power->p, c.prime_power->k);
}

// Coprime split of lcm(m_o, n_o) for optimal pairs by comparing prime exponents.
std::pair<std::uint64_t, std::uint64_t> optimal_split(std::uint64_t mo, std::uint64_t no) {
  if (mo == no) {
    const std::uint64_t p = prime_divisors(mo).front();
    const std::uint64_t pa = ipow(p, exponent_of(p, mo));
    return {pa, mo / pa};
  }
  const bool m_smaller = mo < no;
  std::uint64_t m1 = 1, n1 = 1;
  for (auto p : prime_divisors(mo * no)) {
    const auto alpha = exponent_of(p, mo);
    const auto beta = exponent_of(p, no);
    // Ties go to the side with the smaller odd part.
    const bool to_m = m_smaller ? alpha >= beta : alpha > beta;
    if (to_m) {
      m1 *= ipow(p, alpha);
    } else {
      n1 *= ipow(p, beta);
    }
  }
  return {m1, n1};
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> odd_part_radical(std::uint64_t k) {
  return {odd_part(k), radical(k)};
}

PairClass classify_pair(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw Error(ErrorKind::InvalidArgument, "classify_pair: m, n must be >= 1");
  PairClass c;
  c.m = m;
  c.n = n;
  c.q = 2 * m * n + 1;
  c.prime_power = prime_power_decompose(c.q);
  c.admissible = c.prime_power.has_value() && m > 2 && n > 2;
  std::tie(c.m_o, c.rad_m_o) = odd_part_radical(m);
  c.rad_m_o = radical(c.m_o);
  std::tie(c.n_o, c.rad_n_o) = odd_part_radical(n);
  c.rad_n_o = radical(c.n_o);
  c.lcm_odd = std::lcm(c.m_o, c.n_o);

  const auto pm = odd_primes(m);
  const auto pn = odd_primes(n);
  c.agreeable = !pm.empty() && !pn.empty() &&
                !(pm.size() == 1 && pn.size() == 1 && pm.front() == pn.front());
  c.optimal_pair = c.agreeable && c.n_o % (c.m_o * c.rad_m_o) != 0 &&
                   c.m_o % (c.n_o * c.rad_n_o) != 0;
  c.perfect_eligible = m % 2 == 1 && n % 2 == 1 && std::gcd(m, n) == 1;
  return c;
}

AgreeableParams agreeable_parameters(std::uint64_t m, std::uint64_t n) {
  const PairClass c = classify_pair(m, n);
  if (!c.agreeable) {
    throw Error(ErrorKind::NotAgreeable, "pair " + pair_name(m, n) + " is not agreeable");
  }
  AgreeableParams params;
  if (c.optimal_pair) {
    std::tie(params.m1, params.n1) = optimal_split(c.m_o, c.n_o);
  } else {
    for (auto p : odd_primes(m)) {
      for (auto pp : odd_primes(n)) {
        if (p != pp && params.m1 == 0) {
          params.m1 = p;
          params.n1 = pp;
        }
      }
    }
  }
  params.m2 = m / params.m1;
  params.n2 = n / params.n1;
  params.e = params.m2 * params.n2;
  return params;
}

HeffterArray construct_perfect(std::uint64_t m, std::uint64_t n) {
  const PairClass c = classify_pair(m, n);
  const FieldPtr field = field_for(c);
  if (!c.perfect_eligible) {
    throw Error(ErrorKind::NotPerfectEligible,
                "pair " + pair_name(m, n) + " is not odd and coprime");
  }
  Matrix entries(m, n);
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) entries(i, j) = field->exp(2 * n * i + 2 * m * j);
  }
  return HeffterArray(field, std::move(entries));
}

HeffterArray construct_agreeable(std::uint64_t m, std::uint64_t n,
                                 std::optional<AgreeableParams> params) {
  const PairClass c = classify_pair(m, n);
  const FieldPtr field = field_for(c);
  if (!c.agreeable) {
    throw Error(ErrorKind::NotAgreeable, "pair " + pair_name(m, n) + " is not agreeable");
  }
  AgreeableParams p = params ? *params : agreeable_parameters(m, n);
  if (p.m1 <= 1 || p.n1 <= 1 || p.m1 % 2 == 0 || p.n1 % 2 == 0 || c.m_o % p.m1 != 0 ||
      c.n_o % p.n1 != 0 || std::gcd(p.m1, p.n1) != 1) {
    throw Error(ErrorKind::InvalidParams,
                "need odd coprime m1 | m_o and n1 | n_o, both greater than 1");
  }
  p.m2 = m / p.m1;
  p.n2 = n / p.n1;
  p.e = p.m2 * p.n2;

  const std::uint64_t units = field->units();
  const std::uint64_t x_step = units / p.m1;  // 2 m2 n
  const std::uint64_t y_step = units / p.n1;  // 2 m n2
  std::vector<Element> x, y;
  x.reserve(m);
  y.reserve(n);
  for (std::uint64_t i = 0; i < p.m2; ++i) {
    for (std::uint64_t t = 0; t < p.m1; ++t) x.push_back(field->exp(i + t * x_step));
  }
  // Class indices j*m2 make I + J tile [0, m2 n2).
  for (std::uint64_t j = 0; j < p.n2; ++j) {
    for (std::uint64_t t = 0; t < p.n1; ++t) y.push_back(field->exp(j * p.m2 + t * y_step));
  }
  return rank_one_array(field, x, y);
}

}  // namespace heffter
