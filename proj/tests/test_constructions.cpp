#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "heffter/constructions.hpp"
#include "heffter/error.hpp"
#include "oracle.hpp"

using namespace heffter;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

std::vector<std::uint64_t> naive_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  return out;
}

std::uint64_t naive_odd(std::uint64_t k) {
  while (k % 2 == 0) k /= 2;
  return k;
}

std::uint64_t naive_rad(std::uint64_t k) {
  std::uint64_t r = 1;
  for (auto p : naive_primes(k)) r *= p;
  return r;
}

Matrix from_rows(std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (auto v : r) m(i, j++) = Element{v};
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("odd_part_radical") {
  CHECK(odd_part_radical(12) == std::pair<std::uint64_t, std::uint64_t>{3, 6});
  CHECK(odd_part_radical(1) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
  CHECK(odd_part_radical(15) == std::pair<std::uint64_t, std::uint64_t>{15, 15});
  CHECK(kind_of([] { odd_part_radical(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("classify_pair examples") {
  auto c = classify_pair(3, 5);
  CHECK(c.q == 31);
  CHECK(c.admissible);
  CHECK(c.agreeable);
  CHECK(c.optimal_pair);
  CHECK(c.perfect_eligible);

  c = classify_pair(225, 15);
  CHECK_FALSE(c.admissible);
  CHECK(c.q == 6751);

  c = classify_pair(441, 21);
  CHECK(c.admissible);
  CHECK(c.agreeable);
  CHECK_FALSE(c.optimal_pair);

  c = classify_pair(3, 4);
  CHECK(c.admissible);
  CHECK(c.q == 25);
  CHECK_FALSE(c.agreeable);
  CHECK(c.prime_power == PrimePower{5, 2});
}

TEST_CASE("classify_pair against direct definitions") {
  for (std::uint64_t m = 1; m <= 60; ++m) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      const auto c = classify_pair(m, n);
      const std::uint64_t q = 2 * m * n + 1;
      const bool pp = naive_primes(q).size() == 1;
      const auto mo = naive_odd(m), no = naive_odd(n);
      const auto pm = naive_primes(mo), pn = naive_primes(no);
      bool distinct = false;
      for (auto a : pm)
        for (auto b : pn) distinct = distinct || a != b;
      const bool optimal = distinct && no % (mo * naive_rad(mo)) != 0 && mo % (no * naive_rad(no)) != 0;
      CAPTURE(m);
      CAPTURE(n);
      REQUIRE(c.q == q);
      REQUIRE(c.admissible == (pp && m > 2 && n > 2));
      REQUIRE(c.agreeable == distinct);
      REQUIRE(c.optimal_pair == optimal);
      REQUIRE(c.perfect_eligible == (m % 2 == 1 && n % 2 == 1 && std::gcd(m, n) == 1));
      REQUIRE(c.m_o == mo);
      REQUIRE(c.lcm_odd == std::lcm(mo, no));
    }
  }
}

TEST_CASE("agreeable_parameters") {
  auto p = agreeable_parameters(6, 15);
  CHECK(p.m1 == 3);
  CHECK(p.n1 == 5);
  CHECK(p.m2 == 2);
  CHECK(p.n2 == 3);
  CHECK(p.e == 6);
  p = agreeable_parameters(15, 15);
  CHECK(p.m1 == 3);
  CHECK(p.n1 == 5);
  p = agreeable_parameters(9, 19);
  CHECK(p.m1 == 9);
  CHECK(p.n1 == 19);
  CHECK(kind_of([] { agreeable_parameters(3, 4); }) == ErrorKind::NotAgreeable);
  CHECK(kind_of([] { agreeable_parameters(9, 3); }) == ErrorKind::NotAgreeable);

  // Every optimal pair up to 200 gets a coprime split of lcm(m_o, n_o).
  for (std::uint64_t m = 1; m <= 200; ++m) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      const auto c = classify_pair(m, n);
      if (!c.agreeable) continue;
      const auto ap = agreeable_parameters(m, n);
      CAPTURE(m);
      CAPTURE(n);
      REQUIRE(ap.m1 > 1);
      REQUIRE(ap.n1 > 1);
      REQUIRE(std::gcd(ap.m1, ap.n1) == 1);
      REQUIRE(c.m_o % ap.m1 == 0);
      REQUIRE(c.n_o % ap.n1 == 0);
      REQUIRE(ap.m1 * ap.m2 == m);
      REQUIRE(ap.n1 * ap.n2 == n);
      if (c.optimal_pair) REQUIRE(ap.m1 * ap.n1 == c.lcm_odd);
    }
  }
}

TEST_CASE("perfect construction") {
  const auto a = construct_perfect(3, 5);
  const auto f = a.field();
  CHECK(f->q() == 31);
  const auto fac = rank_one_factors(a);
  REQUIRE(fac.has_value());
  CHECK(oracle::codes(fac->x) == std::set<std::uint32_t>{1, 5, 25});
  CHECK(oracle::codes(fac->y) == std::set<std::uint32_t>{1, 2, 4, 8, 16});

  const Matrix shown = from_rows({{1, 2, 4, 8, 16}, {5, 10, 20, 9, 18}, {25, 19, 7, 14, 28}});
  const std::vector<Element> x{Element{1}, Element{5}, Element{25}};
  const std::vector<Element> y{Element{1}, Element{2}, Element{4}, Element{8}, Element{16}};
  CHECK(rank_one_array(f, x, y).entries() == shown);
  CHECK(perm_equivalent(a.entries(), shown));
  CHECK(render_text(HeffterArray(f, shown)).rfind("1 2 4 8 16\n", 0) == 0);

  const auto big = construct_perfect(9, 19);
  CHECK(big.field()->q() == 343);
  CHECK(big.field()->k() == 3);
  CHECK(verify_heffter(big).is_heffter());

  CHECK(kind_of([] { construct_perfect(3, 3); }) == ErrorKind::NotPerfectEligible);
  CHECK(kind_of([] { construct_perfect(4, 4); }) == ErrorKind::NotAdmissible);
  CHECK(kind_of([] { construct_perfect(5, 5); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("agreeable construction reproduces the displayed H(6,15)") {
  const auto a = construct_agreeable(6, 15);
  CHECK(a.entries() == fixtures::array("h6_15.json").entries());
  const auto fac = rank_one_factors(a);
  REQUIRE(fac.has_value());
  CHECK(fac->x == std::vector<Element>{Element{1}, Element{48}, Element{132}, Element{2}, Element{96}, Element{83}});
  CHECK(fac->y.size() == 15);
  CHECK(fac->y[1] == Element{59});
  CHECK(multiplier_group_rank_one(a).elements.size() == 15);
}

TEST_CASE("agreeable construction structure and errors") {
  // Degenerate split m2 = n2 = 1 gives the subgroups of orders 3 and 5.
  const auto a = construct_agreeable(3, 5, AgreeableParams{3, 5, 1, 1, 1});
  const auto fac = rank_one_factors(a);
  REQUIRE(fac.has_value());
  CHECK(oracle::codes(fac->x) == std::set<std::uint32_t>{1, 5, 25});
  CHECK(oracle::codes(fac->y) == std::set<std::uint32_t>{1, 2, 4, 8, 16});

  for (auto [m, n] : {std::pair{6ull, 15ull}, {3ull, 7ull}, {5ull, 6ull}, {9ull, 10ull}}) {
    const auto c = classify_pair(m, n);
    if (!c.admissible) continue;
    const auto arr = construct_agreeable(m, n);
    const auto f = arr.field();
    const auto ap = agreeable_parameters(m, n);
    const auto rf = rank_one_factors(arr);
    REQUIRE(rf.has_value());
    const auto prod = product_factorization(ElementSet::from_elements(f, rf->x), ElementSet::from_elements(f, rf->y));
    REQUIRE(prod.has_value());
    std::vector<Element> expected;
    const auto e = static_cast<std::uint32_t>(ap.e);
    for (std::uint32_t i = 0; i < e; ++i)
      for (auto z : cyclotomic_class(f, {2 * e, i}).elements()) expected.push_back(z);
    CHECK(*prod == ElementSet::from_elements(f, expected));
    CHECK(is_half_set(*prod));
  }

  CHECK(kind_of([] { construct_agreeable(4, 4); }) == ErrorKind::NotAdmissible);
  CHECK(kind_of([] { construct_agreeable(3, 4); }) == ErrorKind::NotAgreeable);
  CHECK(kind_of([] { construct_agreeable(6, 15, AgreeableParams{5, 3, 0, 0, 0}); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { construct_agreeable(6, 15, AgreeableParams{3, 3, 0, 0, 0}); }) == ErrorKind::InvalidParams);
}
