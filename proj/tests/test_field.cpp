#include <random>

#include "doctest.h"
#include "heffter/error.hpp"
#include "heffter/field.hpp"
#include "heffter/number_theory.hpp"
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

}  // namespace

TEST_CASE("prime_power_decompose") {
  CHECK(prime_power_decompose(343) == PrimePower{7, 3});
  CHECK_FALSE(prime_power_decompose(6751).has_value());
  CHECK(prime_power_decompose(19) == PrimePower{19, 1});
  CHECK(prime_power_decompose(2) == PrimePower{2, 1});
  CHECK(prime_power_decompose(1024) == PrimePower{2, 10});
  CHECK_FALSE(prime_power_decompose(33).has_value());
  CHECK(kind_of([] { prime_power_decompose(1); }) == ErrorKind::InvalidArgument);

  // Brute-force agreement: n is a prime power iff it has exactly one prime divisor.
  for (std::uint64_t n = 2; n < 3000; ++n) {
    std::uint64_t m = n, p = 0;
    int primes = 0;
    for (std::uint64_t d = 2; d <= m; ++d) {
      if (m % d == 0) {
        ++primes;
        p = d;
        while (m % d == 0) m /= d;
      }
    }
    const auto pp = prime_power_decompose(n);
    REQUIRE(pp.has_value() == (primes == 1));
    if (pp) CHECK(pp->p == p);
  }
}

TEST_CASE("odd part and radical") {
  CHECK(odd_part(12) == 3);
  CHECK(radical(12) == 6);
  CHECK(radical(1) == 1);
  CHECK(odd_part(15) == 15);
  CHECK(radical(225) == 15);
  CHECK(kind_of([] { radical(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("make_field canonical choices") {
  const auto f25 = make_field(5, 2);
  CHECK(f25->modulus() == std::vector<std::uint32_t>{2, 1, 1});
  CHECK(f25->q() == 25);

  const auto f19 = make_field(19, 1);
  CHECK(f19->primitive().code == 2);
  CHECK(f19->pow(f19->from_int(2), 9).code == 18);
  CHECK(make_field(181, 1)->primitive().code == 2);

  // Independent canonical-modulus oracle: enumerate monic polynomials by code.
  for (auto [p, k] : oracle::prime_powers_up_to(400)) {
    if (k == 1) {
      std::uint32_t r = 1;
      oracle::NaiveField nf{p, 1, p, {}};
      while (nf.order(r) != p - 1) ++r;
      CHECK(make_field(p, 1)->primitive().code == r);
      continue;
    }
    const std::uint32_t q = make_field(p, k)->q();
    std::vector<std::uint32_t> expected;
    for (std::uint32_t c = 0; c < q && expected.empty(); ++c) {
      std::vector<std::uint32_t> mod(k + 1);
      std::uint32_t x = c;
      for (std::uint32_t t = 0; t < k; ++t) {
        mod[t] = x % p;
        x /= p;
      }
      mod[k] = 1;
      if (mod[0] == 0) continue;
      oracle::NaiveField nf{p, k, q, mod};
      if (nf.order(p) == q - 1) expected = mod;  // code p is the root g
    }
    CAPTURE(p);
    CAPTURE(k);
    CHECK(make_field(p, k)->modulus() == expected);
  }
}

TEST_CASE("make_field errors and determinism") {
  CHECK(kind_of([] { make_field(6, 1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { make_field(5, 0); }) == ErrorKind::InvalidArgument);
  // x^2 + 1 is reducible over F_5; x^2 + 2 is irreducible but not primitive.
  CHECK(kind_of([] { make_field(5, 2, std::vector<std::uint32_t>{1, 0, 1}); }) == ErrorKind::InvalidModulus);
  CHECK(kind_of([] { make_field(5, 2, std::vector<std::uint32_t>{2, 0, 1}); }) == ErrorKind::InvalidModulus);
  CHECK(kind_of([] { make_field(5, 2, std::vector<std::uint32_t>{2, 1, 2}); }) == ErrorKind::InvalidArgument);

  const auto a = make_field(7, 3), b = make_field(7, 3);
  CHECK(a->modulus() == b->modulus());
  CHECK(a->exp_table() == b->exp_table());
  CHECK(a->same_as(*b));
}

TEST_CASE("arithmetic examples") {
  const auto f25 = make_field(5, 2);
  const auto a = FieldElement::parse(f25, "3g+1");
  const auto g = FieldElement::parse(f25, "g");
  CHECK((a * g).to_string() == "3g+4");
  CHECK(FieldElement::parse(f25, "0").to_string() == "0");
  CHECK(FieldElement::parse(f25, "4g+2").coeffs() == std::vector<std::uint32_t>{2, 4});

  const auto f19 = make_field(19, 1);
  CHECK(f19->neg(f19->from_int(4)).code == 15);
  const auto f31 = make_field(31, 1);
  CHECK(f31->pow(f31->from_int(2), 5) == f31->one());
  CHECK(f31->mul(f31->pow(f31->from_int(3), -1), f31->from_int(3)) == f31->one());

  CHECK(kind_of([&] { f19->inv(f19->zero()); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { (void)(FieldElement(f19, f19->one()) + FieldElement(f31, f31->one())); }) ==
        ErrorKind::FieldMismatch);
  CHECK(kind_of([&] { f25->parse("2h"); }) == ErrorKind::ParseError);
}

TEST_CASE("discrete_log") {
  const auto f181 = make_field(181, 1);
  CHECK(discrete_log(*f181, FieldElement(f181, f181->from_int(48))) == 60);
  CHECK(discrete_log(*f181, FieldElement(f181, f181->one())) == 0);
  CHECK(discrete_log(*f181, FieldElement(f181, f181->from_int(2))) == 1);
  CHECK(f181->pow(f181->from_int(2), 60).code == 48);
  CHECK(kind_of([&] { discrete_log(*f181, FieldElement(f181, f181->zero())); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("primitive element order for every field up to 10^4") {
  for (auto [p, k] : oracle::prime_powers_up_to(10000)) {
    const auto f = make_field(p, k);
    const Element r = f->primitive();
    CHECK(f->pow(r, f->units()) == f->one());
    for (auto s : prime_divisors(f->units())) CHECK(f->pow(r, f->units() / s) != f->one());
  }
}

TEST_CASE("arithmetic against the naive oracle") {
  std::mt19937_64 rng(12345);
  for (auto [p, k] : {std::pair{5u, 2u}, {7u, 3u}, {2u, 5u}, {3u, 4u}, {181u, 1u}, {2u, 1u}, {11u, 2u}}) {
    const auto f = make_field(p, k);
    const auto nf = oracle::NaiveField::of(*f);
    std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
    for (int it = 0; it < 10000; ++it) {
      const Element a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      REQUIRE(f->add(a, b).code == nf.add(a.code, b.code));
      REQUIRE(f->add(a, b) == f->add_coefficientwise(a, b));
      REQUIRE(f->mul(a, b).code == nf.mul(a.code, b.code));
      REQUIRE(f->neg(a).code == nf.neg(a.code));
      // Associativity and distributivity.
      REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      REQUIRE(f->sub(f->add(a, b), b) == a);
      if (b != f->zero()) REQUIRE(f->mul(f->div(a, b), b) == a);
      if (a != f->zero() && b != f->zero()) {
        REQUIRE((f->log(a) + f->log(b)) % f->units() == f->log(f->mul(a, b)));
      }
    }
  }
}

TEST_CASE("text rendering round trip") {
  for (auto [p, k] : {std::pair{5u, 2u}, {7u, 3u}, {19u, 1u}}) {
    const auto f = make_field(p, k);
    for (std::uint32_t c = 0; c < f->q(); ++c) CHECK(f->parse(f->to_string(Element{c})).code == c);
  }
  const auto f25 = make_field(5, 2);
  CHECK(f25->to_string(f25->parse("g")) == "g");
  CHECK(f25->to_string(f25->from_coeffs(std::vector<std::int64_t>{4, 1})) == "g+4");
  CHECK(make_field(19, 1)->parse("-4").code == 15);
}
