#include "doctest.h"
#include "heffter/error.hpp"
#include "heffter/kernels.hpp"
#include "heffter/search.hpp"

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

void check_sound(const SearchOutcome& out) {
  REQUIRE(out.found.has_value());
  const auto r = verify_heffter(*out.found);
  CHECK(r.is_heffter());
  const auto fac = rank_one_factors(*out.found);
  REQUIRE(fac.has_value());
  const auto f = out.found->field();
  const auto sx = stabilizer(ElementSet::from_elements(f, fac->x));
  CHECK(sx.size() % 2 == 1);
  CHECK_FALSE(multiplier_group_rank_one(*out.found).elements.contains(f->minus_one()));
}

}  // namespace

TEST_CASE("search finds the small disagreeable cases") {
  for (auto strategy : {SearchStrategy::Exhaustive, SearchStrategy::Seeded}) {
    for (auto [m, n] : {std::pair{3ull, 3ull}, {3ull, 4ull}, {4ull, 3ull}}) {
      CAPTURE(m);
      CAPTURE(n);
      const auto out = search_rank_one({m, n, 1'000'000, strategy, 0});
      check_sound(out);
      CHECK(out.found->m() == m);
      CHECK(out.candidates_examined <= 1'000'000);
    }
  }
}

TEST_CASE("search determinism and seeds") {
  const SearchConfig cfg{3, 4, 1'000'000, SearchStrategy::Exhaustive, 17};
  const auto a = search_rank_one(cfg), b = search_rank_one(cfg);
  REQUIRE(a.found.has_value());
  CHECK(*a.found == *b.found);
  CHECK(a.candidates_examined == b.candidates_examined);
  check_sound(search_rank_one({3, 6, 1'000'000, SearchStrategy::Seeded, 5}));
}

TEST_CASE("search result does not depend on the kernel variant") {
  const auto saved = kernels::active_isa();
  const SearchConfig cfg{3, 6, 1'000'000, SearchStrategy::Exhaustive, 0};
  kernels::set_active_isa(kernels::Isa::Scalar);
  const auto a = search_rank_one(cfg);
  const bool have_simd = kernels::set_active_isa(kernels::Isa::Avx2);
  const auto b = search_rank_one(cfg);
  kernels::set_active_isa(saved);
  REQUIRE(a.found.has_value());
  CHECK(*a.found == *b.found);
  CHECK(a.candidates_examined == b.candidates_examined);
  if (!have_simd) MESSAGE("SIMD variant unavailable; compared scalar with itself");
}

TEST_CASE("search budget and errors") {
  const auto out = search_rank_one({3, 3, 1, SearchStrategy::Exhaustive, 0});
  CHECK_FALSE(out.found.has_value());
  CHECK_FALSE(out.exhausted);
  CHECK(out.candidates_examined <= 1);
  CHECK(kind_of([] { search_rank_one({4, 4, 10, SearchStrategy::Exhaustive, 0}); }) == ErrorKind::NotAdmissible);
  CHECK(kind_of([] { search_rank_one({3, 3, 0, SearchStrategy::Exhaustive, 0}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("scan_pairs") {
  auto rows = scan_pairs(31);
  REQUIRE(rows.size() >= 3);
  CHECK(rows[0].m == 3);
  CHECK(rows[0].n == 3);
  CHECK_FALSE(rows[0].agreeable);
  CHECK(rows[1].q == 25);
  CHECK_FALSE(rows[1].agreeable);
  CHECK(rows[2].q == 31);
  CHECK(rows[2].optimal_pair);
  CHECK(scan_pairs(18).empty());

  // Up to 42 only (3,5) is agreeable; (3,7) with q = 43 joins below 50.
  const auto agreeable_in = [](std::uint64_t max_q) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const auto& c : scan_pairs(max_q))
      if (c.admissible && c.agreeable) out.emplace_back(c.m, c.n);
    return out;
  };
  CHECK(agreeable_in(42) == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 5}});
  CHECK(agreeable_in(50) == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 5}, {3, 7}});

  rows = scan_pairs(400);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& c = rows[i];
    const auto fresh = classify_pair(c.m, c.n);
    CHECK(fresh.admissible == c.admissible);
    CHECK(fresh.agreeable == c.agreeable);
    CHECK(c.m <= c.n);
    CHECK(c.q <= 400);
    if (i > 0) CHECK((rows[i - 1].q < c.q || (rows[i - 1].q == c.q && rows[i - 1].m < c.m)));
  }
}
