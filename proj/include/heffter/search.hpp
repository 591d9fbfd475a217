#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "heffter/constructions.hpp"
#include "heffter/heffter_array.hpp"

namespace heffter {

enum class SearchStrategy {
  /// Every zero-sum m-set X containing 1.
  Exhaustive,
  /// X restricted to unions of cosets of the subgroup of order m_o that
  /// contain that subgroup (just the subgroup of order m when m is odd).
  /// Falls back to Exhaustive X when m is a power of two.
  Seeded,
};

std::string_view to_string(SearchStrategy s) noexcept;

struct SearchConfig {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  /// Budget on extension attempts (one per candidate element tried for X or Y).
  std::uint64_t max_candidates = 1'000'000;
  SearchStrategy strategy = SearchStrategy::Exhaustive;
  /// 0 keeps the natural discrete-log order; anything else shuffles it.
  std::uint64_t seed = 0;
};

struct SearchOutcome {
  std::optional<HeffterArray> found;
  std::uint64_t candidates_examined = 0;
  /// The whole strategy space was enumerated without success.
  bool exhausted = false;
};

/// Looks for zero-sum X (|X| = m) and Y (|Y| = n), both containing 1, with
/// X * Y a half-set; returns [x_i y_j]. Throws NotAdmissible or
/// InvalidArgument (max_candidates == 0).
SearchOutcome search_rank_one(const SearchConfig& config);

/// classify_pair(m, n) for all 3 <= m <= n with 2mn + 1 <= max_q, ordered by
/// q and then m.
std::vector<PairClass> scan_pairs(std::uint64_t max_q);

}  // namespace heffter
