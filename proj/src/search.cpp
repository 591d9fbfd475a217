#include "heffter/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "heffter/error.hpp"
#include "heffter/kernels.hpp"

namespace heffter {

std::string_view to_string(SearchStrategy s) noexcept {
  return s == SearchStrategy::Seeded ? "seeded" : "exhaustive";
}

namespace {

// Everything is done on discrete logs. Y is grown while keeping the sets
// x*y and -x*y (x in X, y in Y) pairwise distinct; once |Y| = n they cover all
// q-1 units, which is exactly "X*Y is a half-set with distinct products".
class Searcher {
 public:
  Searcher(FieldPtr field, const SearchConfig& cfg)
      : field_(std::move(field)),
        f_(*field_),
        units_(f_.units()),
        half_(f_.log_minus_one()),
        cfg_(cfg),
        covered_(units_),
        x_marks_(units_) {
    order_.resize(units_ - 1);
    std::iota(order_.begin(), order_.end(), 1u);
    if (cfg.seed != 0) {
      std::mt19937_64 rng(cfg.seed);
      std::shuffle(order_.begin(), order_.end(), rng);
    }
    position_.assign(units_, 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
  }

  SearchOutcome run() {
    x_ = {0};
    x_marks_.mark(0);
    x_marks_.mark(half_);
    const std::uint64_t m_odd = odd_part(cfg_.m);
    if (cfg_.strategy == SearchStrategy::Seeded && m_odd > 1) {
      seeded_x(m_odd);
    } else {
      choose_x(0, f_.one());
    }
    SearchOutcome out;
    out.candidates_examined = examined_;
    if (found_) {
      std::vector<Element> xs, ys;
      for (auto l : found_x_) xs.push_back(f_.exp(l));
      for (auto l : found_y_) ys.push_back(f_.exp(l));
      out.found = rank_one_array(field_, xs, ys);
    }
    out.exhausted = !found_ && !out_of_budget_;
    return out;
  }

 private:
  bool done() const noexcept { return found_ || out_of_budget_; }

  bool tick() {
    if (examined_ >= cfg_.max_candidates) {
      out_of_budget_ = true;
      return false;
    }
    ++examined_;
    return true;
  }

  bool x_admits(std::uint32_t l) const { return !x_marks_.marked(l); }

  void push_x(std::uint32_t l) {
    x_.push_back(l);
    x_marks_.mark(l);
    x_marks_.mark(neg_log(l));
  }
  void pop_x() {
    const auto l = x_.back();
    x_.pop_back();
    x_marks_.unmark(l);
    x_marks_.unmark(neg_log(l));
  }

  std::uint32_t neg_log(std::uint32_t l) const {
    const std::uint32_t v = l + half_;
    return v >= units_ ? v - units_ : v;
  }

  // Zero-sum m-sets containing 1, in order_ order; the last element is forced.
  void choose_x(std::size_t start, Element sum) {
    if (done()) return;
    if (x_.size() + 1 == cfg_.m) {
      const Element last = f_.neg(sum);
      if (last == f_.zero() || !tick()) return;
      const std::uint32_t l = f_.log_or_none(last);
      if (l == 0 || position_[l] < start || !x_admits(l)) return;
      push_x(l);
      search_y();
      pop_x();
      return;
    }
    for (std::size_t pos = start; pos < order_.size() && !done(); ++pos) {
      const std::uint32_t l = order_[pos];
      if (!tick()) return;
      if (!x_admits(l)) continue;
      push_x(l);
      choose_x(pos + 1, f_.add(sum, f_.exp(l)));
      pop_x();
    }
  }

  // X = H plus further cosets r^c H of the subgroup H of order m_odd.
  void seeded_x(std::uint64_t m_odd) {
    const std::uint32_t step = static_cast<std::uint32_t>(units_ / m_odd);
    x_.clear();
    x_marks_.clear();
    auto push_coset = [&](std::uint32_t c) {
      for (std::uint64_t t = 0; t < m_odd; ++t) push_x(static_cast<std::uint32_t>(c + t * step));
    };
    auto coset_fits = [&](std::uint32_t c) {
      for (std::uint64_t t = 0; t < m_odd; ++t) {
        if (!x_admits(static_cast<std::uint32_t>(c + t * step))) return false;
      }
      return true;
    };
    push_coset(0);
    const std::uint64_t cosets_needed = cfg_.m / m_odd - 1;
    std::vector<std::uint32_t> coset_order(step - 1);
    std::iota(coset_order.begin(), coset_order.end(), 1u);
    if (cfg_.seed != 0) {
      std::mt19937_64 rng(cfg_.seed ^ 0x9e3779b97f4a7c15ull);
      std::shuffle(coset_order.begin(), coset_order.end(), rng);
    }
    // Depth-first over increasing positions in coset_order.
    auto rec = [&](auto&& self, std::size_t start, std::uint64_t left) -> void {
      if (done()) return;
      if (left == 0) {
        search_y();
        return;
      }
      for (std::size_t pos = start; pos < coset_order.size() && !done(); ++pos) {
        if (!tick()) return;
        const std::uint32_t c = coset_order[pos];
        if (!coset_fits(c)) continue;
        push_coset(c);
        self(self, pos + 1, left - 1);
        for (std::uint64_t t = 0; t < m_odd; ++t) pop_x();
      }
    };
    rec(rec, 0, cosets_needed);
  }

  void search_y() {
    if (done()) return;
    x_pm_.clear();
    for (auto l : x_) {
      x_pm_.push_back(l);
      x_pm_.push_back(neg_log(l));
    }
    covered_.clear();
    kernels::mark_rotated(x_pm_, 0, units_, covered_);
    y_ = {0};
    choose_y(0, f_.one());
  }

  bool y_fits(std::uint32_t l) const {
    return kernels::count_marked(x_pm_, l, units_, covered_) == 0;
  }

  void cover(std::uint32_t l) { kernels::mark_rotated(x_pm_, l, units_, covered_); }
  void uncover(std::uint32_t l) {
    for (auto v : x_pm_) {
      const std::uint32_t idx = v + l;
      covered_.unmark(idx >= units_ ? idx - units_ : idx);
    }
  }

  void choose_y(std::size_t start, Element sum) {
    if (done()) return;
    if (y_.size() + 1 == cfg_.n) {
      const Element last = f_.neg(sum);
      if (last == f_.zero() || !tick()) return;
      const std::uint32_t l = f_.log_or_none(last);
      if (l == 0 || position_[l] < start || !y_fits(l)) return;
      found_ = true;
      found_x_ = x_;
      found_y_ = y_;
      found_y_.push_back(l);
      return;
    }
    for (std::size_t pos = start; pos < order_.size() && !done(); ++pos) {
      const std::uint32_t l = order_[pos];
      if (!tick()) return;
      if (!y_fits(l)) continue;
      cover(l);
      y_.push_back(l);
      choose_y(pos + 1, f_.add(sum, f_.exp(l)));
      y_.pop_back();
      uncover(l);
    }
  }

  FieldPtr field_;
  const Field& f_;
  std::uint32_t units_;
  std::uint32_t half_;
  SearchConfig cfg_;

  std::vector<std::uint32_t> order_;
  std::vector<std::size_t> position_;
  kernels::MarkTable covered_;
  kernels::MarkTable x_marks_;  // X and -X
  std::vector<std::uint32_t> x_, x_pm_, y_;

  std::uint64_t examined_ = 0;
  bool out_of_budget_ = false;
  bool found_ = false;
  std::vector<std::uint32_t> found_x_, found_y_;
};

}  // namespace

SearchOutcome search_rank_one(const SearchConfig& config) {
  if (config.max_candidates == 0) {
    throw Error(ErrorKind::InvalidArgument, "search: max_candidates must be >= 1");
  }
  const PairClass c = classify_pair(config.m, config.n);
  if (!c.admissible) {
    throw Error(ErrorKind::NotAdmissible, "search: pair (" + std::to_string(c.m) + "," +
                                              std::to_string(c.n) + ") is not admissible");
  }
  return Searcher(make_field(c.prime_power->p, c.prime_power->k), config).run();
}

std::vector<PairClass> scan_pairs(std::uint64_t max_q) {
  std::vector<PairClass> out;
  for (std::uint64_t m = 3; 2 * m * m + 1 <= max_q; ++m) {
    for (std::uint64_t n = m; 2 * m * n + 1 <= max_q; ++n) out.push_back(classify_pair(m, n));
  }
  std::sort(out.begin(), out.end(), [](const PairClass& a, const PairClass& b) {
    return a.q != b.q ? a.q < b.q : a.m < b.m;
  });
  return out;
}

}  // namespace heffter
