// Row/column permutation equivalence, multiplier groups and prime-field
// isomorphism.

#include <algorithm>
#include <map>

#include "heffter/error.hpp"
#include "heffter/heffter_array.hpp"
#include "heffter/kernels.hpp"

namespace heffter {

namespace {

std::vector<Element> sorted(std::span<const Element> line) {
  std::vector<Element> v(line.begin(), line.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::vector<Element>> sorted_lines(const Matrix& a, bool by_rows) {
  std::vector<std::vector<Element>> out;
  if (by_rows) {
    for (std::size_t i = 0; i < a.rows; ++i) out.push_back(sorted(a.row(i)));
  } else {
    for (std::size_t j = 0; j < a.cols; ++j) out.push_back(sorted(a.column(j)));
  }
  return out;
}

// Backtracking over row assignments. Columns are tracked by class ids shared
// between A and B: two columns share an id at depth d iff their entries in the
// first d assigned rows agree. A column permutation completing the current
// row assignment exists iff the id multisets coincide.
class RowMatcher {
 public:
  RowMatcher(const Matrix& a, const Matrix& b) : a_(a), b_(b) {
    const auto sa = sorted_lines(a, true);
    const auto sb = sorted_lines(b, true);
    candidates_.resize(b.rows);
    for (std::size_t i = 0; i < b.rows; ++i) {
      for (std::size_t r = 0; r < a.rows; ++r) {
        if (sa[r] == sb[i]) candidates_[i].push_back(r);
      }
    }
    used_.assign(a.rows, false);
    ids_a_.assign(b.rows + 1, std::vector<std::uint32_t>(a.cols, 0));
    ids_b_.assign(b.rows + 1, std::vector<std::uint32_t>(a.cols, 0));
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == b_.rows) return true;
    for (std::size_t r : candidates_[depth]) {
      if (used_[r]) continue;
      if (!refine(depth, r)) continue;
      used_[r] = true;
      if (extend(depth + 1)) return true;
      used_[r] = false;
    }
    return false;
  }

  bool refine(std::size_t depth, std::size_t a_row) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
    auto id_of = [&](std::uint32_t prev, Element v) {
      auto [it, inserted] = ids.try_emplace({prev, v.code}, static_cast<std::uint32_t>(ids.size()));
      return it->second;
    };
    auto& next_a = ids_a_[depth + 1];
    auto& next_b = ids_b_[depth + 1];
    for (std::size_t j = 0; j < a_.cols; ++j) {
      next_a[j] = id_of(ids_a_[depth][j], a_(a_row, j));
      next_b[j] = id_of(ids_b_[depth][j], b_(depth, j));
    }
    auto sa = next_a;
    auto sb = next_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  const Matrix& a_;
  const Matrix& b_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<bool> used_;
  std::vector<std::vector<std::uint32_t>> ids_a_;
  std::vector<std::vector<std::uint32_t>> ids_b_;
};

std::vector<std::uint32_t> nonzero_logs(const Field& f, const Matrix& m) {
  std::vector<std::uint32_t> logs;
  logs.reserve(m.data.size());
  for (Element e : m.data) {
    if (e != f.zero()) logs.push_back(f.log_or_none(e));
  }
  return logs;
}

}  // namespace

bool perm_equivalent(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  if (a.rows == 0 || a.cols == 0) return true;

  auto ra = sorted_lines(a, true), rb = sorted_lines(b, true);
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  if (ra != rb) return false;
  auto ca = sorted_lines(a, false), cb = sorted_lines(b, false);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return false;

  return RowMatcher(a, b).run();
}

MultiplierGroup multiplier_group_brute(const HeffterArray& a) {
  const Field& f = *a.field();
  const std::uint32_t n = f.units();
  const Matrix& entries = a.entries();
  const Matrix transposed = entries.transposed();
  const bool square = a.m() == a.n();

  const auto logs = nonzero_logs(f, entries);
  kernels::MarkTable table(n);
  for (auto l : logs) table.mark(l);

  std::vector<std::uint32_t> found;
  for (std::uint32_t t = 0; t < n; ++t) {
    // A multiplier must map the entry set onto itself.
    if (kernels::count_marked(logs, t, n, table) != logs.size()) continue;
    const Element u = f.exp(t);
    if (perm_equivalent(scale(f, entries, u), entries) ||
        (square && perm_equivalent(scale(f, transposed, u), entries))) {
      found.push_back(t);
    }
  }
  return MultiplierGroup{ElementSet::from_logs(a.field(), std::move(found)), std::nullopt,
                         std::nullopt};
}

MultiplierGroup multiplier_group_rank_one(const HeffterArray& a) {
  const auto factors = rank_one_factors(a);
  if (!factors) throw Error(ErrorKind::NotRankOne, "array is not rank-one");
  const auto xs = ElementSet::from_elements(a.field(), factors->x);
  const auto ys = ElementSet::from_elements(a.field(), factors->y);
  auto s = stabilizer(xs);
  auto t = stabilizer(ys);
  auto m = product_set(s, t);
  return MultiplierGroup{std::move(m), std::move(s), std::move(t)};
}

bool is_isomorphic_prime(const HeffterArray& a, const HeffterArray& b) {
  const Field& f = *a.field();
  if (f.k() != 1 || b.field()->k() != 1) {
    throw Error(ErrorKind::UnsupportedField, "isomorphism testing is limited to prime fields");
  }
  if (!f.same_as(*b.field())) {
    throw Error(ErrorKind::FieldMismatch, "arrays over different prime fields");
  }
  const std::uint32_t n = f.units();
  const auto logs_a = nonzero_logs(f, a.entries());
  const auto logs_b = nonzero_logs(f, b.entries());
  if (logs_a.size() != logs_b.size()) return false;
  kernels::MarkTable table(n);
  for (auto l : logs_b) table.mark(l);

  const Matrix ta = a.entries().transposed();
  for (std::uint32_t t = 0; t < n; ++t) {
    if (kernels::count_marked(logs_a, t, n, table) != logs_a.size()) continue;
    const Element u = f.exp(t);
    if (perm_equivalent(scale(f, a.entries(), u), b.entries()) ||
        perm_equivalent(scale(f, ta, u), b.entries())) {
      return true;
    }
  }
  return false;
}

}  // namespace heffter
