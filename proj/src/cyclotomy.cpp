#include "heffter/cyclotomy.hpp"

#include <algorithm>

#include "heffter/error.hpp"
#include "heffter/kernels.hpp"

namespace heffter {

namespace {

void require_same_field(const ElementSet& a, const ElementSet& b) {
  if (a.field().get() != b.field().get() && !a.field()->same_as(*b.field())) {
    throw Error(ErrorKind::FieldMismatch, "sets belong to different fields");
  }
}

kernels::MarkTable marks_of(const ElementSet& s) {
  kernels::MarkTable table(s.field()->units());
  for (auto l : s.logs()) table.mark(l);
  return table;
}

}  // namespace

ElementSet::ElementSet(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "ElementSet: null field");
}

ElementSet ElementSet::from_elements(FieldPtr field, std::span<const Element> elements) {
  std::vector<std::uint32_t> logs;
  logs.reserve(elements.size());
  for (Element e : elements) {
    if (e.code == 0 || !field->contains(e)) {
      throw Error(ErrorKind::InvalidArgument, "ElementSet: elements must be nonzero field elements");
    }
    logs.push_back(field->log_or_none(e));
  }
  return from_logs(std::move(field), std::move(logs));
}

ElementSet ElementSet::from_logs(FieldPtr field, std::vector<std::uint32_t> logs) {
  ElementSet s(std::move(field));
  for (auto l : logs) {
    if (l >= s.field_->units()) throw Error(ErrorKind::InvalidArgument, "ElementSet: log out of range");
  }
  std::sort(logs.begin(), logs.end());
  logs.erase(std::unique(logs.begin(), logs.end()), logs.end());
  s.logs_ = std::move(logs);
  return s;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(logs_.size());
  for (auto l : logs_) out.push_back(field_->exp(l));
  return out;
}

bool ElementSet::contains(Element a) const {
  if (a.code == 0 || !field_->contains(a)) return false;
  return std::binary_search(logs_.begin(), logs_.end(), field_->log_or_none(a));
}

ElementSet ElementSet::scaled(Element u) const {
  const std::uint32_t shift = field_->log(u);
  std::vector<std::uint32_t> out(logs_.size());
  kernels::rotate_logs(logs_, shift, field_->units(), out);
  return from_logs(field_, std::move(out));
}

ElementSet ElementSet::negated() const { return scaled(field_->minus_one()); }

std::string ElementSet::to_string() const {
  std::string out;
  for (auto l : logs_) {
    if (!out.empty()) out += ',';
    out += field_->to_string(field_->exp(l));
  }
  return out;
}

bool operator==(const ElementSet& a, const ElementSet& b) {
  return a.field_->same_as(*b.field_) && a.logs_ == b.logs_;
}

ElementSet cyclotomic_class(const FieldPtr& field, CosetSpec spec) {
  const std::uint32_t n = field->units();
  if (spec.e == 0 || n % spec.e != 0) {
    throw Error(ErrorKind::InvalidIndex, "cyclotomic_class: e must divide q-1");
  }
  const std::uint32_t d = n / spec.e;
  const std::uint32_t base = static_cast<std::uint32_t>(spec.i % spec.e);
  std::vector<std::uint32_t> logs(d);
  for (std::uint32_t t = 0; t < d; ++t) logs[t] = base + t * spec.e;
  return ElementSet::from_logs(field, std::move(logs));
}

ElementSet subgroup_of_order(const FieldPtr& field, std::uint32_t d) {
  const std::uint32_t n = field->units();
  if (d == 0 || n % d != 0) {
    throw Error(ErrorKind::InvalidOrder, "subgroup_of_order: d must divide q-1");
  }
  return cyclotomic_class(field, {n / d, 0});
}

bool is_zero_sum(const ElementSet& s) {
  const Field& f = *s.field();
  Element sum = f.zero();
  for (auto l : s.logs()) sum = f.add(sum, f.exp(l));
  return sum == f.zero();
}

bool is_half_set(const ElementSet& s) {
  const Field& f = *s.field();
  if (f.q() % 2 == 0) return false;
  if (s.size() != f.units() / 2) return false;
  const auto table = marks_of(s);
  return kernels::count_marked(s.logs(), f.log_minus_one(), f.units(), table) == 0;
}

ElementSet stabilizer(const ElementSet& s) {
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "stabilizer of the empty set");
  const Field& f = *s.field();
  const std::uint32_t n = f.units();
  const auto table = marks_of(s);
  const auto logs = s.logs();
  // Any stabilizing u maps the first element into s, so u = s_j / s_0.
  std::vector<std::uint32_t> found;
  for (auto l : logs) {
    const std::uint32_t shift = l >= logs[0] ? l - logs[0] : l + n - logs[0];
    if (kernels::count_marked(logs, shift, n, table) == logs.size()) found.push_back(shift);
  }
  return ElementSet::from_logs(s.field(), std::move(found));
}

std::optional<ElementSet> product_factorization(const ElementSet& x, const ElementSet& y) {
  require_same_field(x, y);
  if (x.empty() || y.empty()) {
    throw Error(ErrorKind::InvalidArgument, "product_factorization: factors must be nonempty");
  }
  const std::uint32_t n = x.field()->units();
  kernels::MarkTable table(n);
  std::vector<std::uint32_t> logs;
  logs.reserve(x.size() * y.size());
  std::vector<std::uint32_t> row(y.size());
  for (auto lx : x.logs()) {
    if (kernels::count_marked(y.logs(), lx, n, table) != 0) return std::nullopt;
    kernels::rotate_logs(y.logs(), lx, n, row);
    for (auto v : row) table.mark(v);
    logs.insert(logs.end(), row.begin(), row.end());
  }
  return ElementSet::from_logs(x.field(), std::move(logs));
}

ElementSet product_set(const ElementSet& x, const ElementSet& y) {
  require_same_field(x, y);
  const std::uint32_t n = x.field()->units();
  std::vector<std::uint32_t> logs;
  logs.reserve(x.size() * y.size());
  for (auto lx : x.logs()) {
    for (auto ly : y.logs()) logs.push_back(static_cast<std::uint32_t>((std::uint64_t{lx} + ly) % n));
  }
  return ElementSet::from_logs(x.field(), std::move(logs));
}

bool is_union_of_cosets(const ElementSet& s, std::uint32_t d) {
  const std::uint32_t n = s.field()->units();
  if (d == 0 || n % d != 0) {
    throw Error(ErrorKind::InvalidOrder, "is_union_of_cosets: d must divide q-1");
  }
  // Closed under the generator r^{n/d} of the subgroup.
  const auto table = marks_of(s);
  return kernels::count_marked(s.logs(), (n / d) % n, n, table) == s.size();
}

}  // namespace heffter
