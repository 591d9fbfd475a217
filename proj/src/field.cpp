#include "heffter/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "heffter/error.hpp"

namespace heffter {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, constant first

// a*b mod (monic f of degree k), all coefficients mod p.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t t = 0; t < k; ++t) {
      prod[d - k + t] = (prod[d - k + t] + (p - c) * f[t]) % p;
    }
    prod[d] = 0;
  }
  return Poly(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(k));
}

Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result(f.size() - 1, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

bool root_is_primitive(const Poly& f, std::uint64_t p, std::uint64_t q) {
  const std::size_t k = f.size() - 1;
  if (f[0] == 0) return false;
  Poly x(k, 0);
  if (k == 1) {
    x[0] = static_cast<std::uint32_t>((p - f[0]) % p);
  } else {
    x[1] = 1;
  }
  Poly one(k, 0);
  one[0] = 1;
  if (powmod(x, q - 1, f, p) != one) return false;
  for (auto s : prime_divisors(q - 1)) {
    if (powmod(x, (q - 1) / s, f, p) == one) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint32_t smallest_primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto primes = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto s : primes) {
      if (mod_pow(g, (p - 1) / s, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return static_cast<std::uint32_t>(g);
  }
  return 1;
}

}  // namespace

FieldPtr make_field(std::uint64_t p, std::uint32_t k,
                    std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, "make_field: p is not prime");
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "make_field: k must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > Field::kMaxOrder) {
      throw Error(ErrorKind::InvalidArgument, "make_field: field order too large");
    }
  }

  Poly chosen;
  if (k == 1) {
    if (modulus) {
      throw Error(ErrorKind::InvalidArgument,
                  "make_field: a modulus is only meaningful for k > 1");
    }
  } else if (modulus) {
    const Poly& f = *modulus;
    if (f.size() != k + 1 || f.back() != 1 ||
        std::any_of(f.begin(), f.end(), [p](std::uint32_t c) { return c >= p; })) {
      throw Error(ErrorKind::InvalidArgument,
                  "make_field: modulus must be monic of degree k with coefficients in [0,p)");
    }
    if (!root_is_primitive(f, p, q)) {
      throw Error(ErrorKind::InvalidModulus,
                  "make_field: modulus is reducible or not primitive");
    }
    chosen = f;
  } else {
    // Low coefficients enumerated by increasing code; the leading 1 is fixed.
    const std::uint64_t count = q;
    for (std::uint64_t code = 0; code < count && chosen.empty(); ++code) {
      Poly f(k + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t t = 0; t < k; ++t) {
        f[t] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[k] = 1;
      if (root_is_primitive(f, p, q)) chosen = std::move(f);
    }
  }

  return FieldPtr(new Field(static_cast<std::uint32_t>(p), k, std::move(chosen)));
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  q_ = q;
  build_tables();
}

std::uint32_t Field::times_root(std::uint32_t code) const {
  if (k_ == 1) {
    return static_cast<std::uint32_t>(std::uint64_t{code} * exp_[1] % p_);
  }
  std::uint32_t digits[64];
  for (std::uint32_t t = 0; t < k_; ++t) {
    digits[t] = code % p_;
    code /= p_;
  }
  const std::uint32_t top = digits[k_ - 1];
  std::uint32_t out = 0;
  for (std::uint32_t t = k_; t-- > 0;) {
    const std::uint32_t lower = t == 0 ? 0 : digits[t - 1];
    const std::uint32_t sub = static_cast<std::uint32_t>(std::uint64_t{top} * modulus_[t] % p_);
    out = out * p_ + (lower + p_ - sub) % p_;
  }
  return out;
}

void Field::build_tables() {
  const std::uint32_t n = units();
  exp_.assign(n, 0);
  log_.assign(q_, kNoLog);
  exp_[0] = 1;
  if (n > 1) {
    exp_[1] = k_ == 1 ? smallest_primitive_root(p_) : p_;  // g has code p
  }
  for (std::uint32_t t = 2; t < n; ++t) exp_[t] = times_root(exp_[t - 1]);
  for (std::uint32_t t = 0; t < n; ++t) log_[exp_[t]] = t;

  zech_.assign(n, kNoLog);
  for (std::uint32_t t = 0; t < n; ++t) {
    zech_[t] = log_[add_coefficientwise(one(), Element{exp_[t]}).code];
  }
}

Element Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t pp = p_;
  return Element{static_cast<std::uint32_t>(((v % pp) + pp) % pp)};
}

Element Field::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != k_) {
    throw Error(ErrorKind::InvalidArgument, "from_coeffs: expected exactly k coefficients");
  }
  std::uint32_t code = 0;
  for (std::size_t t = k_; t-- > 0;) code = code * p_ + from_int(coeffs[t]).code;
  return Element{code};
}

std::vector<std::uint32_t> Field::coeffs(Element a) const {
  std::vector<std::uint32_t> out(k_);
  std::uint32_t code = a.code;
  for (std::uint32_t t = 0; t < k_; ++t) {
    out[t] = code % p_;
    code /= p_;
  }
  return out;
}

Element Field::add_coefficientwise(Element a, Element b) const noexcept {
  if (k_ == 1) return Element{(a.code + b.code) % p_};
  std::uint32_t x = a.code, y = b.code, out = 0, scale = 1;
  for (std::uint32_t t = 0; t < k_; ++t) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Element{out};
}

Element Field::add(Element a, Element b) const noexcept {
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  const std::uint32_t n = units();
  const std::uint32_t la = log_[a.code];
  const std::uint32_t lb = log_[b.code];
  const std::uint32_t z = zech_[lb >= la ? lb - la : lb + n - la];
  if (z == kNoLog) return zero();
  return Element{exp_[(std::uint64_t{la} + z) % n]};
}

Element Field::neg(Element a) const noexcept {
  if (a.code == 0 || p_ == 2) return a;
  if (k_ == 1) return Element{p_ - a.code};
  return Element{exp_[(std::uint64_t{log_[a.code]} + log_minus_one()) % units()]};
}

Element Field::mul(Element a, Element b) const noexcept {
  if (a.code == 0 || b.code == 0) return zero();
  return Element{exp_[(std::uint64_t{log_[a.code]} + log_[b.code]) % units()]};
}

Element Field::inv(Element a) const {
  if (a.code == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t la = log_[a.code];
  return Element{exp_[la == 0 ? 0 : units() - la]};
}

Element Field::pow(Element a, std::int64_t e) const {
  if (a.code == 0) {
    if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t n = units();
  const std::int64_t em = ((e % n) + n) % n;
  return Element{exp_[static_cast<std::uint64_t>(
      (static_cast<__int128>(log_[a.code]) * em) % n)]};
}

std::uint32_t Field::log(Element a) const {
  if (a.code == 0 || a.code >= q_) {
    throw Error(ErrorKind::InvalidArgument, "discrete log of zero or foreign element");
  }
  return log_[a.code];
}

std::string Field::to_string(Element a) const {
  if (k_ == 1) return std::to_string(a.code);
  if (a.code == 0) return "0";
  const auto c = coeffs(a);
  std::string out;
  for (std::uint32_t t = k_; t-- > 0;) {
    if (c[t] == 0) continue;
    if (!out.empty()) out += '+';
    if (c[t] != 1 || t == 0) out += std::to_string(c[t]);
    if (t >= 1) out += 'g';
    if (t >= 2) out += '^' + std::to_string(t);
  }
  return out;
}

namespace {

[[noreturn]] void bad_element(std::string_view text) {
  throw Error(ErrorKind::ParseError, "cannot parse field element '" + std::string(text) + "'");
}

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

Element Field::parse(std::string_view text) const {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) bad_element(text);

  if (k_ == 1) {
    const bool negative = s.front() == '-';
    std::uint64_t v = 0;
    if (!parse_uint(std::string_view(s).substr(negative ? 1 : 0), v)) bad_element(text);
    v %= p_;
    return negative ? neg(Element{static_cast<std::uint32_t>(v)})
                    : Element{static_cast<std::uint32_t>(v)};
  }

  Element acc = zero();
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t plus = std::min(s.find('+', start), s.size());
    const std::string_view term = std::string_view(s).substr(start, plus - start);
    if (term.empty()) bad_element(text);
    const std::size_t gpos = term.find('g');
    std::uint64_t coef = 1, power = 0;
    if (gpos == std::string_view::npos) {
      if (!parse_uint(term, coef)) bad_element(text);
    } else {
      if (gpos > 0 && !parse_uint(term.substr(0, gpos), coef)) bad_element(text);
      const auto rest = term.substr(gpos + 1);
      if (rest.empty()) {
        power = 1;
      } else if (rest.front() != '^' || !parse_uint(rest.substr(1), power)) {
        bad_element(text);
      }
    }
    const Element root{k_ == 1 ? exp_[1] : p_};
    acc = add(acc, mul(from_int(static_cast<std::int64_t>(coef % p_)),
                       pow(root, static_cast<std::int64_t>(power))));
    start = plus + 1;
  }
  return acc;
}

bool Field::same_as(const Field& other) const noexcept {
  return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

// FieldElement

namespace {

const Field& common_field(const FieldElement& a, const FieldElement& b) {
  if (a.field().get() != b.field().get() && !a.field()->same_as(*b.field())) {
    throw Error(ErrorKind::FieldMismatch, "operands belong to different fields");
  }
  return *a.field();
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, Element value)
    : field_(std::move(field)), value_(value) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "FieldElement: null field");
  if (!field_->contains(value_)) {
    throw Error(ErrorKind::InvalidArgument, "FieldElement: code out of range");
  }
}

FieldElement FieldElement::from_coeffs(FieldPtr field, std::span<const std::int64_t> coeffs) {
  const Element v = field->from_coeffs(coeffs);
  return FieldElement(std::move(field), v);
}

FieldElement FieldElement::parse(FieldPtr field, std::string_view text) {
  const Element v = field->parse(text);
  return FieldElement(std::move(field), v);
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common_field(a, b).add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common_field(a, b).sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common_field(a, b).mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return {a.field_, common_field(a, b).div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.value_ == b.value_ && a.field_->same_as(*b.field_);
}

std::uint32_t discrete_log(const Field& f, const FieldElement& x) {
  if (!f.same_as(*x.field())) {
    throw Error(ErrorKind::FieldMismatch, "discrete_log: element from another field");
  }
  return f.log(x.value());
}

}  // namespace heffter
