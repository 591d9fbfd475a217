#include "heffter/document.hpp"

#include <algorithm>

#include "heffter/error.hpp"

namespace heffter {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& what) {
  throw Error(ErrorKind::SchemaError, "schema error: " + what);
}

std::uint64_t get_uint(const json& obj, const char* key) {
  if (!obj.contains(key)) schema(std::string("missing \"") + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_unsigned()) schema(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

Element decode_entry(const Field& f, const json& v) {
  std::vector<std::int64_t> coeffs;
  if (v.is_number_unsigned() && f.k() == 1) {
    coeffs.push_back(v.get<std::int64_t>());
  } else if (v.is_array() && v.size() == f.k()) {
    for (const json& c : v) {
      if (!c.is_number_unsigned()) schema("coefficients must be non-negative integers");
      coeffs.push_back(c.get<std::int64_t>());
    }
  } else {
    schema("each entry must be a list of k coefficients");
  }
  for (auto c : coeffs) {
    if (c >= static_cast<std::int64_t>(f.p())) schema("coefficient out of range [0,p)");
  }
  const Element e = f.from_coeffs(coeffs);
  if (e == f.zero()) schema("entries must be nonzero");
  return e;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string serialize(const HeffterArray& a, const std::optional<Provenance>& provenance) {
  const Field& f = *a.field();
  json doc;
  json field = {{"p", f.p()}, {"k", f.k()}};
  if (f.k() > 1) field["modulus"] = f.modulus();
  doc["field"] = field;
  doc["m"] = a.m();
  doc["n"] = a.n();
  json rows = json::array();
  for (std::size_t i = 0; i < a.m(); ++i) {
    json row = json::array();
    for (Element e : a.entries().row(i)) row.push_back(f.coeffs(e));
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  if (provenance) doc["provenance"] = {{"method", provenance->method}, {"params", provenance->params}};
  return doc.dump();
}

ArrayDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte);
    throw Error(ErrorKind::ParseError, "parse error at line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) schema("document must be a JSON object");
  if (!doc.contains("field") || !doc["field"].is_object()) schema("missing \"field\" object");
  const json& fj = doc["field"];
  const std::uint64_t p = get_uint(fj, "p");
  const std::uint64_t k = get_uint(fj, "k");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (fj.contains("modulus")) {
    if (!fj["modulus"].is_array()) schema("\"modulus\" must be a list");
    std::vector<std::uint32_t> mod;
    for (const json& c : fj["modulus"]) {
      if (!c.is_number_unsigned()) schema("modulus coefficients must be non-negative integers");
      mod.push_back(c.get<std::uint32_t>());
    }
    modulus = std::move(mod);
  }

  FieldPtr field;
  try {
    if (k == 0 || k > 64) schema("\"k\" out of range");
    field = make_field(p, static_cast<std::uint32_t>(k), k > 1 ? modulus : std::nullopt);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaError) throw;
    schema(std::string("bad field: ") + e.what());
  }
  if (k == 1 && modulus) schema("\"modulus\" must be omitted for prime fields");

  const std::uint64_t m = get_uint(doc, "m");
  const std::uint64_t n = get_uint(doc, "n");
  if (!doc.contains("entries") || !doc["entries"].is_array()) schema("missing \"entries\" list");
  const json& rows = doc["entries"];
  if (rows.size() != m) schema("\"entries\" must have m rows");
  Matrix entries(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) schema("each row must have n entries");
    for (std::size_t j = 0; j < n; ++j) entries(i, j) = decode_entry(*field, rows[i][j]);
  }

  std::optional<Provenance> provenance;
  if (doc.contains("provenance")) {
    const json& pj = doc["provenance"];
    if (!pj.is_object() || !pj.contains("method") || !pj["method"].is_string()) {
      schema("\"provenance\" needs a string \"method\"");
    }
    Provenance prov;
    prov.method = pj["method"].get<std::string>();
    static constexpr std::string_view kMethods[] = {"perfect", "agreeable", "search", "external"};
    if (std::find(std::begin(kMethods), std::end(kMethods), prov.method) == std::end(kMethods)) {
      schema("unknown provenance method \"" + prov.method + "\"");
    }
    if (pj.contains("params")) prov.params = pj["params"];
    provenance = std::move(prov);
  }

  try {
    return ArrayDocument{HeffterArray(field, std::move(entries)), std::move(provenance)};
  } catch (const Error& e) {
    schema(e.what());
  }
}

std::string render_text(const HeffterArray& a) {
  const Field& f = *a.field();
  std::string out;
  for (std::size_t i = 0; i < a.m(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (j > 0) out += ' ';
      out += f.to_string(a.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace heffter
