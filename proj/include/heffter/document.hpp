#pragma once

// ArrayDocument: the JSON persistence format for arrays.
//
//   {"entries":[[[c0,...,c_{k-1}],...],...],
//    "field":{"k":K,"modulus":[...],"p":P},
//    "m":M,"n":N,
//    "provenance":{"method":"perfect|agreeable|search|external","params":{...}}}
//
// Entries are coefficient lists, constant first; for k == 1 bare integers are
// accepted on input. "modulus" is omitted when k == 1 and "provenance" is
// optional. serialize() emits keys in sorted order without whitespace, so
// documents are byte-comparable.

#include <optional>
#include <string>
#include <string_view>

#include "heffter/heffter_array.hpp"
#include "json.hpp"

namespace heffter {

struct Provenance {
  std::string method;  // perfect | agreeable | search | external
  nlohmann::json params = nlohmann::json::object();

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ArrayDocument {
  HeffterArray array;
  std::optional<Provenance> provenance;
};

std::string serialize(const HeffterArray& a, const std::optional<Provenance>& provenance = std::nullopt);

/// Throws ParseError (malformed JSON, with line and column) or SchemaError
/// (missing/ill-typed fields, bad field spec, zero entries, wrong dimensions).
ArrayDocument parse_document(std::string_view text);

/// One line per row, entries in element text format separated by single spaces.
std::string render_text(const HeffterArray& a);

}  // namespace heffter
