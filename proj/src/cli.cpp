#include "heffter/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "heffter/constructions.hpp"
#include "heffter/document.hpp"
#include "heffter/error.hpp"
#include "heffter/search.hpp"
#include "json.hpp"

namespace heffter::cli {

using nlohmann::json;

namespace {

// Usage-level failure (bad flags, unreadable input) as opposed to a domain one.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json element_list(const Field& f, std::span<const Element> elems) {
  json out = json::array();
  for (Element e : elems) out.push_back(f.to_string(e));
  return out;
}

json element_list(const ElementSet& s) {
  const auto elems = s.elements();
  return element_list(*s.field(), elems);
}

json pair_json(const PairClass& c) {
  json j;
  j["m"] = c.m;
  j["n"] = c.n;
  j["q"] = c.q;
  j["admissible"] = c.admissible;
  if (c.prime_power) {
    j["prime_power"] = {{"p", c.prime_power->p}, {"k", c.prime_power->k}};
  } else {
    j["prime_power"] = nullptr;
  }
  j["agreeable"] = c.agreeable;
  j["optimal"] = c.optimal_pair;
  j["perfect_eligible"] = c.perfect_eligible;
  j["m_o"] = c.m_o;
  j["n_o"] = c.n_o;
  j["rad_m_o"] = c.rad_m_o;
  j["rad_n_o"] = c.rad_n_o;
  j["lcm_odd"] = c.lcm_odd;
  return j;
}

std::string csv_row(const PairClass& c) {
  std::ostringstream os;
  const auto b = [](bool v) { return v ? "true" : "false"; };
  os << c.m << ',' << c.n << ',' << c.q << ',';
  if (c.prime_power) os << c.prime_power->p << '^' << c.prime_power->k;
  os << ',' << b(c.admissible) << ',' << b(c.agreeable) << ',' << b(c.optimal_pair) << ','
     << b(c.perfect_eligible) << ',' << c.m_o << ',' << c.n_o << ',' << c.lcm_odd;
  return os.str();
}

json multiplier_json(const MultiplierGroup& g, std::string_view method) {
  json j;
  j["method"] = method;
  j["order"] = g.elements.size();
  j["elements"] = element_list(g.elements);
  if (g.s_part) j["s_part"] = element_list(*g.s_part);
  if (g.t_part) j["t_part"] = element_list(*g.t_part);
  return j;
}

// Rank-one formula when it applies, brute force otherwise or when asked.
json multipliers_of(const HeffterArray& a, bool brute) {
  if (!brute && rank_one_factors(a)) return multiplier_json(multiplier_group_rank_one(a), "rank-one");
  return multiplier_json(multiplier_group_brute(a), "brute");
}

ArrayDocument load(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_document(text);
}

int cmd_classify(std::uint64_t m, std::uint64_t n, std::ostream& out) {
  out << pair_json(classify_pair(m, n)).dump() << '\n';
  return kExitOk;
}

int cmd_construct(std::uint64_t m, std::uint64_t n, const std::string& method,
                  std::optional<std::uint64_t> m1, std::optional<std::uint64_t> n1,
                  const std::string& format, std::ostream& out, std::ostream& err) {
  if (m1.has_value() != n1.has_value()) throw UsageError("--m1 and --n1 go together");
  if (m1 && method == "perfect") throw UsageError("--m1/--n1 apply to the agreeable method");

  const PairClass c = classify_pair(m, n);
  std::string chosen = method;
  if (chosen == "auto") {
    if (m1) {
      chosen = "agreeable";
    } else if (c.admissible && c.perfect_eligible) {
      chosen = "perfect";
    } else if (c.admissible && c.agreeable) {
      chosen = "agreeable";
    } else if (c.admissible) {
      err << "pair (" << m << "," << n << ") is admissible but neither perfect-eligible nor "
          << "agreeable; no explicit construction, use `search`\n";
      return kExitDomainFailure;
    } else {
      err << "pair (" << m << "," << n << ") is not admissible\n";
      return kExitDomainFailure;
    }
  }

  std::optional<HeffterArray> array;
  Provenance prov;
  prov.method = chosen;
  if (chosen == "perfect") {
    array = construct_perfect(m, n);
  } else {
    std::optional<AgreeableParams> params;
    if (m1) params = AgreeableParams{*m1, *n1, 0, 0, 0};
    if (!params && c.agreeable) params = agreeable_parameters(m, n);
    array = construct_agreeable(m, n, params);
    prov.params = {{"m1", params->m1}, {"n1", params->n1}};
  }

  if (format == "json") {
    out << serialize(*array, prov) << '\n';
  } else {
    out << render_text(*array);
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& checks_arg, std::ostream& out) {
  std::vector<std::string> checks;
  std::stringstream ss(checks_arg);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item != "axioms" && item != "rank" && item != "simple" && item != "multipliers") {
      throw UsageError("unknown check '" + item + "'");
    }
    checks.push_back(item);
  }
  const auto wants = [&](std::string_view c) {
    return std::find(checks.begin(), checks.end(), c) != checks.end();
  };

  const ArrayDocument doc = load(path);
  const VerificationReport report = verify_heffter(doc.array);
  json j;
  json failures = json::array();
  for (const auto& f : report.failures) {
    const bool axiom = f.check == "half-set" || f.check == "row-sum" || f.check == "column-sum";
    if ((axiom && wants("axioms")) || (f.check == "rank-one" && wants("rank")) ||
        (f.check == "globally-simple" && wants("simple"))) {
      failures.push_back({{"check", f.check}, {"location", f.location}});
    }
  }
  if (wants("axioms")) {
    j["half_set"] = report.half_set;
    j["rows_zero_sum"] = report.rows_zero_sum;
    j["cols_zero_sum"] = report.cols_zero_sum;
    j["heffter"] = report.is_heffter();
  }
  if (wants("rank")) j["rank_one"] = report.rank_one;
  if (wants("simple")) j["globally_simple"] = report.globally_simple;
  if (wants("multipliers")) j["multipliers"] = multipliers_of(doc.array, false);
  j["failures"] = failures;
  out << j.dump() << '\n';
  return wants("axioms") && !report.is_heffter() ? kExitDomainFailure : kExitOk;
}

int cmd_multipliers(const std::string& path, bool brute, std::ostream& out) {
  const ArrayDocument doc = load(path);
  out << multipliers_of(doc.array, brute).dump() << '\n';
  return kExitOk;
}

int cmd_search(const SearchConfig& cfg, std::ostream& out, std::ostream& err) {
  const SearchOutcome outcome = search_rank_one(cfg);
  err << "examined " << outcome.candidates_examined << " candidates ("
      << to_string(cfg.strategy) << ")";
  if (!outcome.found) {
    err << (outcome.exhausted ? "; search space exhausted, no array found\n"
                              : "; budget exhausted, no array found\n");
    return kExitDomainFailure;
  }
  err << '\n';
  Provenance prov{"search",
                  {{"strategy", to_string(cfg.strategy)},
                   {"seed", cfg.seed},
                   {"candidates_examined", outcome.candidates_examined}}};
  out << serialize(*outcome.found, prov) << '\n';
  return kExitOk;
}

int cmd_scan(std::uint64_t max_q, const std::string& format, std::ostream& out) {
  const auto rows = scan_pairs(max_q);
  if (format == "json") {
    json j = json::array();
    for (const auto& c : rows) j.push_back(pair_json(c));
    out << j.dump() << '\n';
  } else {
    out << "m,n,q,prime_power,admissible,agreeable,optimal,perfect_eligible,m_o,n_o,lcm_odd\n";
    for (const auto& c : rows) out << csv_row(c) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight Heffter arrays over finite fields"};
  app.require_subcommand(1);

  std::uint64_t m = 0, n = 0;
  std::string path;

  auto* classify = app.add_subcommand("classify", "Classify the pair (m,n)");
  classify->add_option("m", m)->required();
  classify->add_option("n", n)->required();

  std::string method = "auto", format = "text";
  std::optional<std::uint64_t> m1, n1;
  auto* construct = app.add_subcommand("construct", "Build a rank-one H(m,n)");
  construct->add_option("m", m)->required();
  construct->add_option("n", n)->required();
  construct->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "perfect", "agreeable"}));
  construct->add_option("--m1", m1, "Agreeable split factor of m_o");
  construct->add_option("--n1", n1, "Agreeable split factor of n_o");
  construct->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string checks = "axioms,rank,simple";
  auto* verify = app.add_subcommand("verify", "Verify an array document ('-' for stdin)");
  verify->add_option("file", path)->required();
  verify->add_option("--checks", checks, "Comma list of axioms,rank,simple,multipliers");

  bool brute = false;
  auto* multipliers = app.add_subcommand("multipliers", "Multiplier group of an array document");
  multipliers->add_option("file", path)->required();
  multipliers->add_flag("--brute", brute, "Test every unit instead of the rank-one formula");

  SearchConfig cfg;
  std::string strategy = "exhaustive";
  auto* search = app.add_subcommand("search", "Search for a rank-one H(m,n)");
  search->add_option("m", cfg.m)->required();
  search->add_option("n", cfg.n)->required();
  search->add_option("--strategy", strategy)->check(CLI::IsMember({"exhaustive", "seeded"}));
  search->add_option("--max-candidates", cfg.max_candidates)->check(CLI::PositiveNumber);
  search->add_option("--seed", cfg.seed);

  std::uint64_t max_q = 0;
  std::string scan_format = "csv";
  auto* scan = app.add_subcommand("scan", "Classify all pairs with 2mn+1 <= max-q");
  scan->add_option("--max-q", max_q)->required();
  scan->add_option("--format", scan_format)->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(m, n, out);
    if (*construct) return cmd_construct(m, n, method, m1, n1, format, out, err);
    if (*verify) return cmd_verify(path, checks, out);
    if (*multipliers) return cmd_multipliers(path, brute, out);
    if (*search) {
      cfg.strategy = strategy == "seeded" ? SearchStrategy::Seeded : SearchStrategy::Exhaustive;
      return cmd_search(cfg, out, err);
    }
    if (*scan) return cmd_scan(max_q, scan_format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    const bool input_problem = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SchemaError;
    return input_problem ? kExitUsage : kExitDomainFailure;
  }
  return kExitUsage;
}

}  // namespace heffter::cli
