#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heisenhom/algebra.hpp"
#include "heisenhom/errors.hpp"
#include "heisenhom/heisenberg.hpp"
#include "heisenhom/linalg.hpp"
#include "heisenhom/morse.hpp"
#include "heisenhom/polynomial.hpp"

namespace heisenhom::cli {

namespace {

using nlohmann::json;
namespace hb = heisenhom::heisenberg;

using BettiVector = std::vector<BigInt>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisagreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint32_t kChar0Proxy = 1009;

std::string method_name(Method m) {
  switch (m) {
    case Method::Rank: return "rank";
    case Method::Morse: return "morse";
    case Method::Formula: return "formula";
    case Method::All: return "all";
  }
  return "?";
}

BettiVector to_big(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

std::string join(const BettiVector& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

json to_json(const BettiVector& v) {
  json a = json::array();
  // Betti numbers stay within 64 bits for every n accepted by the tool.
  for (const auto& b : v) a.push_back(b.convert_to<std::uint64_t>());
  return a;
}

void require_rank_cap(const RunConfig& cfg) {
  const std::size_t dim = 2 * cfg.n + 1;
  if (dim > cfg.dim_cap) {
    throw ResourceCap("rank route: dimension " + std::to_string(dim) + " exceeds cap " +
                      std::to_string(cfg.dim_cap));
  }
}

void require_exhaustive_cap(const RunConfig& cfg) {
  if (cfg.n > cfg.morse_cap) {
    throw ResourceCap("n = " + std::to_string(cfg.n) + " exceeds the exhaustive-scan cap n <= " +
                      std::to_string(cfg.morse_cap));
  }
  require_rank_cap(cfg);
}

BettiVector betti_by_rank(const RunConfig& cfg, std::uint32_t p) {
  require_rank_cap(cfg);
  return to_big(betti_numbers(heisenberg_algebra(cfg.n), FieldChar(p), cfg.dim_cap));
}

BettiVector betti_by_morse(const RunConfig& cfg) {
  require_exhaustive_cap(cfg);
  const FieldChar f(cfg.characteristic);
  const auto g = build_digraph(heisenberg_algebra(cfg.n), f, cfg.dim_cap);
  const auto m = hb::heisenberg_matching(cfg.n);
  if (!validate_matching(g, m).ok()) throw DisagreeError("matching failed validation");
  return to_big(morse_betti_numbers(g, m));
}

BettiVector betti_by_formula(const RunConfig& cfg) {
  if (cfg.characteristic != 2) {
    throw UsageError("the formula method is only defined for characteristic 2");
  }
  auto poly = hb::betti_generating_function(cfg.n);
  BettiVector out;
  for (std::size_t i = 0; i <= 2 * cfg.n + 1; ++i) out.push_back(poly.coefficient(i));
  return out;
}

BettiVector betti_by(Method m, const RunConfig& cfg) {
  switch (m) {
    case Method::Rank: return betti_by_rank(cfg, cfg.characteristic);
    case Method::Morse: return betti_by_morse(cfg);
    case Method::Formula: return betti_by_formula(cfg);
    case Method::All: break;
  }
  throw UsageError("method 'all' has no single Betti vector");
}

struct BettiRow {
  Method method;
  std::optional<BettiVector> values;
  std::string skipped;
};

std::vector<BettiRow> betti_rows(const RunConfig& cfg) {
  std::vector<BettiRow> rows;
  if (cfg.method != Method::All) {
    rows.push_back({cfg.method, betti_by(cfg.method, cfg), {}});
    return rows;
  }
  for (Method m : {Method::Rank, Method::Morse, Method::Formula}) {
    if (m == Method::Formula && cfg.characteristic != 2) {
      rows.push_back({m, std::nullopt, "SKIPPED(char)"});
      continue;
    }
    try {
      rows.push_back({m, betti_by(m, cfg), {}});
    } catch (const ResourceCap&) {
      rows.push_back({m, std::nullopt, "SKIPPED(cap)"});
    }
  }
  return rows;
}

/// True when all computed rows coincide; throws ResourceCap if none ran.
bool rows_agree(const std::vector<BettiRow>& rows) {
  const BettiVector* first = nullptr;
  bool agree = true;
  for (const auto& r : rows) {
    if (!r.values) continue;
    if (first == nullptr) {
      first = &*r.values;
    } else if (*r.values != *first) {
      agree = false;
    }
  }
  if (first == nullptr) throw ResourceCap("every method exceeded its resource cap");
  return agree;
}

const BettiVector& agreed_values(const std::vector<BettiRow>& rows) {
  for (const auto& r : rows) {
    if (r.values) return *r.values;
  }
  throw ResourceCap("every method exceeded its resource cap");
}

void write_betti_csv(std::ostream& os, const BettiVector& v) {
  os << "i,b_i\n";
  for (std::size_t i = 0; i < v.size(); ++i) os << i << ',' << v[i] << '\n';
}

json betti_json(const RunConfig& cfg, const std::string& method, const BettiVector& v) {
  return json{{"n", cfg.n}, {"characteristic", cfg.characteristic}, {"method", method},
              {"betti", to_json(v)}};
}

int cmd_betti(const RunConfig& cfg, std::ostream& os) {
  const auto rows = betti_rows(cfg);
  const bool agree = rows_agree(rows);
  const bool single = cfg.method != Method::All;
  switch (cfg.format) {
    case Format::Table:
      if (single) {
        os << join(*rows.front().values, " ") << '\n';
        break;
      }
      for (const auto& r : rows) {
        std::string label = method_name(r.method);
        label.resize(9, ' ');
        os << label << (r.values ? join(*r.values, " ") : r.skipped) << '\n';
      }
      os << (agree ? "AGREE" : "DISAGREE") << '\n';
      break;
    case Format::Json: {
      if (single) {
        os << betti_json(cfg, method_name(cfg.method), *rows.front().values).dump(2) << '\n';
        break;
      }
      json results = json::object();
      for (const auto& r : rows) {
        results[method_name(r.method)] = r.values ? to_json(*r.values) : json(r.skipped);
      }
      os << json{{"n", cfg.n},
                 {"characteristic", cfg.characteristic},
                 {"method", "all"},
                 {"results", results},
                 {"verdict", agree ? "AGREE" : "DISAGREE"}}
                .dump(2)
         << '\n';
      break;
    }
    case Format::Csv:
      if (single) {
        write_betti_csv(os, *rows.front().values);
        break;
      }
      os << "i";
      for (const auto& r : rows) os << ',' << method_name(r.method);
      os << '\n';
      for (std::size_t i = 0; i <= 2 * cfg.n + 1; ++i) {
        os << i;
        for (const auto& r : rows) {
          os << ',';
          if (r.values) os << (*r.values)[i];
        }
        os << '\n';
      }
      break;
  }
  return agree ? kOk : kDisagree;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  std::string status;  // PASS, FAIL, SKIPPED(cap), SKIPPED(char)
  std::string detail;
};

Check outcome(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? "PASS" : "FAIL", std::move(detail)};
}

Check skipped(std::string name, std::string why) { return {std::move(name), "SKIPPED(" + why + ")", {}}; }

std::vector<std::uint64_t> counts(const std::vector<std::vector<VertexId>>& critical) {
  std::vector<std::uint64_t> out;
  for (const auto& level : critical) out.push_back(level.size());
  return out;
}

bool palindromic(const BettiVector& v) { return std::equal(v.begin(), v.end(), v.rbegin()); }

BigInt euler_characteristic(const BettiVector& v) {
  BigInt sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) sum += (i % 2 == 0) ? v[i] : BigInt(-v[i]);
  return sum;
}

std::vector<Check> run_checks(const RunConfig& cfg) {
  const std::size_t n = cfg.n;
  const bool char2 = cfg.characteristic == 2;
  const bool exhaustive = n <= cfg.morse_cap && 2 * n + 1 <= cfg.dim_cap;
  const bool rank_ok = 2 * n + 1 <= cfg.dim_cap;
  const FieldChar field(cfg.characteristic);
  const LieAlgebra alg = heisenberg_algebra(n);
  std::vector<Check> checks;

  if (exhaustive) {
    const auto report = verify_d_squared(alg, field);
    checks.push_back(outcome("d_squared_zero", report.ok(),
                             std::to_string(report.witnesses.size()) + " violating cells"));
  } else {
    checks.push_back(skipped("d_squared_zero", "cap"));
  }

  std::optional<BettiVector> rank_betti;
  if (rank_ok) {
    rank_betti = betti_by_rank(cfg, cfg.characteristic);
    checks.push_back(outcome("euler_characteristic", euler_characteristic(*rank_betti) == 0,
                             "rank betti " + join(*rank_betti, " ")));
    checks.push_back(outcome("poincare_palindrome", palindromic(*rank_betti)));
  } else {
    checks.push_back(skipped("euler_characteristic", "cap"));
    checks.push_back(skipped("poincare_palindrome", "cap"));
  }

  std::optional<IntPolynomial> closed_form;
  try {
    closed_form = hb::betti_generating_function(n);
    BettiVector coeffs(closed_form->coefficients().begin(), closed_form->coefficients().end());
    const bool shape = closed_form->degree() == static_cast<long>(2 * n + 1) && palindromic(coeffs) &&
                       coeffs.front() == 1 && coeffs.back() == 1;
    checks.push_back(outcome("exact_division", shape, closed_form->to_string()));
  } catch (const ExactDivisionFailed& e) {
    checks.push_back(outcome("exact_division", false, e.what()));
  }

  if (!char2) {
    checks.push_back(skipped("formula_matches_rank", "char"));
  } else if (rank_betti && closed_form) {
    BettiVector coeffs;
    for (std::size_t i = 0; i <= 2 * n + 1; ++i) coeffs.push_back(closed_form->coefficient(i));
    checks.push_back(outcome("formula_matches_rank", coeffs == *rank_betti));
  } else {
    checks.push_back(skipped("formula_matches_rank", "cap"));
  }

  {
    IntPolynomial total;
    for (std::uint64_t L = 0; L < (std::uint64_t{1} << n); ++L) {
      total += hb::critical_count_stratified(n, static_cast<hb::IndexSet>(L));
    }
    checks.push_back(outcome("stratified_sum_identity", closed_form && total == *closed_form));
  }

  if (exhaustive) {
    const auto g = build_digraph(alg, field, cfg.dim_cap);
    const auto m = hb::heisenberg_matching(n);
    const auto report = validate_matching(g, m);
    checks.push_back(outcome("matching_valid", report.ok(), to_string(report.status)));

    const auto violations = unique_successor_violations(g, m);
    checks.push_back(outcome("unique_noncritical_successor", violations.empty(),
                             std::to_string(violations.size()) + " violations"));

    const auto critical = critical_cells(g, m);
    std::size_t disagreements = 0;
    {
      std::vector<bool> is_critical_mask(std::size_t{1} << (2 * n + 1), false);
      for (const auto& level : critical) {
        for (VertexId v : level) is_critical_mask[v] = true;
      }
      for (std::uint64_t mask = 0; mask < is_critical_mask.size(); ++mask) {
        const auto role = hb::classify_cell(n, hb::from_cell(n, Cell(mask)));
        const bool formula_critical =
            role == hb::CellRole::CriticalZ || role == hb::CellRole::CriticalPlain;
        if (formula_critical != is_critical_mask[mask]) ++disagreements;
      }
    }
    checks.push_back(outcome("classification_agrees", disagreements == 0,
                             std::to_string(disagreements) + " disagreeing cells"));

    if (char2) {
      const MorseDifferential dm(g, m);
      std::size_t nonzero = 0;
      for (const auto& level : critical) {
        for (VertexId v : level) nonzero += dm(v).empty() ? 0 : 1;
      }
      checks.push_back(outcome("morse_differential_zero", nonzero == 0,
                               std::to_string(nonzero) + " critical cells with nonzero image"));
      const BettiVector crit = to_big(counts(critical));
      checks.push_back(outcome("critical_counts_match_rank", rank_betti && crit == *rank_betti,
                               "critical " + join(crit, " ")));
      const auto pi = hb::verify_pi_closed(n);
      checks.push_back(outcome("pi_closed", pi.ok(),
                               std::to_string(pi.plain_checked) + " plain, " +
                                   std::to_string(pi.z_checked) + " z cells"));
    } else {
      checks.push_back(skipped("morse_differential_zero", "char"));
      const BettiVector morse = to_big(morse_betti_numbers(g, m));
      checks.push_back(outcome("morse_betti_match_rank", rank_betti && morse == *rank_betti,
                               "morse " + join(morse, " ")));
      checks.push_back(skipped("pi_closed", "char"));
    }

    const auto census = hb::critical_census_by_stratum(n, critical);
    bool strata_ok = true;
    for (std::uint64_t L = 0; L < (std::uint64_t{1} << n); ++L) {
      const auto key = static_cast<hb::IndexSet>(L);
      const auto it = census.find(key);
      const IntPolynomial actual = it == census.end() ? IntPolynomial{} : it->second;
      strata_ok = strata_ok && actual == hb::critical_count_stratified(n, key);
    }
    checks.push_back(outcome("stratified_census", strata_ok));
  } else {
    for (const char* name : {"matching_valid", "unique_noncritical_successor",
                             "classification_agrees", "morse_differential_zero",
                             "critical_counts_match_rank", "pi_closed", "stratified_census"}) {
      checks.push_back(skipped(name, "cap"));
    }
  }

  if (rank_ok) {
    RunConfig proxy = cfg;
    proxy.characteristic = kChar0Proxy;
    const BettiVector b = betti_by_rank(proxy, kChar0Proxy);
    bool ok = true;
    for (std::size_t i = 0; i <= n; ++i) ok = ok && b[i] == hb::betti_char0(n, i);
    checks.push_back(outcome("char0_proxy_formula", ok, "GF(1009) betti " + join(b, " ")));
  } else {
    checks.push_back(skipped("char0_proxy_formula", "cap"));
  }
  return checks;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  const auto checks = run_checks(cfg);
  const bool ok = std::none_of(checks.begin(), checks.end(),
                               [](const Check& c) { return c.status == "FAIL"; });
  if (cfg.format == Format::Json) {
    json list = json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    }
    os << json{{"n", cfg.n}, {"characteristic", cfg.characteristic}, {"checks", list}, {"ok", ok}}
              .dump(2)
       << '\n';
  } else if (cfg.format == Format::Csv) {
    throw UsageError("verify supports table and json output only");
  } else {
    for (const auto& c : checks) {
      std::string status = c.status;
      status.resize(14, ' ');
      std::string name = c.name;
      name.resize(30, ' ');
      os << status << name << c.detail << '\n';
    }
    os << (ok ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << '\n';
  }
  return ok ? kOk : kDisagree;
}

// ---------------------------------------------------------------------------
// matching / export

struct MatchingView {
  MorseMatching matching;
  std::vector<std::vector<VertexId>> critical;
};

MatchingView matching_view(const RunConfig& cfg) {
  require_exhaustive_cap(cfg);
  const auto g = build_digraph(heisenberg_algebra(cfg.n), FieldChar(2), cfg.dim_cap);
  MatchingView view{hb::heisenberg_matching(cfg.n), {}};
  view.critical = critical_cells(g, view.matching);
  return view;
}

int cmd_matching(const RunConfig& cfg, bool edges, bool critical, std::ostream& os) {
  if (!edges && !critical) edges = critical = true;
  const auto view = matching_view(cfg);
  const std::size_t n = cfg.n;
  if (cfg.format == Format::Json) {
    json doc{{"n", n}};
    if (edges) {
      json list = json::array();
      for (const auto& e : view.matching.edges) {
        list.push_back({hb::format_cell(n, Cell(e.source)), hb::format_cell(n, Cell(e.target))});
      }
      doc["edges"] = list;
    }
    if (critical) {
      json levels = json::array();
      for (const auto& level : view.critical) {
        json names = json::array();
        for (VertexId v : level) names.push_back(hb::format_cell(n, Cell(v)));
        levels.push_back(names);
      }
      doc["critical"] = levels;
    }
    os << doc.dump(2) << '\n';
    return kOk;
  }
  if (cfg.format == Format::Csv) throw UsageError("matching supports table and json output only");
  if (edges) {
    for (const auto& e : view.matching.edges) {
      os << hb::format_cell(n, Cell(e.source)) << " -> " << hb::format_cell(n, Cell(e.target))
         << '\n';
    }
  }
  if (critical) {
    for (std::size_t k = 0; k < view.critical.size(); ++k) {
      os << (k ? " | " : "") << "deg " << k << ":";
      for (std::size_t i = 0; i < view.critical[k].size(); ++i) {
        os << (i ? ", " : " ") << hb::format_cell(n, Cell(view.critical[k][i]));
      }
    }
    os << '\n';
  }
  return kOk;
}

json complex_json(const RunConfig& cfg) {
  require_exhaustive_cap(cfg);
  const LieAlgebra alg = heisenberg_algebra(cfg.n);
  const FieldChar field(cfg.characteristic);
  json degrees = json::array();
  json boundaries = json::array();
  for (int k = 0; k <= static_cast<int>(alg.dim()); ++k) {
    degrees.push_back({{"degree", k}, {"dimension", binomial(static_cast<std::int64_t>(alg.dim()), k)}});
  }
  for (int k = 1; k <= static_cast<int>(alg.dim()); ++k) {
    const auto map = boundary_matrix(alg, k, field);
    json entries = json::array();
    for (const auto& e : map.entries) entries.push_back({e.row, e.col, e.value});
    boundaries.push_back({{"degree", k}, {"rows", map.rows()}, {"cols", map.cols()},
                          {"entries", entries}});
  }
  return json{{"n", cfg.n}, {"characteristic", cfg.characteristic}, {"degrees", degrees},
              {"boundaries", boundaries}};
}

json matching_json(const RunConfig& cfg) {
  const auto view = matching_view(cfg);
  json edges = json::array();
  for (const auto& e : view.matching.edges) {
    edges.push_back({{"source", e.source},
                     {"target", e.target},
                     {"source_name", hb::format_cell(cfg.n, Cell(e.source))},
                     {"target_name", hb::format_cell(cfg.n, Cell(e.target))}});
  }
  json critical = json::array();
  for (std::size_t k = 0; k < view.critical.size(); ++k) {
    critical.push_back({{"degree", k}, {"cells", view.critical[k]}});
  }
  return json{{"n", cfg.n}, {"edges", edges}, {"critical", critical}};
}

int cmd_export(const RunConfig& cfg, const std::string& target, std::ostream& os) {
  if (target == "betti") {
    const auto rows = betti_rows(cfg);
    if (!rows_agree(rows)) throw DisagreeError("methods disagree; nothing exported");
    const auto& values = agreed_values(rows);
    if (cfg.format == Format::Csv) {
      write_betti_csv(os, values);
    } else {
      os << betti_json(cfg, method_name(cfg.method), values).dump(2) << '\n';
    }
    return kOk;
  }
  if (cfg.format == Format::Csv) throw UsageError("CSV export is available for betti only");
  os << (target == "complex" ? complex_json(cfg) : matching_json(cfg)).dump(2) << '\n';
  return kOk;
}

std::optional<std::size_t> cap_from_env() {
  const char* raw = std::getenv("HEISENHOM_CAP");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(raw, &pos);
    if (pos != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("HEISENHOM_CAP is not a non-negative integer: ") + raw);
  }
}

/// Runs `body` writing to the configured output (file or `out`).
int emit(const RunConfig& cfg, std::ostream& out, const std::function<int(std::ostream&)>& body) {
  if (!cfg.output) return body(out);
  // Render fully before touching the file so a failed run leaves no partial output.
  std::ostringstream buffer;
  const int status = body(buffer);
  std::ofstream file(*cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) throw std::ios_base::failure("cannot open " + *cfg.output + " for writing");
  file << buffer.str();
  file.flush();
  if (!file) throw std::ios_base::failure("failed writing " + *cfg.output);
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology of Heisenberg Lie algebras over prime fields", "heisenhom"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<std::size_t> cap_flag;
  std::uint32_t characteristic = 2;
  bool list_edges = false;
  bool list_critical = false;
  std::string export_target;

  const std::map<std::string, Method> methods{{"rank", Method::Rank},
                                              {"morse", Method::Morse},
                                              {"formula", Method::Formula},
                                              {"all", Method::All}};
  const std::map<std::string, Format> formats{
      {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};

  auto add_common = [&](CLI::App* sub, bool with_method) {
    sub->add_option("--n", cfg.n, "Heisenberg parameter n (algebra dimension 2n+1)")
        ->check(CLI::Range(std::size_t{0}, hb::kMaxN));
    sub->add_option("--char", characteristic, "Prime characteristic of the ground field");
    if (with_method) {
      sub->add_option("--method", cfg.method, "rank | morse | formula | all")
          ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    }
    sub->add_option("--format", cfg.format, "table | json | csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output", cfg.output, "Write to this file instead of standard output");
    sub->add_option("--cap", cap_flag, "Largest algebra dimension for the rank route");
    sub->add_option("--morse-cap", cfg.morse_cap, "Largest n for exhaustive cell scans");
  };

  auto* betti = app.add_subcommand("betti", "Betti numbers of h_n");
  add_common(betti, true);
  auto* verify = app.add_subcommand("verify", "Run every consistency check for h_n");
  add_common(verify, false);
  auto* matching = app.add_subcommand("matching", "List the Morse matching of h_n");
  add_common(matching, false);
  matching->add_flag("--edges", list_edges, "List matched edges");
  matching->add_flag("--critical", list_critical, "List critical cells by degree");
  auto* exporter = app.add_subcommand("export", "Export complex, matching or betti data");
  add_common(exporter, true);
  exporter->add_option("target", export_target, "complex | matching | betti")
      ->required()
      ->check(CLI::IsMember({"complex", "matching", "betti"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (cap_flag) {
      cfg.dim_cap = *cap_flag;
    } else if (auto env = cap_from_env()) {
      cfg.dim_cap = *env;
    }
    if (!is_prime(characteristic) || characteristic > FieldChar::kMaxPrime) {
      throw UsageError("characteristic " + std::to_string(characteristic) + " is not prime");
    }
    cfg.characteristic = characteristic;
    if (exporter->parsed() && export_target == "betti" && cfg.method == Method::All &&
        exporter->count("--method") == 0) {
      cfg.method = Method::Rank;
    }

    if (betti->parsed()) return emit(cfg, out, [&](std::ostream& os) { return cmd_betti(cfg, os); });
    if (verify->parsed()) return emit(cfg, out, [&](std::ostream& os) { return cmd_verify(cfg, os); });
    if (matching->parsed()) {
      return emit(cfg, out,
                  [&](std::ostream& os) { return cmd_matching(cfg, list_edges, list_critical, os); });
    }
    return emit(cfg, out, [&](std::ostream& os) { return cmd_export(cfg, export_target, os); });
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceCap& e) {
    err << "error: resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const DisagreeError& e) {
    err << "error: " << e.what() << '\n';
    return kDisagree;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace heisenhom::cli
