#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nilcomm/certify.hpp"
#include "nilcomm/closure.hpp"
#include "nilcomm/components.hpp"
#include "nilcomm/excdata.hpp"
#include "nilcomm/selflarge.hpp"
#include "nilcomm/serialize.hpp"

namespace nilcomm::cli {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "dot") return Format::dot;
  throw Usage("unknown format " + s);
}

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Usage(std::string(what) + " must be an integer, got " + s);
}

bool is_integer(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

// TYPE n [p q]
std::pair<PairType, PairParams> pair_args(const std::vector<std::string>& args) {
  if (args.size() != 2 && args.size() != 4) throw Usage("expected TYPE n [p q]");
  const PairType type = parse_pair_type(args[0]);
  const int n = to_int(args[1], "n");
  if (args.size() == 4) return {type, make_params(type, n, to_int(args[2], "p"), to_int(args[3], "q"))};
  return {type, make_params(type, n)};
}

// TYPE DIAGRAM, validated.
std::pair<PairType, AbDiagram> diagram_args(const std::vector<std::string>& args) {
  if (args.size() != 2) throw Usage("expected TYPE DIAGRAM");
  const PairType type = parse_pair_type(args[0]);
  const AbDiagram d = parse_diagram(args[1]);
  const auto violations = validate(d, type, params_of(d, type));
  if (!violations.empty()) throw Error(violations.front().code, violations.front().detail);
  return {type, d};
}

void print_statuses(std::ostream& out, const char* title, const std::vector<CandidateStatus>& list) {
  out << title << ": " << list.size() << "\n";
  for (const CandidateStatus& s : list) {
    out << "  " << std::left << std::setw(24) << s.label << " defect " << s.defect << "  dim " << s.component_dim;
    if (s.target) out << "  reduction -> " << *s.target;
    if (s.witness) out << "  witness " << *s.witness;
    out << "\n";
  }
}

void print_report(std::ostream& out, const ComponentsReport& report) {
  out << "pair: " << report.pair << "\n";
  out << "dim p: " << report.dim_p << "\n";
  print_statuses(out, "components", report.components);
  print_statuses(out, "eliminated", report.eliminated);
  print_statuses(out, "unresolved", report.unresolved);
  out << "non-candidates: " << report.non_candidates.size() << "\n";
  out << "count: " << report.min_components();
  if (report.max_components() != report.min_components()) out << "-" << report.max_components();
  out << "\n";
}

void print_exceptional(std::ostream& out, const std::string& label) {
  const ExceptionalCase& c = exceptional_case(label);
  const ComponentsReport report = exceptional_components(label);
  out << "case: " << c.label << " (" << c.real_form << ")\n";
  out << "dim p: " << c.dim_p << "\n";
  out << "orbits:\n";
  for (const auto& o : c.orbits) {
    out << "  " << std::setw(4) << o.orbit << "  " << std::left << std::setw(20) << o.pair << std::right
        << " defect " << o.defect;
    if (o.dim_orbit) out << "  dim " << *o.dim_orbit;
    if (!o.note.empty()) out << "  [" << o.note << "]";
    out << "\n";
  }
  out << "components: " << report.min_components();
  if (report.max_components() != report.min_components())
    out << " (+" << report.unresolved.size() << " unresolved, range " << report.min_components() << "-"
        << report.max_components() << ")";
  out << "\n";
  print_statuses(out, "eliminated", report.eliminated);
  print_statuses(out, "unresolved", report.unresolved);
  out << "self-large:";
  for (int o : exceptional_selflarge(label)) out << " " << o;
  out << "\n";
  for (const auto& d : exceptional_discrepancies(label)) out << "flag: O" << d.orbit << " " << d.detail << "\n";
}

int cmd_enumerate(const Config& cfg, const std::vector<std::string>& args, std::ostream& out) {
  const auto [type, params] = pair_args(args);
  const auto diagrams = enumerate_diagrams(type, params, cfg.bound);
  if (cfg.format == Format::json) {
    out << "[";
    for (std::size_t i = 0; i < diagrams.size(); ++i) out << (i ? ",\n " : "") << diagram_to_json(diagrams[i]);
    out << "]\n";
  } else {
    for (const AbDiagram& d : diagrams) out << to_text(d) << "\n";
  }
  return 0;
}

int cmd_invariants(const Config&, const std::vector<std::string>& args, std::ostream& out) {
  const auto [type, d] = diagram_args(args);
  out << invariants_to_json(d, type);
  return 0;
}

int cmd_closure(const Config& cfg, const std::vector<std::string>& args, std::ostream& out) {
  const auto [type, params] = pair_args(args);
  const ClosurePoset poset(type, params, cfg.bound);
  out << (cfg.format == Format::json ? hasse_to_json(poset) : hasse_to_dot(poset));
  return 0;
}

int cmd_reduce(const Config& cfg, const std::vector<std::string>& args, std::ostream& out) {
  const auto [type, d] = diagram_args(args);
  const auto target = find_reduction(d, type, cfg.bound);
  if (cfg.format == Format::json) {
    nlohmann::json doc = {{"diagram", to_text(d)}, {"target", nullptr}};
    if (target) doc["target"] = to_text(*target);
    out << doc.dump() << "\n";
  } else {
    out << (target ? to_text(*target) : "none") << "\n";
  }
  return 0;
}

int cmd_components(const Config& cfg, const std::vector<std::string>& args, std::ostream& out) {
  const auto [type, params] = pair_args(args);
  const ComponentsReport report = classify_components(type, params, cfg.bound);
  if (cfg.format == Format::json) {
    out << report_to_json(report);
  } else {
    print_report(out, report);
  }
  return 0;
}

int cmd_selflarge(const Config& cfg, const std::vector<std::string>& args, std::ostream& out) {
  std::vector<std::pair<PairType, AbDiagram>> items;
  if (args.size() >= 2 && is_integer(args[1])) {
    const auto [type, params] = pair_args(args);
    for (const AbDiagram& d : enumerate_diagrams(type, params, cfg.bound)) items.emplace_back(type, d);
  } else {
    items.push_back(diagram_args(args));
  }
  if (cfg.format == Format::json) {
    out << "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
      std::string doc = selflarge_to_json(is_self_large(items[i].second, items[i].first), items[i].first);
      doc.pop_back();
      out << (i ? ",\n" : "") << doc;
    }
    out << "]\n";
  } else {
    for (const auto& [type, d] : items) {
      const SelfLargeVerdict v = is_self_large(d, type);
      out << to_text(d) << "  " << (v.verdict ? "self-large" : "not self-large") << " (" << to_string(v.reason)
          << ")\n";
    }
  }
  return 0;
}

int cmd_exceptional(const Config& cfg, const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 1) throw Usage("expected CASE");
  if (cfg.format == Format::json) {
    out << exceptional_report_json(args[0]);
  } else {
    print_exceptional(out, args[0]);
  }
  return 0;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  bool ok = true;
  for (const CheckResult& r : run_all_checks(cfg.seed)) {
    ok = ok && r.pass;
    out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << "\n";
  }
  for (PairType t : kClassicalTypes) {
    try {
      const RankCheck check = rank_bound_check(t);
      out << "PASS rank bound " << to_string(t) << ": " << check.verified.size() << " pairs\n";
    } catch (const Error& e) {
      ok = false;
      out << "FAIL rank bound " << to_string(t) << ": " << e.what() << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot read config " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    if (doc.contains("bound")) base.bound = doc.at("bound").get<int>();
    if (doc.contains("seed")) base.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("format")) base.format = parse_format(doc.at("format").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Usage("bad config " + path + ": " + e.what());
  }
  if (base.bound < 1) throw Usage("bound must be at least 1");
  return base;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  try {
    if (const char* path = std::getenv("NILCOMM_CONFIG"); path && *path) cfg = load_config(path);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"Nilpotent commuting varieties of symmetric pairs"};
  app.name("nilcomm");
  app.require_subcommand(1);
  std::string format;
  std::optional<int> bound;
  std::optional<std::uint64_t> seed;
  app.add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--bound", bound, "enumeration bound on n")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized rank trials");

  std::vector<std::string> args;
  struct Sub {
    const char* name;
    const char* help;
  };
  const std::vector<Sub> subs = {
      {"enumerate", "list diagrams: TYPE n [p q]"},
      {"invariants", "orbit invariants as JSON: TYPE DIAGRAM"},
      {"closure-graph", "Hasse diagram of the closure order: TYPE n [p q]"},
      {"reduce", "reduction target or none: TYPE DIAGRAM"},
      {"components", "components report: TYPE n [p q]"},
      {"selflarge", "self-large verdicts: TYPE DIAGRAM or TYPE n [p q]"},
      {"exceptional", "exceptional case report: CASE"},
      {"verify", "run every certification check"},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (std::string(s.name) != "verify") sub->add_option("args", args)->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (!format.empty()) cfg.format = parse_format(format);
  if (bound) cfg.bound = *bound;
  if (seed) cfg.seed = *seed;

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "enumerate") return cmd_enumerate(cfg, args, out);
    if (name == "invariants") return cmd_invariants(cfg, args, out);
    if (name == "closure-graph") return cmd_closure(cfg, args, out);
    if (name == "reduce") return cmd_reduce(cfg, args, out);
    if (name == "components") return cmd_components(cfg, args, out);
    if (name == "selflarge") return cmd_selflarge(cfg, args, out);
    if (name == "exceptional") return cmd_exceptional(cfg, args, out);
    return cmd_verify(cfg, out);
  } catch (const Usage& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::ClaimViolated ? 1 : 2;
  }
}

}  // namespace nilcomm::cli
