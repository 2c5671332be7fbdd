#include "nilcomm/excdata.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nilcomm/error.hpp"

namespace nilcomm {

namespace detail {
extern const std::string_view kExceptionalTable;
}

const std::vector<std::string> kExceptionalCases = {"GI", "FI",  "FII", "EI",  "EII",   "EIII",
                                                    "EIV", "EV", "EVI", "EVII", "EVIII", "EIX"};

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& f : split(text, ' '))
    if (!f.empty()) out.push_back(std::stoi(f));
  return out;
}

struct Data {
  int version = 0;
  std::map<std::string, ExceptionalCase, std::less<>> cases;
};

Data parse() {
  Data data;
  std::istringstream in{std::string(detail::kExceptionalTable)};
  std::string line;
  int line_no = 0;
  auto bad = [&](const std::string& why) {
    return Error(Errc::InvariantViolated, "exceptional table line " + std::to_string(line_no) + ": " + why);
  };
  auto find = [&](const std::string& label) -> ExceptionalCase& {
    auto it = data.cases.find(label);
    if (it == data.cases.end()) throw bad("undeclared case " + label);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, '\t');
    const std::string& kind = f[0];
    auto need = [&](std::size_t k) {
      if (f.size() != k) throw bad("expected " + std::to_string(k) + " fields");
    };
    if (kind == "version") {
      need(2);
      data.version = std::stoi(f[1]);
    } else if (kind == "case") {
      need(7);
      ExceptionalCase c;
      c.label = f[1];
      c.real_form = f[2];
      c.dim_p = std::stoi(f[3]);
      c.published_min = std::stoi(f[4]);
      c.published_max = std::stoi(f[5]);
      if (f[6] == "distinguished") c.selflarge_rule = SelfLargeRule::Distinguished;
      else if (f[6] == "almost-distinguished") c.selflarge_rule = SelfLargeRule::AlmostDistinguished;
      else if (f[6] == "regular") c.selflarge_rule = SelfLargeRule::Regular;
      else throw bad("unknown self-large rule " + f[6]);
      data.cases.emplace(c.label, std::move(c));
    } else if (kind == "orbit") {
      need(5);
      find(f[1]).orbits.push_back({f[1], std::stoi(f[2]), f[3], std::stoi(f[4]), std::nullopt, ""});
    } else if (kind == "reduction") {
      need(8);
      find(f[1]).reductions.push_back({f[1], std::stoi(f[2]), std::stoi(f[3]), std::stoi(f[4]), std::stoi(f[5]),
                                       std::stoi(f[6]), std::stoi(f[7])});
    } else if (kind == "witness") {
      need(4);
      find(f[1]).witnesses.push_back({f[1], std::stoi(f[2]), std::stoi(f[3])});
    } else if (kind == "unresolved") {
      need(5);
      find(f[1]).unresolved.push_back({f[1], std::stoi(f[2]), f[3], f[4]});
    } else if (kind == "selflarge") {
      need(3);
      find(f[1]).selflarge_extras = int_list(f[2]);
    } else if (kind == "weighttest") {
      need(3);
      find(f[1]).weight_test_exclusions = int_list(f[2]);
    } else if (kind == "note") {
      need(4);
      ExceptionalCase& c = find(f[1]);
      const int orbit = std::stoi(f[2]);
      auto it = std::find_if(c.orbits.begin(), c.orbits.end(), [&](auto& o) { return o.orbit == orbit; });
      if (it != c.orbits.end()) it->note = f[3];
    } else {
      throw bad("unknown record " + kind);
    }
  }
  for (auto& [label, c] : data.cases) {
    for (const ExceptionalReduction& r : c.reductions) {
      for (auto& o : c.orbits) {
        if (o.orbit == r.source) o.dim_orbit = r.source_dim;
        if (o.orbit == r.target) o.dim_orbit = r.target_dim;
      }
    }
  }
  return data;
}

const Data& data() {
  static const Data d = parse();
  return d;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string orbit_label(int orbit) { return "O" + std::to_string(orbit); }

}  // namespace

std::string_view exceptional_table_text() { return detail::kExceptionalTable; }

int exceptional_table_version() { return data().version; }

const ExceptionalCase& exceptional_case(std::string_view label) {
  auto it = data().cases.find(label);
  if (it == data().cases.end()) throw Error(Errc::UnknownCase, "unknown exceptional case " + std::string(label));
  return it->second;
}

std::vector<ExceptionalOrbitRecord> load_case(std::string_view label) { return exceptional_case(label).orbits; }

const std::vector<ExceptionalReduction>& exceptional_reductions(std::string_view label) {
  return exceptional_case(label).reductions;
}

const std::vector<ExceptionalWitnessFact>& exceptional_witnesses(std::string_view label) {
  return exceptional_case(label).witnesses;
}

std::vector<DataDiscrepancy> exceptional_discrepancies(std::string_view label) {
  const ExceptionalCase& c = exceptional_case(label);
  std::vector<DataDiscrepancy> out;
  const int distinguished =
      static_cast<int>(std::count_if(c.orbits.begin(), c.orbits.end(), [](auto& o) { return o.defect == 0; }));
  for (const ExceptionalReduction& r : c.reductions) {
    for (auto [orbit, defect] : {std::pair{r.source, r.source_defect}, std::pair{r.target, r.target_defect}}) {
      auto it = std::find_if(c.orbits.begin(), c.orbits.end(), [&](auto& o) { return o.orbit == orbit; });
      if (it == c.orbits.end()) {
        std::string detail = "reduction orbit with defect " + std::to_string(defect) + " is absent from the orbit table";
        if (defect == 0) {
          detail += "; listing it would give " + std::to_string(distinguished + 1) +
                    " distinguished orbits against the published count " + std::to_string(c.published_min);
        } else {
          detail += "; assumed not almost-distinguished";
        }
        out.push_back({c.label, orbit, detail});
      } else if (it->defect != defect) {
        out.push_back({c.label, orbit, "defect differs between the orbit and reduction tables"});
      }
    }
  }
  return out;
}

ComponentsReport exceptional_components(std::string_view label) {
  const ExceptionalCase& c = exceptional_case(label);
  ComponentsReport report;
  report.pair = c.label;
  report.dim_p = c.dim_p;
  for (const ExceptionalOrbitRecord& o : c.orbits) {
    CandidateStatus s;
    s.label = orbit_label(o.orbit);
    s.orbit = o.orbit;
    s.defect = o.defect;
    s.component_dim = c.dim_p - o.defect;
    if (o.defect == 0) {
      s.status = Status::Component;
      report.components.push_back(std::move(s));
      continue;
    }
    auto red = std::find_if(c.reductions.begin(), c.reductions.end(), [&](auto& r) { return r.source == o.orbit; });
    auto wit = std::find_if(c.witnesses.begin(), c.witnesses.end(), [&](auto& w) { return w.source == o.orbit; });
    if (red != c.reductions.end()) {
      s.status = Status::EliminatedByReduction;
      s.target = orbit_label(red->target);
      report.eliminated.push_back(std::move(s));
    } else if (wit != c.witnesses.end()) {
      s.status = Status::EliminatedByWitness;
      s.witness = orbit_label(wit->larger);
      report.eliminated.push_back(std::move(s));
    } else {
      s.status = Status::Unresolved;
      report.unresolved.push_back(std::move(s));
    }
  }
  return report;
}

std::vector<ExceptionalSelfLarge> exceptional_selflarge_verdicts(std::string_view label) {
  const ExceptionalCase& c = exceptional_case(label);
  std::vector<ExceptionalSelfLarge> out;
  for (const ExceptionalOrbitRecord& o : c.orbits) {
    ExceptionalSelfLarge v{o.orbit, false, ExceptionalSelfLargeReason::NotSelfLarge};
    if (o.defect == 0) {
      v = {o.orbit, true, ExceptionalSelfLargeReason::Distinguished};
    } else if (c.selflarge_rule == SelfLargeRule::AlmostDistinguished || contains(c.selflarge_extras, o.orbit)) {
      v = {o.orbit, true, ExceptionalSelfLargeReason::DataTable};
    } else if (contains(c.weight_test_exclusions, o.orbit)) {
      v.reason = ExceptionalSelfLargeReason::Prop74;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<int> exceptional_selflarge(std::string_view label) {
  std::vector<int> out;
  for (const ExceptionalSelfLarge& v : exceptional_selflarge_verdicts(label))
    if (v.verdict) out.push_back(v.orbit);
  return out;
}

}  // namespace nilcomm
