#include "nilcomm/serialize.hpp"

#include "json.hpp"
#include "nilcomm/excdata.hpp"

namespace nilcomm {

using nlohmann::json;

namespace {

json diagram_json(const AbDiagram& d) {
  json out = {{"text", to_text(d)}};
  if (d.plain()) {
    out["partition"] = d.partition();
  } else {
    json rows = json::array();
    for (const Row& r : d.rows()) rows.push_back({{"length", r.length}, {"start", std::string(1, to_char(r.start))}});
    out["rows"] = rows;
  }
  return out;
}

json status_json(const CandidateStatus& s) {
  json out = {{"orbit", s.label},
              {"status", std::string(to_string(s.status))},
              {"defect", s.defect},
              {"component_dim", s.component_dim}};
  if (s.target) out["target"] = *s.target;
  if (s.witness) out["witness"] = *s.witness;
  return out;
}

json status_list(const std::vector<CandidateStatus>& list) {
  json out = json::array();
  for (const auto& s : list) out.push_back(status_json(s));
  return out;
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

}  // namespace

std::string diagram_to_json(const AbDiagram& diagram) { return diagram_json(diagram).dump(); }

AbDiagram diagram_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::SyntaxError, e.what());
  }
  try {
    if (doc.is_string()) return parse_diagram(doc.get<std::string>());
    if (doc.contains("rows")) {
      std::vector<Row> rows;
      for (const auto& r : doc.at("rows")) {
        const std::string start = r.at("start").get<std::string>();
        if (start != "a" && start != "b") throw Error(Errc::SyntaxError, "row start must be a or b");
        rows.push_back({r.at("length").get<int>(), start == "a" ? Letter::a : Letter::b});
      }
      return AbDiagram::from_rows(rows);
    }
    if (doc.contains("partition")) return AbDiagram::from_partition(doc.at("partition").get<std::vector<int>>());
    if (doc.contains("text")) return parse_diagram(doc.at("text").get<std::string>());
  } catch (const json::exception& e) {
    throw Error(Errc::SyntaxError, e.what());
  }
  throw Error(Errc::SyntaxError, "diagram JSON needs rows, partition or text");
}

std::string invariants_to_json(const AbDiagram& diagram, PairType type) {
  const OrbitInvariants inv = compute_invariants(diagram, type);
  json pairs = json::array();
  for (const LengthPair& lp : centralizer_pairs(diagram, type))
    pairs.push_back({{"length", lp.d}, {"pair", lp.label()}, {"rank", lp.rank}});
  json doc = {{"type", std::string(to_string(type))},
              {"diagram", diagram_json(diagram)},
              {"defect", inv.defect},
              {"dim_p_cent", inv.dim_p_cent},
              {"dim_orbit", inv.dim_orbit},
              {"dim_p0", inv.dim_p0},
              {"distinguished", inv.is_distinguished},
              {"almost_distinguished", inv.is_almost_distinguished},
              {"even", inv.is_even},
              {"component_dim", inv.component_dim},
              {"centralizer_pairs", pairs}};
  return doc.dump(2) + "\n";
}

std::string report_to_json(const ComponentsReport& report) {
  json doc = {{"pair", report.pair},
              {"dim_p", report.dim_p},
              {"components", status_list(report.components)},
              {"eliminated", status_list(report.eliminated)},
              {"unresolved", status_list(report.unresolved)},
              {"non_candidates", report.non_candidates.size()},
              {"count", {{"min", report.min_components()}, {"max", report.max_components()}}}};
  return doc.dump(2) + "\n";
}

std::string realization_to_json(const MatrixRealization& real) {
  json doc = {{"type", std::string(to_string(real.type))},
              {"diagram", diagram_json(real.diagram)},
              {"n", real.n},
              {"e", matrix_json(real.e)},
              {"h", matrix_json(real.h)},
              {"f", matrix_json(real.f)},
              {"weights", real.weights}};
  if (real.form) doc["form"] = matrix_json(*real.form);
  if (real.J) {
    doc["J"] = matrix_json(*real.J);
    doc["xi"] = real.xi;
    doc["signs"] = real.signs;
  }
  return doc.dump(2) + "\n";
}

std::string selflarge_to_json(const SelfLargeVerdict& verdict, PairType type) {
  json doc = {{"type", std::string(to_string(type))},
              {"diagram", diagram_json(verdict.orbit)},
              {"self_large", verdict.verdict},
              {"reason", std::string(to_string(verdict.reason))}};
  return doc.dump(2) + "\n";
}

std::string exceptional_report_json(std::string_view label) {
  const ExceptionalCase& c = exceptional_case(label);
  const ComponentsReport report = exceptional_components(label);
  json orbits = json::array();
  for (const auto& o : c.orbits) {
    json row = {{"orbit", o.orbit}, {"pair", o.pair}, {"defect", o.defect}};
    if (o.dim_orbit) row["dim_orbit"] = *o.dim_orbit;
    if (!o.note.empty()) row["note"] = o.note;
    orbits.push_back(row);
  }
  json flags = json::array();
  for (const auto& d : exceptional_discrepancies(label)) flags.push_back({{"orbit", d.orbit}, {"detail", d.detail}});
  json doc = {{"case", c.label},
              {"real_form", c.real_form},
              {"dim_p", c.dim_p},
              {"orbits", orbits},
              {"components", status_list(report.components)},
              {"eliminated", status_list(report.eliminated)},
              {"unresolved", status_list(report.unresolved)},
              {"count", {{"min", report.min_components()}, {"max", report.max_components()}}},
              {"self_large", exceptional_selflarge(label)},
              {"discrepancies", flags}};
  return doc.dump(2) + "\n";
}

}  // namespace nilcomm
