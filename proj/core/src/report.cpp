#include "cypair/report.hpp"

#include "cypair/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace cypair::report {

using nlohmann::json;
using verifier::Status;

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  throw ParseError("unknown format '" + s + "' (json|text)");
}

namespace {

json complex_json(const dualcx::CellComplex& c, const dualcx::PLFingerprint& fp,
                  std::optional<bool> maximal) {
  json cells = json::object();
  for (std::size_t d = 0; d < 3; ++d) {
    json level = json::array();
    for (const auto& cell : c.cells[d]) {
      json facets = json::array();
      for (std::size_t f : cell.facets) facets.push_back(c.cells[d - 1][f].label);
      json jc = {{"label", cell.label}, {"components", cell.components}};
      if (d > 0) jc["facets"] = facets;
      level.push_back(jc);
    }
    cells[std::to_string(d)] = level;
  }
  json out = {{"cells", cells},
              {"fingerprint",
               {{"dimension", fp.dimension},
                {"euler", fp.euler},
                {"betti_mod2", fp.betti_mod2},
                {"counts", fp.counts},
                {"catalog_match", fp.catalog_match}}}};
  if (maximal) out["maximal_intersection"] = *maximal;
  return out;
}

json ledger_json(const birmod::ModificationLedger& l) {
  json entries = json::array();
  for (const auto& e : l.entries) {
    json tr = json::array();
    for (const auto& t : e.transforms)
      tr.push_back({{"divisor", t.divisor}, {"u_power", t.u_power}, {"proper", t.proper}});
    json je = {{"label", e.label},
               {"kind", birmod::step_kind_name(e.kind)},
               {"exceptional", e.exceptional},
               {"transforms", tr},
               {"assumed", e.assumed},
               {"citation", e.citation},
               {"notes", e.notes},
               {"ambient_tags", e.ambient_tags},
               {"joins_boundary", e.assumed || e.joins_boundary()}};
    je["ambient"] = e.ambient ? json(e.ambient->to_string()) : json(nullptr);
    je["boundary_multiplicity"] = e.boundary_multiplicity ? json(*e.boundary_multiplicity) : json(nullptr);
    je["log_discrepancy"] = e.log_discrepancy ? json(*e.log_discrepancy) : json(nullptr);
    entries.push_back(je);
  }
  return {{"steps", entries}, {"boundary", l.boundary}, {"crepant", l.crepancy_holds()}};
}

json verdict_json(const verifier::Verdict& v) {
  json checks = json::array();
  for (const auto& c : v.checks)
    checks.push_back({{"name", c.name},
                      {"status", verifier::status_name(c.status)},
                      {"computed", c.computed},
                      {"expected", c.expected},
                      {"citation", c.citation}});
  json out = {{"case_id", v.case_id},
              {"title", v.title},
              {"checks", checks},
              {"ledger", ledger_json(v.ledger)},
              {"conclusion", v.conclusion},
              {"annotations", v.annotations},
              {"notes", v.notes},
              {"passed", v.passed()},
              {"summary",
               {{"CONFIRMED", v.count(Status::Confirmed)},
                {"ASSUMED", v.count(Status::Assumed)},
                {"MISMATCH", v.count(Status::Mismatch)},
                {"FLAGGED", v.count(Status::Flagged)}}}};
  out["dual_complex"] =
      v.complex && v.fingerprint ? complex_json(*v.complex, *v.fingerprint, v.maximal) : json(nullptr);
  return out;
}

std::string wrap(const std::string& s, std::size_t width) {
  return s.size() <= width ? s : s.substr(0, width - 3) + "...";
}

void verdict_text(std::ostream& os, const verifier::Verdict& v) {
  os << "== " << v.case_id << (v.title.empty() ? "" : ": " + v.title) << "\n";
  std::size_t w = 8;
  for (const auto& c : v.checks) w = std::max(w, c.name.size());
  w = std::min<std::size_t>(w, 56);
  for (const auto& c : v.checks) {
    os << std::left << std::setw(10) << verifier::status_name(c.status) << " " << std::setw(static_cast<int>(w))
       << wrap(c.name, w) << "  " << c.computed;
    if (!c.expected.empty()) os << "  [expected " << c.expected << "]";
    if (c.status == Status::Assumed && !c.citation.empty()) os << "  <" << c.citation << ">";
    os << "\n";
  }
  if (!v.ledger.entries.empty()) {
    os << "ledger:\n";
    for (const auto& e : v.ledger.entries) {
      os << "  " << e.label << " [" << birmod::step_kind_name(e.kind) << "] -> " << e.exceptional;
      if (e.log_discrepancy) os << ", a = " << *e.log_discrepancy;
      if (e.assumed) os << ", ASSUMED";
      os << "\n";
      for (const auto& t : e.transforms)
        os << "    " << t.divisor << ": u^" << t.u_power << " * (" << t.proper << ")\n";
    }
    os << "  boundary: ";
    for (std::size_t i = 0; i < v.ledger.boundary.size(); ++i) os << (i ? " + " : "") << v.ledger.boundary[i];
    os << "\n";
  }
  if (v.fingerprint) {
    const auto& fp = *v.fingerprint;
    os << "dual complex: dim " << fp.dimension << ", cells (";
    for (std::size_t i = 0; i < fp.counts.size(); ++i) os << (i ? "," : "") << fp.counts[i];
    os << "), euler " << fp.euler << ", betti (";
    for (std::size_t i = 0; i < fp.betti_mod2.size(); ++i) os << (i ? "," : "") << fp.betti_mod2[i];
    os << "), " << fp.catalog_match;
    if (v.maximal) os << ", maximal intersection " << (*v.maximal ? "yes" : "no");
    os << "\n";
  }
  for (const auto& a : v.annotations) os << "annotation: " << a << "\n";
  os << "conclusion: " << v.conclusion << "\n";
  os << "result: " << (v.passed() ? "PASS" : "FAIL") << " (" << v.count(Status::Confirmed)
     << " confirmed, " << v.count(Status::Assumed) << " assumed, " << v.count(Status::Flagged)
     << " flagged, " << v.count(Status::Mismatch) << " mismatch)\n";
}

}  // namespace

std::string verdict(const verifier::Verdict& v, Format f) {
  if (f == Format::Json) return verdict_json(v).dump(2) + "\n";
  std::ostringstream os;
  verdict_text(os, v);
  return os.str();
}

std::string verdicts(const std::vector<verifier::Verdict>& vs, Format f) {
  if (f == Format::Json) {
    json arr = json::array();
    for (const auto& v : vs) arr.push_back(verdict_json(v));
    return json{{"cases", arr}}.dump(2) + "\n";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << "\n";
    verdict_text(os, vs[i]);
  }
  return os.str();
}

std::string germ(const singclass::GermReport& r, Format f) {
  json j = {{"germ", r.germ.to_string()},
            {"variables", r.germ.ring().names()},
            {"multiplicity", r.multiplicity},
            {"corank", r.corank},
            {"milnor", r.milnor.to_string()},
            {"milnor_certificate", r.milnor.certificate},
            {"newton", r.newton.to_string()},
            {"type", r.verdict.name()},
            {"alias", r.verdict.alias},
            {"category", singclass::category_name(r.verdict.category())},
            {"notes", r.notes}};
  if (r.modulus)
    j["modulus"] = {{"power", r.modulus->power},
                    {"value", r.modulus->value.to_string()},
                    {"forbidden", r.modulus->forbidden.to_string()},
                    {"degenerate", r.modulus->degenerate()}};
  if (r.principal_discriminant) j["principal_discriminant"] = r.principal_discriminant->to_string();
  if (f == Format::Json) return j.dump(2) + "\n";
  std::ostringstream os;
  os << "germ:         " << r.germ.to_string() << "\n"
     << "type:         " << r.verdict.name() << (r.verdict.alias.empty() ? "" : " (" + r.verdict.alias + ")")
     << "\n"
     << "category:     " << singclass::category_name(r.verdict.category()) << "\n"
     << "multiplicity: " << r.multiplicity << "\n"
     << "corank:       " << r.corank << "\n"
     << "milnor:       " << r.milnor.to_string() << "\n"
     << "newton:       " << r.newton.to_string() << "\n";
  if (r.modulus)
    os << "modulus:      lambda^" << r.modulus->power << " = " << r.modulus->value.to_string()
       << (r.modulus->degenerate() ? " (excluded)" : "") << "\n";
  for (const auto& n : r.notes) os << "note:         " << n << "\n";
  return os.str();
}

std::string complex(const dualcx::CellComplex& c, int ambient_dim, Format f) {
  auto fp = dualcx::fingerprint(c);
  bool maximal = dualcx::is_maximal_intersection(c, ambient_dim);
  json j = complex_json(c, fp, maximal);
  j["boundary_squared_zero"] = c.boundary_squared_zero();
  if (f == Format::Json) return j.dump(2) + "\n";
  std::ostringstream os;
  for (std::size_t d = 0; d < 3; ++d)
    for (const auto& cell : c.cells[d]) {
      os << d << "-cell " << cell.label;
      if (d > 0) {
        os << " : ";
        for (std::size_t i = 0; i < cell.facets.size(); ++i)
          os << (i ? " + " : "") << c.cells[d - 1][cell.facets[i]].label;
      }
      os << "\n";
    }
  os << "dimension " << fp.dimension << ", euler " << fp.euler << ", betti (";
  for (std::size_t i = 0; i < fp.betti_mod2.size(); ++i) os << (i ? "," : "") << fp.betti_mod2[i];
  os << "), " << fp.catalog_match << ", maximal intersection " << (maximal ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace cypair::report
