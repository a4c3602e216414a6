#include "cypair/registry.hpp"

#include "cypair/error.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace cypair::verifier {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("registry: " + where + ": " + what);
}

Rat to_rat(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  fail(where, "expected an integer or a rational string");
}

std::vector<Rat> rats(const json& j, const std::string& where) {
  std::vector<Rat> out;
  if (!j.is_array()) fail(where, "expected an array of numbers");
  for (const auto& e : j) out.push_back(to_rat(e, where));
  return out;
}

std::map<std::string, Rat> rat_map(const json& j, const std::string& where) {
  std::map<std::string, Rat> out;
  if (!j.is_object()) fail(where, "expected an object of variable values");
  for (const auto& [k, v] : j.items()) out.emplace(k, to_rat(v, where));
  return out;
}

template <class T>
T opt(const json& j, const char* key, T def) {
  return j.contains(key) ? j.at(key).get<T>() : def;
}

template <class T>
std::optional<T> maybe(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string str(const json& j, const char* key) { return opt<std::string>(j, key, ""); }

std::vector<std::string> strs(const json& j, const char* key) {
  return opt<std::vector<std::string>>(j, key, {});
}

LineSpec line(const json& j) {
  LineSpec l;
  l.zero = j.at("zero").get<std::vector<std::string>>();
  l.label = str(j, "label");
  if (l.label.empty()) {
    l.label = "{";
    for (std::size_t i = 0; i < l.zero.size(); ++i) l.label += (i ? "=" : "") + l.zero[i];
    l.label += "=0}";
  }
  return l;
}

dualcx::StratumSpec stratum(const json& j) {
  dualcx::StratumSpec s;
  s.components = j.at("components").get<std::vector<std::string>>();
  s.count = opt<int>(j, "count", 1);
  s.circuits = opt<std::vector<std::vector<std::string>>>(j, "circuits", {});
  return s;
}

StepSpec step(const json& j, const std::string& where) {
  StepSpec s;
  s.label = j.at("label").get<std::string>();
  s.kind = j.at("kind").get<std::string>();
  static const std::set<std::string> kinds = {"point", "linear-subspace", "weighted-point", "curve",
                                              "named"};
  if (!kinds.count(s.kind)) fail(where, "unknown step kind '" + s.kind + "'");
  if (j.contains("center")) s.center = rats(j.at("center"), where);
  s.center_variables = strs(j, "center_variables");
  s.weights = opt<std::vector<int>>(j, "weights", {});
  s.exceptional = str(j, "exceptional");
  s.expect_variables = strs(j, "expect_variables");
  s.expect_matrix = opt<std::vector<std::vector<int>>>(j, "expect_matrix", {});
  s.expect_irrelevant = opt<std::vector<std::vector<std::string>>>(j, "expect_irrelevant", {});
  for (const auto& t : j.value("transforms", json::array())) {
    TransformSpec ts;
    ts.divisor = t.at("divisor").get<std::string>();
    ts.equation = opt<std::string>(t, "equation", ts.divisor);
    ts.expect_u_power = maybe<int>(t, "expect_u_power");
    ts.expect_proper = str(t, "expect_proper");
    ts.expect_components = maybe<int>(t, "expect_components");
    ts.unit_variables = strs(t, "unit_variables");
    ts.citation = str(t, "citation");
    s.transforms.push_back(std::move(ts));
  }
  if (j.contains("discrepancy")) {
    const auto& d = j.at("discrepancy");
    DiscrepancySpec ds;
    ds.method = d.at("method").get<std::string>();
    if (d.contains("point")) ds.point = rats(d.at("point"), where);
    ds.eliminate = str(d, "eliminate");
    ds.in_step = str(d, "in_step");
    if (d.contains("chart")) ds.chart = rat_map(d.at("chart"), where);
    ds.boundary = strs(d, "boundary");
    ds.along = strs(d, "along");
    ds.expect = maybe<int>(d, "expect");
    ds.citation = str(d, "citation");
    s.discrepancy = std::move(ds);
  }
  if (j.contains("chart_odp")) {
    const auto& c = j.at("chart_odp");
    s.chart_odp = ChartOdpSpec{c.at("divisor").get<std::string>(), rat_map(c.at("chart"), where),
                               rat_map(c.at("point"), where), str(c, "citation")};
  }
  if (j.contains("normal_bundle")) {
    auto v = j.at("normal_bundle").get<std::vector<int>>();
    if (v.size() != 2) fail(where, "normal_bundle needs two degrees");
    s.normal_bundle = std::make_pair(v[0], v[1]);
  }
  s.expect_hirzebruch = maybe<int>(j, "expect_hirzebruch");
  s.recipe = str(j, "recipe");
  s.ambient_tags = strs(j, "ambient_tags");
  s.citation = str(j, "citation");
  return s;
}

CaseSpec parse_case(const json& j) {
  CaseSpec c;
  c.id = j.at("id").get<std::string>();
  const std::string where = "case " + c.id;
  c.title = str(j, "title");
  c.citation = str(j, "citation");
  c.variables = j.at("variables").get<std::vector<std::string>>();
  c.parameters = opt<std::map<std::string, std::string>>(j, "parameters", {});
  c.x_equation = j.at("x_equation").get<std::string>();
  c.boundary = j.at("boundary").get<std::vector<std::string>>();
  c.boundary_names = strs(j, "boundary_names");
  if (c.boundary_names.empty()) {
    if (c.boundary.size() == 1) {
      c.boundary_names = {"D"};
    } else {
      for (std::size_t i = 0; i < c.boundary.size(); ++i)
        c.boundary_names.push_back("D" + std::to_string(i + 1));
    }
  }
  if (c.boundary_names.size() != c.boundary.size())
    fail(where, "boundary_names and boundary differ in length");
  c.notes = strs(j, "notes");
  c.annotations = strs(j, "annotations");

  for (const auto& g : j.value("genericity", json::array())) {
    GenericityCheck gc;
    gc.name = g.at("name").get<std::string>();
    gc.kind = g.at("kind").get<std::string>();
    gc.forms = g.at("forms").get<std::vector<std::string>>();
    if (g.contains("point")) gc.point = rats(g.at("point"), where);
    if (g.contains("line")) gc.line = line(g.at("line"));
    gc.citation = str(g, "citation");
    c.genericity.push_back(std::move(gc));
  }
  for (const auto& i : j.value("identities", json::array()))
    c.identities.push_back({i.at("name").get<std::string>(),
                            i.at("variables").get<std::vector<std::string>>(),
                            i.at("lhs").get<std::string>(), i.at("rhs").get<std::string>(),
                            str(i, "citation")});
  for (const auto& l : j.value("loci", json::array())) {
    LocusCheck lc;
    lc.name = l.at("name").get<std::string>();
    lc.surface = l.at("surface").get<std::string>();
    for (const auto& p : l.value("claimed", json::array())) lc.claimed.push_back(rats(p, where));
    for (const auto& s : l.value("strata", json::array())) lc.strata.push_back(line(s));
    lc.expect_points = maybe<int>(l, "expect_points");
    lc.expect_rational = maybe<int>(l, "expect_rational");
    lc.expect_conjugate_degrees = opt<std::vector<int>>(l, "expect_conjugate_degrees", {});
    lc.expect_all_odp = maybe<bool>(l, "expect_all_odp");
    lc.citation = str(l, "citation");
    c.loci.push_back(std::move(lc));
  }
  for (const auto& g : j.value("germs", json::array())) {
    GermCheck gc;
    gc.name = g.at("name").get<std::string>();
    gc.surface = str(g, "surface");
    if (g.contains("point")) gc.point = rats(g.at("point"), where);
    gc.germ = str(g, "germ");
    gc.germ_variables = strs(g, "germ_variables");
    if (gc.germ.empty() == gc.surface.empty())
      fail(where, "germ check '" + gc.name + "' needs exactly one of surface or germ");
    gc.expect = g.at("expect").get<std::string>();
    gc.expect_milnor = maybe<int>(g, "expect_milnor");
    gc.expect_infinite_milnor = opt<bool>(g, "expect_infinite_milnor", false);
    gc.closed_form_milnor = opt<bool>(g, "closed_form_milnor", false);
    gc.citation = str(g, "citation");
    c.germs.push_back(std::move(gc));
  }
  for (const auto& m : j.value("line_multiplicities", json::array()))
    c.line_multiplicities.push_back({m.at("name").get<std::string>(),
                                     m.at("surface").get<std::string>(), line(m.at("line")),
                                     m.at("expect").get<int>(), str(m, "citation")});
  for (const auto& s : j.value("steps", json::array())) c.steps.push_back(step(s, where));
  for (const auto& s : j.value("surfaces", json::array())) {
    SurfaceCheck sc;
    sc.name = s.at("name").get<std::string>();
    sc.lattice = s.at("lattice").get<std::string>();
    sc.labels = strs(s, "labels");
    sc.components = s.at("components").get<std::vector<std::vector<int>>>();
    sc.expect_self = opt<std::vector<int>>(s, "expect_self", {});
    for (const auto& i : s.value("intersections", json::array()))
      sc.intersections.push_back(
          {i.at("a").get<std::size_t>(), i.at("b").get<std::size_t>(), i.at("expect").get<int>()});
    if (s.contains("blowup_candidate")) {
      auto v = s.at("blowup_candidate").get<std::vector<std::size_t>>();
      if (v.size() != 2) fail(where, "blowup_candidate needs two positions");
      sc.blowup_candidate = std::make_pair(v[0], v[1]);
    }
    sc.citation = str(s, "citation");
    c.surfaces.push_back(std::move(sc));
  }
  if (j.contains("dual_complex")) {
    const auto& d = j.at("dual_complex");
    DualComplexSpec dc;
    dc.components = d.at("components").get<std::vector<std::string>>();
    for (const auto& s : d.value("strata", json::array())) dc.strata.push_back(stratum(s));
    dc.expect_catalog = str(d, "expect_catalog");
    dc.expect_counts = opt<std::vector<std::size_t>>(d, "expect_counts", {});
    dc.expect_euler = maybe<int>(d, "expect_euler");
    dc.expect_betti = opt<std::vector<int>>(d, "expect_betti", {});
    dc.expect_maximal = maybe<bool>(d, "expect_maximal");
    dc.ambient_dim = opt<int>(d, "ambient_dim", 3);
    dc.citation = str(d, "citation");
    c.dual_complex = std::move(dc);
  }
  if (j.contains("rigidity")) {
    const auto& r = j.at("rigidity");
    c.rigidity = RigiditySpec{r.at("kind").get<std::string>(), strs(r, "from_locus"),
                              str(r, "completeness_citation"), str(r, "expect_conclusion"),
                              str(r, "citation")};
  }
  return c;
}

}  // namespace

Poly CaseSpec::poly(const std::string& text) const {
  Ring base = ring();
  if (parameters.empty()) return Poly::parse(text, base);
  std::vector<std::string> extra;
  for (const auto& [name, body] : parameters) {
    if (base.index_of(name)) throw ParseError("parameter '" + name + "' shadows a variable");
    extra.push_back(name);
  }
  Ring wide = base.extended(extra);
  Poly f = Poly::parse(text, wide);
  std::map<std::string, Poly> images;
  for (const auto& v : variables) images.emplace(v, Poly::variable(base, v));
  for (const auto& [name, body] : parameters) images.emplace(name, Poly::parse(body, base));
  return f.substitute(images, base);
}

std::string CaseSpec::boundary_variable() const {
  if (boundary.size() != 1 || !ring().index_of(boundary[0]))
    throw DomainError("case " + id + ": D needs a single coordinate-hyperplane boundary");
  return boundary[0];
}

Ring CaseSpec::d_ring() const {
  Ring r = ring();
  return r.without(*r.index_of(boundary_variable()));
}

Poly CaseSpec::d() const {
  Ring target = d_ring();
  std::string b = boundary_variable();
  std::map<std::string, Poly> images;
  for (const auto& v : variables)
    images.emplace(v, v == b ? Poly(target) : Poly::variable(target, v));
  return x().substitute(images, target);
}

Registry Registry::load_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("registry: malformed JSON: ") + e.what());
  }
  Registry r;
  try {
    for (const auto& c : doc.at("cases")) r.cases_.push_back(parse_case(c));
  } catch (const json::exception& e) {
    throw ParseError(std::string("registry: ") + e.what());
  }
  std::set<std::string> seen;
  for (const auto& c : r.cases_)
    if (!seen.insert(c.id).second) throw ParseError("registry: duplicate case id " + c.id);
  return r;
}

Registry Registry::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("registry file not found: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_string(ss.str());
}

std::string Registry::default_path() {
  if (const char* env = std::getenv("CYPAIR_REGISTRY"); env && *env) return env;
#ifdef CYPAIR_SOURCE_REGISTRY
  if (std::filesystem::exists(CYPAIR_SOURCE_REGISTRY)) return CYPAIR_SOURCE_REGISTRY;
#endif
#ifdef CYPAIR_DEFAULT_REGISTRY
  return CYPAIR_DEFAULT_REGISTRY;
#else
  return "registry.json";
#endif
}

const CaseSpec& Registry::get(const std::string& id) const {
  for (const auto& c : cases_)
    if (c.id == id) return c;
  throw NotFound("unknown case id '" + id + "'");
}

std::vector<std::string> Registry::ids() const {
  std::vector<std::string> out;
  for (const auto& c : cases_) out.push_back(c.id);
  return out;
}

StrataFile parse_strata_file(const std::string& text) {
  try {
    json j = json::parse(text);
    StrataFile f;
    f.components = j.at("components").get<std::vector<std::string>>();
    for (const auto& s : j.value("strata", json::array())) f.strata.push_back(stratum(s));
    f.ambient_dim = opt<int>(j, "ambient_dim", 3);
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("strata file: ") + e.what());
  }
}

}  // namespace cypair::verifier
