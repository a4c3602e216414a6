#include "cypair/birmod.hpp"

#include "cypair/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cypair::birmod {

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

// x3 -> s3; anything else gets an "s_" prefix.
std::string fibre_name(const std::string& x) {
  if (x.size() > 1 && x[0] == 'x') return "s" + x.substr(1);
  return "s_" + x;
}

std::size_t coordinate_index(const singlocus::ProjPoint& p) {
  std::size_t nonzero = 0, k = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p.coords()[i].is_zero()) {
      ++nonzero;
      k = i;
    }
  if (nonzero != 1)
    throw DomainError("blowup center " + p.to_string() +
                      " is not a coordinate point; supply a linear change first");
  return k;
}

ToricAmbient point_like(const Ring& ambient, std::size_t k, const std::vector<int>& w) {
  ToricAmbient t;
  t.variables = {"u", ambient.name(k)};
  t.weights[0] = {1, 0};
  t.weights[1] = {0, 1};
  t.irrelevant[0] = {"u", ambient.name(k)};
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    if (i == k) continue;
    std::string s = fibre_name(ambient.name(i));
    t.variables.push_back(s);
    t.weights[0].push_back(-w[i]);
    t.weights[1].push_back(1);
    t.irrelevant[1].push_back(s);
  }
  return t;
}

}  // namespace

std::string ToricAmbient::to_string() const {
  std::ostringstream os;
  os << join(variables, " ") << "\n";
  for (const auto& row : weights) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << "\n";
  }
  os << "I = (" << join(irrelevant[0], ",") << ") cap (" << join(irrelevant[1], ",") << ")";
  return os.str();
}

std::string step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Point: return "point";
    case StepKind::LinearSubspace: return "linear-subspace";
    case StepKind::WeightedPoint: return "weighted-point";
    case StepKind::Curve: return "curve";
    case StepKind::NamedExtraction: return "named-divisorial-extraction";
  }
  return "";
}

ToricAmbient blowup_point(const Ring& ambient, const singlocus::ProjPoint& p) {
  if (p.size() != ambient.size()) throw DomainError("point and ambient dimension differ");
  std::size_t k = coordinate_index(p);
  return point_like(ambient, k, std::vector<int>(ambient.size(), 1));
}

ToricAmbient blowup_weighted_point(const Ring& ambient, const singlocus::ProjPoint& p,
                                   const std::vector<int>& weights) {
  if (p.size() != ambient.size() || weights.size() != ambient.size())
    throw DomainError("point, weights and ambient dimension differ");
  std::size_t k = coordinate_index(p);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i == k && weights[i] != 0) throw DomainError("chart variable must carry weight 0");
    if (i != k && weights[i] < 1) throw DomainError("weights off the chart must be >= 1");
  }
  return point_like(ambient, k, weights);
}

ToricAmbient blowup_subspace(const Ring& ambient, const std::vector<std::string>& center) {
  if (center.empty()) throw DomainError("empty center");
  for (const auto& c : center) ambient.require(c);
  ToricAmbient t;
  t.variables = {"u"};
  t.weights[0] = {1};
  t.weights[1] = {0};
  t.irrelevant[0] = {"u"};
  for (const auto& name : ambient.names()) {
    bool in_center = std::find(center.begin(), center.end(), name) != center.end();
    t.variables.push_back(name);
    t.weights[0].push_back(in_center ? -1 : 0);
    t.weights[1].push_back(1);
    t.irrelevant[in_center ? 1 : 0].push_back(name);
  }
  return t;
}

BlowupStep make_point_step(const Ring& ambient, const singlocus::ProjPoint& p, std::string label,
                           std::string exceptional) {
  BlowupStep s;
  s.kind = StepKind::Point;
  s.label = std::move(label);
  s.ambient_variables = ambient.names();
  s.point = p;
  s.exceptional_name = std::move(exceptional);
  s.ambient_after = blowup_point(ambient, p);
  return s;
}

BlowupStep make_subspace_step(const Ring& ambient, std::vector<std::string> center,
                              std::string label, std::string exceptional) {
  BlowupStep s;
  s.kind = StepKind::LinearSubspace;
  s.label = std::move(label);
  s.ambient_variables = ambient.names();
  s.ambient_after = blowup_subspace(ambient, center);
  s.center_variables = std::move(center);
  s.exceptional_name = std::move(exceptional);
  return s;
}

BlowupStep make_weighted_step(const Ring& ambient, const singlocus::ProjPoint& p,
                              std::vector<int> weights, std::string label,
                              std::string exceptional) {
  BlowupStep s;
  s.kind = StepKind::WeightedPoint;
  s.label = std::move(label);
  s.ambient_variables = ambient.names();
  s.point = p;
  s.ambient_after = blowup_weighted_point(ambient, p, weights);
  s.weights = std::move(weights);
  s.exceptional_name = std::move(exceptional);
  return s;
}

std::map<std::string, Poly> blowup_relation(const BlowupStep& step) {
  if (step.kind == StepKind::NamedExtraction || step.kind == StepKind::Curve || !step.ambient_after)
    throw DomainError("step '" + step.label + "' has no toric blowup relation");
  Ring target = step.ambient_after->ring();
  Poly u = Poly::variable(target, 0);
  std::map<std::string, Poly> images;
  const auto& xs = step.ambient_variables;
  if (step.kind == StepKind::LinearSubspace) {
    for (const auto& x : xs) {
      Poly v = Poly::variable(target, x);
      bool in_center = std::find(step.center_variables.begin(), step.center_variables.end(), x) !=
                       step.center_variables.end();
      images.emplace(x, in_center ? u * v : v);
    }
    return images;
  }
  std::size_t k = coordinate_index(*step.point);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i == k) {
      images.emplace(xs[i], Poly::variable(target, xs[i]));
      continue;
    }
    unsigned w = step.kind == StepKind::WeightedPoint ? static_cast<unsigned>(step.weights[i]) : 1U;
    images.emplace(xs[i], u.pow(w) * Poly::variable(target, fibre_name(xs[i])));
  }
  return images;
}

Transform total_and_proper_transform(const Poly& f, const BlowupStep& step) {
  if (f.is_zero()) throw DomainError("transform of the zero polynomial");
  Ring ambient(step.ambient_variables);
  Poly g = f.ring() == ambient ? f : f.embed(ambient);
  Ring target = step.ambient_after ? step.ambient_after->ring() : Ring();
  Poly total = g.substitute(blowup_relation(step), target);
  unsigned upow = ~0U;
  for (const auto& [e, c] : total.terms()) upow = std::min(upow, e[0]);
  Transform t{static_cast<int>(upow), total.divide_by_variable_power(0, upow), Poly(target)};
  t.exceptional_restriction = specialize(t.proper, {{"u", Rat(0)}});
  return t;
}

int log_discrepancy(CenterKind kind, int boundary_mult, std::span<const int> weights,
                    int ambient_dim) {
  if (boundary_mult < 0) throw DomainError("negative boundary multiplicity");
  switch (kind) {
    case CenterKind::SmoothPoint: return ambient_dim - boundary_mult;
    case CenterKind::SmoothCurve: return ambient_dim - 1 - boundary_mult;
    case CenterKind::WeightedPoint: {
      if (static_cast<int>(weights.size()) != ambient_dim)
        throw DomainError("weighted blowup needs one weight per local coordinate");
      if (std::any_of(weights.begin(), weights.end(), [](int w) { return w < 1; }))
        throw DomainError("weights must be >= 1");
      return std::accumulate(weights.begin(), weights.end(), 0) - boundary_mult;
    }
  }
  return 0;
}

int normal_bundle_ruled_surface(int deg_a, int deg_b) { return std::abs(deg_a - deg_b); }

Poly specialize(const Poly& f, const std::map<std::string, Rat>& values) {
  const Ring& r = f.ring();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto it = values.find(r.name(i));
    images.push_back(it == values.end() ? Poly::variable(r, i) : Poly::constant(r, it->second));
  }
  for (const auto& [name, v] : values) r.require(name);
  return f.substitute(images);
}

ComponentSplit exceptional_components(const Poly& restriction,
                                      const std::vector<std::string>& unit_variables) {
  if (restriction.is_zero()) throw DomainError("exceptional restriction vanishes identically");
  const Ring& r = restriction.ring();
  ComponentSplit out;
  Poly rest = restriction;
  for (std::size_t v = 0; v < r.size(); ++v) {
    unsigned m = ~0U;
    for (const auto& [e, c] : rest.terms()) m = std::min(m, e[v]);
    if (m == 0) continue;
    rest = rest.divide_by_variable_power(v, m);
    bool unit = std::find(unit_variables.begin(), unit_variables.end(), r.name(v)) !=
                unit_variables.end();
    std::string factor = r.name(v) + (m > 1 ? "^" + std::to_string(m) : "");
    (unit ? out.units : out.components).push_back(factor);
  }
  if (rest.is_constant()) return out;
  out.components.push_back(rest.to_string());
  int d = rest.total_degree();
  bool certified = (d == 1) ||
                   (d == 2 && rest.is_homogeneous() && singlocus::quadratic_rank(rest) >= 3);
  if (!certified) out.complete = false;
  return out;
}

LedgerEntry apply_named_extraction(const BlowupStep& step) {
  if (step.recipe.empty()) throw DomainError("named extraction '" + step.label + "' has no recipe");
  LedgerEntry e;
  e.label = step.label;
  e.kind = StepKind::NamedExtraction;
  e.exceptional = step.exceptional_name;
  e.assumed = true;
  e.citation = step.citation;
  e.ambient_tags = step.ambient_tags;
  e.notes.push_back("recipe: " + step.recipe);
  e.notes.push_back("declared outcome recorded, not recomputed");
  return e;
}

void ModificationLedger::add(LedgerEntry e) {
  if ((e.assumed || e.joins_boundary()) && !e.exceptional.empty()) boundary.push_back(e.exceptional);
  entries.push_back(std::move(e));
}

bool ModificationLedger::crepancy_holds() const {
  return std::all_of(entries.begin(), entries.end(), [](const LedgerEntry& e) {
    return e.assumed || e.volume_preserving();
  });
}

std::vector<std::string> ModificationLedger::assumed_steps() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (e.assumed) out.push_back(e.label);
  return out;
}

AmbientTag parse_ambient_tag(const std::string& s) {
  if (s == "smooth") return AmbientTag::Smooth;
  if (s == "ODP" || s == "odp") return AmbientTag::OrdinaryDoublePoint;
  if (s == "cyclic quotient" || s.rfind("1/", 0) == 0) return AmbientTag::CyclicQuotient;
  return AmbientTag::Other;
}

bool GoodDltCheck::good() const {
  for (const auto& [name, smooth] : boundary_components_smooth)
    if (smooth && !*smooth) return false;
  return std::all_of(ambient_singularities.begin(), ambient_singularities.end(), [](AmbientTag t) {
    return t == AmbientTag::Smooth || t == AmbientTag::CyclicQuotient;
  });
}

}  // namespace cypair::birmod
