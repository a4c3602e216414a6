#include "cypair/verifier.hpp"

#include "cypair/error.hpp"
#include "cypair/singclass.hpp"
#include "cypair/singlocus.hpp"
#include "cypair/surfcalc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace cypair::verifier {

using singlocus::Hypersurface;
using singlocus::Line;
using singlocus::ProjPoint;

std::string status_name(Status s) {
  switch (s) {
    case Status::Confirmed: return "CONFIRMED";
    case Status::Assumed: return "ASSUMED";
    case Status::Mismatch: return "MISMATCH";
    case Status::Flagged: return "FLAGGED";
  }
  return "";
}

bool Verdict::passed() const { return count(Status::Mismatch) == 0; }

std::size_t Verdict::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

std::string apply_rigidity(const RigidityFacts& f) {
  bool premises_known = f.locus_verified || f.completeness_assumed;
  if (f.kind == "quartic") {
    if (f.degree == 4 && f.ambient_dim == 4 && premises_known && f.all_odp.value_or(false) &&
        f.singular_points <= 8)
      return kRigid;
    return kNoConclusion;
  }
  if (f.kind == "cubic") {
    if (f.degree == 3 && f.ambient_dim == 4 && f.singular_points == 0 && premises_known)
      return kNonRational;
    return kNoConclusion;
  }
  return kNoConclusion;
}

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    if constexpr (std::is_same_v<T, Rat>) os << v[i].to_string();
    else os << v[i];
  }
  return os.str();
}

std::string tuple(const std::vector<int>& v) { return "(" + join(v) + ")"; }

class Builder {
 public:
  explicit Builder(Verdict& v) : v_(v) {}

  void add(std::string name, Status s, std::string computed, std::string expected,
           std::string citation) {
    v_.checks.push_back({std::move(name), s, std::move(computed), std::move(expected),
                         std::move(citation)});
  }
  void compare(std::string name, const std::string& computed, const std::string& expected,
               std::string citation) {
    add(std::move(name), computed == expected ? Status::Confirmed : Status::Mismatch, computed,
        expected, std::move(citation));
  }
  /// Any exception thrown by `body` becomes a MISMATCH entry.
  void guard(const std::string& name, const std::string& citation, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, Status::Mismatch, std::string("error: ") + e.what(), "", citation);
    }
  }

 private:
  Verdict& v_;
};

Poly resolve_equation(const CaseSpec& c, const std::string& eq) {
  if (eq == "X") return c.x();
  if (eq == "D") return c.d();
  for (std::size_t i = 0; i < c.boundary_names.size(); ++i)
    if (eq == c.boundary_names[i]) return c.poly(c.boundary[i]);
  return c.poly(eq);
}

Poly surface_equation(const CaseSpec& c, const std::string& surface) {
  if (surface == "X") return c.x();
  if (surface == "D") return c.d();
  throw DomainError("unknown surface '" + surface + "' (expected X or D)");
}

/// Expected proper transform: text over the Cox variables, case parameters
/// pulled back along the blowup.
Poly expected_in_cox(const CaseSpec& c, const birmod::BlowupStep& st, const std::string& text) {
  Ring cox = st.ambient_after->ring();
  if (c.parameters.empty()) return Poly::parse(text, cox);
  std::vector<std::string> extra;
  for (const auto& [name, body] : c.parameters) extra.push_back(name);
  Ring wide = cox.extended(extra);
  Poly f = Poly::parse(text, wide);
  auto rel = birmod::blowup_relation(st);
  std::map<std::string, Poly> images;
  for (const auto& v : cox.names()) images.emplace(v, Poly::variable(cox, v));
  for (const auto& [name, body] : c.parameters) images.emplace(name, c.poly(name).substitute(rel, cox));
  return f.substitute(images, cox);
}

/// The point of P^n over a D-point (boundary coordinate inserted as 0).
ProjPoint lift_to_x(const CaseSpec& c, const std::vector<Rat>& d_point) {
  std::string b = c.boundary_variable();
  std::vector<Rat> out;
  std::size_t k = 0;
  for (const auto& v : c.variables) {
    if (v == b) {
      out.push_back(Rat(0));
    } else {
      if (k >= d_point.size()) throw DomainError("point has too few coordinates");
      out.push_back(d_point[k++]);
    }
  }
  if (k != d_point.size()) throw DomainError("point has too many coordinates");
  return ProjPoint(out);
}

/// X smooth at the point with dX/d(boundary) != 0, so the D germ gives local
/// coordinates on X. Returns a note for the ledger.
std::string require_boundary_eliminable(const CaseSpec& c, const ProjPoint& p) {
  Poly x = c.x();
  std::string b = c.boundary_variable();
  Rat dx = x.derivative(b).evaluate(p.coords());
  if (dx.is_zero())
    throw DomainError("d" + std::string("X/d") + b + " vanishes at " + p.to_string() +
                      "; the D germ does not give coordinates on X");
  return b + " eliminated from X near " + p.to_string() + " (dX/d" + b + " = " + dx.to_string() + ")";
}

struct StepRecord {
  birmod::BlowupStep step;
  std::map<std::string, Poly> proper;
};

struct LocusFacts {
  int points = 0;
  std::optional<bool> all_odp;
  bool ok = false;
};

class Runner {
 public:
  Runner(const CaseSpec& c, const RunOptions& o, Verdict& v) : c_(c), o_(o), v_(v), b_(v) {}

  void run() {
    for (auto& ch : check_cy_pair(c_)) v_.checks.push_back(std::move(ch));
    for (const auto& g : c_.genericity) genericity(g);
    for (const auto& i : c_.identities) identity(i);
    for (const auto& l : c_.loci) locus(l);
    for (const auto& g : c_.germs) germ(g);
    for (const auto& m : c_.line_multiplicities) line_multiplicity(m);
    v_.ledger.boundary = c_.boundary_names;
    for (const auto& s : c_.steps) step(s);
    if (!c_.steps.empty()) ledger_summary();
    for (const auto& s : c_.surfaces) surface(s);
    if (c_.dual_complex) dual_complex(*c_.dual_complex);
    if (c_.rigidity) rigidity(*c_.rigidity);
    else v_.conclusion = kNoConclusion;
    v_.annotations = c_.annotations;
    v_.notes = c_.notes;
  }

 private:
  void genericity(const GenericityCheck& g) {
    b_.guard(g.name, g.citation, [&] {
      std::vector<Poly> forms;
      for (const auto& f : g.forms) forms.push_back(c_.poly(f));
      if (g.kind == "not_all_zero_at" || g.kind == "nonzero_at") {
        std::vector<std::string> vals;
        int nonzero = 0;
        for (const auto& f : forms) {
          Rat r = f.evaluate(g.point);
          vals.push_back(r.to_string());
          if (!r.is_zero()) ++nonzero;
        }
        bool ok = g.kind == "nonzero_at" ? nonzero == static_cast<int>(forms.size()) : nonzero > 0;
        b_.add(g.name, ok ? Status::Confirmed : Status::Mismatch,
               "values (" + join(vals) + ") at (" + join(g.point) + ")",
               g.kind == "nonzero_at" ? "all nonzero" : "not all zero", g.citation);
      } else if (g.kind == "squarefree_on_line") {
        if (!g.line) throw DomainError("squarefree_on_line needs a line");
        Line l = Line::coordinate(c_.ring(), g.line->zero, g.line->label);
        std::vector<std::string> parts;
        bool ok = true;
        Ring tr({"t"});
        Poly t = Poly::variable(tr, 0);
        for (std::size_t i = 0; i < forms.size(); ++i) {
          std::vector<Poly> images;
          for (std::size_t k = 0; k < l.base.size(); ++k)
            images.push_back(Poly::constant(tr, l.base[k]) + t * l.direction[k]);
          UPoly u = UPoly::from_poly(forms[i].substitute(images), 0);
          bool full = u.degree() == forms[i].total_degree();
          bool sqfree = !u.is_zero() && gcd(u, u.derivative()).degree() == 0;
          ok = ok && full && sqfree;
          parts.push_back(g.forms[i] + "|" + l.label + " = " + u.to_string() +
                          (full ? "" : " (root at infinity)") + (sqfree ? ", squarefree" : ", repeated root"));
        }
        b_.add(g.name, ok ? Status::Confirmed : Status::Mismatch, join(parts, "; "),
               "distinct roots, full degree", g.citation);
      } else {
        throw DomainError("unknown genericity kind '" + g.kind + "'");
      }
    });
  }

  void identity(const IdentityCheck& i) {
    b_.guard(i.name, i.citation, [&] {
      Ring r(i.variables);
      Poly lhs = Poly::parse(i.lhs, r), rhs = Poly::parse(i.rhs, r);
      b_.add(i.name, lhs == rhs ? Status::Confirmed : Status::Mismatch, lhs.to_string(),
             rhs.to_string(), i.citation);
    });
  }

  void locus(const LocusCheck& l) {
    LocusFacts facts;
    b_.guard(l.name, l.citation, [&] {
      Poly eq = surface_equation(c_, l.surface);
      Hypersurface h(eq);
      std::vector<ProjPoint> claimed;
      for (const auto& p : l.claimed) claimed.emplace_back(p);
      std::vector<Line> strata;
      for (const auto& s : l.strata) strata.push_back(Line::coordinate(eq.ring(), s.zero, s.label));
      singlocus::LocusVerdict lv;
      try {
        lv = singlocus::verify_singular_locus(h, claimed, strata);
      } catch (const singlocus::LocusMismatch& e) {
        b_.add(l.name, Status::Mismatch, e.what(), "claimed points only", l.citation);
        return;
      }
      std::vector<ProjPoint> rational = claimed;
      std::vector<int> degrees;
      std::optional<bool> all_odp = true;
      std::vector<std::string> detail;
      for (const auto& st : lv.strata) {
        if (st.entirely_singular) detail.push_back(st.label + " entirely singular");
        for (const auto& p : st.rational_points)
          if (std::find(rational.begin(), rational.end(), p) == rational.end()) rational.push_back(p);
        for (const auto& cc : st.conjugates) {
          degrees.push_back(cc.degree);
          detail.push_back(st.label + ": " + cc.factor.to_string() + " = 0 (degree " +
                           std::to_string(cc.degree) + (cc.irreducible ? ", irreducible" : "") +
                           (cc.all_odp ? (*cc.all_odp ? ", ODP" : ", not ODP") : ", ODP unknown") + ")");
          if (!cc.all_odp) all_odp.reset();
          else if (all_odp && !*cc.all_odp) all_odp = false;
        }
      }
      for (const auto& p : rational) {
        bool odp = singlocus::is_odp_projective(h, p);
        detail.push_back(p.to_string() + (odp ? " ODP" : " not ODP"));
        if (all_odp && !odp) all_odp = false;
      }
      std::sort(degrees.begin(), degrees.end());
      facts.points = lv.total_points;
      facts.all_odp = all_odp;

      bool ok = true;
      std::string computed = std::to_string(lv.total_points) + " points (" +
                             std::to_string(rational.size()) + " rational, conjugate degrees " +
                             tuple(degrees) + "): " + join(detail, "; ");
      std::vector<std::string> exp;
      if (l.expect_points) {
        exp.push_back(std::to_string(*l.expect_points) + " points");
        ok = ok && *l.expect_points == lv.total_points;
      }
      if (l.expect_rational) {
        exp.push_back(std::to_string(*l.expect_rational) + " rational");
        ok = ok && *l.expect_rational == static_cast<int>(rational.size());
      }
      if (!l.expect_conjugate_degrees.empty()) {
        auto e = l.expect_conjugate_degrees;
        std::sort(e.begin(), e.end());
        exp.push_back("conjugate degrees " + tuple(e));
        ok = ok && e == degrees;
      }
      b_.add(l.name, ok ? Status::Confirmed : Status::Mismatch, computed, join(exp, ", "),
             l.citation);
      if (l.expect_all_odp) {
        std::string got = all_odp ? (*all_odp ? "all ODP" : "not all ODP") : "ODP test inconclusive";
        Status s = !all_odp ? Status::Flagged
                            : (*all_odp == *l.expect_all_odp ? Status::Confirmed : Status::Mismatch);
        b_.add(l.name + ": ODP", s, got, *l.expect_all_odp ? "all ODP" : "not all ODP", l.citation);
      }
      facts.ok = ok;
    });
    loci_[l.name] = facts;
  }

  void germ(const GermCheck& g) {
    b_.guard(g.name, g.citation, [&] {
      Poly germ{Ring()};
      std::string where;
      if (!g.germ.empty()) {
        std::vector<std::string> vars = g.germ_variables.empty()
                                            ? std::vector<std::string>{"x", "y", "z"}
                                            : g.germ_variables;
        germ = Poly::parse(g.germ, Ring(vars));
        where = g.germ;
      } else {
        Hypersurface h(surface_equation(c_, g.surface));
        ProjPoint p(g.point);
        if (!h.contains(p)) throw DomainError(p.to_string() + " is not on " + g.surface);
        germ = singlocus::affine_germ(h, p);
        where = g.surface + " at " + p.to_string();
      }
      auto rep = singclass::classify(germ, o_.max_jet_order);
      auto expected = singclass::Table1Type::parse(g.expect);
      std::string got = rep.verdict.name() + (rep.verdict.alias.empty() ? "" : " (" + rep.verdict.alias + ")");
      b_.add(g.name, rep.verdict == expected ? Status::Confirmed : Status::Mismatch,
             got + " for " + germ.to_string(), expected.name(), g.citation);
      if (g.expect_milnor) {
        b_.compare(g.name + ": Milnor number", rep.milnor.to_string(),
                   std::to_string(*g.expect_milnor), g.citation);
      }
      if (g.expect_infinite_milnor) {
        b_.add(g.name + ": Milnor number",
               rep.milnor.kind == singclass::MilnorNumber::Kind::Infinite ? Status::Confirmed
                                                                         : Status::Mismatch,
               rep.milnor.to_string() + (rep.milnor.certificate.empty() ? "" : " [" + rep.milnor.certificate + "]"),
               "infinite", g.citation);
      }
      if (g.closed_form_milnor) {
        const auto& t = rep.verdict;
        if (t.symbol != singclass::Symbol::Tpqr) {
          b_.add(g.name + ": closed-form Milnor number", Status::Mismatch, "verdict is not a cusp",
                 "p+q+r-1", g.citation);
        } else {
          int closed = t.p + t.q + t.r - 1;
          b_.compare(g.name + ": closed-form Milnor number",
                     "jet " + rep.milnor.to_string(), "jet " + std::to_string(closed),
                     g.citation);
        }
      }
      if (rep.modulus) {
        const auto& m = *rep.modulus;
        b_.add(g.name + ": modulus",
               m.degenerate() ? Status::Mismatch : Status::Confirmed,
               "lambda^" + std::to_string(m.power) + " = " + m.value.to_string(),
               "lambda^" + std::to_string(m.power) + " != " + m.forbidden.to_string(), g.citation);
      } else if (rep.principal_discriminant) {
        const Rat& d = *rep.principal_discriminant;
        b_.add(g.name + ": modulus", d.is_zero() ? Status::Mismatch : Status::Confirmed,
               "principal cubic discriminant " + d.to_string(),
               "nonzero, i.e. lambda^6 != 432", g.citation);
      }
      (void)where;
    });
  }

  void line_multiplicity(const LineMultiplicityCheck& m) {
    b_.guard(m.name, m.citation, [&] {
      Poly eq = surface_equation(c_, m.surface);
      Line l = Line::coordinate(eq.ring(), m.line.zero, m.line.label);
      int got = singlocus::multiplicity_along_line(Hypersurface(eq), l);
      b_.compare(m.name, std::to_string(got), std::to_string(m.expect), m.citation);
    });
  }

  // ---------------------------------------------------------------- steps

  void step(const StepSpec& s) {
    birmod::LedgerEntry e;
    e.label = s.label;
    e.exceptional = s.exceptional;
    e.citation = s.citation;
    e.ambient_tags = s.ambient_tags;
    bool built = false;
    b_.guard("step " + s.label, s.citation, [&] {
      Ring P = c_.ring();
      birmod::BlowupStep st;
      if (s.kind == "point") {
        st = birmod::make_point_step(P, ProjPoint(s.center), s.label, s.exceptional);
      } else if (s.kind == "weighted-point") {
        st = birmod::make_weighted_step(P, ProjPoint(s.center), s.weights, s.label, s.exceptional);
      } else if (s.kind == "linear-subspace") {
        st = birmod::make_subspace_step(P, s.center_variables, s.label, s.exceptional);
      } else if (s.kind == "curve") {
        st.kind = birmod::StepKind::Curve;
        st.label = s.label;
        st.exceptional_name = s.exceptional;
        st.citation = s.citation;
      } else {
        st.kind = birmod::StepKind::NamedExtraction;
        st.label = s.label;
        st.exceptional_name = s.exceptional;
        st.recipe = s.recipe;
        st.ambient_tags = s.ambient_tags;
        st.citation = s.citation;
        e = birmod::apply_named_extraction(st);
        b_.add("step " + s.label + ": extraction", Status::Assumed, s.recipe, "", s.citation);
      }
      e.kind = st.kind;
      e.ambient = st.ambient_after;
      records_[s.label] = StepRecord{st, {}};
      if (st.ambient_after) {
        // transforms of X and the boundary, for later steps that work in this model
        auto& rec = records_[s.label];
        std::vector<std::string> names{"X"};
        names.insert(names.end(), c_.boundary_names.begin(), c_.boundary_names.end());
        for (const auto& nm : names)
          rec.proper.insert_or_assign(nm, birmod::total_and_proper_transform(resolve_equation(c_, nm), st).proper);
      }
      built = true;
      if (st.ambient_after) ambient_checks(s, *st.ambient_after);
      for (const auto& t : s.transforms) transform(s, t, e);
    });
    if (!built) {
      e.notes.push_back("step could not be built");
      v_.ledger.add(std::move(e));
      return;
    }
    if (s.discrepancy) discrepancy(s, *s.discrepancy, e);
    if (s.chart_odp) chart_odp(s, *s.chart_odp);
    if (s.normal_bundle) {
      int n = birmod::normal_bundle_ruled_surface(s.normal_bundle->first, s.normal_bundle->second);
      std::string got = "F" + std::to_string(n);
      std::string exp = s.expect_hirzebruch ? "F" + std::to_string(*s.expect_hirzebruch) : "";
      b_.add("step " + s.label + ": exceptional surface",
             exp.empty() || exp == got ? Status::Confirmed : Status::Mismatch,
             "P(O(" + std::to_string(s.normal_bundle->first) + ") + O(" +
                 std::to_string(s.normal_bundle->second) + ")) = " + got,
             exp, s.citation);
      e.notes.push_back(s.exceptional + " = " + got);
    }
    if (!s.ambient_tags.empty()) {
      birmod::GoodDltCheck g;
      for (const auto& t : s.ambient_tags) g.ambient_singularities.push_back(birmod::parse_ambient_tag(t));
      b_.add("step " + s.label + ": ambient singularities", g.good() ? Status::Assumed : Status::Flagged,
             join(s.ambient_tags) + (g.good() ? " (smooth or cyclic quotient)" : " (not cyclic quotient)"),
             "cyclic quotient", s.citation);
    }
    v_.ledger.add(std::move(e));
  }

  void ambient_checks(const StepSpec& s, const birmod::ToricAmbient& a) {
    const std::string n = "step " + s.label + ": ";
    if (!s.expect_variables.empty())
      b_.compare(n + "Cox variables", join(a.variables, " "), join(s.expect_variables, " "), s.citation);
    if (!s.expect_matrix.empty()) {
      auto rows = [](const std::vector<std::vector<int>>& m) {
        std::vector<std::string> r;
        for (const auto& row : m) r.push_back(join(row, " "));
        return join(r, " / ");
      };
      b_.compare(n + "weight matrix", rows({a.weights[0], a.weights[1]}), rows(s.expect_matrix),
                 s.citation);
    }
    if (!s.expect_irrelevant.empty()) {
      std::string got = "(" + join(a.irrelevant[0]) + ") cap (" + join(a.irrelevant[1]) + ")";
      std::vector<std::string> parts;
      for (const auto& p : s.expect_irrelevant) parts.push_back("(" + join(p) + ")");
      b_.compare(n + "irrelevant ideal", got, join(parts, " cap "), s.citation);
    }
  }

  void transform(const StepSpec& s, const TransformSpec& t, birmod::LedgerEntry& e) {
    const std::string n = "step " + s.label + ": " + t.divisor;
    auto& rec = records_.at(s.label);
    if (!rec.step.ambient_after) throw DomainError("transforms need a toric step");
    Poly f = resolve_equation(c_, t.equation);
    auto tr = birmod::total_and_proper_transform(f, rec.step);
    rec.proper.insert_or_assign(t.divisor, tr.proper);
    e.transforms.push_back({t.divisor, tr.u_power, tr.proper.to_string()});
    if (t.expect_u_power)
      b_.compare(n + " u-power", std::to_string(tr.u_power), std::to_string(*t.expect_u_power),
                 t.citation);
    if (!t.expect_proper.empty()) {
      Poly want = expected_in_cox(c_, rec.step, t.expect_proper);
      b_.add(n + " proper transform", want == tr.proper ? Status::Confirmed : Status::Mismatch,
             tr.proper.to_string(), want.to_string(), t.citation);
    }
    if (t.expect_components) {
      auto split = birmod::exceptional_components(tr.exceptional_restriction, t.unit_variables);
      int got = static_cast<int>(split.components.size());
      Status st = got != *t.expect_components ? Status::Mismatch
                  : split.complete             ? Status::Confirmed
                                               : Status::Flagged;
      b_.add(n + " meets " + s.exceptional + " in", st,
             std::to_string(got) + " components {" + join(split.components, "; ") + "}" +
                 (split.complete ? "" : ", irreducibility of a cofactor not certified"),
             std::to_string(*t.expect_components) + " components", t.citation);
      if (!split.units.empty())
        b_.add(n + " unit factors on " + s.exceptional, Status::Flagged,
               "dropped " + join(split.units) + " (irrelevant-ideal unit on " + s.exceptional + ")",
               "", t.citation);
    }
  }

  void discrepancy(const StepSpec& s, const DiscrepancySpec& d, birmod::LedgerEntry& e) {
    const std::string n = "step " + s.label + ": log discrepancy";
    b_.guard(n, d.citation, [&] {
      int mult = 0, a = 0;
      std::string how;
      if (d.method == "point" || d.method == "weighted") {
        Hypersurface D(c_.d());
        ProjPoint p(d.point);
        e.notes.push_back(require_boundary_eliminable(c_, lift_to_x(c_, d.point)));
        Poly germ = singlocus::affine_germ(D, p);
        if (d.method == "point") {
          mult = singlocus::multiplicity(germ);
          a = birmod::log_discrepancy(birmod::CenterKind::SmoothPoint, mult);
          how = "3 - mult_p D = 3 - " + std::to_string(mult);
        } else {
          std::vector<int> w;
          for (const auto& v : germ.ring().names()) {
            auto i = c_.ring().index_of(v);
            w.push_back(s.weights.at(*i));
          }
          mult = singlocus::weighted_multiplicity(germ, w);
          a = birmod::log_discrepancy(birmod::CenterKind::WeightedPoint, mult, w);
          int sum = 0;
          for (int x : w) sum += x;
          how = "sum w - wmult D = " + std::to_string(sum) + " - " + std::to_string(mult) +
                " with weights " + tuple(w) + " on (" + join(germ.ring().names()) + ")";
        }
      } else if (d.method == "curve") {
        auto it = records_.find(d.in_step);
        if (it == records_.end()) throw NotFound("step '" + d.in_step + "' not replayed");
        const auto& rec = it->second;
        Ring cox = rec.step.ambient_after->ring();
        Poly prod = Poly::constant(cox, Rat(1));
        for (const auto& bn : d.boundary) {
          if (bn == rec.step.exceptional_name) {
            prod *= Poly::variable(cox, "u");
          } else {
            auto p = rec.proper.find(bn);
            if (p == rec.proper.end()) throw NotFound("no transform of " + bn + " in step " + d.in_step);
            prod *= p->second;
          }
        }
        Poly local = birmod::specialize(prod, d.chart);
        std::map<std::string, Rat> on_curve = d.chart;
        for (const auto& v : d.along) on_curve[v] = Rat(0);
        if (!d.eliminate.empty()) {
          auto px = rec.proper.find("X");
          if (px == rec.proper.end()) throw NotFound("no transform of X in step " + d.in_step);
          if (local.degree_in(cox.require(d.eliminate)) > 0)
            throw DomainError("boundary involves the eliminated variable " + d.eliminate);
          on_curve[d.eliminate] = Rat(0);
          if (!birmod::specialize(px->second, on_curve).is_zero())
            throw DomainError("curve does not lie on the transform of X");
          Poly dx = birmod::specialize(px->second.derivative(d.eliminate), on_curve);
          if (dx.is_zero())
            throw DomainError("transform of X is not solvable for " + d.eliminate + " along the curve");
          e.notes.push_back(d.eliminate + " eliminated along {" + join(d.along) + "=" + d.eliminate +
                            "=0}: dX/d" + d.eliminate + " = " + dx.to_string());
        }
        mult = singlocus::multiplicity_along_coordinate_subspace(local, d.along);
        a = birmod::log_discrepancy(birmod::CenterKind::SmoothCurve, mult);
        how = "2 - mult of " + join(d.boundary, "+") + " along {" + join(d.along) + "=0} = 2 - " +
              std::to_string(mult);
      } else if (d.method == "u_powers") {
        auto& rec = records_.at(s.label);
        if (rec.step.kind != birmod::StepKind::LinearSubspace || rec.step.center_variables.size() != 2)
          throw DomainError("u_powers method needs a codimension-2 linear center");
        auto tx = birmod::total_and_proper_transform(c_.x(), rec.step);
        if (tx.u_power != 0) throw DomainError("X contains the center");
        for (const auto& bn : d.boundary) mult += birmod::total_and_proper_transform(resolve_equation(c_, bn), rec.step).u_power;
        a = birmod::log_discrepancy(birmod::CenterKind::SmoothCurve, mult);
        how = "2 - sum of u-powers of " + join(d.boundary, "+") + " = 2 - " + std::to_string(mult);
      } else if (d.method == "line") {
        Poly eq = c_.d();
        Line l = Line::coordinate(eq.ring(), d.along);
        mult = singlocus::multiplicity_along_line(Hypersurface(eq), l);
        a = birmod::log_discrepancy(birmod::CenterKind::SmoothCurve, mult);
        how = "2 - mult_" + l.label + " D = 2 - " + std::to_string(mult);
      } else {
        throw DomainError("unknown discrepancy method '" + d.method + "'");
      }
      e.boundary_multiplicity = mult;
      e.log_discrepancy = a;
      e.notes.push_back("a = " + how);
      std::string exp = d.expect ? std::to_string(*d.expect) : "";
      b_.add(n, !d.expect || *d.expect == a ? Status::Confirmed : Status::Mismatch,
             std::to_string(a) + " (" + how + ")", exp, d.citation);
    });
  }

  void chart_odp(const StepSpec& s, const ChartOdpSpec& o) {
    const std::string n = "step " + s.label + ": " + o.divisor + " singular point";
    b_.guard(n, o.citation, [&] {
      const auto& rec = records_.at(s.label);
      auto it = rec.proper.find(o.divisor);
      if (it == rec.proper.end()) throw NotFound("no transform of " + o.divisor);
      const Poly& f = it->second;
      std::vector<std::string> free;
      for (const auto& v : f.ring().names())
        if (!o.chart.count(v)) free.push_back(v);
      for (const auto& v : free)
        if (!o.point.count(v)) throw DomainError("point has no coordinate " + v);
      Ring local(free);
      std::map<std::string, Poly> images;
      for (const auto& v : f.ring().names()) {
        auto c = o.chart.find(v);
        images.emplace(v, c != o.chart.end() ? Poly::constant(local, c->second) : Poly::variable(local, v));
      }
      Poly g = f.substitute(images, local);
      std::vector<Rat> pt;
      std::vector<std::string> shown;
      for (const auto& v : free) {
        pt.push_back(o.point.at(v));
        shown.push_back(v + "=" + o.point.at(v).to_string());
      }
      Poly germ = g.translate_to_origin(pt);
      int m = singlocus::multiplicity(germ);
      std::size_t rank = m >= 2 ? singlocus::quadratic_rank(germ) : 0;
      bool odp = m == 2 && rank == free.size();
      b_.add(n, odp ? Status::Confirmed : Status::Mismatch,
             "at " + join(shown, " ") + ": multiplicity " + std::to_string(m) + ", quadratic rank " +
                 std::to_string(rank) + " of " + std::to_string(free.size()),
             "ordinary double point", o.citation);
    });
  }

  void ledger_summary() {
    const auto& L = v_.ledger;
    std::vector<std::string> bad;
    std::vector<std::string> cites;
    for (const auto& e : L.entries)
      if (!e.assumed && !e.volume_preserving()) bad.push_back(e.label);
    b_.add("ledger: volume preserving", bad.empty() ? Status::Confirmed : Status::Mismatch,
           bad.empty() ? "every computed step has log discrepancy 0 or 1"
                       : "not volume preserving: " + join(bad),
           "a_E(K+D) in {0,1}", c_.citation);
    b_.add("ledger: boundary", Status::Confirmed, join(L.boundary, " + "), "", c_.citation);
  }

  void surface(const SurfaceCheck& s) {
    b_.guard(s.name, s.citation, [&] {
      auto lat = surfcalc::SurfaceLattice::parse(s.lattice);
      std::vector<surfcalc::DivClass> comps;
      std::vector<std::string> shown;
      for (std::size_t i = 0; i < s.components.size(); ++i) {
        comps.emplace_back(lat, s.components[i]);
        shown.push_back((i < s.labels.size() ? s.labels[i] + "=" : "") + comps.back().to_string());
      }
      auto cv = surfcalc::verify_anticanonical_cycle(lat, comps);
      b_.add(s.name + ": anticanonical", cv.sums_to_anticanonical ? Status::Confirmed : Status::Mismatch,
             join(shown, " + ") + " = " + cv.sum.to_string() + " on " + lat.name(),
             "-K = " + surfcalc::anticanonical(lat).to_string(), s.citation);
      if (!s.expect_self.empty()) {
        if (s.expect_self.size() == cv.self_intersections.size()) {
          bool ok = surfcalc::same_cycle(cv.self_intersections, s.expect_self);
          b_.add(s.name + ": self-intersections", ok ? Status::Confirmed : Status::Mismatch,
                 tuple(cv.self_intersections), tuple(s.expect_self), s.citation);
        } else if (s.blowup_candidate) {
          auto after = surfcalc::blowup_point_on_cycle(cv.self_intersections, s.blowup_candidate->first,
                                                       s.blowup_candidate->second);
          bool ok = surfcalc::same_cycle(after, s.expect_self);
          b_.add(s.name + ": self-intersections", ok ? Status::Flagged : Status::Mismatch,
                 tuple(cv.self_intersections) + " on the model, " + tuple(after) +
                     " after blowing up the point where components " +
                     std::to_string(s.blowup_candidate->first) + " and " +
                     std::to_string(s.blowup_candidate->second) + " meet",
                 tuple(s.expect_self), s.citation);
        } else {
          b_.add(s.name + ": self-intersections", Status::Mismatch, tuple(cv.self_intersections),
                 tuple(s.expect_self), s.citation);
        }
      }
      for (const auto& in : s.intersections) {
        int got = surfcalc::intersect(comps.at(in.a), comps.at(in.b));
        auto lbl = [&](std::size_t i) { return i < s.labels.size() ? s.labels[i] : std::to_string(i); };
        b_.compare(s.name + ": " + lbl(in.a) + "." + lbl(in.b), std::to_string(got),
                   std::to_string(in.expect), s.citation);
      }
    });
  }

  void dual_complex(const DualComplexSpec& d) {
    b_.guard("dual complex", d.citation, [&] {
      auto cx = dualcx::build(d.components, d.strata);
      auto fp = dualcx::fingerprint(cx);
      bool maximal = dualcx::is_maximal_intersection(cx, d.ambient_dim);
      v_.complex = cx;
      v_.fingerprint = fp;
      v_.maximal = maximal;

      std::set<std::string> declared(d.components.begin(), d.components.end());
      std::set<std::string> ledger(v_.ledger.boundary.begin(), v_.ledger.boundary.end());
      if (!c_.steps.empty())
        b_.add("dual complex: components vs ledger", declared == ledger ? Status::Confirmed : Status::Mismatch,
               join(std::vector<std::string>(declared.begin(), declared.end())),
               join(std::vector<std::string>(ledger.begin(), ledger.end())), d.citation);
      b_.add("dual complex: boundary of boundary", cx.boundary_squared_zero() ? Status::Confirmed : Status::Mismatch,
             cx.boundary_squared_zero() ? "0 over Z/2" : "nonzero", "0", d.citation);
      int betti_euler = 0, sign = 1;
      for (int b : fp.betti_mod2) {
        betti_euler += sign * b;
        sign = -sign;
      }
      b_.compare("dual complex: Euler characteristic from Betti numbers", std::to_string(betti_euler),
                 std::to_string(fp.euler), d.citation);
      std::vector<int> counts(fp.counts.begin(), fp.counts.end());
      if (!d.expect_counts.empty()) {
        std::vector<int> want(d.expect_counts.begin(), d.expect_counts.end());
        b_.compare("dual complex: cells", tuple(counts), tuple(want), d.citation);
      }
      if (d.expect_euler)
        b_.compare("dual complex: Euler characteristic", std::to_string(fp.euler),
                   std::to_string(*d.expect_euler), d.citation);
      if (!d.expect_betti.empty())
        b_.compare("dual complex: mod-2 Betti numbers", tuple(fp.betti_mod2), tuple(d.expect_betti),
                   d.citation);
      if (!d.expect_catalog.empty())
        b_.compare("dual complex: PL type", fp.catalog_match, d.expect_catalog, d.citation);
      if (d.expect_maximal)
        b_.compare("maximal intersection", maximal ? "true" : "false",
                   *d.expect_maximal ? "true" : "false", d.citation);
      if (fp.dimension == 2) {
        std::vector<std::string> not_circle;
        for (const auto& v : cx.cells[0]) {
          auto link = dualcx::link_of_vertex(cx, v.label);
          if (dualcx::fingerprint(link).catalog_match != "circle") not_circle.push_back(v.label);
        }
        b_.add("dual complex: vertex links", not_circle.empty() ? Status::Confirmed : Status::Flagged,
               not_circle.empty() ? "every link is a circle" : "non-circle links at " + join(not_circle),
               "circles", d.citation);
      }
    });
  }

  void rigidity(const RigiditySpec& r) {
    RigidityFacts f;
    f.kind = r.kind;
    Poly x = c_.x();
    f.degree = x.total_degree();
    f.ambient_dim = x.ring().size() - 1;
    f.locus_verified = true;
    std::optional<bool> all = true;
    for (const auto& name : r.from_locus) {
      auto it = loci_.find(name);
      if (it == loci_.end() || !it->second.ok) {
        f.locus_verified = false;
        continue;
      }
      f.singular_points += it->second.points;
      if (!it->second.all_odp) all.reset();
      else if (all && !*it->second.all_odp) all = false;
    }
    f.all_odp = all;
    f.completeness_assumed = !r.completeness_citation.empty();
    f.completeness_citation = r.completeness_citation;

    std::string dim = "P" + std::to_string(f.ambient_dim);
    b_.add("rigidity: ambient", Status::Confirmed, "degree " + std::to_string(f.degree) + " in " + dim,
           r.kind, r.citation);
    if (f.completeness_assumed)
      b_.add("rigidity: singular locus complete", Status::Assumed,
             r.from_locus.empty() ? "X nonsingular" : "Sing(X) lies on the searched strata", "",
             r.completeness_citation);
    if (r.kind == "quartic") {
      b_.add("rigidity: singularities", f.all_odp.value_or(false) ? Status::Confirmed : Status::Flagged,
             std::to_string(f.singular_points) + " points, " +
                 (f.all_odp ? (*f.all_odp ? "all ODP" : "not all ODP") : "ODP unknown"),
             "all ODP, at most 8", r.citation);
    }
    v_.conclusion = apply_rigidity(f);
    if (!r.expect_conclusion.empty())
      b_.compare("conclusion", v_.conclusion, r.expect_conclusion, r.citation);
  }

  const CaseSpec& c_;
  const RunOptions& o_;
  Verdict& v_;
  Builder b_;
  std::map<std::string, StepRecord> records_;
  std::map<std::string, LocusFacts> loci_;
};

}  // namespace

std::vector<Check> check_cy_pair(const CaseSpec& c) {
  Verdict tmp;
  Builder b(tmp);
  b.guard("CY pair: anticanonical degree", c.citation, [&] {
    Poly x = c.x();
    if (!x.is_homogeneous()) throw DomainError("X is not homogeneous");
    int n = static_cast<int>(x.ring().size()) - 1;
    int d = x.total_degree();
    int sum = 0;
    std::vector<std::string> parts;
    std::vector<Poly> forms;
    for (std::size_t i = 0; i < c.boundary.size(); ++i) {
      Poly f = c.poly(c.boundary[i]);
      if (!f.is_homogeneous()) throw DomainError("boundary form " + c.boundary[i] + " is not homogeneous");
      sum += f.total_degree();
      parts.push_back(c.boundary_names[i] + " = {" + c.boundary[i] + "}");
      forms.push_back(std::move(f));
    }
    b.add("CY pair: anticanonical degree", sum == n + 1 - d ? Status::Confirmed : Status::Mismatch,
              "deg D = " + std::to_string(sum) + " (" + join(parts, ", ") + ")",
              "deg D = " + std::to_string(n + 1 - d) + " (n+1-d, n=" + std::to_string(n) +
                  ", d=" + std::to_string(d) + ")",
              c.citation);
    bool linear = std::all_of(forms.begin(), forms.end(), [](const Poly& f) { return f.total_degree() == 1; });
    bool distinct = true;
    for (std::size_t i = 0; i < forms.size(); ++i)
      for (std::size_t j = i + 1; j < forms.size(); ++j) {
        // two linear forms are proportional iff some rescaling matches
        const auto& [e, coef] = *forms[i].terms().begin();
        Rat r = forms[j].coefficient(e) / coef;
        if (!r.is_zero() && forms[i] * r == forms[j]) distinct = false;
      }
    b.add("CY pair: reduced boundary",
          !distinct ? Status::Mismatch : (linear ? Status::Confirmed : Status::Flagged),
          !distinct ? "repeated component"
                    : (linear ? "distinct hyperplane sections" : "irreducibility of nonlinear forms not certified"),
          "distinct irreducible components", c.citation);
  });
  return tmp.checks;
}

Verdict run_case(const CaseSpec& c, const RunOptions& opts) {
  Verdict v;
  v.case_id = c.id;
  v.title = c.title;
  Runner(c, opts, v).run();
  return v;
}

}  // namespace cypair::verifier
