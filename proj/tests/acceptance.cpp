// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "cypair/birmod.hpp"
#include "cypair/dualcx.hpp"
#include "cypair/registry.hpp"
#include "cypair/singclass.hpp"
#include "cypair/singlocus.hpp"
#include "cypair/surfcalc.hpp"
#include "cypair/verifier.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace cypair;
using singlocus::Hypersurface;
using singlocus::Line;
using singlocus::ProjPoint;
using verifier::Status;

namespace {

struct Ctx {
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

const verifier::Registry& reg() {
  static const verifier::Registry r = verifier::Registry::load_file(CYPAIR_TEST_REGISTRY);
  return r;
}

const verifier::Verdict& verdict(const std::string& id) {
  static std::map<std::string, verifier::Verdict> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, verifier::run_case(reg().get(id))).first;
  return it->second;
}

std::optional<Status> status_of(const std::string& id, const std::string& check) {
  for (const auto& c : verdict(id).checks)
    if (c.name == check) return c.status;
  return std::nullopt;
}

void confirmed(Ctx& ctx, const std::string& id, const std::string& check) {
  auto s = status_of(id, check);
  ctx.require(s && *s == Status::Confirmed,
              id + " '" + check + "' is " + (s ? verifier::status_name(*s) : std::string("missing")));
}

ProjPoint pt(std::vector<Rat> c) { return ProjPoint(std::move(c)); }

std::vector<Line> coordinate_lines(const Ring& r) {
  std::vector<Line> out;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) out.push_back(Line::coordinate(r, {r.name(i), r.name(j)}));
  return out;
}

dualcx::CellComplex complex_of(const std::string& id) {
  const auto& dc = *reg().get(id).dual_complex;
  return dualcx::build(dc.components, dc.strata);
}

void expect_fingerprint(Ctx& ctx, const std::string& id, std::vector<std::size_t> counts, int euler,
                        std::vector<int> betti, const std::string& catalog, bool maximal) {
  auto c = complex_of(id);
  auto fp = dualcx::fingerprint(c);
  ctx.require(fp.counts == counts, id + " cell counts");
  ctx.require(fp.euler == euler, id + " euler " + std::to_string(fp.euler));
  ctx.require(fp.betti_mod2 == betti, id + " betti");
  ctx.require(fp.catalog_match == catalog, id + " catalog " + fp.catalog_match);
  ctx.require(dualcx::is_maximal_intersection(c, 3) == maximal, id + " maximal intersection");
}

// ---------------------------------------------------------------- criteria

void c1(Ctx& ctx) {
  const auto& c = reg().get("ex3.1");
  Hypersurface d(c.d());
  auto v = singlocus::verify_singular_locus(d, {pt({1, 0, 0, 0})}, coordinate_lines(c.d_ring()));
  ctx.require(v.total_points == 1, "Sing(D) has " + std::to_string(v.total_points) + " points");
  auto rep = singclass::classify(singlocus::affine_germ(d, pt({1, 0, 0, 0})));
  ctx.require(rep.verdict.name() == "T_{4,4,4}", "verdict " + rep.verdict.name());
  ctx.require(rep.milnor.finite() && rep.milnor.value == 11, "mu " + rep.milnor.to_string());
  ctx.require(rep.verdict.p + rep.verdict.q + rep.verdict.r - 1 == rep.milnor.value, "closed form p+q+r-1");
}

void c2(Ctx& ctx) {
  Ring p4({"x0", "x1", "x2", "x3", "x4"});
  auto st = birmod::make_point_step(p4, pt({1, 0, 0, 0, 0}), "f", "E");
  const auto& a = *st.ambient_after;
  ctx.require(a.weights[0] == std::vector<int>{1, 0, -1, -1, -1, -1} && a.weights[1] == std::vector<int>{0, 1, 1, 1, 1, 1},
              "weight matrix");
  Ring cox = a.ring();
  const auto& c = reg().get("ex3.1");
  auto tx = birmod::total_and_proper_transform(c.x(), st);
  ctx.require(tx.proper == Poly::parse("u^2*(u*(s1^4+s2^4+s3^4)+x0*s1*s2*s3)+s4*(x0^3+u^3*s4^3)", cox),
              "X proper transform");
  auto td = birmod::total_and_proper_transform(c.d().embed(p4), st);
  ctx.require(td.proper == Poly::parse("u*(s1^4+s2^4+s3^4)+x0*s1*s2*s3", cox), "D proper transform");
  ctx.require(tx.u_power == 2, "u_power for X is " + std::to_string(tx.u_power) + ", criterion asks for 2");
}

void c3(Ctx& ctx) {
  ctx.require(birmod::normal_bundle_ruled_surface(1, -1) == 2, "(1,-1) gives F2");
  ctx.require(birmod::normal_bundle_ruled_surface(1, -2) == 3, "(1,-2) gives F3");
  auto f2 = surfcalc::SurfaceLattice::hirzebruch(2);
  surfcalc::DivClass gamma(f2, {1, 4}), sigma(f2, {1, 0});
  ctx.require(surfcalc::intersect(gamma, gamma) == 6, "Gamma^2");
  ctx.require(surfcalc::intersect(gamma, sigma) == 2, "Gamma.sigma");
  auto p2 = surfcalc::SurfaceLattice::p2();
  auto cyc = surfcalc::verify_anticanonical_cycle(p2, {{p2, {1}}, {p2, {1}}, {p2, {1}}});
  ctx.require(cyc.sums_to_anticanonical && cyc.sum.coords == std::vector<int>{3}, "triangle sums to 3H");
  ctx.require(cyc.self_intersections == std::vector<int>{1, 1, 1}, "triangle self-intersections");
}

void c4(Ctx& ctx) {
  expect_fingerprint(ctx, "ex3.1", {4, 6, 4}, 2, {1, 0, 1}, "tetrahedron-boundary", true);
  verifier::RigidityFacts f{"quartic", 4, 4, 0, true, true, true, "nonsingular"};
  ctx.require(verifier::apply_rigidity(f) == verifier::kRigid, "rule on 0 nodes");
  ctx.require(verdict("ex3.1").conclusion == verifier::kRigid, "pipeline conclusion " + verdict("ex3.1").conclusion);
}

void c5(Ctx& ctx) {
  const auto& c = reg().get("ex3.2");
  Hypersurface x(c.x());
  Line l = Line::coordinate(c.ring(), {"x2", "x3", "x4"}, "L");
  auto v = singlocus::verify_singular_locus(x, {pt({1, -1, 0, 0, 0})}, {l});
  ctx.require(v.total_points == 3, "points on L: " + std::to_string(v.total_points));
  const auto& s = v.strata.at(0);
  ctx.require(s.rational_points.size() == 1, "one rational point");
  ctx.require(s.conjugates.size() == 1 && s.conjugates[0].degree == 2, "one degree-2 conjugate certificate");
  bool odp = singlocus::is_odp_projective(x, pt({1, -1, 0, 0, 0}));
  for (const auto& cc : s.conjugates) odp = odp && cc.all_odp.value_or(false);
  auto g = singlocus::affine_germ(x, pt({1, -1, 0, 0, 0}));
  ctx.require(odp, "points are not ODP: quadratic rank at (1:-1:0:0:0) is " +
                       std::to_string(singlocus::quadratic_rank(g)) + " of 4");
  auto rep = singclass::classify(singlocus::affine_germ(Hypersurface(c.d()), pt({0, 0, 0, 1})));
  ctx.require(rep.verdict.name() == "T_{3,3,4}", "D at p: " + rep.verdict.name());
}

void c6(Ctx& ctx) { expect_fingerprint(ctx, "ex3.3", {3, 3, 2}, 2, {1, 0, 1}, "sphere S2", true); }

void c7(Ctx& ctx) {
  Ring g({"x", "y", "z"});
  ctx.require(Poly::parse("(x*y+z)*(x*y-z)", g) == Poly::parse("x^2*y^2-z^2", g), "identity");
  const auto& c = reg().get("ex3.5");
  auto st = birmod::make_subspace_step(c.ring(), {"x3", "x4"}, "f", "Ef");
  Ring cox = st.ambient_after->ring();
  auto rel = birmod::blowup_relation(st);
  Poly q = c.poly("q").substitute(rel, cox), qp = c.poly("qp").substitute(rel, cox);
  Poly want = Poly::parse("x0*x1*x2+x1^3+x2^3", cox) +
              Poly::variable(cox, "u") * (Poly::variable(cox, "x3") * q + Poly::variable(cox, "x4") * qp);
  auto t = birmod::total_and_proper_transform(c.x(), st);
  ctx.require(t.proper == want, "proper transform " + t.proper.to_string());
  confirmed(ctx, "ex3.5", "step f: X singular point");
  expect_fingerprint(ctx, "ex3.5", {4, 6, 4}, 2, {1, 0, 1}, "tetrahedron-boundary", true);
}

void c8(Ctx& ctx) {
  const auto& c = reg().get("ex3.6");
  Hypersurface x(c.x());
  auto v = singlocus::verify_singular_locus(
      x, {}, {Line::coordinate(c.ring(), {"x1", "x3", "x4"}, "L"), Line::coordinate(c.ring(), {"x2", "x3", "x4"}, "L'")});
  ctx.require(v.total_points == 6, "points " + std::to_string(v.total_points));
  for (const auto& s : v.strata) {
    ctx.require(s.rational_points.empty() && s.conjugates.size() == 1 && s.conjugates[0].degree == 3 &&
                    s.conjugates[0].irreducible,
                s.label + " certificate");
    ctx.require(!s.conjugates.empty() && s.conjugates[0].all_odp.value_or(false), s.label + " ODP");
  }
  Hypersurface d(c.d());
  ctx.require(singlocus::multiplicity_along_line(d, Line::coordinate(c.d_ring(), {"x1", "x3"})) == 2, "mult along L");
  ctx.require(singlocus::multiplicity_along_line(d, Line::coordinate(c.d_ring(), {"x2", "x3"})) == 2, "mult along L'");
  auto rep = singclass::classify(singlocus::affine_germ(d, pt({1, 0, 0, 0})));
  auto model = singclass::classify(Poly::parse("x^2*y^2+z^2", Ring({"x", "y", "z"})));
  ctx.require(rep.verdict == model.verdict, "germ at L cap L' is " + rep.verdict.name());
  expect_fingerprint(ctx, "ex3.6", {3, 3, 2}, 2, {1, 0, 1}, "sphere S2", true);
  ctx.require(verdict("ex3.6").conclusion == verifier::kRigid, "rigidity " + verdict("ex3.6").conclusion);
}

void c9(Ctx& ctx) {
  const auto& c = reg().get("ex4.2");
  Hypersurface d(c.d());
  for (auto p : {pt({1, 0, 0, 0}), pt({0, 0, 0, 1})}) {
    auto rep = singclass::classify(singlocus::affine_germ(d, p));
    ctx.require(rep.verdict.symbol == singclass::Symbol::J20, p.to_string() + " is " + rep.verdict.name());
    bool generic = rep.modulus ? !rep.modulus->degenerate()
                               : (rep.principal_discriminant && !rep.principal_discriminant->is_zero());
    ctx.require(generic, p.to_string() + " modulus");
  }
  std::vector<int> w{0, 2, 1, 3, 1};
  auto st = birmod::make_weighted_step(c.ring(), pt({1, 0, 0, 0, 0}), w, "w", "E");
  int wmult = birmod::total_and_proper_transform(c.d().embed(c.ring()), st).u_power;
  int sum = 0;
  for (int x : w) sum += x;
  ctx.require((sum - 1) - wmult == 0, "(sum w - 1) - wmult = " + std::to_string(sum - 1 - wmult));
  confirmed(ctx, "ex4.2", "step w: log discrepancy");
  confirmed(ctx, "ex4.2", "step w': log discrepancy");
  expect_fingerprint(ctx, "ex4.2", {3, 2}, 1, {1, 0}, "interval", false);
}

struct Row {
  const char* eq;
  const char* symbol;
};

void c10(Ctx& ctx) {
  const std::vector<Row> rows = {
      {"x", "A_0"}, {"x^2+y^2+z^4", "A_3"}, {"x^2+z*(y^2+z^2)", "D_4"}, {"x^2+y^3+z^4", "E_6"},
      {"x^2+y^3+y*z^3", "E_7"}, {"x^2+y^3+z^5", "E_8"}, {"x^2+y^4+z^4+2*x*y*z", "X_{1,0}"},
      {"x^2+y^3+z^6+2*x*y*z", "J_{2,0}"}, {"x^3+y^3+z^3+2*x*y*z", "T_{3,3,3}"}, {"x^4+y^4+z^5+x*y*z", "T_{4,4,5}"},
      {"x^2+y^2", "A_inf"}, {"x^2+y^2*z", "D_inf"}, {"x^2+y^2*z^2", "T_{2,inf,inf}"},
      {"x^2+y^2*(z^2+y)", "T_{2,3,inf}"}, {"x*y*z", "T_{inf,inf,inf}"}, {"x*y*z+x^3", "T_{3,inf,inf}"},
      {"x*y*z+x^3+y^3", "T_{3,3,inf}"}};
  Ring g({"x", "y", "z"});
  for (const auto& r : rows) {
    auto v = singclass::classify(Poly::parse(r.eq, g)).verdict.name();
    ctx.require(v == r.symbol, std::string(r.eq) + " -> " + v);
  }
  for (const char* eq : {"x^2+y^4+4*z^4+4*x*y*z", "x^2+y^3+108*z^6+6*x*y*z", "x^3+y^3+z^3-3*x*y*z"}) {
    auto rep = singclass::classify(Poly::parse(eq, g));
    ctx.require(rep.verdict.symbol == singclass::Symbol::DegenerateModulus, std::string(eq) + " accepted");
  }
}

void c11(Ctx& ctx) {
  std::mt19937 rng(11);
  Ring r({"x", "y", "z"});
  std::uniform_int_distribution<int> nt(0, 5), dg(0, 2), cf(-5, 5);
  auto rnd = [&] {
    Poly p(r);
    for (int i = nt(rng); i > 0; --i)
      p.add_term({static_cast<std::uint32_t>(dg(rng)), static_cast<std::uint32_t>(dg(rng)),
                  static_cast<std::uint32_t>(dg(rng))},
                 Rat(cf(rng)));
    return p;
  };
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    Poly a = rnd(), b = rnd(), c = rnd();
    if (!(a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c) && a + b == b + a)) ++bad;
    for (std::size_t v = 0; v < 3; ++v)
      if ((a * b).derivative(v) != a.derivative(v) * b + a * b.derivative(v)) ++bad;
  }
  ctx.require(bad == 0, std::to_string(bad) + " ring/Leibniz violations");

  for (const auto& id : reg().ids()) {
    if (!reg().get(id).dual_complex) continue;
    auto c = complex_of(id);
    ctx.require(c.boundary_squared_zero(), id + " boundary of boundary");
    auto b = dualcx::homology_mod2(c);
    int chi = 0;
    for (std::size_t i = 0; i < b.size(); ++i) chi += (i % 2 ? -1 : 1) * b[i];
    ctx.require(chi == c.euler(), id + " euler vs betti");
  }

  std::uniform_int_distribution<int> sc(1, 4);
  for (const char* eq : {"x^2+y^2+z^3", "x^2+y^3+z^5", "x^4+y^4+z^4+x*y*z", "x^2+y^4+z^4+x*y*z", "x*y*z+x^4"}) {
    Poly f = Poly::parse(eq, r);
    auto base = singclass::classify(f).verdict;
    std::vector<Poly> img;
    for (std::size_t v = 0; v < 3; ++v) img.push_back(Poly::variable(r, v) * Rat(sc(rng), sc(rng)));
    ctx.require(singclass::classify(f.substitute(img)).verdict == base, std::string(eq) + " scale invariance");
  }

  for (const char* eq : {"x^2+y^2+z^5", "x^3+y^4+z^5+x*y*z", "x^2+y^3+z^5"}) {
    auto mu = singclass::milnor_number(Poly::parse(eq, r), 20);
    bool settled = false, mono = mu.finite();
    for (std::size_t i = 1; i < mu.sequence.size(); ++i) {
      if (settled && mu.sequence[i].second != mu.sequence[i - 1].second) mono = false;
      if (mu.sequence[i].second == mu.sequence[i - 1].second) settled = true;
    }
    ctx.require(mono, std::string(eq) + " stabilization");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Ctx&)>>> criteria = {
      {"ex3.1 singular locus, T_{4,4,4}, mu = 11", c1},
      {"ex3.1 blowup replay: weight matrix, X_p and D transforms, u_power 2 for X", c2},
      {"ex3.1 F2/F3 from normal bundles, Gamma^2 = 6, Gamma.sigma = 2, P2 triangle", c3},
      {"ex3.1 tetrahedron dual complex, maximal intersection, rigidity", c4},
      {"ex3.2 three ODPs on L, p is T_{3,3,4}", c5},
      {"ex3.3 non-simplicial S2 dual complex", c6},
      {"ex3.5 identity, proper transform, ODP on X_C, tetrahedron", c7},
      {"ex3.6 six ODPs, multiplicity 2 along L and L', double pinch point, S2, rigidity", c8},
      {"ex4.2 two J_{2,0} points, weighted crepancy, interval, not maximal", c9},
      {"normal-form golden suite and degenerate moduli", c10},
      {"property suites", c11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Ctx ctx;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(ctx);
    } catch (const std::exception& e) {
      ctx.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = ctx.failures.empty();
    failed += !ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << secs << " s)";
    for (const auto& f : ctx.failures) line << "\n     - " << f;
    std::cout << line.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
