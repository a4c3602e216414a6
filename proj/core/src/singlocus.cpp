#include "cypair/singlocus.hpp"

#include <algorithm>
#include <sstream>

namespace cypair::singlocus {

ProjPoint::ProjPoint(std::vector<Rat> coords) : c_(std::move(coords)) {
  auto it = std::find_if(c_.begin(), c_.end(), [](const Rat& r) { return !r.is_zero(); });
  if (it == c_.end()) throw DomainError("projective point with all coordinates zero");
  Rat inv = it->inverse();
  for (auto& r : c_) r *= inv;
}

ProjPoint ProjPoint::coordinate(std::size_t n_plus_1, std::size_t i) {
  std::vector<Rat> v(n_plus_1, Rat(0));
  v.at(i) = Rat(1);
  return ProjPoint(std::move(v));
}

std::size_t ProjPoint::chart() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return 0;
}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ":" : "") << c_[i];
  os << ')';
  return os.str();
}

Hypersurface::Hypersurface(Poly equation) : eq_(std::move(equation)) {
  if (eq_.ring().size() < 2) throw DomainError("hypersurface needs at least 2 variables");
  if (eq_.total_degree() < 1 || !eq_.is_homogeneous())
    throw DomainError("hypersurface equation must be homogeneous of degree >= 1");
}

bool Hypersurface::contains(const ProjPoint& p) const {
  return eq_.evaluate(p.coords()).is_zero();
}

Line Line::coordinate(const Ring& ring, const std::vector<std::string>& zero_vars,
                      std::string label) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (std::find(zero_vars.begin(), zero_vars.end(), ring.name(i)) == zero_vars.end())
      free.push_back(i);
  for (const auto& z : zero_vars) ring.require(z);
  if (free.size() != 2) throw DomainError("coordinate line must leave exactly two free variables");
  Line l;
  l.base.assign(ring.size(), Rat(0));
  l.direction.assign(ring.size(), Rat(0));
  l.base[free[0]] = Rat(1);
  l.direction[free[1]] = Rat(1);
  if (label.empty()) {
    label = "{";
    for (std::size_t i = 0; i < zero_vars.size(); ++i)
      label += (i ? "=" : "") + zero_vars[i];
    label += "=0}";
  }
  l.label = std::move(label);
  return l;
}

Line Line::through(const ProjPoint& a, const ProjPoint& b, std::string label) {
  if (a.size() != b.size()) throw DomainError("points in different projective spaces");
  if (a == b) throw DomainError("a line needs two distinct points");
  return Line{a.coords(), b.coords(), std::move(label)};
}

namespace {

UPoly restrict_to_line(const Poly& f, const Line& line) {
  Ring tr({"t"});
  Poly t = Poly::variable(tr, 0);
  std::vector<Poly> images;
  images.reserve(line.base.size());
  for (std::size_t i = 0; i < line.base.size(); ++i)
    images.push_back(Poly::constant(tr, line.base[i]) + t * line.direction[i]);
  return UPoly::from_poly(f.substitute(images), 0);
}

std::vector<Poly> gradient(const Poly& f) {
  std::vector<Poly> g;
  for (std::size_t i = 0; i < f.ring().size(); ++i) g.push_back(f.derivative(i));
  return g;
}

std::vector<Rat> point_on_line(const Line& l, const Rat& t) {
  std::vector<Rat> v(l.base.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = l.base[i] + t * l.direction[i];
  return v;
}

}  // namespace

bool is_singular_at(const Hypersurface& x, const ProjPoint& p) {
  if (p.size() != x.equation().ring().size())
    throw DomainError("point dimension does not match ambient space");
  if (!x.contains(p)) throw DomainError("point " + p.to_string() + " is not on the hypersurface");
  for (const auto& g : gradient(x.equation()))
    if (!g.evaluate(p.coords()).is_zero()) return false;
  return true;
}

Poly affine_germ(const Hypersurface& x, const ProjPoint& p) {
  const Ring& r = x.equation().ring();
  std::size_t k = p.chart();
  Ring gr = r.without(k);
  std::vector<Poly> images;
  images.reserve(r.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i == k) {
      images.push_back(Poly::constant(gr, Rat(1)));
    } else {
      images.push_back(Poly::variable(gr, j++) + Poly::constant(gr, p.coords()[i]));
    }
  }
  return x.equation().substitute(images);
}

int multiplicity(const Poly& germ) {
  if (germ.is_zero()) throw DomainError("multiplicity of the zero germ");
  if (!germ.constant_term().is_zero()) throw DomainError("germ does not vanish at the origin");
  return germ.order();
}

std::size_t quadratic_rank(const Poly& germ) {
  std::size_t n = germ.ring().size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  Poly q = germ.homogeneous_part(2);
  for (const auto& [e, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      m[idx[0]][idx[0]] += c;
    } else {
      Rat half = c / Rat(2);
      m[idx[0]][idx[1]] += half;
      m[idx[1]][idx[0]] += half;
    }
  }
  return matrix_rank(std::move(m), RationalField{});
}

bool is_ordinary_double_point(const Poly& germ) {
  if (germ.ring().size() < 4) throw DomainError("ODP test needs a germ in at least 4 variables");
  return multiplicity(germ) == 2 && quadratic_rank(germ) == germ.ring().size();
}

int weighted_multiplicity(const Poly& germ, const std::vector<int>& weights) {
  if (weights.size() != germ.ring().size())
    throw DomainError("one weight per germ variable required");
  for (int w : weights)
    if (w <= 0) throw DomainError("weights must be positive");
  if (germ.is_zero()) throw DomainError("weighted multiplicity of the zero germ");
  long best = -1;
  for (const auto& [e, c] : germ.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(weights[i]) * e[i];
    if (best < 0 || d < best) best = d;
  }
  return static_cast<int>(best);
}

SingularityCertificate certify(const Hypersurface& x, const ProjPoint& p) {
  if (!is_singular_at(x, p))
    throw DomainError("point " + p.to_string() + " is not a singular point");
  Poly germ = affine_germ(x, p);
  int m = multiplicity(germ);
  SingularityCertificate c{p, germ, m, germ.homogeneous_part(static_cast<unsigned>(m)), false};
  c.is_odp = germ.ring().size() >= 4 ? is_ordinary_double_point(germ)
                                     : (m == 2 && quadratic_rank(germ) == germ.ring().size());
  return c;
}

bool is_odp_projective(const Hypersurface& x, const ProjPoint& p) {
  if (!is_singular_at(x, p)) return false;
  const Poly& f = x.equation();
  std::size_t n = f.ring().size();
  std::vector<std::vector<Rat>> h(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Poly fi = f.derivative(i);
    for (std::size_t j = 0; j < n; ++j) h[i][j] = fi.derivative(j).evaluate(p.coords());
  }
  return matrix_rank(std::move(h), RationalField{}) == n - 1;
}

namespace {

std::optional<bool> conjugate_odp(const Hypersurface& x, const Line& line, const UPoly& factor) {
  const Poly& f = x.equation();
  std::size_t n = f.ring().size();
  try {
    QuotientField field(factor);
    std::vector<std::vector<UPoly>> h(n, std::vector<UPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
      Poly fi = f.derivative(i);
      for (std::size_t j = 0; j < n; ++j)
        h[i][j] = field.reduce(restrict_to_line(fi.derivative(j), line));
    }
    return matrix_rank(std::move(h), field) == n - 1;
  } catch (const DomainError&) {
    return std::nullopt;  // modulus reducible: Q[t]/(factor) is not a field
  }
}

}  // namespace

StratumReport singular_points_on_line(const Hypersurface& x, const Line& line) {
  const Poly& f = x.equation();
  if (line.base.size() != f.ring().size() || line.direction.size() != f.ring().size())
    throw DomainError("line dimension does not match ambient space");
  StratumReport rep;
  rep.label = line.label;

  UPoly g = restrict_to_line(f, line);
  for (const auto& d : gradient(f)) g = gcd(g, restrict_to_line(d, line));
  if (g.is_zero()) {
    rep.entirely_singular = true;
    return rep;
  }
  if (g.degree() > 0) {
    RootSplit split = split_rational_roots(g.squarefree_part());
    for (const auto& r : split.roots) rep.rational_points.emplace_back(point_on_line(line, r));
    rep.point_count += static_cast<int>(split.roots.size());
    if (split.residual.degree() > 0) {
      ConjugateCertificate c;
      c.factor = split.residual;
      c.degree = split.residual.degree();
      c.irreducible = c.degree <= 3;
      c.all_odp = conjugate_odp(x, line, c.factor);
      rep.point_count += c.degree;
      rep.conjugates.push_back(std::move(c));
    }
  }
  // The point at infinity of the parametrization.
  ProjPoint inf(line.direction);
  if (x.contains(inf) && is_singular_at(x, inf)) {
    rep.rational_points.push_back(inf);
    ++rep.point_count;
  }
  return rep;
}

LocusVerdict verify_singular_locus(const Hypersurface& x, const std::vector<ProjPoint>& claimed,
                                   const std::vector<Line>& strata) {
  LocusVerdict v;
  for (const auto& p : claimed) v.confirmed.push_back(certify(x, p));

  std::vector<ProjPoint> seen = claimed;
  int conjugate_points = 0;
  for (const auto& line : strata) {
    StratumReport rep = singular_points_on_line(x, line);
    for (const auto& p : rep.rational_points) {
      if (std::find(claimed.begin(), claimed.end(), p) == claimed.end())
        throw LocusMismatch("unclaimed singular point " + p.to_string() + " on " + line.label);
      if (std::find(seen.begin(), seen.end(), p) == seen.end()) seen.push_back(p);
    }
    for (const auto& c : rep.conjugates) conjugate_points += c.degree;
    v.strata.push_back(std::move(rep));
  }
  v.total_points = static_cast<int>(seen.size()) + conjugate_points;
  return v;
}

int multiplicity_along_line(const Hypersurface& x, const Line& line) {
  const Poly& f = x.equation();
  std::size_t n = f.ring().size();
  if (!restrict_to_line(f, line).is_zero())
    throw DomainError("line " + line.label + " is not contained in the hypersurface");
  // f(base + t*direction + y): minimal y-degree whose coefficient in t is nonzero.
  std::vector<std::string> names{"t"};
  for (std::size_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i));
  Ring r(names);
  Poly t = Poly::variable(r, 0);
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(Poly::constant(r, line.base[i]) + t * line.direction[i] +
                     Poly::variable(r, i + 1));
  Poly g = f.substitute(images);
  int best = -1;
  for (const auto& [e, c] : g.terms()) {
    int d = static_cast<int>(total_degree(e) - e[0]);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int multiplicity_along_coordinate_subspace(const Poly& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) throw DomainError("multiplicity of the zero polynomial");
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(f.ring().require(v));
  int best = -1;
  for (const auto& [e, c] : f.terms()) {
    int d = 0;
    for (auto i : idx) d += static_cast<int>(e[i]);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

}  // namespace cypair::singlocus
