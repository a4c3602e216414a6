#include "cypair/singclass.hpp"

#include "cypair/error.hpp"
#include "cypair/singlocus.hpp"
#include "cypair/upoly.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace cypair::singclass {

// ---------------------------------------------------------------------------
// Table1Type

Table1Type Table1Type::cusp(int p, int q, int r) {
  std::array<int, 3> v{p, q, r};
  std::sort(v.begin(), v.end());
  Table1Type t = Table1Type::make(Symbol::Tpqr);
  t.p = v[0];
  t.q = v[1];
  t.r = v[2];
  return t;
}

std::string Table1Type::name() const {
  auto idx = [](std::initializer_list<std::string> parts) {
    std::string s = "{";
    bool first = true;
    for (const auto& p : parts) {
      s += (first ? "" : ",") + p;
      first = false;
    }
    return s + "}";
  };
  auto str = [](int v) { return std::to_string(v); };
  switch (symbol) {
    case Symbol::A0: return "A_0";
    case Symbol::An: return "A_" + str(n);
    case Symbol::Dn: return "D_" + str(n);
    case Symbol::E6: return "E_6";
    case Symbol::E7: return "E_7";
    case Symbol::E8: return "E_8";
    case Symbol::X10: return "X_{1,0}";
    case Symbol::J20: return "J_{2,0}";
    case Symbol::T333: return "T_{3,3,3}";
    case Symbol::Tpqr: return "T_" + idx({str(p), str(q), str(r)});
    case Symbol::Ainf: return "A_inf";
    case Symbol::Dinf: return "D_inf";
    case Symbol::T2InfInf: return "T_{2,inf,inf}";
    case Symbol::T2qInf: return "T_" + idx({"2", str(q), "inf"});
    case Symbol::TInfInfInf: return "T_{inf,inf,inf}";
    case Symbol::TpInfInf: return "T_" + idx({str(p), "inf", "inf"});
    case Symbol::TpqInf: return "T_" + idx({str(p), str(q), "inf"});
    case Symbol::Unclassified: return "UNCLASSIFIED";
    case Symbol::DegenerateModulus: return "DEGENERATE_MODULUS";
  }
  return "UNCLASSIFIED";
}

Category Table1Type::category() const {
  switch (symbol) {
    case Symbol::A0: return Category::Terminal;
    case Symbol::An:
    case Symbol::Dn:
    case Symbol::E6:
    case Symbol::E7:
    case Symbol::E8: return Category::Canonical;
    case Symbol::X10:
    case Symbol::J20:
    case Symbol::T333:
    case Symbol::Tpqr: return Category::LogCanonical;
    case Symbol::Ainf:
    case Symbol::Dinf:
    case Symbol::T2InfInf:
    case Symbol::T2qInf:
    case Symbol::TInfInfInf:
    case Symbol::TpInfInf:
    case Symbol::TpqInf: return Category::SemiLogCanonical;
    default: return Category::None;
  }
}

std::string category_name(Category c) {
  switch (c) {
    case Category::Terminal: return "terminal";
    case Category::Canonical: return "canonical";
    case Category::LogCanonical: return "lc";
    case Category::SemiLogCanonical: return "slc";
    case Category::None: return "none";
  }
  return "none";
}

Table1Type Table1Type::parse(const std::string& s) {
  static const std::map<std::string, Symbol> fixed = {
      {"A_0", Symbol::A0},          {"E_6", Symbol::E6},
      {"E_7", Symbol::E7},          {"E_8", Symbol::E8},
      {"X_{1,0}", Symbol::X10},     {"J_{2,0}", Symbol::J20},
      {"T_{2,3,6}", Symbol::J20},   {"T_{2,4,4}", Symbol::X10},
      {"T_{3,3,3}", Symbol::T333},  {"A_inf", Symbol::Ainf},
      {"D_inf", Symbol::Dinf},      {"T_{2,inf,inf}", Symbol::T2InfInf},
      {"T_{inf,inf,inf}", Symbol::TInfInfInf},
      {"UNCLASSIFIED", Symbol::Unclassified},
      {"DEGENERATE_MODULUS", Symbol::DegenerateModulus}};
  if (auto it = fixed.find(s); it != fixed.end()) return make(it->second);
  auto bad = [&] { return ParseError("unknown normal-form symbol '" + s + "'"); };
  try {
    if (s.rfind("A_", 0) == 0) return a(std::stoi(s.substr(2)));
    if (s.rfind("D_", 0) == 0) return d(std::stoi(s.substr(2)));
    if (s.rfind("T_{", 0) == 0 && s.back() == '}') {
      std::vector<std::string> parts;
      std::stringstream ss(s.substr(3, s.size() - 4));
      for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
      if (parts.size() != 3) throw bad();
      std::vector<int> fin;
      int infs = 0;
      for (const auto& p : parts) {
        if (p == "inf") ++infs;
        else fin.push_back(std::stoi(p));
      }
      std::sort(fin.begin(), fin.end());
      Table1Type t;
      if (infs == 0) return cusp(fin[0], fin[1], fin[2]);
      if (infs == 1 && fin[0] == 2) {
        t.symbol = Symbol::T2qInf;
        t.q = fin[1];
      } else if (infs == 1) {
        t.symbol = Symbol::TpqInf;
        t.p = fin[0];
        t.q = fin[1];
      } else if (infs == 2) {
        t.symbol = Symbol::TpInfInf;
        t.p = fin[0];
      } else {
        throw bad();
      }
      return t;
    }
  } catch (const std::logic_error&) {
    throw bad();
  }
  throw bad();
}

Embedding fundamental_cycle_classification(int z_sq) {
  if (z_sq >= 0) throw DomainError("fundamental cycle must have negative self-intersection");
  if (z_sq >= -3) return Embedding::Hypersurface;
  if (z_sq == -4) return Embedding::CodimTwoCompleteIntersection;
  return Embedding::NotCompleteIntersection;
}

std::string embedding_name(Embedding e) {
  switch (e) {
    case Embedding::Hypersurface: return "hypersurface";
    case Embedding::CodimTwoCompleteIntersection: return "codim-2 complete intersection";
    case Embedding::NotCompleteIntersection: return "not a complete intersection";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Invariants

int hessian_corank(const Poly& germ) {
  if (!germ.constant_term().is_zero()) throw DomainError("germ does not vanish at the origin");
  if (!germ.homogeneous_part(1).is_zero()) throw DomainError("germ has a nonzero linear part");
  return static_cast<int>(germ.ring().size() - singlocus::quadratic_rank(germ));
}

namespace {

using Support = std::set<std::array<int, 3>>;

Support support3(const Poly& f) {
  Support s;
  for (const auto& [e, c] : f.terms())
    s.insert({static_cast<int>(e[0]), static_cast<int>(e[1]), static_cast<int>(e[2])});
  return s;
}

/// Matches a support (already permuted) against the displayed normal forms.
std::optional<Table1Type> match_rows(const Support& s) {
  auto has = [&](int a, int b, int c) { return s.count({a, b, c}) > 0; };
  auto pure = [&](int var) -> std::vector<int> {
    std::vector<int> out;
    for (const auto& e : s) {
      int others = 0;
      for (int i = 0; i < 3; ++i)
        if (i != var) others += e[static_cast<std::size_t>(i)];
      if (others == 0 && e[static_cast<std::size_t>(var)] > 0) out.push_back(e[static_cast<std::size_t>(var)]);
    }
    return out;
  };
  std::size_t n = s.size();
  bool xyz = has(1, 1, 1);

  if (n == 1 && has(1, 0, 0)) return Table1Type::make(Symbol::A0);
  if (n == 1 && xyz) return Table1Type::make(Symbol::TInfInfInf);

  if (has(2, 0, 0)) {
    auto pz = pure(2);
    if (n == 3 && has(0, 2, 0) && pz.size() == 1 && pz[0] >= 2) return Table1Type::a(pz[0] - 1);
    if (n == 3 && has(0, 2, 1) && pz.size() == 1 && pz[0] >= 3) return Table1Type::d(pz[0] + 1);
    if (n == 3 && has(0, 3, 0) && has(0, 0, 4)) return Table1Type::make(Symbol::E6);
    if (n == 3 && has(0, 3, 0) && has(0, 1, 3)) return Table1Type::make(Symbol::E7);
    if (n == 3 && has(0, 3, 0) && has(0, 0, 5)) return Table1Type::make(Symbol::E8);
    if (has(0, 4, 0) && has(0, 0, 4) && (n == 3 || (n == 4 && xyz))) return Table1Type::make(Symbol::X10);
    if (has(0, 3, 0) && has(0, 0, 6) && (n == 3 || (n == 4 && xyz))) return Table1Type::make(Symbol::J20);
    if (n == 2 && has(0, 2, 0)) return Table1Type::make(Symbol::Ainf);
    if (n == 2 && has(0, 2, 1)) return Table1Type::make(Symbol::Dinf);
    if (n == 2 && has(0, 2, 2)) return Table1Type::make(Symbol::T2InfInf);
    auto py = pure(1);
    if (n == 3 && has(0, 2, 2) && py.size() == 1 && py[0] >= 3) {
      Table1Type t = Table1Type::make(Symbol::T2qInf);
      t.q = py[0];
      return t;
    }
  }
  if (xyz) {
    auto px = pure(0), py = pure(1), pz = pure(2);
    bool only_axes = n == 1 + px.size() + py.size() + pz.size() && px.size() <= 1 &&
                     py.size() <= 1 && pz.size() <= 1;
    if (only_axes && px.size() == 1 && py.size() == 1 && pz.size() == 1) {
      int p = px[0], q = py[0], r = pz[0];
      std::array<int, 3> v{p, q, r};
      std::sort(v.begin(), v.end());
      if (v == std::array<int, 3>{3, 3, 3}) return Table1Type::make(Symbol::T333);
      if (v == std::array<int, 3>{2, 4, 4} || v == std::array<int, 3>{2, 3, 6}) return std::nullopt;
      // 1/p + 1/q + 1/r < 1  <=>  qr + pr + pq < pqr
      if (q * r + p * r + p * q < p * q * r) return Table1Type::cusp(p, q, r);
    }
    if (only_axes && px.size() == 1 && py.empty() && pz.empty() && px[0] >= 3) {
      Table1Type t = Table1Type::make(Symbol::TpInfInf);
      t.p = px[0];
      return t;
    }
    if (only_axes && px.size() == 1 && py.size() == 1 && pz.empty() && py[0] >= px[0] &&
        px[0] >= 3) {
      Table1Type t = Table1Type::make(Symbol::TpqInf);
      t.p = px[0];
      t.q = py[0];
      return t;
    }
  }
  return std::nullopt;
}

const std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

Support permute(const Support& s, const std::array<int, 3>& perm) {
  Support out;
  for (const auto& e : s) {
    std::array<int, 3> t{};
    for (std::size_t i = 0; i < 3; ++i) t[i] = e[static_cast<std::size_t>(perm[i])];
    out.insert(t);
  }
  return out;
}

}  // namespace

std::string NewtonData::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case NewtonKind::AxisTripleWithXyz: os << "axis-triple-with-xyz"; break;
    case NewtonKind::QuadraticPlus: os << "quadratic-plus"; break;
    case NewtonKind::DegenerateCusp: os << "degenerate-cusp"; break;
    case NewtonKind::Other: os << "other"; break;
  }
  os << " (";
  for (std::size_t i = 0; i < 3; ++i)
    os << (i ? "," : "") << (axis[i] ? std::to_string(*axis[i]) : std::string("inf"));
  os << ")";
  if (!xyz_coeff.is_zero()) os << " xyz-coeff " << xyz_coeff;
  if (row_match) os << " matches " << row_match->name();
  return os.str();
}

NewtonData newton_type(const Poly& germ) {
  if (germ.ring().size() != 3) throw DomainError("Newton shape needs a germ in 3 variables");
  if (!germ.constant_term().is_zero()) throw DomainError("germ does not vanish at the origin");
  NewtonData nd;
  Support s = support3(germ);
  for (const auto& e : s) {
    for (std::size_t v = 0; v < 3; ++v) {
      bool pure = e[v] > 0 && e[(v + 1) % 3] == 0 && e[(v + 2) % 3] == 0;
      if (pure && (!nd.axis[v] || e[v] < *nd.axis[v])) nd.axis[v] = e[v];
    }
  }
  nd.xyz_coeff = germ.coefficient({1, 1, 1});
  bool xyz = !nd.xyz_coeff.is_zero();
  bool all_axes = nd.axis[0] && nd.axis[1] && nd.axis[2];
  if (xyz && all_axes) nd.kind = NewtonKind::AxisTripleWithXyz;
  else if (xyz) nd.kind = NewtonKind::DegenerateCusp;
  else if (germ.order() == 2) nd.kind = NewtonKind::QuadraticPlus;

  for (const auto& perm : kPermutations) {
    if (auto m = match_rows(permute(s, perm))) {
      nd.row_match = m;
      break;
    }
  }
  return nd;
}

std::optional<ModulusCheck> modulus_check(const Poly& germ) {
  if (germ.ring().size() != 3) return std::nullopt;
  Support s = support3(germ);
  Rat d = germ.coefficient({1, 1, 1});
  Support axes = s;
  axes.erase({1, 1, 1});
  if (axes.size() != 3) return std::nullopt;
  // One pure power per variable.
  std::array<int, 3> pw{};
  std::array<Rat, 3> coef{};
  for (const auto& e : axes) {
    int nz = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < 3; ++i)
      if (e[i]) {
        ++nz;
        var = i;
      }
    if (nz != 1 || pw[var] != 0) return std::nullopt;
    pw[var] = e[var];
    Exponents ex{static_cast<std::uint32_t>(e[0]), static_cast<std::uint32_t>(e[1]),
                 static_cast<std::uint32_t>(e[2])};
    coef[var] = germ.coefficient(ex);
  }
  std::array<int, 3> sorted = pw;
  std::sort(sorted.begin(), sorted.end());
  ModulusCheck mc{};
  if (sorted == std::array<int, 3>{2, 4, 4}) {
    mc = {Symbol::X10, 4, Rat(0), Rat(64)};
  } else if (sorted == std::array<int, 3>{2, 3, 6}) {
    mc = {Symbol::J20, 6, Rat(0), Rat(432)};
  } else if (sorted == std::array<int, 3>{3, 3, 3}) {
    mc = {Symbol::T333, 3, Rat(0), Rat(-27)};
  } else {
    return std::nullopt;
  }
  // Rescaling x_i -> c_i^{-1/p_i} x_i normalizes the axis terms; the xyz
  // coefficient becomes lambda with lambda^N = d^N / prod c_i^{N/p_i}.
  Rat value = d.pow(static_cast<unsigned>(mc.power));
  for (std::size_t i = 0; i < 3; ++i)
    value /= coef[i].pow(static_cast<unsigned>(mc.power / pw[i]));
  mc.value = value;
  return mc;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

/// Root structure of a binary form h(y, z) over the algebraic closure.
struct BinaryPattern {
  std::vector<std::pair<UPoly, int>> finite;  ///< factors of h(t, 1), t = y/z
  int infinity = 0;                           ///< multiplicity of the root z = 0
  std::vector<int> multiplicities;            ///< sorted descending
};

BinaryPattern binary_pattern(const Poly& form) {
  int d = form.total_degree();
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
  for (const auto& [e, v] : form.terms()) c[e[0]] += v;
  UPoly h(std::move(c));
  BinaryPattern bp;
  bp.infinity = d - h.degree();
  bp.finite = h.squarefree_decomposition();
  for (const auto& [f, m] : bp.finite)
    for (int i = 0; i < f.degree(); ++i) bp.multiplicities.push_back(m);
  if (bp.infinity > 0) bp.multiplicities.push_back(bp.infinity);
  std::sort(bp.multiplicities.rbegin(), bp.multiplicities.rend());
  return bp;
}

/// Linear form a*y + b*z as a coefficient pair.
using LinearForm = std::array<Rat, 2>;

/// Rational roots of multiplicity `m` as linear forms vanishing on them.
std::vector<LinearForm> roots_with_multiplicity(const BinaryPattern& bp, int m) {
  std::vector<LinearForm> out;
  for (const auto& [f, mult] : bp.finite) {
    if (mult != m) continue;
    for (const auto& r : f.rational_roots()) out.push_back({Rat(1), -r});
  }
  if (bp.infinity == m) out.push_back({Rat(0), Rat(1)});
  return out;
}

/// Rewrites g(y, z) in coordinates Y = l1(y, z), Z = l2(y, z).
Poly change_coordinates(const Poly& g, const LinearForm& l1, const LinearForm& l2) {
  Rat det = l1[0] * l2[1] - l1[1] * l2[0];
  if (det.is_zero()) throw DomainError("dependent linear forms");
  const Ring& r = g.ring();
  Poly Y = Poly::variable(r, 0), Z = Poly::variable(r, 1);
  // inverse of [[a1, b1], [a2, b2]]
  Poly y = Y * (l2[1] / det) - Z * (l1[1] / det);
  Poly z = Z * (l1[0] / det) - Y * (l2[0] / det);
  std::vector<Poly> images{y, z};
  return g.substitute(images);
}

LinearForm complement(const LinearForm& l) {
  return l[0].is_zero() ? LinearForm{Rat(1), Rat(0)} : LinearForm{Rat(0), Rat(1)};
}

Poly drop_variable(const Poly& g, std::size_t var) {
  Ring target = g.ring().without(var);
  Poly out(target);
  for (const auto& [e, c] : g.terms()) {
    if (e[var] != 0) throw DomainError("variable still present");
    Exponents t = e;
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(var));
    out.add_term(t, c);
  }
  return out;
}

/// Splitting lemma for a corank-2 germ of multiplicity 2: returns g(y, z)
/// with f ~ a*X^2 + g(y, z), exact modulo terms of degree > order.
Poly split_off_square(const Poly& f, unsigned order) {
  const Ring& r = f.ring();
  std::size_t n = r.size();
  Poly q = f.homogeneous_part(2);
  std::size_t i = n;
  for (std::size_t k = 0; k < n; ++k) {
    Exponents e(n, 0);
    e[k] = 2;
    if (!q.coefficient(e).is_zero()) {
      i = k;
      break;
    }
  }
  if (i == n) throw DomainError("rank-1 quadratic part without a square term");
  Exponents sq(n, 0);
  sq[i] = 2;
  Rat a = q.coefficient(sq);

  // x_i <- x_i - sum_j (M_ij / M_ii) x_j turns the quadratic part into a*x_i^2.
  std::vector<Poly> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(Poly::variable(r, j));
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    Exponents e(n, 0);
    e[i] = 1;
    e[j] = 1;
    Rat mij = q.coefficient(e) / Rat(2);
    images[i] -= Poly::variable(r, j) * (mij / a);
  }
  Poly f1 = f.substitute(images).jet(order);
  Poly fx = f1.derivative(i);

  Poly phi(r);
  Rat inv2a = (Rat(2) * a).inverse();
  for (unsigned it = 0; it <= order + 1; ++it) {
    std::vector<Poly> sub;
    for (std::size_t j = 0; j < n; ++j) sub.push_back(j == i ? phi : Poly::variable(r, j));
    Poly next = (phi - fx.substitute(sub) * inv2a).jet(order);
    if (next == phi) break;
    phi = std::move(next);
  }
  std::vector<Poly> sub;
  for (std::size_t j = 0; j < n; ++j) sub.push_back(j == i ? phi : Poly::variable(r, j));
  return drop_variable(f1.substitute(sub).jet(order), i);
}

int min_pure_power(const Poly& g, std::size_t var) {
  int best = 0;
  for (const auto& [e, c] : g.terms()) {
    bool pure = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) pure = false;
    if (pure && e[var] > 0 && (best == 0 || static_cast<int>(e[var]) < best))
      best = static_cast<int>(e[var]);
  }
  return best;  // 0 = none
}

Table1Type unclassified(std::vector<std::string>& notes, std::string why) {
  notes.push_back(std::move(why));
  return Table1Type::make(Symbol::Unclassified);
}

/// Classifies x^2 + g(y, z) from the plane-curve germ g (multiplicity >= 3).
Table1Type classify_suspension(const Poly& g, const MilnorNumber& mu, GermReport& rep) {
  auto& notes = rep.notes;
  using K = MilnorNumber::Kind;
  if (g.is_zero()) return unclassified(notes, "residual curve germ vanishes to the truncation order");
  int ord = g.order();
  if (ord == 3) {
    BinaryPattern bp = binary_pattern(g.homogeneous_part(3));
    if (bp.multiplicities == std::vector<int>{1, 1, 1}) return Table1Type::d(4);
    if (bp.multiplicities == std::vector<int>{2, 1}) {
      if (mu.kind == K::Finite && mu.value >= 5) return Table1Type::d(mu.value);
      if (mu.kind == K::Infinite) return Table1Type::make(Symbol::Dinf);
      return unclassified(notes, "cubic with a double factor but Milnor number " + mu.to_string());
    }
    // Triple line.
    if (mu.kind == K::Finite && mu.value == 6) return Table1Type::make(Symbol::E6);
    if (mu.kind == K::Finite && mu.value == 7) return Table1Type::make(Symbol::E7);
    if (mu.kind == K::Finite && mu.value == 8) return Table1Type::make(Symbol::E8);
    auto lines = roots_with_multiplicity(bp, 3);
    if (lines.size() != 1) return unclassified(notes, "triple cubic without a rational line");
    Poly h = change_coordinates(g, lines[0], complement(lines[0]));
    int wmin = singlocus::weighted_multiplicity(h, {2, 1});
    if (wmin < 6) return unclassified(notes, "weighted (2,1)-order below 6 with Milnor number " + mu.to_string());
    // Principal part a3 Y^3 + a2 Y^2 Z^2 + a1 Y Z^4 + a0 Z^6 as a cubic in u = Y/Z^2.
    UPoly principal({h.coefficient({0, 6}), h.coefficient({1, 4}), h.coefficient({2, 2}),
                     h.coefficient({3, 0})});
    if (principal.degree() == 3) {
      const auto& c = principal.coeffs();
      const Rat &d0 = c[0], &c1 = c[1], &b2 = c[2], &a3 = c[3];
      rep.principal_discriminant = b2 * b2 * c1 * c1 - Rat(4) * a3 * c1 * c1 * c1 -
                                   Rat(4) * b2 * b2 * b2 * d0 - Rat(27) * a3 * a3 * d0 * d0 +
                                   Rat(18) * a3 * b2 * c1 * d0;
      notes.push_back("principal cubic " + principal.to_string("u") + ", discriminant " +
                      rep.principal_discriminant->to_string());
    }
    std::vector<int> mults;
    for (const auto& [f, m] : principal.squarefree_decomposition())
      for (int k = 0; k < f.degree(); ++k) mults.push_back(m);
    std::sort(mults.rbegin(), mults.rend());
    if (mults == std::vector<int>{1, 1, 1}) {
      if (mu.kind == K::Finite && mu.value == 10) return Table1Type::make(Symbol::J20);
      return unclassified(notes, "J_{2,0} principal part but Milnor number " + mu.to_string());
    }
    if (mults == std::vector<int>{2, 1}) {
      if (mu.kind == K::Finite && mu.value - 4 >= 7) return Table1Type::cusp(2, 3, mu.value - 4);
      if (mu.kind == K::Infinite) {
        Table1Type t = Table1Type::make(Symbol::T2qInf);
        t.q = 3;
        return t;
      }
      return unclassified(notes, "T_{2,3,r} principal part but Milnor number " + mu.to_string());
    }
    return unclassified(notes, "weighted principal part with a triple root (beyond the classification table)");
  }
  if (ord == 4) {
    BinaryPattern bp = binary_pattern(g.homogeneous_part(4));
    if (bp.multiplicities == std::vector<int>{1, 1, 1, 1}) {
      if (mu.kind == K::Finite && mu.value == 9) return Table1Type::make(Symbol::X10);
      return unclassified(notes, "X_{1,0} quartic but Milnor number " + mu.to_string());
    }
    if (bp.multiplicities == std::vector<int>{2, 1, 1}) {
      if (mu.kind == K::Finite && mu.value - 5 >= 5) return Table1Type::cusp(2, 4, mu.value - 5);
      if (mu.kind == K::Infinite) {
        Table1Type t = Table1Type::make(Symbol::T2qInf);
        t.q = 4;
        return t;
      }
      return unclassified(notes, "T_{2,4,r} quartic but Milnor number " + mu.to_string());
    }
    if (bp.multiplicities == std::vector<int>{2, 2}) {
      auto lines = roots_with_multiplicity(bp, 2);
      if (lines.size() != 2) return unclassified(notes, "double lines of the quartic are not rational");
      Poly h = change_coordinates(g, lines[0], lines[1]);
      int q = min_pure_power(h, 0), r = min_pure_power(h, 1);
      if (q && r) {
        if (mu.kind == K::Finite && mu.value == q + r + 1) return Table1Type::cusp(2, q, r);
        return unclassified(notes, "Newton data (2," + std::to_string(q) + "," + std::to_string(r) +
                                       ") inconsistent with Milnor number " + mu.to_string());
      }
      if (mu.kind != K::Infinite) return unclassified(notes, "degenerate-cusp shape but Milnor number " + mu.to_string());
      if (!q && !r) return Table1Type::make(Symbol::T2InfInf);
      Table1Type t = Table1Type::make(Symbol::T2qInf);
      t.q = q ? q : r;
      return t;
    }
    return unclassified(notes, "quartic principal part with a root of multiplicity >= 3");
  }
  return unclassified(notes, "residual curve germ of multiplicity " + std::to_string(ord));
}

Table1Type classify_triple_point(const Poly& f, const MilnorNumber& mu,
                                 std::vector<std::string>& notes) {
  using K = MilnorNumber::Kind;
  Poly cubic = f.homogeneous_part(3);
  bool xyz = !cubic.coefficient({1, 1, 1}).is_zero();
  bool cubic_axes_only = true;
  for (const auto& [e, c] : cubic.terms()) {
    bool is_xyz = e == Exponents{1, 1, 1};
    bool is_cube = e[0] == 3 || e[1] == 3 || e[2] == 3;
    if (!is_xyz && !is_cube) cubic_axes_only = false;
  }
  if (xyz && cubic_axes_only) {
    std::array<int, 3> pw{};
    for (std::size_t v = 0; v < 3; ++v) pw[v] = min_pure_power(f, v);
    std::vector<int> fin;
    for (int p : pw)
      if (p) fin.push_back(p);
    std::sort(fin.begin(), fin.end());
    if (fin.size() == 3) {
      int p = fin[0], q = fin[1], r = fin[2];
      if (p == 3 && q == 3 && r == 3) {
        if (mu.kind == K::Finite && mu.value == 8) return Table1Type::make(Symbol::T333);
        return unclassified(notes, "T_{3,3,3} shape but Milnor number " + mu.to_string());
      }
      if (q * r + p * r + p * q < p * q * r) {
        if (mu.kind == K::Finite && mu.value == p + q + r - 1) return Table1Type::cusp(p, q, r);
        return unclassified(notes, "cusp shape T_{" + std::to_string(p) + "," + std::to_string(q) +
                                       "," + std::to_string(r) + "} but Milnor number " +
                                       mu.to_string());
      }
    }
    if (mu.kind != K::Infinite) {
      if (fin.size() < 3)
        return unclassified(notes, "degenerate-cusp shape but Milnor number " + mu.to_string());
    } else {
      Table1Type t;
      if (fin.empty()) return Table1Type::make(Symbol::TInfInfInf);
      if (fin.size() == 1) {
        t.symbol = Symbol::TpInfInf;
        t.p = fin[0];
        return t;
      }
      if (fin.size() == 2) {
        t.symbol = Symbol::TpqInf;
        t.p = fin[0];
        t.q = fin[1];
        return t;
      }
    }
  }
  if (mu.kind == K::Finite && mu.value == 8) return Table1Type::make(Symbol::T333);
  return unclassified(notes, "triple point outside the recognized Newton shapes");
}

}  // namespace

GermReport classify(const Poly& germ, int max_order) {
  if (!germ.constant_term().is_zero()) throw DomainError("germ does not vanish at the origin");
  GermReport rep(germ);
  if (germ.is_zero()) {
    rep.verdict = unclassified(rep.notes, "zero germ");
    return rep;
  }
  rep.multiplicity = singlocus::multiplicity(germ);
  if (germ.ring().size() != 3) {
    rep.verdict = unclassified(rep.notes, "classification needs a germ in 3 variables");
    return rep;
  }
  rep.newton = newton_type(germ);
  if (rep.multiplicity == 1) {
    rep.verdict = Table1Type::make(Symbol::A0);
    return rep;
  }
  rep.corank = hessian_corank(germ);
  rep.modulus = modulus_check(germ);
  if (rep.modulus && rep.modulus->degenerate()) {
    rep.notes.push_back("modulus lambda^" + std::to_string(rep.modulus->power) + " = " +
                        rep.modulus->forbidden.to_string() + " is excluded");
    rep.verdict = Table1Type::make(Symbol::DegenerateModulus);
    rep.milnor = milnor_number(germ, max_order);
    return rep;
  }
  rep.milnor = milnor_number(germ, max_order);
  const MilnorNumber& mu = rep.milnor;
  using K = MilnorNumber::Kind;

  if (rep.multiplicity == 2) {
    if (rep.corank == 0) {
      rep.verdict = Table1Type::a(1);
    } else if (rep.corank == 1) {
      if (mu.kind == K::Finite) rep.verdict = Table1Type::a(mu.value);
      else if (mu.kind == K::Infinite) rep.verdict = Table1Type::make(Symbol::Ainf);
      else rep.verdict = unclassified(rep.notes, "corank 1 with inconclusive Milnor number");
    } else {
      Poly g = split_off_square(germ, static_cast<unsigned>(max_order));
      rep.notes.push_back("residual curve germ " + g.to_string());
      rep.verdict = classify_suspension(g, mu, rep);
    }
  } else if (rep.multiplicity == 3) {
    rep.verdict = classify_triple_point(germ, mu, rep.notes);
  } else {
    rep.verdict = unclassified(rep.notes, "multiplicity " + std::to_string(rep.multiplicity) +
                                              " exceeds the classification table");
  }
  if (rep.verdict.symbol == Symbol::T2InfInf) rep.verdict.alias = "double pinch point";
  if (rep.verdict.symbol == Symbol::J20) rep.verdict.alias = "T_{2,3,6}";
  if (rep.verdict.symbol == Symbol::X10) rep.verdict.alias = "T_{2,4,4}";
  return rep;
}

}  // namespace cypair::singclass
