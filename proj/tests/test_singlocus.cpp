#include "cypair/error.hpp"
#include "cypair/singlocus.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cypair;
using namespace cypair::singlocus;

namespace {

const Ring P3({"x0", "x1", "x2", "x3"});
const Ring P4({"x0", "x1", "x2", "x3", "x4"});
const Ring G3({"x", "y", "z"});
const Ring G4({"x", "y", "z", "t"});

ProjPoint pt(std::initializer_list<int> c) {
  std::vector<Rat> v;
  for (int x : c) v.emplace_back(x);
  return ProjPoint(v);
}

Poly random_germ(std::mt19937& rng, const Ring& r) {
  std::uniform_int_distribution<int> nterms(1, 5), deg(0, 3), coef(-4, 4);
  Poly p(r);
  while (p.is_zero()) {
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
      Exponents e(r.size());
      unsigned tot = 0;
      for (auto& x : e) tot += (x = static_cast<std::uint32_t>(deg(rng)));
      if (tot == 0) e[0] = 1;
      p.add_term(e, Rat(coef(rng)));
    }
  }
  return p;
}

// Random unimodular integer matrix as a product of elementary matrices.
std::vector<Poly> unimodular_images(std::mt19937& rng, const Ring& r) {
  std::size_t n = r.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  std::uniform_int_distribution<int> idx(0, static_cast<int>(n) - 1), k(-2, 2);
  for (int step = 0; step < 8; ++step) {
    int i = idx(rng), j = idx(rng), c = k(rng);
    if (i == j) continue;
    for (std::size_t col = 0; col < n; ++col) m[i][col] += c * m[j][col];
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < n; ++i) {
    Poly row(r);
    for (std::size_t j = 0; j < n; ++j) row += Poly::variable(r, j) * Rat(m[i][j]);
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST(ProjPoint, Normalizes) {
  EXPECT_EQ(pt({0, 2, -4, 0}).coords(), (std::vector<Rat>{0, 1, -2, 0}));
  EXPECT_EQ(pt({0, 0, 3}).chart(), 2u);
  EXPECT_THROW(pt({0, 0, 0}), Error);
}

TEST(IsSingularAt, QuarticBoundaryCusp) {
  Hypersurface d(Poly::parse("x1^4+x2^4+x3^4+x0*x1*x2*x3", P3));
  EXPECT_TRUE(is_singular_at(d, pt({1, 0, 0, 0})));
}

TEST(IsSingularAt, FermatSmoothPointAndOffSurface) {
  Hypersurface f(Poly::parse("x0^4+x1^4+x2^4+x3^4", P3));
  Hypersurface g(Poly::parse("x1^4+x2^4+x3^4+x0^3*x1", P3));
  EXPECT_FALSE(is_singular_at(g, pt({1, 0, 0, 0})));
  EXPECT_THROW(is_singular_at(f, pt({1, 0, 0, 0})), DomainError);
}

TEST(VerifySingularLocus, NodalQuarticOnLine) {
  Hypersurface x(Poly::parse("x3*(x0^3+x1^3)+x2^4+x0*x1*x2*x3+x4*(x3^3+x4^3)", P4));
  auto v = verify_singular_locus(x, {pt({1, -1, 0, 0, 0})}, {Line::coordinate(P4, {"x2", "x3", "x4"}, "L")});
  EXPECT_EQ(v.total_points, 3);
  ASSERT_EQ(v.strata.size(), 1u);
  ASSERT_EQ(v.strata[0].rational_points.size(), 1u);
  ASSERT_EQ(v.strata[0].conjugates.size(), 1u);
  EXPECT_EQ(v.strata[0].conjugates[0].degree, 2);
  EXPECT_TRUE(v.strata[0].conjugates[0].irreducible);
}

TEST(VerifySingularLocus, SmoothQuarticEmptyClaim) {
  Hypersurface f(Poly::parse("x0^4+x1^4+x2^4+x3^4", P3));
  std::vector<Line> lines{Line::coordinate(P3, {"x0", "x1"}), Line::coordinate(P3, {"x2", "x3"}),
                          Line::coordinate(P3, {"x0", "x3"})};
  auto v = verify_singular_locus(f, {}, lines);
  EXPECT_EQ(v.total_points, 0);
}

TEST(VerifySingularLocus, Errors) {
  Hypersurface f(Poly::parse("x0^4+x1^4+x2^4+x3^4", P3));
  EXPECT_THROW(verify_singular_locus(f, {pt({1, -1, 0, 0})}, {}), DomainError);
  // three A2 points; two of them lie unclaimed on {x2 = x3 = 0}
  Hypersurface q(Poly::parse("x0*x1*x2 + x3^3", P3));
  EXPECT_THROW(verify_singular_locus(q, {}, {Line::coordinate(P3, {"x2", "x3"})}), LocusMismatch);
}

TEST(Multiplicity, TableExamples) {
  EXPECT_EQ(multiplicity(Poly::parse("x^2+y^2+z^5", G3)), 2);
  EXPECT_EQ(multiplicity(Poly::parse("x*y*z", G3)), 3);
  EXPECT_EQ(multiplicity(Poly::parse("x", G3)), 1);
  EXPECT_THROW(multiplicity(Poly(G3)), Error);
}

TEST(OrdinaryDoublePoint, Examples) {
  EXPECT_TRUE(is_ordinary_double_point(Poly::parse("x*y+z*t", G4)));
  EXPECT_FALSE(is_ordinary_double_point(Poly::parse("x^2+y^2+z^2+t^3", G4)));
  EXPECT_FALSE(is_ordinary_double_point(Poly::parse("x*y+z^3+t^3", G4)));
  EXPECT_EQ(quadratic_rank(Poly::parse("x*y+z^3+t^3", G4)), 2u);
}

TEST(WeightedMultiplicity, Examples) {
  EXPECT_EQ(weighted_multiplicity(Poly::parse("x^2+y^3+z^6+x*y*z", G3), {3, 2, 1}), 6);
  EXPECT_EQ(weighted_multiplicity(Poly::parse("x", Ring({"x"})), {5}), 5);
  EXPECT_THROW(weighted_multiplicity(Poly::parse("x", Ring({"x"})), {0}), Error);
}

TEST(MultiplicityAlongLine, DoublePinchModel) {
  // x^2 y^2 + z^2 homogenized with w, along {x = z = 0}
  Ring r({"w", "x", "y", "z"});
  Hypersurface h(Poly::parse("x^2*y^2 + z^2*w^2", r));
  EXPECT_EQ(multiplicity_along_line(h, Line::coordinate(r, {"x", "z"})), 2);
  Hypersurface smooth(Poly::parse("w*x + y*z", r));
  EXPECT_EQ(multiplicity_along_line(smooth, Line::coordinate(r, {"x", "z"})), 1);
  EXPECT_THROW(multiplicity_along_line(smooth, Line::coordinate(r, {"w", "x"})), DomainError);
}

TEST(SinglocusProperties, MultiplicityIsAdditive) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Poly f = random_germ(rng, G3), g = random_germ(rng, G3);
    ASSERT_EQ(multiplicity(f * g), multiplicity(f) + multiplicity(g));
  }
}

TEST(SinglocusProperties, UnitWeightsGiveMultiplicity) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Poly f = random_germ(rng, G3);
    ASSERT_EQ(weighted_multiplicity(f, {1, 1, 1}), multiplicity(f));
  }
}

TEST(SinglocusProperties, SingularIffGermMultiplicityAtLeastTwo) {
  std::mt19937 rng(13);
  Ring r({"x0", "x1", "x2"});
  std::uniform_int_distribution<int> c(-2, 2);
  int checked = 0;
  for (int i = 0; checked < 200 && i < 5000; ++i) {
    // cubic curves through (1:0:0)
    Poly f(r);
    for (unsigned a = 0; a <= 3; ++a)
      for (unsigned b = 0; a + b <= 3; ++b) {
        if (a == 3) continue;
        int k = c(rng);
        if (k) f.add_term({a, b, 3 - a - b}, Rat(k));
      }
    if (f.is_zero() || !f.is_homogeneous()) continue;
    Hypersurface h(f);
    ProjPoint p = ProjPoint::coordinate(3, 0);
    ASSERT_TRUE(h.contains(p));
    ASSERT_EQ(is_singular_at(h, p), multiplicity(affine_germ(h, p)) >= 2);
    ++checked;
  }
  EXPECT_EQ(checked, 200);
}

TEST(SinglocusProperties, OdpInvariantUnderUnimodularChange) {
  std::mt19937 rng(17);
  std::vector<Poly> germs{Poly::parse("x*y+z*t", G4), Poly::parse("x^2+y^2+z^2+t^2+x^3", G4),
                          Poly::parse("x^2+y^2+z^2+t^3", G4), Poly::parse("x*y+z^3+t^3", G4)};
  for (int i = 0; i < 50; ++i)
    for (const auto& g : germs) {
      auto img = unimodular_images(rng, G4);
      ASSERT_EQ(is_ordinary_double_point(g.substitute(img)), is_ordinary_double_point(g));
    }
}
