#include "cypair/error.hpp"
#include "cypair/singclass.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cypair;
using namespace cypair::singclass;

namespace {

const Ring G3({"x", "y", "z"});
Poly P(const std::string& s) { return Poly::parse(s, G3); }

struct Row {
  std::string equation;
  std::string symbol;
  int mult;
};

// Normal forms with concrete indices and lambda = 1 (generic for all three families).
const std::vector<Row> kNormalForms = {
    {"x", "A_0", 1},
    {"x^2+y^2+z^5", "A_4", 2},
    {"x^2+z*(y^2+z^3)", "D_5", 2},
    {"x^2+y^3+z^4", "E_6", 2},
    {"x^2+y^3+y*z^3", "E_7", 2},
    {"x^2+y^3+z^5", "E_8", 2},
    {"x^2+y^4+z^4+x*y*z", "X_{1,0}", 2},
    {"x^2+y^3+z^6+x*y*z", "J_{2,0}", 2},
    {"x^3+y^3+z^3+x*y*z", "T_{3,3,3}", 3},
    {"x^3+y^4+z^5+x*y*z", "T_{3,4,5}", 3},
    {"x^2+y^2", "A_inf", 2},
    {"x^2+y^2*z", "D_inf", 2},
    {"x^2+y^2*z^2", "T_{2,inf,inf}", 2},
    {"x^2+y^2*(z^2+y^2)", "T_{2,4,inf}", 2},
    {"x*y*z", "T_{inf,inf,inf}", 3},
    {"x*y*z+x^4", "T_{4,inf,inf}", 3},
    {"x*y*z+x^3+y^4", "T_{3,4,inf}", 3},
};

}  // namespace

TEST(NormalFormGolden, SeventeenRows) {
  ASSERT_EQ(kNormalForms.size(), 17u);
  for (const auto& row : kNormalForms) {
    auto rep = classify(P(row.equation));
    EXPECT_EQ(rep.verdict.name(), row.symbol) << row.equation;
    EXPECT_EQ(rep.multiplicity, row.mult) << row.equation;
    EXPECT_EQ(Table1Type::parse(row.symbol), rep.verdict);
  }
}

TEST(NormalFormGolden, CuspWithTwoOnTheDiagonal) {
  EXPECT_EQ(classify(P("x^2+y^3+z^7+x*y*z")).verdict.name(), "T_{2,3,7}");
  EXPECT_EQ(classify(P("x^4+y^4+z^4+x*y*z")).verdict.name(), "T_{4,4,4}");
}

TEST(NormalFormGolden, DegenerateModuliRejected) {
  // general-coefficient forms realizing lambda^4 = 64, lambda^6 = 432, lambda^3 = -27
  for (const char* g : {"x^2+y^4+4*z^4+4*x*y*z", "x^2+y^3+108*z^6+6*x*y*z", "x^3+y^3+z^3-3*x*y*z"}) {
    auto rep = classify(P(g));
    EXPECT_EQ(rep.verdict.symbol, Symbol::DegenerateModulus) << g;
    ASSERT_TRUE(rep.modulus) << g;
    EXPECT_TRUE(rep.modulus->degenerate()) << g;
  }
}

TEST(NormalFormGolden, GenericModulusAccepted) {
  auto rep = classify(P("x^2+y^4+z^4+x*y*z"));
  ASSERT_TRUE(rep.modulus);
  EXPECT_EQ(rep.modulus->power, 4);
  EXPECT_EQ(rep.modulus->value, Rat(1));
  EXPECT_EQ(rep.modulus->forbidden, Rat(64));
}

TEST(NormalFormGolden, CategoryColumn) {
  EXPECT_EQ(classify(P("x")).verdict.category(), Category::Terminal);
  EXPECT_EQ(classify(P("x^2+y^3+z^5")).verdict.category(), Category::Canonical);
  EXPECT_EQ(classify(P("x^4+y^4+z^4+x*y*z")).verdict.category(), Category::LogCanonical);
  EXPECT_EQ(classify(P("x*y*z")).verdict.category(), Category::SemiLogCanonical);
}

TEST(Classify, DoublePinchPointCarriesName) {
  auto rep = classify(P("x^2*y^2-z^2"));
  EXPECT_EQ(rep.verdict.name(), "T_{2,inf,inf}");
  EXPECT_EQ(rep.verdict.alias, "double pinch point");
  EXPECT_EQ(rep.milnor.kind, MilnorNumber::Kind::Infinite);
}

TEST(Classify, NeverThrowsOnUnrecognized) {
  auto rep = classify(P("x^5+y^5+z^5"));
  EXPECT_EQ(rep.verdict.symbol, Symbol::Unclassified);
}

TEST(Classify, CuspConditionExact) {
  // 1/2 + 1/3 + 1/6 = 1 is not a cusp; the same support is J_{2,0}
  EXPECT_EQ(classify(P("x^2+y^3+z^6+x*y*z")).verdict.symbol, Symbol::J20);
  EXPECT_EQ(classify(P("x^3+y^3+z^3+x*y*z")).verdict.symbol, Symbol::T333);
  for (const auto& row : kNormalForms) {
    auto t = classify(P(row.equation)).verdict;
    if (t.symbol == Symbol::Tpqr) {
      Rat s = Rat(1, t.p) + Rat(1, t.q) + Rat(1, t.r);
      EXPECT_LT(s, Rat(1));
    }
  }
}

TEST(HessianCorank, Examples) {
  EXPECT_EQ(hessian_corank(P("x^2+y^2+z^2")), 0);
  EXPECT_EQ(hessian_corank(P("x^2+y^3+z^6+x*y*z")), 2);
  EXPECT_EQ(hessian_corank(P("x^3+y^3+z^3+x*y*z")), 3);
  EXPECT_THROW(hessian_corank(P("x+y^2")), Error);
}

TEST(MilnorNumber, Examples) {
  auto a1 = milnor_number(P("x^2+y^2+z^2"));
  ASSERT_TRUE(a1.finite());
  EXPECT_EQ(a1.value, 1);
  auto t444 = milnor_number(P("x^4+y^4+z^4+x*y*z"));
  ASSERT_TRUE(t444.finite());
  EXPECT_EQ(t444.value, 4 + 4 + 4 - 1);
  EXPECT_EQ(milnor_number(P("x^2+y^2")).kind, MilnorNumber::Kind::Infinite);
  EXPECT_EQ(milnor_number(P("x*y*z")).kind, MilnorNumber::Kind::Infinite);
}

TEST(MilnorNumber, DuValIndex) {
  for (int n = 1; n <= 6; ++n) {
    auto mu = milnor_number(P("x^2+y^2+z^" + std::to_string(n + 1)));
    ASSERT_TRUE(mu.finite()) << n;
    EXPECT_EQ(mu.value, n);
    EXPECT_EQ(classify(P("x^2+y^2+z^" + std::to_string(n + 1))).verdict.name(), "A_" + std::to_string(n));
  }
  EXPECT_EQ(milnor_number(P("x^2+y^3+z^4")).value, 6);
  EXPECT_EQ(milnor_number(P("x^2+y^3+y*z^3")).value, 7);
  EXPECT_EQ(milnor_number(P("x^2+y^3+z^5")).value, 8);
}

TEST(MilnorNumber, CuspClosedForm) {
  for (int p = 3; p <= 5; ++p)
    for (int q = p; q <= 5; ++q)
      for (int r = q; r <= 6; ++r) {
        std::string g = "x^" + std::to_string(p) + "+y^" + std::to_string(q) + "+z^" + std::to_string(r) + "+x*y*z";
        auto mu = milnor_number(P(g));
        ASSERT_TRUE(mu.finite()) << g;
        EXPECT_EQ(mu.value, p + q + r - 1) << g;
      }
}

TEST(MilnorProperties, StabilizationIsMonotone) {
  std::vector<std::string> germs{"x^2+y^2+z^6", "x^2+y^3+z^5", "x^3+y^4+z^5+x*y*z", "x^2+y^4+z^4+x*y*z",
                                 "x^2+z*(y^2+z^4)"};
  for (const auto& g : germs) {
    auto mu = milnor_number(P(g), 20);
    ASSERT_TRUE(mu.finite()) << g;
    ASSERT_GE(mu.sequence.size(), 2u);
    // the truncated dimensions never decrease, and once two consecutive agree they stay put
    bool settled = false;
    for (std::size_t i = 1; i < mu.sequence.size(); ++i) {
      EXPECT_GE(mu.sequence[i].second, mu.sequence[i - 1].second) << g;
      if (settled) EXPECT_EQ(mu.sequence[i].second, mu.sequence[i - 1].second) << g;
      if (mu.sequence[i].second == mu.sequence[i - 1].second) settled = true;
    }
    EXPECT_EQ(milnor_number(P(g), 16).value, mu.value) << g;
  }
}

TEST(ClassifyProperties, ScaleInvariance) {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> num(1, 5), sign(0, 1);
  for (const auto& row : kNormalForms) {
    Poly f = P(row.equation);
    auto base = classify(f).verdict;
    for (int i = 0; i < 5; ++i) {
      std::vector<Poly> img;
      for (std::size_t v = 0; v < 3; ++v) {
        Rat c(num(rng) * (sign(rng) ? -1 : 1), num(rng));
        img.push_back(Poly::variable(G3, v) * c);
      }
      EXPECT_EQ(classify(f.substitute(img)).verdict, base) << row.equation;
    }
  }
}

TEST(NewtonType, Shapes) {
  auto n = newton_type(P("x^3+y^3+z^4+x*y*z"));
  EXPECT_EQ(n.kind, NewtonKind::AxisTripleWithXyz);
  EXPECT_EQ(n.axis[0], 3);
  EXPECT_EQ(n.axis[1], 3);
  EXPECT_EQ(n.axis[2], 4);
  auto d = newton_type(P("x^2+y^2*z"));
  ASSERT_TRUE(d.row_match);
  EXPECT_EQ(d.row_match->symbol, Symbol::Dinf);
  auto t = newton_type(P("x*y*z+x^5"));
  ASSERT_TRUE(t.row_match);
  EXPECT_EQ(t.row_match->symbol, Symbol::TpInfInf);
  EXPECT_EQ(t.row_match->p, 5);
}

TEST(FundamentalCycle, Embedding) {
  EXPECT_EQ(fundamental_cycle_classification(-1), Embedding::Hypersurface);
  EXPECT_EQ(fundamental_cycle_classification(-3), Embedding::Hypersurface);
  EXPECT_EQ(fundamental_cycle_classification(-4), Embedding::CodimTwoCompleteIntersection);
  EXPECT_EQ(fundamental_cycle_classification(-7), Embedding::NotCompleteIntersection);
  EXPECT_THROW(fundamental_cycle_classification(0), Error);
}

TEST(Table1Type, ParseRoundTrip) {
  for (const char* s : {"A_0", "A_7", "D_4", "E_6", "J_{2,0}", "X_{1,0}", "T_{3,3,3}", "T_{2,3,7}", "T_{2,inf,inf}",
                        "T_{inf,inf,inf}", "T_{3,5,inf}"})
    EXPECT_EQ(Table1Type::parse(s).name(), s);
  EXPECT_THROW(Table1Type::parse("Q_{10}"), Error);
}
