#include "cypair/dualcx.hpp"
#include "cypair/error.hpp"

#include <gtest/gtest.h>

#include <set>
#include <tuple>

using namespace cypair;
using namespace cypair::dualcx;

namespace {

CellComplex tetrahedron() {
  return build({"D", "E", "E1", "E2"},
               {{{"D", "E"}}, {{"D", "E1"}}, {{"D", "E2"}}, {{"E", "E1"}}, {{"E", "E2"}}, {{"E1", "E2"}},
                {{"D", "E", "E1"}}, {{"D", "E", "E2"}}, {{"D", "E1", "E2"}}, {{"E", "E1", "E2"}}});
}

CellComplex equator_sphere() {
  return build({"D", "E", "E1"}, {{{"D", "E"}}, {{"D", "E1"}}, {{"E", "E1"}}, {{"D", "E", "E1"}, 2}});
}

CellComplex path() { return build({"D", "E", "E'"}, {{{"D", "E"}}, {{"D", "E'"}}}); }

std::vector<CellComplex> zoo() {
  return {tetrahedron(),
          equator_sphere(),
          path(),
          build({"A"}, {}),
          build({"A", "B"}, {{{"A", "B"}}}),
          build({"A", "B", "C"}, {{{"A", "B"}}, {{"B", "C"}}, {{"A", "C"}}}),
          build({"A", "B", "C"}, {{{"A", "B"}}, {{"B", "C"}}, {{"A", "C"}}, {{"A", "B", "C"}}}),
          build({"A", "B"}, {{{"A", "B"}, 2}}),
          build({}, {})};
}

}  // namespace

TEST(Build, TetrahedronBoundary) {
  auto c = tetrahedron();
  EXPECT_EQ(c.counts(), (std::vector<std::size_t>{4, 6, 4}));
  EXPECT_EQ(c.euler(), 2);
  EXPECT_EQ(homology_mod2(c), (std::vector<int>{1, 0, 1}));
  auto fp = fingerprint(c);
  EXPECT_EQ(fp.catalog_match, "tetrahedron-boundary");
  EXPECT_TRUE(is_maximal_intersection(c, 3));
}

TEST(Build, NonSimplicialSphere) {
  auto c = equator_sphere();
  EXPECT_EQ(c.counts(), (std::vector<std::size_t>{3, 3, 2}));
  auto fp = fingerprint(c);
  EXPECT_EQ(fp.euler, 2);
  EXPECT_EQ(fp.betti_mod2, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(fp.catalog_match, "sphere S2");
  EXPECT_TRUE(is_maximal_intersection(c, 3));
}

TEST(Build, PathIsInterval) {
  auto c = path();
  auto fp = fingerprint(c);
  EXPECT_EQ(fp.counts, (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(fp.betti_mod2, (std::vector<int>{1, 0}));
  EXPECT_EQ(fp.catalog_match, "interval");
  EXPECT_FALSE(is_maximal_intersection(c, 3));
}

TEST(Build, SmallCatalog) {
  EXPECT_EQ(fingerprint(build({"A"}, {})).catalog_match, "point");
  EXPECT_TRUE(is_maximal_intersection(build({"A"}, {}), 1));
  EXPECT_EQ(fingerprint(build({"A", "B", "C"}, {{{"A", "B"}}, {{"B", "C"}}, {{"A", "C"}}})).catalog_match, "circle");
  EXPECT_EQ(fingerprint(build({"A", "B"}, {{{"A", "B"}, 2}})).catalog_match, "circle");
  EXPECT_EQ(
      fingerprint(build({"A", "B", "C"}, {{{"A", "B"}}, {{"B", "C"}}, {{"A", "C"}}, {{"A", "B", "C"}}})).catalog_match,
      "disk B2");
  EXPECT_TRUE(homology_mod2(build({}, {})).empty());
}

TEST(Build, Errors) {
  EXPECT_THROW(build({"A", "B", "C"}, {{{"A", "B"}}, {{"A", "B", "C"}}}), Error);  // missing facets
  EXPECT_THROW(build({"A", "B"}, {{{"A", "Z"}}}), Error);
  EXPECT_THROW(build({"A", "B"}, {{{"A", "B"}, 0}}), Error);
}

TEST(Link, VertexOfTetrahedronIsCircle) {
  auto c = tetrahedron();
  for (const auto& v : {"D", "E", "E1", "E2"}) {
    auto l = link_of_vertex(c, v);
    EXPECT_EQ(l.counts(), (std::vector<std::size_t>{3, 3})) << v;
    EXPECT_EQ(homology_mod2(l), (std::vector<int>{1, 1})) << v;
  }
}

TEST(Link, PathAndIsolated) {
  auto l = link_of_vertex(path(), "D");
  EXPECT_EQ(l.counts(), std::vector<std::size_t>{2});
  EXPECT_EQ(link_of_vertex(build({"A"}, {}), "A").dimension(), -1);
  EXPECT_THROW(link_of_vertex(path(), "Q"), Error);
}

TEST(DualcxProperties, BoundarySquaredZero) {
  for (const auto& c : zoo()) EXPECT_TRUE(c.boundary_squared_zero());
}

TEST(DualcxProperties, EulerFromBetti) {
  for (const auto& c : zoo()) {
    auto b = homology_mod2(c);
    int chi = 0;
    for (std::size_t i = 0; i < b.size(); ++i) chi += (i % 2 ? -1 : 1) * b[i];
    EXPECT_EQ(chi, c.euler());
  }
}

TEST(DualcxProperties, CatalogInjectiveOnKeys) {
  // distinct catalog names never share (dimension, euler, betti, counts)
  std::map<std::string, std::tuple<int, int, std::vector<int>, std::vector<std::size_t>>> seen;
  for (const auto& c : zoo()) {
    auto fp = fingerprint(c);
    if (fp.catalog_match == "other") continue;
    auto key = std::make_tuple(fp.dimension, fp.euler, fp.betti_mod2, fp.counts);
    for (const auto& [name, k] : seen)
      if (name != fp.catalog_match) EXPECT_NE(k, key) << name << " vs " << fp.catalog_match;
    seen[fp.catalog_match] = key;
  }
}
