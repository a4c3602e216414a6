#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cypair::dualcx {

struct Cell {
  std::string label;
  /// Boundary components whose intersection this cell stands for.
  std::vector<std::string> components;
  /// Facets as indices into the cells one dimension down; a multiset.
  std::vector<std::size_t> facets;
};

/// Regular cell complex of dimension <= 2 with Z/2 incidences.
class CellComplex {
 public:
  std::array<std::vector<Cell>, 3> cells;

  /// -1 for the empty complex.
  int dimension() const;
  std::vector<std::size_t> counts() const;
  int euler() const;
  /// Z/2 matrix of the boundary map from d-cells to (d-1)-cells; rows are
  /// (d-1)-cells.
  std::vector<std::vector<std::uint8_t>> boundary_matrix(int d) const;
  bool boundary_squared_zero() const;
  std::size_t vertex_index(const std::string& label) const;
  /// Number of 2-cells having each edge as a facet (Z/2 count).
  std::vector<int> edge_face_degrees() const;
};

/// One intersection stratum: `count` components of the intersection of the
/// listed boundary components. For 2-cells whose facets are ambiguous the
/// caller supplies one circuit (edge labels) per component.
struct StratumSpec {
  std::vector<std::string> components;
  int count = 1;
  std::vector<std::vector<std::string>> circuits;
};

/// Edges get labels "A^B" ("A^B#2" for the second parallel edge); faces
/// likewise "A^B^C", "A^B^C#2".
CellComplex build(const std::vector<std::string>& components, const std::vector<StratumSpec>& strata);

/// Z/2 Betti numbers in dimensions 0..dimension().
std::vector<int> homology_mod2(const CellComplex& c);

struct PLFingerprint {
  int dimension = -1;
  int euler = 0;
  std::vector<int> betti_mod2;
  std::vector<std::size_t> counts;
  std::string catalog_match = "other";
};

PLFingerprint fingerprint(const CellComplex& c);
CellComplex link_of_vertex(const CellComplex& c, const std::string& vertex);
bool is_maximal_intersection(const CellComplex& c, int ambient_dim);

}  // namespace cypair::dualcx
