#pragma once

#include "cypair/dualcx.hpp"
#include "cypair/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cypair::verifier {

struct LineSpec {
  std::string label;
  std::vector<std::string> zero;  ///< variables vanishing on the line
};

/// "not_all_zero_at": some listed form is nonzero at `point`.
/// "nonzero_at": every listed form is nonzero at `point`.
/// "squarefree_on_line": each form restricted to `line` has distinct roots
/// and full degree.
struct GenericityCheck {
  std::string name;
  std::string kind;
  std::vector<std::string> forms;
  std::vector<Rat> point;
  std::optional<LineSpec> line;
  std::string citation;
};

/// Stratified singular-locus verification on surface "X" or "D".
struct LocusCheck {
  std::string name;
  std::string surface;
  std::vector<std::vector<Rat>> claimed;
  std::vector<LineSpec> strata;
  std::optional<int> expect_points;
  std::optional<int> expect_rational;
  std::vector<int> expect_conjugate_degrees;
  std::optional<bool> expect_all_odp;
  std::string citation;
};

/// Classification of a germ: either a point of a surface, or a literal germ.
struct GermCheck {
  std::string name;
  std::string surface;
  std::vector<Rat> point;
  std::string germ;
  std::vector<std::string> germ_variables;
  std::string expect;
  std::optional<int> expect_milnor;
  bool expect_infinite_milnor = false;
  /// Compare mu with p+q+r-1 for a cusp verdict.
  bool closed_form_milnor = false;
  std::string citation;
};

struct LineMultiplicityCheck {
  std::string name;
  std::string surface;
  LineSpec line;
  int expect = 0;
  std::string citation;
};

struct IdentityCheck {
  std::string name;
  std::vector<std::string> variables;
  std::string lhs;
  std::string rhs;
  std::string citation;
};

struct TransformSpec {
  std::string divisor;
  /// "X", "D", a boundary name, or a literal polynomial in the case variables.
  std::string equation;
  std::optional<int> expect_u_power;
  /// Polynomial in the step's Cox variables; case parameters inside it are
  /// pulled back along the blowup before comparison.
  std::string expect_proper;
  std::optional<int> expect_components;
  std::vector<std::string> unit_variables;
  std::string citation;
};

/// How the boundary multiplicity along the center is computed.
///  "point":    multiplicity of the D germ at `point` (D coordinates)
///  "weighted": weighted multiplicity of the D germ with the step weights
///  "curve":    in the Cox ring of step `in_step`, multiplicity of the product
///              of `boundary` divisors along `along`, on chart `chart`, with
///              `eliminate` solved from X's transform
///  "u_powers": sum of the u-powers of the `boundary` forms under this step
///  "line":     multiplicity of the D surface along the coordinate line
///              {along = 0} (D coordinates), for a curve center
struct DiscrepancySpec {
  std::string method;
  std::vector<Rat> point;
  std::string eliminate;
  std::string in_step;
  std::map<std::string, Rat> chart;
  std::vector<std::string> boundary;
  std::vector<std::string> along;
  std::optional<int> expect;
  std::string citation;
};

struct ChartOdpSpec {
  std::string divisor;
  std::map<std::string, Rat> chart;
  std::map<std::string, Rat> point;
  std::string citation;
};

struct StepSpec {
  std::string label;
  std::string kind;  ///< point | linear-subspace | weighted-point | curve | named
  std::vector<Rat> center;
  std::vector<std::string> center_variables;
  std::vector<int> weights;
  std::string exceptional;
  std::vector<std::string> expect_variables;
  std::vector<std::vector<int>> expect_matrix;
  std::vector<std::vector<std::string>> expect_irrelevant;
  std::vector<TransformSpec> transforms;
  std::optional<DiscrepancySpec> discrepancy;
  std::optional<ChartOdpSpec> chart_odp;
  std::optional<std::pair<int, int>> normal_bundle;
  std::optional<int> expect_hirzebruch;
  std::string recipe;
  std::vector<std::string> ambient_tags;
  std::string citation;
};

struct IntersectionSpec {
  std::size_t a = 0, b = 0;
  int expect = 0;
};

struct SurfaceCheck {
  std::string name;
  std::string lattice;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> components;
  std::vector<int> expect_self;
  std::vector<IntersectionSpec> intersections;
  /// Also compare after blowing up the point where these two meet.
  std::optional<std::pair<std::size_t, std::size_t>> blowup_candidate;
  std::string citation;
};

struct DualComplexSpec {
  std::vector<std::string> components;
  std::vector<dualcx::StratumSpec> strata;
  std::string expect_catalog;
  std::vector<std::size_t> expect_counts;
  std::optional<int> expect_euler;
  std::vector<int> expect_betti;
  std::optional<bool> expect_maximal;
  int ambient_dim = 3;
  std::string citation;
};

struct RigiditySpec {
  std::string kind;  ///< quartic | cubic
  std::vector<std::string> from_locus;
  std::string completeness_citation;
  std::string expect_conclusion;
  std::string citation;
};

struct CaseSpec {
  std::string id;
  std::string title;
  std::string citation;
  std::vector<std::string> variables;
  std::map<std::string, std::string> parameters;
  std::string x_equation;
  std::vector<std::string> boundary;
  /// Names of the boundary components ("D" by default for one component).
  std::vector<std::string> boundary_names;
  std::vector<std::string> notes;
  std::vector<std::string> annotations;
  std::vector<GenericityCheck> genericity;
  std::vector<IdentityCheck> identities;
  std::vector<LocusCheck> loci;
  std::vector<GermCheck> germs;
  std::vector<LineMultiplicityCheck> line_multiplicities;
  std::vector<StepSpec> steps;
  std::vector<SurfaceCheck> surfaces;
  std::optional<DualComplexSpec> dual_complex;
  std::optional<RigiditySpec> rigidity;

  Ring ring() const { return Ring(variables); }
  /// Parses text over the case variables, substituting the parameters.
  Poly poly(const std::string& text) const;
  Poly x() const { return poly(x_equation); }
  /// Hyperplane-section surface X ∩ {b = 0} for a single coordinate boundary b,
  /// in the remaining variables.
  Poly d() const;
  Ring d_ring() const;
  std::string boundary_variable() const;
};

class Registry {
 public:
  static Registry load_file(const std::string& path);
  static Registry load_string(const std::string& text);
  /// CYPAIR_REGISTRY, then the source-tree and installed defaults.
  static std::string default_path();

  const CaseSpec& get(const std::string& id) const;
  std::vector<std::string> ids() const;
  const std::vector<CaseSpec>& cases() const { return cases_; }

 private:
  std::vector<CaseSpec> cases_;
};

/// Strata file for the `complex` command: components, strata, ambient_dim.
struct StrataFile {
  std::vector<std::string> components;
  std::vector<dualcx::StratumSpec> strata;
  int ambient_dim = 3;
};
StrataFile parse_strata_file(const std::string& text);

}  // namespace cypair::verifier
