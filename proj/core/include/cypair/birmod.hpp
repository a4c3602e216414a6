#pragma once

#include "cypair/poly.hpp"
#include "cypair/singlocus.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cypair::birmod {

/// Rank-2 toric variety TV(I, A): Cox variables, a 2-row weight matrix and an
/// irrelevant ideal that is the intersection of two monomial primes.
struct ToricAmbient {
  std::vector<std::string> variables;
  std::array<std::vector<int>, 2> weights;
  std::array<std::vector<std::string>, 2> irrelevant;

  Ring ring() const { return Ring(variables); }
  std::string to_string() const;
  friend bool operator==(const ToricAmbient&, const ToricAmbient&) = default;
};

/// Curve: blowup of a smooth curve inside an earlier model; no toric ambient
/// is built, only the discrepancy is computed.
enum class StepKind { Point, LinearSubspace, WeightedPoint, Curve, NamedExtraction };
std::string step_kind_name(StepKind k);

struct BlowupStep {
  StepKind kind = StepKind::Point;
  std::string label;
  /// Ambient coordinates the step acts on (P^n variables).
  std::vector<std::string> ambient_variables;
  /// Point and weighted cases.
  std::optional<singlocus::ProjPoint> point;
  /// Linear-subspace case: the variables cutting out the center.
  std::vector<std::string> center_variables;
  /// Weighted case: one weight per ambient variable, 0 on the chart variable.
  std::vector<int> weights;
  std::string exceptional_name;
  std::optional<ToricAmbient> ambient_after;

  /// Named extractions only.
  std::string recipe;
  std::vector<std::string> ambient_tags;
  std::string citation;
};

/// Blowup of P^n at a coordinate point: variables u, x_k, s_i (i != k).
ToricAmbient blowup_point(const Ring& ambient, const singlocus::ProjPoint& p);
/// Blowup of P^n along {center_variables = 0}; the x names are kept.
ToricAmbient blowup_subspace(const Ring& ambient, const std::vector<std::string>& center_variables);
/// Weighted blowup at a coordinate point; weights[k] must be 0 at the point's
/// chart and >= 1 elsewhere.
ToricAmbient blowup_weighted_point(const Ring& ambient, const singlocus::ProjPoint& p,
                                   const std::vector<int>& weights);

BlowupStep make_point_step(const Ring& ambient, const singlocus::ProjPoint& p, std::string label,
                           std::string exceptional);
BlowupStep make_subspace_step(const Ring& ambient, std::vector<std::string> center,
                              std::string label, std::string exceptional);
BlowupStep make_weighted_step(const Ring& ambient, const singlocus::ProjPoint& p,
                              std::vector<int> weights, std::string label, std::string exceptional);

struct Transform {
  int u_power = 0;
  Poly proper;
  /// proper with u = 0: the equation of E ∩ {proper = 0} inside E.
  Poly exceptional_restriction;
};

/// Pulls f (in the step's ambient variables) back along the blowup relation
/// and strips the maximal power of u.
Transform total_and_proper_transform(const Poly& f, const BlowupStep& step);

/// Images of the ambient variables in the Cox ring after the step; used to
/// pull back auxiliary forms such as the general coefficients of an example.
std::map<std::string, Poly> blowup_relation(const BlowupStep& step);

enum class CenterKind { SmoothPoint, SmoothCurve, WeightedPoint };

/// a_E(K + D) for the exceptional divisor of a blowup of a smooth point of
/// the ambient variety: the sum of the weights normal to the center minus the
/// (weighted) multiplicity of the boundary along it. Point and curve centers
/// use unit weights on ambient_dim resp. ambient_dim - 1 normal directions.
int log_discrepancy(CenterKind kind, int boundary_mult, std::span<const int> weights = {},
                    int ambient_dim = 3);

/// P(O(a) + O(b)) over P^1 is the Hirzebruch surface F_{|a-b|}.
int normal_bundle_ruled_surface(int deg_a, int deg_b);

/// Sets the listed variables to constants, keeping the ring.
Poly specialize(const Poly& f, const std::map<std::string, Rat>& values);

/// Irreducible components of a form on an exceptional divisor, from its
/// monomial content plus one cofactor whose irreducibility is certified for
/// linear forms and quadrics of rank >= 3. Variables in unit_variables are
/// units on the relevant chart and contribute no component.
struct ComponentSplit {
  std::vector<std::string> components;  ///< printed factors
  std::vector<std::string> units;       ///< dropped unit factors
  bool complete = true;                 ///< false if a cofactor could not be certified
};
ComponentSplit exceptional_components(const Poly& restriction,
                                      const std::vector<std::string>& unit_variables);

struct LedgerEntry {
  std::string label;
  StepKind kind = StepKind::Point;
  std::string exceptional;
  std::optional<ToricAmbient> ambient;
  /// (divisor, u_power, proper transform) for every computed transform.
  struct TransformRecord {
    std::string divisor;
    int u_power = 0;
    std::string proper;
  };
  std::vector<TransformRecord> transforms;
  std::optional<int> boundary_multiplicity;
  std::optional<int> log_discrepancy;
  bool assumed = false;
  std::string citation;
  std::vector<std::string> ambient_tags;
  std::vector<std::string> notes;

  bool joins_boundary() const { return log_discrepancy && *log_discrepancy == 0; }
  /// Log discrepancy 0 (E enters reduced) or 1 (E enters with coefficient 0).
  bool volume_preserving() const {
    return log_discrepancy && (*log_discrepancy == 0 || *log_discrepancy == 1);
  }
};

LedgerEntry apply_named_extraction(const BlowupStep& step);

struct ModificationLedger {
  std::vector<LedgerEntry> entries;
  std::vector<std::string> boundary;

  void add(LedgerEntry e);
  /// Every computed step with E in the boundary has a_E(K + D) = 0.
  bool crepancy_holds() const;
  std::vector<std::string> assumed_steps() const;
};

enum class AmbientTag { Smooth, OrdinaryDoublePoint, CyclicQuotient, Other };
AmbientTag parse_ambient_tag(const std::string& s);

struct GoodDltCheck {
  std::vector<std::pair<std::string, std::optional<bool>>> boundary_components_smooth;
  std::vector<AmbientTag> ambient_singularities;

  bool good() const;
};

}  // namespace cypair::birmod
