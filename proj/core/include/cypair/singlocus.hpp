#pragma once

#include "cypair/error.hpp"
#include "cypair/poly.hpp"
#include "cypair/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cypair::singlocus {

/// Point of P^n, normalized so the first nonzero coordinate is 1.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Rat> coords);
  static ProjPoint coordinate(std::size_t n_plus_1, std::size_t i);

  const std::vector<Rat>& coords() const { return c_; }
  std::size_t size() const { return c_.size(); }
  /// Index of the first nonzero coordinate (the affine chart used for germs).
  std::size_t chart() const;
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::vector<Rat> c_;
};

/// Hypersurface {F = 0} in P^n, F homogeneous of degree >= 1 in n+1 variables.
class Hypersurface {
 public:
  explicit Hypersurface(Poly equation);

  std::size_t ambient_dim() const { return eq_.ring().size() - 1; }
  const Poly& equation() const { return eq_; }
  int degree() const { return eq_.total_degree(); }
  bool contains(const ProjPoint& p) const;

 private:
  Poly eq_;
};

/// Projective line {base + t * direction} ∪ {direction}.
struct Line {
  std::vector<Rat> base;
  std::vector<Rat> direction;
  std::string label;

  /// The coordinate line on which every variable in `zero_vars` vanishes;
  /// exactly two variables must remain.
  static Line coordinate(const Ring& ring, const std::vector<std::string>& zero_vars,
                         std::string label = {});
  static Line through(const ProjPoint& a, const ProjPoint& b, std::string label = {});
};

struct SingularityCertificate {
  ProjPoint point;
  Poly germ;          ///< affine germ translated to the origin
  int multiplicity = 0;
  Poly tangent_cone;  ///< lowest-degree homogeneous part of the germ
  bool is_odp = false;
};

/// Galois-conjugate singular points on a line, given by an irreducible
/// (or at least root-free) factor of the restricted Jacobian gcd.
struct ConjugateCertificate {
  UPoly factor;                 ///< monic, in the line parameter t
  int degree = 0;
  bool irreducible = false;     ///< certified for degree <= 3 (no rational root)
  std::optional<bool> all_odp;  ///< Hessian rank test over Q[t]/(factor)
};

struct StratumReport {
  std::string label;
  bool entirely_singular = false;
  std::vector<ProjPoint> rational_points;
  std::vector<ConjugateCertificate> conjugates;
  int point_count = 0;
};

struct LocusVerdict {
  std::vector<SingularityCertificate> confirmed;
  std::vector<StratumReport> strata;
  int total_points = 0;  ///< distinct singular points on all strata and claims
};

class LocusMismatch : public Error {
 public:
  using Error::Error;
};

bool is_singular_at(const Hypersurface& x, const ProjPoint& p);

/// Germ of X at p in the chart of p's first nonzero coordinate, translated to
/// the origin; variables are X's variables with the chart variable removed.
Poly affine_germ(const Hypersurface& x, const ProjPoint& p);

SingularityCertificate certify(const Hypersurface& x, const ProjPoint& p);

/// Confirms each claimed point is singular and searches the supplied lines
/// exactly for further singular points. Throws DomainError for a nonsingular
/// claim and LocusMismatch for an unclaimed rational singular point.
LocusVerdict verify_singular_locus(const Hypersurface& x,
                                   const std::vector<ProjPoint>& claimed,
                                   const std::vector<Line>& strata);

StratumReport singular_points_on_line(const Hypersurface& x, const Line& line);

/// Projective ODP test at a rational point: Hessian of F has rank n.
bool is_odp_projective(const Hypersurface& x, const ProjPoint& p);

int multiplicity(const Poly& germ);
/// Rank of the symmetric matrix of the quadratic part.
std::size_t quadratic_rank(const Poly& germ);
bool is_ordinary_double_point(const Poly& germ);
int weighted_multiplicity(const Poly& germ, const std::vector<int>& weights);
/// Multiplicity of X at the generic point of a line contained in X.
int multiplicity_along_line(const Hypersurface& x, const Line& line);
/// Minimal total degree in `vars` over the terms of f: the multiplicity of f
/// along the coordinate subspace {vars = 0} at its generic point.
int multiplicity_along_coordinate_subspace(const Poly& f,
                                           const std::vector<std::string>& vars);

}  // namespace cypair::singlocus
