#pragma once

#include "cypair/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cypair::singclass {

/// Rows of the table of 2-dimensional slc hypersurface singularities.
enum class Symbol {
  A0, An, Dn, E6, E7, E8,
  X10, J20, T333, Tpqr,
  Ainf, Dinf, T2InfInf, T2qInf, TInfInfInf, TpInfInf, TpqInf,
  Unclassified,
  DegenerateModulus,
};

enum class Category { Terminal, Canonical, LogCanonical, SemiLogCanonical, None };

/// A Table-1 verdict with its indices. Infinite indices are simply absent
/// from the symbol (T_{p,inf,inf} stores only p).
struct Table1Type {
  Symbol symbol = Symbol::Unclassified;
  int n = 0;              ///< A_n, D_n
  int p = 0, q = 0, r = 0;
  std::string alias;      ///< e.g. "double pinch point"

  static Table1Type make(Symbol s) {
    Table1Type t;
    t.symbol = s;
    return t;
  }
  static Table1Type a(int n) {
    Table1Type t = make(Symbol::An);
    t.n = n;
    return t;
  }
  static Table1Type d(int n) {
    Table1Type t = make(Symbol::Dn);
    t.n = n;
    return t;
  }
  static Table1Type cusp(int p, int q, int r);

  std::string name() const;
  Category category() const;
  /// Parses the names produced by name(), e.g. "T_{4,4,4}", "A_3", "J_{2,0}".
  static Table1Type parse(const std::string& name);

  friend bool operator==(const Table1Type& a, const Table1Type& b) {
    return a.symbol == b.symbol && a.n == b.n && a.p == b.p && a.q == b.q && a.r == b.r;
  }
};

std::string category_name(Category c);

struct MilnorNumber {
  enum class Kind { Finite, Infinite, Inconclusive };
  Kind kind = Kind::Inconclusive;
  int value = 0;
  /// dim O/(J + m^k) for the truncation orders k that were computed.
  std::vector<std::pair<int, int>> sequence;
  std::string certificate;

  bool finite() const { return kind == Kind::Finite; }
  std::string to_string() const;
};

/// Dimension of the local Jacobian algebra via linear algebra on jets at
/// orders 4, 6, ..., max_order. Non-isolated germs are certified "infinite"
/// by exhibiting a line through the origin inside the critical locus.
MilnorNumber milnor_number(const Poly& germ, int max_order = 16);

/// Number of germ variables minus the rank of the quadratic part.
int hessian_corank(const Poly& germ);

enum class NewtonKind { AxisTripleWithXyz, QuadraticPlus, DegenerateCusp, Other };

struct NewtonData {
  NewtonKind kind = NewtonKind::Other;
  /// Smallest pure power of each variable present in the support.
  std::array<std::optional<int>, 3> axis{};
  Rat xyz_coeff;
  /// Exact support match against a displayed normal form, up to permuting
  /// variables and rescaling coefficients.
  std::optional<Table1Type> row_match;

  std::string to_string() const;
};

NewtonData newton_type(const Poly& germ);

/// lambda^N for the simple-elliptic normal forms with arbitrary nonzero
/// coefficients (N = 4, 6, 3), when the support has exactly that shape.
struct ModulusCheck {
  Symbol family;
  int power = 0;
  Rat value;
  Rat forbidden;
  bool degenerate() const { return value == forbidden; }
};
std::optional<ModulusCheck> modulus_check(const Poly& germ);

struct GermReport {
  explicit GermReport(Poly g) : germ(std::move(g)) {}
  Poly germ;
  int multiplicity = 0;
  int corank = 0;
  MilnorNumber milnor;
  NewtonData newton;
  std::optional<ModulusCheck> modulus;
  /// Discriminant of the weighted principal cubic on the J_{2,0} branch;
  /// zero exactly on the excluded modulus lambda^6 = 432.
  std::optional<Rat> principal_discriminant;
  Table1Type verdict;
  std::vector<std::string> notes;
};

/// Decision tree over the normal-form table. Never throws for a germ vanishing at the
/// origin; unrecognized shapes get Symbol::Unclassified.
GermReport classify(const Poly& germ, int max_order = 16);

enum class Embedding { Hypersurface, CodimTwoCompleteIntersection, NotCompleteIntersection };

struct FundamentalCycleData {
  int self_intersection = -1;
  bool irreducible = true;
};

Embedding fundamental_cycle_classification(int z_sq);
std::string embedding_name(Embedding e);

}  // namespace cypair::singclass
