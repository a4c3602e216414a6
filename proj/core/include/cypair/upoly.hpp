#pragma once

#include "cypair/poly.hpp"
#include "cypair/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cypair {

/// Univariate polynomial over Q, coefficients stored low degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly monomial(unsigned degree, const Rat& c = Rat(1));
  /// Converts a Poly that only involves variable `var`.
  static UPoly from_poly(const Poly& p, std::size_t var);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const Rat& lead() const { return c_.back(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly monic() const;
  UPoly derivative() const;
  Rat evaluate(const Rat& x) const;

  /// Distinct rational roots in increasing order.
  std::vector<Rat> rational_roots() const;
  /// Yun decomposition: pairs (squarefree factor, multiplicity), the factors
  /// pairwise coprime, monic, and multiplying (with multiplicities) to the
  /// monic version of this polynomial.
  std::vector<std::pair<UPoly, int>> squarefree_decomposition() const;
  UPoly squarefree_part() const;

  Poly to_poly(const Ring& ring, std::size_t var) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
struct ExtGcd {
  UPoly g, s, t;
};
ExtGcd ext_gcd(const UPoly& a, const UPoly& b);

/// Rational roots of a squarefree polynomial split off, leaving the product
/// of its factors without rational roots.
struct RootSplit {
  std::vector<Rat> roots;
  UPoly residual;
};
RootSplit split_rational_roots(const UPoly& squarefree);

/// Arithmetic in Q[t]/(m). Only meaningful as a field when m is irreducible;
/// inversion throws when an element shares a factor with m.
class QuotientField {
 public:
  using Element = UPoly;
  explicit QuotientField(UPoly modulus);

  const UPoly& modulus() const { return m_; }
  Element reduce(const UPoly& a) const { return a % m_; }
  Element zero() const { return UPoly(); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return (a * b) % m_; }
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const { return a.is_zero(); }

 private:
  UPoly m_;
};

struct RationalField {
  using Element = Rat;
  Element zero() const { return Rat(0); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return a.inverse(); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
};

/// Rank of a dense matrix by Gaussian elimination over `field`.
template <class Field>
std::size_t matrix_rank(std::vector<std::vector<typename Field::Element>> m,
                        const Field& field) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && field.is_zero(m[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    auto inv = field.inv(m[rank][col]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (field.is_zero(m[r][col])) continue;
      auto f = field.mul(m[r][col], inv);
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] = field.sub(m[r][c], field.mul(f, m[rank][c]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace cypair
