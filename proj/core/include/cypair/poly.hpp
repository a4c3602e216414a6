#pragma once

#include "cypair/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cypair {

/// Exponent vector of a monomial; one entry per ring variable.
using Exponents = std::vector<std::uint32_t>;

unsigned total_degree(const Exponents& e);

/// Graded lex: higher total degree first, ties broken lexicographically with
/// the first variable most significant.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Ordered list of variable names. Cheap to copy; compared by content.
class Ring {
 public:
  Ring();
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  /// Ring with `extra` appended after the existing variables.
  Ring extended(const std::vector<std::string>& extra) const;
  Ring without(std::size_t i) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored; terms iterate in graded-lex order.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rat, GrlexGreater>;

  explicit Poly(Ring ring);
  static Poly constant(Ring ring, const Rat& c);
  static Poly variable(Ring ring, std::size_t i);
  static Poly variable(Ring ring, std::string_view name);
  static Poly monomial(Ring ring, Exponents e, const Rat& c = Rat(1));

  /// Signed sum of rational-coefficient monomials; `^` for powers,
  /// juxtaposition or `*` for products, parentheses allowed.
  static Poly parse(std::string_view text, const Ring& ring);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rat coefficient(const Exponents& e) const;
  Rat constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Minimal total degree of a term; -1 for the zero polynomial.
  int order() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  Poly operator-() const;

  Poly pow(unsigned e) const;
  Poly derivative(std::size_t var) const;
  Poly derivative(std::string_view var) const;

  /// Replaces variable i by images[i]; all images share one target ring.
  Poly substitute(std::span<const Poly> images) const;
  /// Name-keyed form; every variable of this ring must be assigned.
  Poly substitute(const std::map<std::string, Poly>& assignment,
                  const Ring& target) const;
  /// f(x + point): the constant term of the result equals f(point).
  Poly translate_to_origin(std::span<const Rat> point) const;
  /// Terms of total degree <= k.
  Poly jet(unsigned k) const;
  Poly homogeneous_part(unsigned k) const;
  Rat evaluate(std::span<const Rat> point) const;
  /// Same polynomial viewed in `target`, matching variables by name.
  Poly embed(const Ring& target) const;
  /// Divides every exponent of `var` by `power` of the variable; requires
  /// every term to carry at least that power.
  Poly divide_by_variable_power(std::size_t var, unsigned power) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  void add_term(const Exponents& e, const Rat& c);

 private:
  void check_ring(const Poly& o) const;

  Ring ring_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace cypair
