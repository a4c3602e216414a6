#include "cypair/upoly.hpp"

#include "cypair/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cypair {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monomial(unsigned degree, const Rat& c) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::from_poly(const Poly& p, std::size_t var) {
  std::vector<Rat> v(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1, Rat(0));
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0)
        throw DomainError("polynomial is not univariate in " + p.ring().name(var));
    v[e[var]] += c;
  }
  return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rat> r = c_;
  int dd = d.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rat> q(static_cast<std::size_t>(degree() - dd + 1), Rat(0));
  Rat inv = d.lead().inverse();
  for (int i = degree(); i >= dd; --i) {
    Rat f = r[static_cast<std::size_t>(i)] * inv;
    if (f.is_zero()) continue;
    q[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      r[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Rat inv = lead().inverse();
  std::vector<Rat> v = c_;
  for (auto& x : v) x *= inv;
  return UPoly(std::move(v));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UPoly(std::move(v));
}

Rat UPoly::evaluate(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0({Rat(1)}), s1;
  UPoly t0, t1({Rat(1)});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = r0.lead().inverse();
  UPoly c({inv});
  return {r0 * c, s0 * c, t0 * c};
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rat> UPoly::rational_roots() const {
  if (is_zero()) throw DomainError("rational roots of the zero polynomial");
  std::set<Rat> roots;
  // Integer-coefficient primitive copy.
  mpz_class l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : c_) z.push_back(c.num() * (l / c.den()));
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.insert(Rat(0));
  z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(low));
  if (z.size() > 1) {
    UPoly reduced;
    {
      std::vector<Rat> v;
      for (auto& x : z) v.emplace_back(x);
      reduced = UPoly(std::move(v));
    }
    auto ps = positive_divisors(z.front());
    auto qs = positive_divisors(z.back());
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (int s : {1, -1}) {
          Rat cand(mpz_class(p * s), q);
          if (reduced.evaluate(cand).is_zero()) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

std::vector<std::pair<UPoly, int>> UPoly::squarefree_decomposition() const {
  std::vector<std::pair<UPoly, int>> out;
  if (degree() <= 0) return out;
  UPoly f = monic();
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = f.divmod(a).first;
  UPoly c = fp.divmod(a).first;
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

UPoly UPoly::squarefree_part() const {
  if (degree() <= 0) return monic();
  UPoly f = monic();
  return f.divmod(gcd(f, f.derivative())).first.monic();
}

RootSplit split_rational_roots(const UPoly& squarefree) {
  RootSplit out;
  out.residual = squarefree.monic();
  if (squarefree.degree() <= 0) return out;
  out.roots = squarefree.rational_roots();
  for (const auto& r : out.roots)
    out.residual = out.residual.divmod(UPoly({-r, Rat(1)})).first;
  return out;
}

Poly UPoly::to_poly(const Ring& ring, std::size_t var) const {
  Poly p(ring);
  Exponents e(ring.size(), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    e[var] = static_cast<std::uint32_t>(i);
    p.add_term(e, c_[i]);
  }
  return p;
}

std::string UPoly::to_string(const std::string& var) const {
  return to_poly(Ring({var}), 0).to_string();
}

QuotientField::QuotientField(UPoly modulus) : m_(modulus.monic()) {
  if (m_.degree() < 1) throw DomainError("quotient modulus must have positive degree");
}

QuotientField::Element QuotientField::inv(const Element& a) const {
  auto [g, s, t] = ext_gcd(a % m_, m_);
  if (g.degree() != 0) throw DomainError("element not invertible modulo " + m_.to_string());
  return s % m_;
}

}  // namespace cypair
