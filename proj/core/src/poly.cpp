#include "cypair/poly.hpp"

#include "cypair/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cypair {

unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Ring::Ring() : names_(std::make_shared<const std::vector<std::string>>()) {}

Ring::Ring(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (name(i) == name(j)) throw DomainError("duplicate variable " + name(i));
}

std::optional<std::size_t> Ring::index_of(std::string_view n) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (name(i) == n) return i;
  return std::nullopt;
}

std::size_t Ring::require(std::string_view n) const {
  auto i = index_of(n);
  if (!i) throw DomainError("unknown variable '" + std::string(n) + "'");
  return *i;
}

Ring Ring::extended(const std::vector<std::string>& extra) const {
  auto v = names();
  v.insert(v.end(), extra.begin(), extra.end());
  return Ring(std::move(v));
}

Ring Ring::without(std::size_t i) const {
  auto v = names();
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
  return Ring(std::move(v));
}

Poly::Poly(Ring ring) : ring_(std::move(ring)) {}

Poly Poly::constant(Ring ring, const Rat& c) {
  Poly p(std::move(ring));
  p.add_term(Exponents(p.ring_.size(), 0), c);
  return p;
}

Poly Poly::variable(Ring ring, std::size_t i) {
  Exponents e(ring.size(), 0);
  if (i >= e.size()) throw DomainError("variable index out of range");
  e[i] = 1;
  return monomial(std::move(ring), std::move(e));
}

Poly Poly::variable(Ring ring, std::string_view name) {
  std::size_t i = ring.require(name);
  return variable(std::move(ring), i);
}

Poly Poly::monomial(Ring ring, Exponents e, const Rat& c) {
  if (e.size() != ring.size()) throw DomainError("monomial length mismatch");
  Poly p(std::move(ring));
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_ring(const Poly& o) const {
  if (!(ring_ == o.ring_)) throw RingMismatch("polynomials over different rings");
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && cypair::total_degree(terms_.begin()->first) == 0);
}

Rat Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const {
  return coefficient(Exponents(ring_.size(), 0));
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(cypair::total_degree(terms_.begin()->first));
}

int Poly::order() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(cypair::total_degree(terms_.rbegin()->first));
}

int Poly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

bool Poly::is_homogeneous() const {
  return terms_.empty() || total_degree() == order();
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  Poly r(a.ring_);
  Exponents e(a.ring_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, Rat(1));
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= ring_.size()) throw DomainError("variable index out of range");
  Poly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.add_term(d, c * Rat(static_cast<long>(e[var])));
  }
  return r;
}

Poly Poly::derivative(std::string_view var) const {
  return derivative(ring_.require(var));
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != ring_.size())
    throw DomainError("substitution must assign every variable");
  Ring target = images.empty() ? Ring() : images.front().ring();
  for (const auto& img : images)
    if (!(img.ring() == target)) throw RingMismatch("substitution images over different rings");

  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<Poly>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned k) -> const Poly& {
    auto& tbl = powers[i];
    if (tbl.empty()) tbl.push_back(constant(target, Rat(1)));
    while (tbl.size() <= k) tbl.push_back(tbl.back() * images[i]);
    return tbl[k];
  };

  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * power_of(i, e[i]);
    r += t;
  }
  return r;
}

Poly Poly::substitute(const std::map<std::string, Poly>& assignment,
                      const Ring& target) const {
  std::vector<Poly> images;
  images.reserve(ring_.size());
  for (const auto& n : ring_.names()) {
    auto it = assignment.find(n);
    if (it == assignment.end())
      throw DomainError("substitution leaves variable '" + n + "' unassigned");
    if (!(it->second.ring() == target))
      throw RingMismatch("substitution image for '" + n + "' not in target ring");
    images.push_back(it->second);
  }
  if (images.empty()) return is_zero() ? Poly(target) : constant(target, constant_term());
  return substitute(images);
}

Poly Poly::translate_to_origin(std::span<const Rat> point) const {
  if (point.size() != ring_.size())
    throw DomainError("point dimension does not match ring");
  std::vector<Poly> images;
  images.reserve(point.size());
  for (std::size_t i = 0; i < point.size(); ++i)
    images.push_back(variable(ring_, i) + constant(ring_, point[i]));
  if (images.empty()) return *this;
  return substitute(images);
}

Poly Poly::jet(unsigned k) const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_)
    if (cypair::total_degree(e) <= k) r.terms_.emplace(e, c);
  return r;
}

Poly Poly::homogeneous_part(unsigned k) const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_)
    if (cypair::total_degree(e) == k) r.terms_.emplace(e, c);
  return r;
}

Rat Poly::evaluate(std::span<const Rat> point) const {
  if (point.size() != ring_.size())
    throw DomainError("point dimension does not match ring");
  Rat sum(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size() && !t.is_zero(); ++i)
      if (e[i]) t *= point[i].pow(e[i]);
    sum += t;
  }
  return sum;
}

Poly Poly::embed(const Ring& target) const {
  std::vector<std::size_t> map(ring_.size());
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    auto j = target.index_of(ring_.name(i));
    if (!j) throw RingMismatch("variable '" + ring_.name(i) + "' missing in target ring");
    map[i] = *j;
  }
  Poly r(target);
  Exponents t(target.size());
  for (const auto& [e, c] : terms_) {
    std::fill(t.begin(), t.end(), 0u);
    for (std::size_t i = 0; i < e.size(); ++i) t[map[i]] += e[i];
    r.add_term(t, c);
  }
  return r;
}

Poly Poly::divide_by_variable_power(std::size_t var, unsigned power) const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < power) throw DomainError("term not divisible by variable power");
    Exponents d = e;
    d[var] -= power;
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_const = cypair::total_degree(e) == 0;
    Rat mag = c.abs();
    if (c.sign() < 0) os << '-';
    else if (!first) os << '+';
    first = false;
    if (is_const) {
      os << mag;
      continue;
    }
    bool need_star = false;
    if (!mag.is_one()) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (need_star) os << '*';
      os << ring_.name(i);
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace cypair
