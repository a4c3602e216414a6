#include "cypair/surfcalc.hpp"

#include "cypair/error.hpp"

#include <algorithm>
#include <array>

namespace cypair::surfcalc {

SurfaceLattice SurfaceLattice::p2() { return SurfaceLattice(-1); }

SurfaceLattice SurfaceLattice::hirzebruch(int n) {
  if (n < 0) throw DomainError("Hirzebruch index must be non-negative");
  return SurfaceLattice(n);
}

SurfaceLattice SurfaceLattice::parse(const std::string& name) {
  if (name == "P2") return p2();
  if (name.size() > 1 && name[0] == 'F') {
    try {
      std::size_t used = 0;
      int n = std::stoi(name.substr(1), &used);
      if (used == name.size() - 1) return hirzebruch(n);
    } catch (const std::logic_error&) {
    }
  }
  throw ParseError("unknown surface lattice '" + name + "'");
}

std::string SurfaceLattice::name() const { return is_p2() ? "P2" : "F" + std::to_string(n_); }

int SurfaceLattice::form(std::size_t i, std::size_t j) const {
  if (i >= rank() || j >= rank()) throw DomainError("basis index out of range");
  if (is_p2()) return 1;
  if (i == 0 && j == 0) return -n_;
  if (i == 1 && j == 1) return 0;
  return 1;
}

DivClass::DivClass(SurfaceLattice l, std::vector<int> c) : lattice(l), coords(std::move(c)) {
  if (coords.size() != lattice.rank()) throw DomainError("class has wrong number of coordinates");
}

std::string DivClass::to_string() const {
  if (lattice.is_p2()) return std::to_string(coords[0]) + "H";
  return std::to_string(coords[0]) + "sigma+" + std::to_string(coords[1]) + "f";
}

DivClass operator+(const DivClass& a, const DivClass& b) {
  if (!(a.lattice == b.lattice)) throw RingMismatch("classes on different surfaces");
  std::vector<int> c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return DivClass(a.lattice, std::move(c));
}

int intersect(const DivClass& a, const DivClass& b) {
  if (!(a.lattice == b.lattice)) throw RingMismatch("classes on different surfaces");
  int s = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    for (std::size_t j = 0; j < b.coords.size(); ++j)
      s += a.coords[i] * a.lattice.form(i, j) * b.coords[j];
  return s;
}

DivClass anticanonical(const SurfaceLattice& l) {
  if (l.is_p2()) return DivClass(l, {3});
  return DivClass(l, {2, l.n() + 2});
}

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  std::vector<int> r(b.rbegin(), b.rend());
  for (const std::vector<int>* cand : std::array<const std::vector<int>*, 2>{&b, &r}) {
    for (std::size_t shift = 0; shift < a.size(); ++shift) {
      bool ok = true;
      for (std::size_t i = 0; i < a.size() && ok; ++i)
        ok = a[i] == (*cand)[(i + shift) % a.size()];
      if (ok) return true;
    }
  }
  return false;
}

CycleVerdict verify_anticanonical_cycle(const SurfaceLattice& l,
                                        const std::vector<DivClass>& components,
                                        const std::optional<std::vector<int>>& expected) {
  if (components.empty()) throw DomainError("empty cycle");
  DivClass sum(l, std::vector<int>(l.rank(), 0));
  CycleVerdict v{false, sum, {}, std::nullopt};
  for (const auto& c : components) {
    v.sum = v.sum + c;
    v.self_intersections.push_back(intersect(c, c));
  }
  v.sums_to_anticanonical = v.sum == anticanonical(l);
  if (expected) v.matches_expected = same_cycle(v.self_intersections, *expected);
  return v;
}

std::vector<int> blowup_point_on_cycle(const std::vector<int>& self, std::size_t a, std::size_t b) {
  std::size_t n = self.size();
  if (a >= n || b >= n || a == b) throw DomainError("bad cycle positions");
  if ((a + 1) % n != b && (b + 1) % n != a) throw DomainError("cycle components do not meet");
  std::vector<int> out;
  bool inserted = false;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(self[i] - ((i == a || i == b) ? 1 : 0));
    std::size_t next = (i + 1) % n;
    if (!inserted && ((i == a && next == b) || (i == b && next == a))) {
      out.push_back(-1);
      inserted = true;
    }
  }
  return out;
}

}  // namespace cypair::surfcalc
