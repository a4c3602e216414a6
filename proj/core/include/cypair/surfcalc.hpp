#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cypair::surfcalc {

/// P^2 with basis (H), or the Hirzebruch surface F_n with basis (sigma, f).
class SurfaceLattice {
 public:
  static SurfaceLattice p2();
  static SurfaceLattice hirzebruch(int n);
  /// "P2" or "F<n>".
  static SurfaceLattice parse(const std::string& name);

  bool is_p2() const { return n_ < 0; }
  int n() const { return n_; }
  std::size_t rank() const { return is_p2() ? 1 : 2; }
  std::string name() const;
  int form(std::size_t i, std::size_t j) const;

  friend bool operator==(const SurfaceLattice&, const SurfaceLattice&) = default;

 private:
  explicit SurfaceLattice(int n) : n_(n) {}
  int n_;  // -1 for P^2
};

struct DivClass {
  SurfaceLattice lattice;
  std::vector<int> coords;

  DivClass(SurfaceLattice l, std::vector<int> c);
  std::string to_string() const;
  friend DivClass operator+(const DivClass& a, const DivClass& b);
  friend bool operator==(const DivClass&, const DivClass&) = default;
};

int intersect(const DivClass& a, const DivClass& b);
DivClass anticanonical(const SurfaceLattice& l);

/// Equality of cyclic lists up to rotation and reversal.
bool same_cycle(const std::vector<int>& a, const std::vector<int>& b);

struct CycleVerdict {
  bool sums_to_anticanonical = false;
  DivClass sum;
  std::vector<int> self_intersections;
  std::optional<bool> matches_expected;
};

CycleVerdict verify_anticanonical_cycle(const SurfaceLattice& l,
                                        const std::vector<DivClass>& components,
                                        const std::optional<std::vector<int>>& expected = {});

/// Self-intersections after blowing up one point lying on the listed cycle
/// components: each drops by one and a (-1)-curve is inserted between them.
std::vector<int> blowup_point_on_cycle(const std::vector<int>& self, std::size_t a, std::size_t b);

}  // namespace cypair::surfcalc
