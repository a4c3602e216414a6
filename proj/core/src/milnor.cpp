#include "cypair/error.hpp"
#include "cypair/singclass.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace cypair::singclass {
namespace {

using SparseRow = std::map<std::size_t, Rat>;

/// Monomials of total degree < k, indexed by increasing degree.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t nvars, int k) {
    Exponents e(nvars, 0);
    for (int d = 0; d < k; ++d) enumerate(e, 0, d);
  }
  std::size_t size() const { return list_.size(); }
  const std::vector<Exponents>& list() const { return list_; }
  std::size_t at(const Exponents& e) const { return index_.at(e); }

 private:
  void enumerate(Exponents& e, std::size_t var, int remaining) {
    if (var + 1 == e.size()) {
      e[var] = static_cast<std::uint32_t>(remaining);
      index_.emplace(e, list_.size());
      list_.push_back(e);
      e[var] = 0;
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      e[var] = static_cast<std::uint32_t>(a);
      enumerate(e, var + 1, remaining - a);
    }
    e[var] = 0;
  }

  std::map<Exponents, std::size_t> index_;
  std::vector<Exponents> list_;
};

/// Incremental sparse row echelon form over Q; rank = number of pivots.
class Echelon {
 public:
  void insert(SparseRow row) {
    while (!row.empty()) {
      auto [col, lead] = *row.begin();
      auto it = pivots_.find(col);
      if (it == pivots_.end()) {
        Rat inv = lead.inverse();
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(col, std::move(row));
        return;
      }
      for (const auto& [c, v] : it->second) {
        auto [slot, inserted] = row.try_emplace(c, Rat(0));
        slot->second -= lead * v;
        if (slot->second.is_zero()) row.erase(slot);
      }
    }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

/// dim O / (J + m^k) for O the local ring at the origin.
int jet_quotient_dim(const std::vector<Poly>& partials, std::size_t nvars, int k) {
  MonomialIndex basis(nvars, k);
  Echelon ech;
  for (const auto& p : partials) {
    if (p.is_zero()) continue;
    int ord = p.order();
    if (ord >= k) continue;
    for (const auto& m : basis.list()) {
      int dm = static_cast<int>(total_degree(m));
      if (dm + ord >= k) continue;
      SparseRow row;
      Exponents e(nvars);
      for (const auto& [pe, c] : p.terms()) {
        if (dm + static_cast<int>(total_degree(pe)) >= k) continue;
        for (std::size_t i = 0; i < nvars; ++i) e[i] = pe[i] + m[i];
        row[basis.at(e)] += c;
      }
      std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
      ech.insert(std::move(row));
    }
  }
  return static_cast<int>(basis.size() - ech.rank());
}

/// A line {t*v} with v in {-1,0,1}^n along which f and all partials vanish.
std::optional<std::vector<int>> critical_line(const Poly& f) {
  std::size_t n = f.ring().size();
  std::vector<Poly> fs{f};
  for (std::size_t i = 0; i < n; ++i) fs.push_back(f.derivative(i));
  Ring tr({"t"});
  Poly t = Poly::variable(tr, 0);

  std::vector<int> v(n, -1);
  std::optional<std::vector<int>> found;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (found) return;
    if (i == n) {
      auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
      if (first == v.end() || *first != 1) return;
      std::vector<Poly> images;
      for (int c : v) images.push_back(t * Rat(c));
      for (const auto& g : fs)
        if (!g.substitute(images).is_zero()) return;
      found = v;
      return;
    }
    for (int c : {0, 1, -1}) {
      v[i] = c;
      walk(i + 1);
    }
  };
  walk(0);
  return found;
}

}  // namespace

std::string MilnorNumber::to_string() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::Infinite: return "infinite";
    case Kind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

MilnorNumber milnor_number(const Poly& germ, int max_order) {
  if (!germ.constant_term().is_zero()) throw DomainError("germ does not vanish at the origin");
  MilnorNumber mu;
  std::size_t n = germ.ring().size();
  if (germ.is_zero()) {
    mu.kind = MilnorNumber::Kind::Infinite;
    mu.certificate = "zero germ";
    return mu;
  }
  if (n == 0) return mu;

  if (auto line = critical_line(germ)) {
    std::ostringstream os;
    os << "critical line through direction (";
    for (std::size_t i = 0; i < line->size(); ++i) os << (i ? "," : "") << (*line)[i];
    os << ")";
    mu.kind = MilnorNumber::Kind::Infinite;
    mu.certificate = os.str();
    return mu;
  }

  std::vector<Poly> partials;
  for (std::size_t i = 0; i < n; ++i) partials.push_back(germ.derivative(i));
  for (int k = 4; k <= max_order; k += 2) {
    int d = jet_quotient_dim(partials, n, k);
    if (!mu.sequence.empty() && mu.sequence.back().second == d) {
      mu.sequence.emplace_back(k, d);
      mu.kind = MilnorNumber::Kind::Finite;
      mu.value = d;
      mu.certificate = "jet quotient stable at orders " + std::to_string(k - 2) + "," +
                       std::to_string(k);
      return mu;
    }
    mu.sequence.emplace_back(k, d);
  }
  mu.certificate = "no stabilization up to order " + std::to_string(max_order);
  return mu;
}

}  // namespace cypair::singclass
