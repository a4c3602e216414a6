#include "cypair/dualcx.hpp"

#include "cypair/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cypair::dualcx {

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

/// Rank over GF(2) by Gaussian elimination on packed rows.
int rank_mod2(std::vector<std::vector<std::uint8_t>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && !m[piv][c]) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && m[i][c])
        for (std::size_t j = c; j < cols; ++j) m[i][j] ^= m[r][j];
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

int CellComplex::dimension() const {
  for (int d = 2; d >= 0; --d)
    if (!cells[static_cast<std::size_t>(d)].empty()) return d;
  return -1;
}

std::vector<std::size_t> CellComplex::counts() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= dimension(); ++d) out.push_back(cells[static_cast<std::size_t>(d)].size());
  return out;
}

int CellComplex::euler() const {
  int e = 0, sign = 1;
  for (const auto& level : cells) {
    e += sign * static_cast<int>(level.size());
    sign = -sign;
  }
  return e;
}

std::vector<std::vector<std::uint8_t>> CellComplex::boundary_matrix(int d) const {
  if (d < 1 || d > 2) return {};
  const auto& hi = cells[static_cast<std::size_t>(d)];
  const auto& lo = cells[static_cast<std::size_t>(d - 1)];
  std::vector<std::vector<std::uint8_t>> m(lo.size(), std::vector<std::uint8_t>(hi.size(), 0));
  for (std::size_t j = 0; j < hi.size(); ++j)
    for (std::size_t f : hi[j].facets) m[f][j] ^= 1;
  return m;
}

bool CellComplex::boundary_squared_zero() const {
  auto d1 = boundary_matrix(1), d2 = boundary_matrix(2);
  if (d1.empty() || d2.empty() || d2[0].empty()) return true;
  for (std::size_t i = 0; i < d1.size(); ++i)
    for (std::size_t k = 0; k < d2[0].size(); ++k) {
      std::uint8_t s = 0;
      for (std::size_t j = 0; j < d2.size(); ++j) s ^= static_cast<std::uint8_t>(d1[i][j] & d2[j][k]);
      if (s) return false;
    }
  return true;
}

std::size_t CellComplex::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < cells[0].size(); ++i)
    if (cells[0][i].label == label) return i;
  throw NotFound("vertex '" + label + "' not in complex");
}

std::vector<int> CellComplex::edge_face_degrees() const {
  std::vector<int> deg(cells[1].size(), 0);
  for (const auto& f : cells[2])
    for (std::size_t e : f.facets) ++deg[e];
  return deg;
}

CellComplex build(const std::vector<std::string>& components,
                  const std::vector<StratumSpec>& strata) {
  CellComplex c;
  std::set<std::string> known(components.begin(), components.end());
  if (known.size() != components.size()) throw DomainError("duplicate boundary component");
  for (const auto& name : components) c.cells[0].push_back({name, {name}, {}});

  auto sorted_key = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::map<std::vector<std::string>, std::vector<std::size_t>> edges_of;
  std::map<std::string, std::size_t> edge_by_label;

  std::vector<const StratumSpec*> pairs, triples;
  for (const auto& s : strata) {
    if (s.count < 1) throw DomainError("stratum count must be >= 1");
    std::set<std::string> uniq(s.components.begin(), s.components.end());
    if (uniq.size() != s.components.size()) throw DomainError("repeated component in stratum");
    for (const auto& n : s.components)
      if (!known.count(n)) throw DomainError("stratum uses unknown component '" + n + "'");
    switch (s.components.size()) {
      case 1: break;  // vertices exist already
      case 2: pairs.push_back(&s); break;
      case 3: triples.push_back(&s); break;
      default: throw DomainError("strata of more than 3 components are not supported");
    }
  }

  for (const auto* s : pairs) {
    auto key = sorted_key(s->components);
    if (edges_of.count(key)) throw DomainError("stratum " + join(key, "^") + " declared twice");
    for (int i = 0; i < s->count; ++i) {
      Cell e;
      e.components = s->components;
      e.label = join(s->components, "^") + (i ? "#" + std::to_string(i + 1) : "");
      for (const auto& n : s->components) e.facets.push_back(c.vertex_index(n));
      edges_of[key].push_back(c.cells[1].size());
      edge_by_label[e.label] = c.cells[1].size();
      c.cells[1].push_back(std::move(e));
    }
  }

  for (const auto* s : triples) {
    const auto& comps = s->components;
    std::vector<std::vector<std::string>> faces_pairs = {
        {comps[0], comps[1]}, {comps[0], comps[2]}, {comps[1], comps[2]}};
    for (const auto& p : faces_pairs)
      if (!edges_of.count(sorted_key(p)))
        throw DomainError("missing facet " + join(p, "^") + " of stratum " + join(comps, "^"));
    if (!s->circuits.empty() && static_cast<int>(s->circuits.size()) != s->count)
      throw DomainError("need one circuit per component of " + join(comps, "^"));
    for (int i = 0; i < s->count; ++i) {
      Cell f;
      f.components = comps;
      f.label = join(comps, "^") + (i ? "#" + std::to_string(i + 1) : "");
      if (!s->circuits.empty()) {
        for (const auto& el : s->circuits[static_cast<std::size_t>(i)]) {
          auto it = edge_by_label.find(el);
          if (it == edge_by_label.end()) throw DomainError("circuit uses unknown edge '" + el + "'");
          const auto& ec = c.cells[1][it->second].components;
          for (const auto& n : ec)
            if (std::find(comps.begin(), comps.end(), n) == comps.end())
              throw DomainError("edge '" + el + "' is not a face of " + f.label);
          f.facets.push_back(it->second);
        }
      } else {
        for (const auto& p : faces_pairs) {
          const auto& es = edges_of[sorted_key(p)];
          if (es.size() != 1)
            throw DomainError("parallel edges on " + join(p, "^") + ": supply circuits for " +
                              join(comps, "^"));
          f.facets.push_back(es[0]);
        }
      }
      // closed Z/2 cycle
      std::vector<int> parity(c.cells[0].size(), 0);
      for (std::size_t e : f.facets)
        for (std::size_t v : c.cells[1][e].facets) parity[v] ^= 1;
      if (std::any_of(parity.begin(), parity.end(), [](int p) { return p != 0; }))
        throw DomainError("boundary circuit of " + f.label + " is not closed");
      if (f.facets.empty()) throw DomainError("2-cell without facets");
      c.cells[2].push_back(std::move(f));
    }
  }
  return c;
}

std::vector<int> homology_mod2(const CellComplex& c) {
  int dim = c.dimension();
  std::vector<int> betti;
  for (int d = 0; d <= dim; ++d) {
    int n = static_cast<int>(c.cells[static_cast<std::size_t>(d)].size());
    int rk_d = d >= 1 ? rank_mod2(c.boundary_matrix(d)) : 0;
    int rk_up = d + 1 <= 2 ? rank_mod2(c.boundary_matrix(d + 1)) : 0;
    betti.push_back(n - rk_d - rk_up);
  }
  return betti;
}

namespace {

std::vector<int> vertex_degrees(const CellComplex& c, const std::vector<std::size_t>& edges) {
  std::vector<int> deg(c.cells[0].size(), 0);
  for (std::size_t e : edges)
    for (std::size_t v : c.cells[1][e].facets) ++deg[v];
  return deg;
}

std::vector<std::size_t> all_edges(const CellComplex& c) {
  std::vector<std::size_t> e(c.cells[1].size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = i;
  return e;
}

bool closed_surface(const CellComplex& c) {
  auto deg = c.edge_face_degrees();
  return !deg.empty() && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

bool simplicial(const CellComplex& c) {
  std::set<std::vector<std::size_t>> seen;
  for (const auto& e : c.cells[1]) {
    auto f = e.facets;
    std::sort(f.begin(), f.end());
    if (f.size() != 2 || f[0] == f[1] || !seen.insert(f).second) return false;
  }
  for (const auto& t : c.cells[2])
    if (t.facets.size() != 3) return false;
  return true;
}

}  // namespace

PLFingerprint fingerprint(const CellComplex& c) {
  PLFingerprint fp;
  fp.dimension = c.dimension();
  fp.euler = c.euler();
  fp.betti_mod2 = homology_mod2(c);
  fp.counts = c.counts();
  using V = std::vector<int>;
  using C = std::vector<std::size_t>;
  if (fp.dimension == 0 && fp.counts == C{1}) {
    fp.catalog_match = "point";
  } else if (fp.dimension == 1) {
    auto deg = vertex_degrees(c, all_edges(c));
    int ends = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
    bool max2 = std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
    if (fp.betti_mod2 == V{1, 0} && max2 && ends == 2) fp.catalog_match = "interval";
    if (fp.betti_mod2 == V{1, 1} &&
        std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }))
      fp.catalog_match = "circle";
  } else if (fp.dimension == 2) {
    if (fp.betti_mod2 == V{1, 0, 1} && closed_surface(c)) {
      if (fp.counts == C{4, 6, 4} && simplicial(c)) fp.catalog_match = "tetrahedron-boundary";
      else if (fp.counts == C{3, 3, 2} || fp.counts == C{2, 2, 2}) fp.catalog_match = "sphere S2";
    } else if (fp.betti_mod2 == V{1, 0, 0}) {
      auto fdeg = c.edge_face_degrees();
      std::vector<std::size_t> rim;
      bool ok = true;
      for (std::size_t e = 0; e < fdeg.size(); ++e) {
        if (fdeg[e] == 1) rim.push_back(e);
        else if (fdeg[e] != 2) ok = false;
      }
      auto deg = vertex_degrees(c, rim);
      ok = ok && !rim.empty() &&
           std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0 || d == 2; });
      if (ok) fp.catalog_match = "disk B2";
    }
  }
  return fp;
}

CellComplex link_of_vertex(const CellComplex& c, const std::string& vertex) {
  std::size_t v = c.vertex_index(vertex);
  CellComplex link;
  std::map<std::size_t, std::size_t> edge_to_link;
  for (std::size_t e = 0; e < c.cells[1].size(); ++e) {
    const auto& cell = c.cells[1][e];
    if (std::find(cell.facets.begin(), cell.facets.end(), v) == cell.facets.end()) continue;
    edge_to_link[e] = link.cells[0].size();
    link.cells[0].push_back({cell.label, cell.components, {}});
  }
  for (const auto& face : c.cells[2]) {
    Cell le{face.label, face.components, {}};
    for (std::size_t e : face.facets) {
      auto it = edge_to_link.find(e);
      if (it != edge_to_link.end()) le.facets.push_back(it->second);
    }
    if (!le.facets.empty()) link.cells[1].push_back(std::move(le));
  }
  return link;
}

bool is_maximal_intersection(const CellComplex& c, int ambient_dim) {
  return c.dimension() == ambient_dim - 1;
}

}  // namespace cypair::dualcx
