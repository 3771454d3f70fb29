#include "flowtri/triangulation.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <queue>
#include <set>

#include "flowtri/bigint.hpp"

namespace flowtri {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Search {
  const std::vector<Bits>* nbr;
  std::vector<int> forced;
  std::size_t cap;
  std::vector<Clique> out;
};

void bron_kerbosch(Search& s, std::vector<int>& r, Bits p, Bits x) {
  if (p.none() && x.none()) {
    if (s.out.size() >= s.cap)
      fail(ErrorKind::CliqueExplosion, "more than " + std::to_string(s.cap) + " maximal cliques");
    Clique c = r;
    c.insert(c.end(), s.forced.begin(), s.forced.end());
    std::sort(c.begin(), c.end());
    s.out.push_back(std::move(c));
    return;
  }
  // Pivot: the vertex of P u X with most neighbours in P.
  Bits px = p | x;
  std::size_t pivot = px.find_first(), best = 0;
  for (std::size_t u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
    std::size_t k = (p & (*s.nbr)[u]).count();
    if (k >= best) {
      best = k;
      pivot = u;
    }
  }
  Bits cand = p - (*s.nbr)[pivot];
  for (std::size_t v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
    r.push_back(static_cast<int>(v));
    bron_kerbosch(s, r, p & (*s.nbr)[v], x & (*s.nbr)[v]);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

// Determinant by fraction-free elimination.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t sw = k + 1;
      while (sw < n && m[sw][k] == 0) ++sw;
      if (sw == n) return 0;
      std::swap(m[k], m[sw]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

std::vector<Clique> maximal_cliques_of_graph(const std::vector<std::vector<bool>>& adj,
                                             const std::vector<int>& forced, std::size_t max_cliques) {
  std::size_t n = adj.size();
  std::vector<Bits> nbr(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && adj[i][j]) nbr[i].set(j);
  Search s{&nbr, forced, max_cliques, {}};
  Bits p(n);
  p.set();
  for (int e : forced) p.reset(static_cast<std::size_t>(e));
  std::vector<int> r;
  bron_kerbosch(s, r, p, Bits(n));
  std::sort(s.out.begin(), s.out.end());
  return std::move(s.out);
}

Triangulation maximal_cliques(const FramedDag& fd, const Caps& caps) {
  Triangulation t;
  t.routes = enumerate_routes(fd.dag(), caps.max_routes);
  t.coherence = coherence_matrix(fd, t.routes);
  t.exceptional = exceptional_indices(t.coherence);
  t.cliques = maximal_cliques_of_graph(t.coherence, t.exceptional, caps.max_cliques);
  return t;
}

std::optional<Flip> try_flip(const Triangulation& t, const Clique& c, int r) {
  if (!std::binary_search(c.begin(), c.end(), r))
    fail(ErrorKind::BadInput, "route " + std::to_string(r) + " is not in the clique");
  std::vector<int> found;
  for (int s = 0; s < static_cast<int>(t.routes.size()); ++s) {
    if (s == r || std::binary_search(c.begin(), c.end(), s)) continue;
    bool ok = true;
    for (int u : c)
      if (u != r && !t.coherence[s][u]) {
        ok = false;
        break;
      }
    if (ok) found.push_back(s);
  }
  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    fail(ErrorKind::NoFlip, "route " + std::to_string(r) + " has " + std::to_string(found.size()) +
                                " possible replacements");
  Flip f{c, r, found[0]};
  f.clique.erase(std::find(f.clique.begin(), f.clique.end(), r));
  f.clique.insert(std::upper_bound(f.clique.begin(), f.clique.end(), found[0]), found[0]);
  return f;
}

Flip flip(const Triangulation& t, const Clique& c, int r) {
  auto f = try_flip(t, c, r);
  if (!f) fail(ErrorKind::NoFlip, "route " + std::to_string(r) + " has no replacement");
  return *f;
}

std::vector<Clique> cliques_by_flips(const Triangulation& t, std::size_t max_cliques) {
  if (t.cliques.empty()) return {};
  std::set<Clique> seen{t.cliques.front()};
  std::queue<Clique> q;
  q.push(t.cliques.front());
  while (!q.empty()) {
    Clique c = q.front();
    q.pop();
    for (int r : c) {
      auto f = try_flip(t, c, r);
      if (!f || !seen.insert(f->clique).second) continue;
      if (seen.size() > max_cliques)
        fail(ErrorKind::CliqueExplosion, "flip traversal exceeded the clique cap");
      q.push(f->clique);
    }
  }
  return {seen.begin(), seen.end()};
}

bool verify_unimodular(const Dag& g, const std::vector<Route>& routes, const Clique& c) {
  FlowDims dims = flow_dims(g);
  if (static_cast<int>(c.size()) != dims.flow_polytope + 1)
    fail(ErrorKind::NotSimplex, "clique has " + std::to_string(c.size()) + " routes, expected " +
                                    std::to_string(dims.flow_polytope + 1));
  // Conservation rows (+1 on in-edges, -1 on out-edges) reduced on unit
  // pivots; the rest are free coordinates of the integer flow lattice.
  std::map<EdgeId, int> col;
  for (const Edge& e : g.edges()) col[e.id] = static_cast<int>(col.size());
  std::size_t ne = col.size();
  std::vector<std::vector<int>> rows;
  for (VertexId v : g.vertices()) {
    if (!g.is_inner(v)) continue;
    std::vector<int> row(ne, 0);
    for (EdgeId e : g.in_edges(v)) row[col[e]] += 1;
    for (EdgeId e : g.out_edges(v)) row[col[e]] -= 1;
    rows.push_back(row);
  }
  std::vector<bool> pivot(ne, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t pc = ne;
    for (std::size_t j = 0; j < ne; ++j)
      if (rows[i][j] == 1 || rows[i][j] == -1) {
        pc = j;
        break;
      }
    if (pc == ne) {
      if (std::any_of(rows[i].begin(), rows[i].end(), [](int x) { return x != 0; }))
        fail(ErrorKind::BadInput, "conservation matrix is not totally unimodular");
      continue;
    }
    pivot[pc] = true;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == i || rows[k][pc] == 0) continue;
      int f = rows[k][pc] * rows[i][pc];
      for (std::size_t j = 0; j < ne; ++j) rows[k][j] -= f * rows[i][j];
    }
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < ne; ++j)
    if (!pivot[j]) free_cols.push_back(j);
  if (free_cols.size() != c.size())
    fail(ErrorKind::NotSimplex, "free coordinates do not match the simplex size");
  std::vector<std::vector<BigInt>> m;
  for (int r : c) {
    std::vector<int> v(ne, 0);
    for (EdgeId e : routes[r]) v[col[e]] = 1;
    std::vector<BigInt> row;
    for (std::size_t j : free_cols) row.push_back(v[j]);
    m.push_back(std::move(row));
  }
  BigInt d = bareiss_det(std::move(m));
  return d == 1 || d == -1;
}

std::vector<int> DualGraph::degree() const {
  std::vector<int> d(nodes, 0);
  for (const auto& e : edges) {
    ++d[e.a];
    ++d[e.b];
  }
  return d;
}

DualGraph dual_graph(const std::vector<Clique>& cliques) {
  DualGraph dg;
  dg.nodes = cliques.size();
  std::map<Clique, std::vector<std::pair<int, int>>> facets;
  for (int i = 0; i < static_cast<int>(cliques.size()); ++i)
    for (std::size_t k = 0; k < cliques[i].size(); ++k) {
      Clique f = cliques[i];
      int r = f[k];
      f.erase(f.begin() + static_cast<long>(k));
      facets[f].push_back({i, r});
    }
  for (const auto& [f, owners] : facets) {
    if (owners.size() > 2) fail(ErrorKind::NoFlip, "a facet lies in more than two cliques");
    if (owners.size() == 2)
      dg.edges.push_back({owners[0].first, owners[1].first, owners[0].second, owners[1].second});
  }
  std::sort(dg.edges.begin(), dg.edges.end(),
            [](const DualEdge& x, const DualEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return dg;
}

}  // namespace flowtri
