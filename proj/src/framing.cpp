#include "flowtri/framing.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

namespace flowtri {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

FramedDag::FramedDag(Dag g, Framing f) : g_(std::move(g)), f_(std::move(f)) {
  for (VertexId v : g_.vertices()) {
    if (!g_.is_inner(v)) continue;
    auto check = [&](const std::map<VertexId, std::vector<EdgeId>>& orders,
                     const std::vector<EdgeId>& edges, std::unordered_map<EdgeId, int>& rank,
                     const char* side) {
      auto it = orders.find(v);
      if (it == orders.end())
        fail(ErrorKind::BadFraming, std::string("missing ") + side + "-order at vertex " +
                                        std::to_string(v));
      std::vector<EdgeId> a = it->second, b = edges;
      std::sort(a.begin(), a.end());
      if (a != b)
        fail(ErrorKind::BadFraming, std::string(side) + "-order at vertex " + std::to_string(v) +
                                        " is not a permutation of its edges");
      for (std::size_t i = 0; i < it->second.size(); ++i) rank[it->second[i]] = static_cast<int>(i);
    };
    check(f_.in_order, g_.in_edges(v), in_rank_, "in");
    check(f_.out_order, g_.out_edges(v), out_rank_, "out");
  }
}

int FramedDag::in_rank(EdgeId e) const {
  auto it = in_rank_.find(e);
  return it == in_rank_.end() ? -1 : it->second;
}

int FramedDag::out_rank(EdgeId e) const {
  auto it = out_rank_.find(e);
  return it == out_rank_.end() ? -1 : it->second;
}

Framing id_framing(const Dag& g) {
  Framing f;
  for (VertexId v : g.vertices()) {
    if (!g.is_inner(v)) continue;
    f.in_order[v] = g.in_edges(v);
    f.out_order[v] = g.out_edges(v);
  }
  return f;
}

Framing reverse_framing(const Framing& f) {
  Framing r = f;
  for (auto& [v, o] : r.in_order) std::reverse(o.begin(), o.end());
  for (auto& [v, o] : r.out_order) std::reverse(o.begin(), o.end());
  return r;
}

Framing length_framing(const Dag& g) {
  Framing f = id_framing(g);
  for (auto& [v, o] : f.in_order)
    std::stable_sort(o.begin(), o.end(), [&](EdgeId a, EdgeId b) {
      return g.edge(a).orig_tail < g.edge(b).orig_tail;
    });
  for (auto& [v, o] : f.out_order)
    std::stable_sort(o.begin(), o.end(), [&](EdgeId a, EdgeId b) {
      return g.edge(a).orig_head > g.edge(b).orig_head;
    });
  return f;
}

Framing paper_g27_framing(const Dag& g) { return reverse_framing(length_framing(g)); }

Framing named_framing(const Dag& g, const std::string& name) {
  if (name == "length") return length_framing(g);
  if (name == "paper-g27") return paper_g27_framing(g);
  if (name == "id") return id_framing(g);
  fail(ErrorKind::BadInput, "unknown framing name '" + name + "'");
}

namespace {

struct RouteInfo {
  const Route* edges;
  std::vector<VertexId> verts;
  std::unordered_map<VertexId, int> pos;
};

RouteInfo route_info(const Dag& g, const Route& r) {
  RouteInfo info{&r, path_vertices(g, r), {}};
  for (std::size_t i = 0; i < info.verts.size(); ++i) info.pos[info.verts[i]] = static_cast<int>(i);
  return info;
}

// Compares at the vertex with index a in p and b in q. Edge k of a path runs
// from verts[k] to verts[k+1].
Ordering compare_at(const FramedDag& fd, Side side, const Route& p, int a, const Route& q, int b) {
  if (side == Side::In) {
    int i = a - 1, j = b - 1;
    while (i >= 0 && j >= 0) {
      if (p[i] != q[j]) return fd.in_rank(p[i]) < fd.in_rank(q[j]) ? Ordering::Less : Ordering::Greater;
      --i;
      --j;
    }
    if (i < 0 && j < 0) return Ordering::Equal;
  } else {
    int i = a, j = b;
    int np = static_cast<int>(p.size()), nq = static_cast<int>(q.size());
    while (i < np && j < nq) {
      if (p[i] != q[j])
        return fd.out_rank(p[i]) < fd.out_rank(q[j]) ? Ordering::Less : Ordering::Greater;
      ++i;
      ++j;
    }
    if (i == np && j == nq) return Ordering::Equal;
  }
  fail(ErrorKind::BadInput, "one path ends while the other continues without diverging");
}

bool conflict_at(const FramedDag& fd, const Route& r, int a, const Route& s, int b) {
  Ordering in = compare_at(fd, Side::In, r, a, s, b);
  if (in == Ordering::Equal) return false;
  Ordering out = compare_at(fd, Side::Out, r, a, s, b);
  if (out == Ordering::Equal) return false;
  return in != out;
}

template <typename OnConflict>
void scan_conflicts(const FramedDag& fd, const RouteInfo& r, const RouteInfo& s, OnConflict on) {
  const Dag& g = fd.dag();
  for (std::size_t a = 1; a + 1 < r.verts.size(); ++a) {
    auto it = s.pos.find(r.verts[a]);
    if (it == s.pos.end()) continue;
    if (!g.is_inner(r.verts[a])) continue;
    if (conflict_at(fd, *r.edges, static_cast<int>(a), *s.edges, it->second)) {
      if (!on(r.verts[a])) return;
    }
  }
}

}  // namespace

Ordering compare_paths_at(const FramedDag& fd, VertexId v, Side side, const Route& p,
                          const Route& q) {
  const Dag& g = fd.dag();
  auto vp = path_vertices(g, p), vq = path_vertices(g, q);
  auto ip = std::find(vp.begin(), vp.end(), v), iq = std::find(vq.begin(), vq.end(), v);
  if (ip == vp.end() || iq == vq.end())
    fail(ErrorKind::NotThroughVertex, "path does not touch vertex " + std::to_string(v));
  return compare_at(fd, side, p, static_cast<int>(ip - vp.begin()), q,
                    static_cast<int>(iq - vq.begin()));
}

Coherence routes_coherent(const FramedDag& fd, const Route& r, const Route& s) {
  Coherence c;
  auto ri = route_info(fd.dag(), r), si = route_info(fd.dag(), s);
  scan_conflicts(fd, ri, si, [&](VertexId v) {
    c.conflicts.push_back(v);
    return true;
  });
  c.coherent = c.conflicts.empty();
  return c;
}

bool coherent(const FramedDag& fd, const Route& r, const Route& s) {
  bool ok = true;
  auto ri = route_info(fd.dag(), r), si = route_info(fd.dag(), s);
  scan_conflicts(fd, ri, si, [&](VertexId) {
    ok = false;
    return false;
  });
  return ok;
}

std::vector<std::vector<bool>> coherence_matrix(const FramedDag& fd,
                                                const std::vector<Route>& routes) {
  std::size_t n = routes.size();
  std::vector<RouteInfo> info;
  info.reserve(n);
  for (const Route& r : routes) info.push_back(route_info(fd.dag(), r));
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, true));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool ok = true;
      scan_conflicts(fd, info[i], info[j], [&](VertexId) {
        ok = false;
        return false;
      });
      m[i][j] = m[j][i] = ok;
    }
  return m;
}

std::vector<int> exceptional_indices(const std::vector<std::vector<bool>>& coh) {
  std::vector<int> out;
  for (std::size_t i = 0; i < coh.size(); ++i)
    if (std::all_of(coh[i].begin(), coh[i].end(), [](bool b) { return b; }))
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<Route> exceptional_routes(const FramedDag& fd, std::size_t max_routes) {
  auto routes = enumerate_routes(fd.dag(), max_routes);
  std::vector<Route> out;
  for (int i : exceptional_indices(coherence_matrix(fd, routes))) out.push_back(routes[i]);
  return out;
}

namespace {

bool ample_given_routes(const FramedDag& fd, const std::vector<Route>& routes) {
  const Dag& g = fd.dag();
  std::set<EdgeId> need;
  for (const Edge& e : g.edges())
    if (!is_idle(g, e.id)) need.insert(e.id);
  if (need.empty()) return true;
  auto coh = coherence_matrix(fd, routes);
  for (int i : exceptional_indices(coh))
    for (EdgeId e : routes[i]) need.erase(e);
  return need.empty();
}

}  // namespace

bool is_ample(const FramedDag& fd, std::size_t max_routes) {
  return ample_given_routes(fd, enumerate_routes(fd.dag(), max_routes));
}

std::map<EdgeId, int> edge_labeling(const FramedDag& fd) {
  const Dag& g = fd.dag();
  if (!is_full(g)) fail(ErrorKind::NotFull, "edge labels need a full graph");
  std::map<EdgeId, int> labels;
  for (const Edge& e : g.edges()) {
    std::vector<int> ranks;
    if (g.is_inner(e.tail)) ranks.push_back(fd.out_rank(e.id));
    if (g.is_inner(e.head)) ranks.push_back(fd.in_rank(e.id));
    if (ranks.empty()) {
      labels[e.id] = 1;
      continue;
    }
    bool all_min = std::all_of(ranks.begin(), ranks.end(), [](int r) { return r == 0; });
    bool all_max = std::all_of(ranks.begin(), ranks.end(), [](int r) { return r == 1; });
    if (all_min)
      labels[e.id] = 1;
    else if (all_max)
      labels[e.id] = 2;
    else
      fail(ErrorKind::InconsistentFraming,
           "edge " + std::to_string(e.id) + " is minimal on one side and maximal on the other");
  }
  return labels;
}

Framing framing_from_labels(const Dag& g, const std::map<EdgeId, int>& labels) {
  Framing f = id_framing(g);
  auto by_label = [&](EdgeId a, EdgeId b) { return labels.at(a) < labels.at(b); };
  for (auto& [v, o] : f.in_order) std::stable_sort(o.begin(), o.end(), by_label);
  for (auto& [v, o] : f.out_order) std::stable_sort(o.begin(), o.end(), by_label);
  return f;
}

AdjacencyGraph adjacency_graph(const Dag& g, const std::vector<Route>& x) {
  AdjacencyGraph adj{x, {}};
  std::vector<std::set<VertexId>> inner(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (VertexId v : path_vertices(g, x[i]))
      if (g.is_inner(v)) inner[i].insert(v);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      bool share = std::any_of(inner[i].begin(), inner[i].end(),
                               [&](VertexId v) { return inner[j].count(v) > 0; });
      if (share) adj.edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  return adj;
}

ExceptionalSetCheck check_exceptional_set(const Dag& g, const std::vector<Route>& x) {
  if (!is_full(g)) fail(ErrorKind::NotFull, "exceptional-set check needs a full graph");
  ExceptionalSetCheck res;
  std::map<EdgeId, int> cover;
  std::map<EdgeId, int> owner;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_route(g, x[i])) fail(ErrorKind::BadInput, "set contains a non-route");
    for (EdgeId e : x[i]) {
      ++cover[e];
      owner[e] = static_cast<int>(i);
    }
  }
  for (const Edge& e : g.edges()) {
    if (cover[e.id] == 0) {
      res.reason = "uncovered edge";
      res.witness_edge = e.id;
      return res;
    }
  }
  for (const Edge& e : g.edges()) {
    if (cover[e.id] > 1) {
      res.reason = "doubly-covered edge";
      res.witness_edge = e.id;
      return res;
    }
  }
  AdjacencyGraph adj = adjacency_graph(g, x);
  std::vector<std::vector<int>> nb(x.size());
  for (auto [a, b] : adj.edges) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  std::vector<int> color(x.size(), -1);
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : nb[u]) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          res.reason = "odd cycle";
          return res;
        }
      }
    }
  }
  std::map<EdgeId, int> labels;
  for (const Edge& e : g.edges()) labels[e.id] = 1 + color[owner[e.id]];
  res.ok = true;
  res.framing = framing_from_labels(g, labels);
  return res;
}

int Decomposition::M() const {
  int m = 0;
  for (const auto& c : components)
    if (c.kind != ComponentKind::SourceSinkEdge) ++m;
  return m;
}

namespace {

std::optional<EdgeId> head_partner(const Dag& g, EdgeId e) {
  VertexId h = g.head(e);
  if (!g.is_inner(h) || g.in_degree(h) != 2) return std::nullopt;
  const auto& in = g.in_edges(h);
  return in[0] == e ? in[1] : in[0];
}

std::optional<EdgeId> tail_partner(const Dag& g, EdgeId e) {
  VertexId t = g.tail(e);
  if (!g.is_inner(t) || g.out_degree(t) != 2) return std::nullopt;
  const auto& out = g.out_edges(t);
  return out[0] == e ? out[1] : out[0];
}

// Junction vertices between consecutive edges alternate between a head
// (in-pair) and a tail (out-pair).
std::vector<VertexId> component_vertices(const Dag& g, const std::vector<EdgeId>& es, bool cycle) {
  std::size_t n = es.size();
  if (n == 1) return {g.tail(es[0]), g.head(es[0])};
  std::size_t nj = cycle ? n : n - 1;
  // junction type per consecutive pair: 0 = head, 1 = tail, -1 = undecided
  std::vector<int> type(nj, -1);
  for (std::size_t i = 0; i < nj; ++i) {
    EdgeId a = es[i], b = es[(i + 1) % n];
    bool at_head = head_partner(g, a) == b;
    bool at_tail = tail_partner(g, a) == b;
    if (at_head && !at_tail) type[i] = 0;
    if (at_tail && !at_head) type[i] = 1;
  }
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < nj; ++i) {
      if (type[i] >= 0) continue;
      if (i > 0 && type[i - 1] >= 0) type[i] = 1 - type[i - 1];
      else if (i + 1 < nj && type[i + 1] >= 0) type[i] = 1 - type[i + 1];
    }
  for (std::size_t i = 0; i < nj; ++i)
    if (type[i] < 0) type[i] = static_cast<int>(i % 2);
  auto jv = [&](std::size_t i) { return type[i] == 0 ? g.head(es[i]) : g.tail(es[i]); };
  std::vector<VertexId> vs;
  if (cycle) {
    vs.push_back(jv(nj - 1));
    for (std::size_t i = 0; i < nj; ++i) vs.push_back(jv(i));
  } else {
    vs.push_back(type[0] == 0 ? g.tail(es[0]) : g.head(es[0]));
    for (std::size_t i = 0; i < nj; ++i) vs.push_back(jv(i));
    vs.push_back(type[nj - 1] == 0 ? g.tail(es[n - 1]) : g.head(es[n - 1]));
  }
  return vs;
}

DecompositionComponent make_component(const Dag& g, std::vector<EdgeId> es, bool cycle) {
  DecompositionComponent c;
  c.edges = std::move(es);
  if (cycle)
    c.kind = ComponentKind::Cycle;
  else if (c.edges.size() == 1 && g.is_source(g.tail(c.edges[0])) && g.is_sink(g.head(c.edges[0])))
    c.kind = ComponentKind::SourceSinkEdge;
  else
    c.kind = ComponentKind::Path;
  c.vertices = component_vertices(g, c.edges, cycle);
  return c;
}

// Sources first, sinks last, inner vertices topologically with ties by id.
std::vector<VertexId> source_first_extension(const Dag& g) {
  auto cls = [&](VertexId v) { return g.is_source(v) ? 0 : (g.is_sink(v) ? 2 : 1); };
  using Key = std::pair<int, VertexId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  std::map<VertexId, int> indeg;
  for (VertexId v : g.vertices()) {
    indeg[v] = g.in_degree(v);
    if (indeg[v] == 0) ready.push({cls(v), v});
  }
  std::vector<VertexId> order;
  while (!ready.empty()) {
    VertexId v = ready.top().second;
    ready.pop();
    order.push_back(v);
    for (EdgeId e : g.out_edges(v))
      if (--indeg[g.head(e)] == 0) ready.push({cls(g.head(e)), g.head(e)});
  }
  return order;
}

}  // namespace

Decomposition path_cycle_decomposition(const Dag& g) {
  if (!is_full(g)) fail(ErrorKind::NotFull, "decomposition needs a full graph");
  struct Comp {
    std::deque<EdgeId> edges;
    bool cycle = false;
    bool alive = true;
  };
  std::vector<Comp> comps;
  std::unordered_map<EdgeId, int> comp_of;
  auto orient_back = [&](int c, EdgeId x) {
    auto& d = comps[c].edges;
    if (d.back() != x) std::reverse(d.begin(), d.end());
  };
  auto orient_front = [&](int c, EdgeId x) {
    auto& d = comps[c].edges;
    if (d.front() != x) std::reverse(d.begin(), d.end());
  };
  auto placed = [&](std::optional<EdgeId> e) -> int {
    if (!e) return -1;
    auto it = comp_of.find(*e);
    return it == comp_of.end() ? -1 : it->second;
  };
  auto append = [&](int c, EdgeId e) {
    comps[c].edges.push_back(e);
    comp_of[e] = c;
  };

  for (VertexId v : source_first_extension(g)) {
    if (!g.is_inner(v)) continue;
    EdgeId a = g.in_edges(v)[0], b = g.in_edges(v)[1];
    std::optional<EdgeId> pa = tail_partner(g, a), pb = tail_partner(g, b);
    if (pa == b) {
      // Parallel edges between two inner vertices close a 2-cycle at once.
      comps.push_back({{a, b}, true, true});
      comp_of[a] = comp_of[b] = static_cast<int>(comps.size()) - 1;
      continue;
    }
    int ca = placed(pa), cb = placed(pb);
    if (ca >= 0 && ca == cb) {
      orient_back(ca, *pa);
      if (comps[ca].edges.front() != *pb) fail(ErrorKind::NotFull, "decomposition invariant broken");
      append(ca, a);
      append(ca, b);
      comps[ca].cycle = true;
    } else if (ca >= 0 && cb >= 0) {
      int keep = std::min(ca, cb), drop = std::max(ca, cb);
      orient_back(ca, *pa);
      orient_front(cb, *pb);
      std::deque<EdgeId> joined = comps[ca].edges;
      joined.push_back(a);
      joined.push_back(b);
      joined.insert(joined.end(), comps[cb].edges.begin(), comps[cb].edges.end());
      comps[keep].edges = std::move(joined);
      comps[drop].alive = false;
      comps[drop].edges.clear();
      for (EdgeId e : comps[keep].edges) comp_of[e] = keep;
    } else if (ca >= 0 || cb >= 0) {
      // Grow at whichever end holds the partner, nearest edge first.
      int c = ca >= 0 ? ca : cb;
      EdgeId near = ca >= 0 ? a : b, far = ca >= 0 ? b : a;
      EdgeId partner = ca >= 0 ? *pa : *pb;
      auto& d = comps[c].edges;
      if (d.front() == partner && d.back() != partner) {
        d.push_front(near);
        d.push_front(far);
      } else {
        d.push_back(near);
        d.push_back(far);
      }
      comp_of[a] = comp_of[b] = c;
    } else {
      comps.push_back({{a, b}, false, true});
      comp_of[a] = comp_of[b] = static_cast<int>(comps.size()) - 1;
    }
  }

  // Extend open path ends at inner tails by the out-edge to a sink.
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (!comps[c].alive || comps[c].cycle) continue;
    for (int end = 0; end < 2; ++end) {
      auto& d = comps[c].edges;
      EdgeId x = end == 0 ? d.front() : d.back();
      EdgeId nbr = end == 0 ? d[1] : d[d.size() - 2];
      if (head_partner(g, x) != nbr) continue;  // open side is the head
      auto y = tail_partner(g, x);
      if (!y || comp_of.count(*y)) continue;
      if (end == 0)
        d.push_front(*y);
      else
        d.push_back(*y);
      comp_of[*y] = static_cast<int>(c);
    }
  }
  // Pairs of out-edges that both go to sinks.
  for (VertexId v : source_first_extension(g)) {
    if (!g.is_inner(v)) continue;
    EdgeId a = g.out_edges(v)[0], b = g.out_edges(v)[1];
    if (comp_of.count(a) || comp_of.count(b)) continue;
    comps.push_back({{a, b}, false, true});
    comp_of[a] = comp_of[b] = static_cast<int>(comps.size()) - 1;
  }
  for (const Edge& e : g.edges()) {
    if (comp_of.count(e.id)) continue;
    if (!(g.is_source(e.tail) && g.is_sink(e.head)))
      fail(ErrorKind::NotFull, "edge " + std::to_string(e.id) + " left out of the decomposition");
    comps.push_back({{e.id}, false, true});
    comp_of[e.id] = static_cast<int>(comps.size()) - 1;
  }

  Decomposition dec;
  for (const auto& c : comps)
    if (c.alive)
      dec.components.push_back(make_component(g, {c.edges.begin(), c.edges.end()}, c.cycle));
  return dec;
}

Decomposition partner_components(const Dag& g) {
  if (!is_full(g)) fail(ErrorKind::NotFull, "decomposition needs a full graph");
  std::set<EdgeId> seen;
  Decomposition dec;
  auto walk = [&](EdgeId start, bool cycle) {
    std::vector<EdgeId> es{start};
    seen.insert(start);
    EdgeId prev = start;
    std::optional<EdgeId> cur = head_partner(g, start) ? head_partner(g, start) : tail_partner(g, start);
    if (cycle) cur = head_partner(g, start);
    while (cur && !seen.count(*cur)) {
      es.push_back(*cur);
      seen.insert(*cur);
      auto hp = head_partner(g, *cur), tp = tail_partner(g, *cur);
      std::optional<EdgeId> next = (hp && *hp != prev) ? hp : tp;
      if (hp == tp) next = hp;  // 2-cycle of parallel edges
      if (next && *next == prev) next = (next == hp) ? tp : hp;
      prev = *cur;
      cur = next;
    }
    dec.components.push_back(make_component(g, es, cycle));
  };
  // Path ends first: edges with at most one partner.
  for (const Edge& e : g.edges()) {
    if (seen.count(e.id)) continue;
    int deg = (head_partner(g, e.id) ? 1 : 0) + (tail_partner(g, e.id) ? 1 : 0);
    if (deg <= 1) walk(e.id, false);
  }
  for (const Edge& e : g.edges())
    if (!seen.count(e.id)) walk(e.id, true);
  return dec;
}

IdleReach idle_reachability(const Dag& g, ReachRule rule) {
  IdleReach r;
  std::set<EdgeId> idle;
  for (EdgeId e : idle_edges(g)) idle.insert(e);
  auto forward_ok = [&](EdgeId e) {
    if (!idle.count(e)) return false;
    if (rule == ReachRule::AnyIdlePath) return true;
    return g.in_degree(g.head(e)) == 1;
  };
  auto backward_ok = [&](EdgeId e) {
    if (!idle.count(e)) return false;
    if (rule == ReachRule::AnyIdlePath) return true;
    return g.out_degree(g.tail(e)) == 1;
  };
  std::set<EdgeId> fwd, bwd;
  std::set<VertexId> v1, v2;
  std::queue<VertexId> q;
  for (VertexId v : g.vertices())
    if (g.is_source(v)) q.push(v);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (EdgeId e : g.out_edges(v))
      if (forward_ok(e) && fwd.insert(e).second) q.push(g.head(e));
  }
  for (VertexId v : g.vertices())
    if (g.is_sink(v)) q.push(v);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (EdgeId e : g.in_edges(v))
      if (backward_ok(e) && bwd.insert(e).second) q.push(g.tail(e));
  }
  for (EdgeId e : fwd)
    for (VertexId v : {g.tail(e), g.head(e)})
      if (!g.is_source(v)) v1.insert(v);
  for (EdgeId e : bwd)
    for (VertexId v : {g.tail(e), g.head(e)})
      if (!g.is_sink(v)) v2.insert(v);
  r.source_reachable.assign(fwd.begin(), fwd.end());
  r.sink_reachable.assign(bwd.begin(), bwd.end());
  r.v1.assign(v1.begin(), v1.end());
  r.v2.assign(v2.begin(), v2.end());
  return r;
}

BigInt count_ample_framings(const Dag& g, ReachRule rule) {
  ContractionTrace trace = complete_contraction(g);
  if (!is_full(trace.result)) fail(ErrorKind::NotValid, "complete contraction is not full");
  BigInt count = BigInt(1) << path_cycle_decomposition(trace.result).M();
  IdleReach reach = idle_reachability(g, rule);
  for (VertexId v : reach.v1) count *= factorial(g.out_degree(v));
  for (VertexId v : reach.v2) count *= factorial(g.in_degree(v));
  return count;
}

namespace {

std::vector<TaggedFraming> enumerate_full(const Dag& g) {
  Decomposition dec = path_cycle_decomposition(g);
  std::vector<const DecompositionComponent*> inner;
  for (const auto& c : dec.components)
    if (c.kind != ComponentKind::SourceSinkEdge) inner.push_back(&c);
  int m = static_cast<int>(inner.size());
  if (m > 62) fail(ErrorKind::BadInput, "too many components to enumerate");
  EdgeId smallest = 0;
  int smallest_comp = -1, smallest_pos = 0;
  for (int c = 0; c < m; ++c)
    for (std::size_t i = 0; i < inner[c]->edges.size(); ++i)
      if (smallest_comp < 0 || inner[c]->edges[i] < smallest) {
        smallest = inner[c]->edges[i];
        smallest_comp = c;
        smallest_pos = static_cast<int>(i);
      }
  std::uint64_t total = std::uint64_t(1) << m;
  std::vector<TaggedFraming> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::map<EdgeId, int> labels;
    for (const Edge& e : g.edges()) labels[e.id] = 1;
    for (int c = 0; c < m; ++c) {
      int bit = static_cast<int>((mask >> c) & 1);
      for (std::size_t i = 0; i < inner[c]->edges.size(); ++i)
        labels[inner[c]->edges[i]] = 1 + static_cast<int>((i + bit) % 2);
    }
    TaggedFraming tf;
    tf.framing = framing_from_labels(g, labels);
    tf.index = mask;
    tf.swap_partner = mask ^ (total - 1);
    tf.canonical = m == 0 || ((static_cast<int>((mask >> smallest_comp) & 1) + smallest_pos) % 2 == 0);
    out.push_back(std::move(tf));
  }
  return out;
}

// H-edges that enter (resp. leave) the contracted class of an edge's
// endpoint through that edge.
struct FeedMaps {
  std::map<EdgeId, std::vector<EdgeId>> in_feeds, out_feeds;
};

FeedMaps compute_feeds(const Dag& g, const ContractionTrace& trace) {
  std::set<EdgeId> contracted;
  for (const auto& s : trace.steps) contracted.insert(s.edge);
  FeedMaps fm;
  std::function<const std::vector<EdgeId>&(EdgeId)> in_feeds = [&](EdgeId e) -> const std::vector<EdgeId>& {
    auto it = fm.in_feeds.find(e);
    if (it != fm.in_feeds.end()) return it->second;
    std::vector<EdgeId> f;
    if (!contracted.count(e)) {
      f.push_back(e);
    } else {
      for (EdgeId p : g.in_edges(g.tail(e))) {
        const auto& sub = in_feeds(p);
        f.insert(f.end(), sub.begin(), sub.end());
      }
    }
    return fm.in_feeds[e] = std::move(f);
  };
  std::function<const std::vector<EdgeId>&(EdgeId)> out_feeds = [&](EdgeId e) -> const std::vector<EdgeId>& {
    auto it = fm.out_feeds.find(e);
    if (it != fm.out_feeds.end()) return it->second;
    std::vector<EdgeId> f;
    if (!contracted.count(e)) {
      f.push_back(e);
    } else {
      for (EdgeId p : g.out_edges(g.head(e))) {
        const auto& sub = out_feeds(p);
        f.insert(f.end(), sub.begin(), sub.end());
      }
    }
    return fm.out_feeds[e] = std::move(f);
  };
  for (const Edge& e : g.edges()) {
    in_feeds(e.id);
    out_feeds(e.id);
  }
  return fm;
}

// Orders `edges` by the smallest H-rank among their feeds. Returns false when
// a rank is undefined.
bool order_by_feeds(const std::vector<EdgeId>& edges, const std::map<EdgeId, std::vector<EdgeId>>& feeds,
                    const std::vector<EdgeId>* h_order, std::vector<EdgeId>& out) {
  if (edges.size() <= 1) {
    out = edges;
    return true;
  }
  if (!h_order) return false;
  std::vector<std::pair<int, EdgeId>> keyed;
  for (EdgeId e : edges) {
    const auto& f = feeds.at(e);
    int best = -1;
    for (EdgeId h : f) {
      auto it = std::find(h_order->begin(), h_order->end(), h);
      if (it == h_order->end()) continue;
      int r = static_cast<int>(it - h_order->begin());
      if (best < 0 || r < best) best = r;
    }
    if (best < 0) return false;
    keyed.push_back({best, e});
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 1; i < keyed.size(); ++i)
    if (keyed[i].first == keyed[i - 1].first) return false;
  out.clear();
  for (auto& [k, e] : keyed) out.push_back(e);
  return true;
}

const std::vector<EdgeId>* order_at(const std::map<VertexId, std::vector<EdgeId>>& m, VertexId v) {
  auto it = m.find(v);
  return it == m.end() ? nullptr : &it->second;
}

}  // namespace

FreeSides lift_free_sides(const Dag& g, const ContractionTrace& trace) {
  FeedMaps fm = compute_feeds(g, trace);
  Framing probe = id_framing(trace.result);
  FreeSides fs;
  for (VertexId x : g.vertices()) {
    if (!g.is_inner(x)) continue;
    VertexId cls = trace.vertex_map.at(x);
    std::vector<EdgeId> tmp;
    if (!order_by_feeds(g.in_edges(x), fm.in_feeds, order_at(probe.in_order, cls), tmp)) fs.in.push_back(x);
    if (!order_by_feeds(g.out_edges(x), fm.out_feeds, order_at(probe.out_order, cls), tmp))
      fs.out.push_back(x);
  }
  return fs;
}

Framing lift_framing(const Dag& g, const ContractionTrace& trace, const Framing& f_full,
                     const LiftChoices& choices) {
  FramedDag check(trace.result, f_full);
  FeedMaps fm = compute_feeds(g, trace);
  FreeSides fs = lift_free_sides(g, trace);
  auto is_free = [](const std::vector<VertexId>& vs, VertexId v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
  };
  auto take_choice = [&](const std::map<VertexId, std::vector<EdgeId>>& m, VertexId x,
                         const std::vector<EdgeId>& edges, const char* side) {
    auto it = m.find(x);
    if (it == m.end())
      fail(ErrorKind::BadChoices, std::string("no ") + side + "-order given for vertex " + std::to_string(x));
    std::vector<EdgeId> a = it->second, b = edges;
    std::sort(a.begin(), a.end());
    if (a != b)
      fail(ErrorKind::BadChoices, std::string(side) + "-order for vertex " + std::to_string(x) +
                                      " does not match its edges");
    return it->second;
  };
  for (const auto& [x, o] : choices.in_order)
    if (!is_free(fs.in, x)) fail(ErrorKind::BadChoices, "in-order of vertex " + std::to_string(x) + " is not free");
  for (const auto& [x, o] : choices.out_order)
    if (!is_free(fs.out, x)) fail(ErrorKind::BadChoices, "out-order of vertex " + std::to_string(x) + " is not free");

  Framing f;
  for (VertexId x : g.vertices()) {
    if (!g.is_inner(x)) continue;
    VertexId cls = trace.vertex_map.at(x);
    if (is_free(fs.in, x))
      f.in_order[x] = take_choice(choices.in_order, x, g.in_edges(x), "in");
    else
      order_by_feeds(g.in_edges(x), fm.in_feeds, order_at(f_full.in_order, cls), f.in_order[x]);
    if (is_free(fs.out, x))
      f.out_order[x] = take_choice(choices.out_order, x, g.out_edges(x), "out");
    else
      order_by_feeds(g.out_edges(x), fm.out_feeds, order_at(f_full.out_order, cls), f.out_order[x]);
  }
  return f;
}

namespace {

struct FreeSlot {
  VertexId v;
  bool in;
  std::vector<EdgeId> edges;
};

void for_each_choice(const std::vector<FreeSlot>& slots, std::size_t i, LiftChoices& cur,
                     const std::function<void(const LiftChoices&)>& fn) {
  if (i == slots.size()) {
    fn(cur);
    return;
  }
  std::vector<EdgeId> perm = slots[i].edges;
  std::sort(perm.begin(), perm.end());
  do {
    (slots[i].in ? cur.in_order : cur.out_order)[slots[i].v] = perm;
    for_each_choice(slots, i + 1, cur, fn);
  } while (std::next_permutation(perm.begin(), perm.end()));
  (slots[i].in ? cur.in_order : cur.out_order).erase(slots[i].v);
}

}  // namespace

std::vector<Framing> enumerate_lifts(const Dag& g, const ContractionTrace& trace,
                                     const Framing& f_full) {
  FreeSides fs = lift_free_sides(g, trace);
  std::vector<FreeSlot> slots;
  for (VertexId v : fs.in) slots.push_back({v, true, g.in_edges(v)});
  for (VertexId v : fs.out) slots.push_back({v, false, g.out_edges(v)});
  std::vector<Framing> out;
  LiftChoices cur;
  for_each_choice(slots, 0, cur, [&](const LiftChoices& c) { out.push_back(lift_framing(g, trace, f_full, c)); });
  return out;
}

std::vector<TaggedFraming> enumerate_ample_framings(const Dag& g) {
  if (is_full(g)) return enumerate_full(g);
  ContractionTrace trace = complete_contraction(g);
  if (!is_full(trace.result)) fail(ErrorKind::NotValid, "complete contraction is not full");
  auto base = enumerate_full(trace.result);
  std::vector<TaggedFraming> out;
  std::uint64_t per = 0;
  for (const auto& tf : base) {
    auto lifts = enumerate_lifts(g, trace, tf.framing);
    per = lifts.size();
    for (std::size_t c = 0; c < lifts.size(); ++c) {
      TaggedFraming t;
      t.framing = std::move(lifts[c]);
      t.index = tf.index * per + c;
      t.swap_partner = tf.swap_partner * per + c;
      t.canonical = tf.canonical;
      out.push_back(std::move(t));
    }
  }
  return out;
}

BigInt count_all_framings(const Dag& g) {
  BigInt n = 1;
  for (VertexId v : g.vertices())
    if (g.is_inner(v)) n *= factorial(g.in_degree(v)) * factorial(g.out_degree(v));
  return n;
}

void for_each_framing(const Dag& g, const std::function<bool(const Framing&)>& fn) {
  std::vector<FreeSlot> slots;
  for (VertexId v : g.vertices()) {
    if (!g.is_inner(v)) continue;
    slots.push_back({v, true, g.in_edges(v)});
    slots.push_back({v, false, g.out_edges(v)});
  }
  Framing cur;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == slots.size()) {
      if (!fn(cur)) stop = true;
      return;
    }
    std::vector<EdgeId> perm = slots[i].edges;
    do {
      (slots[i].in ? cur.in_order : cur.out_order)[slots[i].v] = perm;
      rec(i + 1);
      if (stop) return;
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(0);
}

std::vector<Framing> brute_force_ample_framings(const Dag& g) {
  auto routes = enumerate_routes(g);
  std::vector<Framing> out;
  for_each_framing(g, [&](const Framing& f) {
    if (ample_given_routes(FramedDag(g, f), routes)) out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace flowtri
