#include "flowtri/dag.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace flowtri {

namespace {

void insert_sorted(std::vector<EdgeId>& v, EdgeId e) {
  v.insert(std::lower_bound(v.begin(), v.end(), e), e);
}

}  // namespace

void Dag::add_vertex(VertexId v) {
  if (has_vertex(v)) return;
  vertices_.insert(std::lower_bound(vertices_.begin(), vertices_.end(), v), v);
  in_[v];
  out_[v];
}

EdgeId Dag::add_edge(VertexId tail, VertexId head) {
  Edge e{next_edge_id(), tail, head, tail, head};
  add_edge(e);
  return e.id;
}

void Dag::add_edge(const Edge& e) {
  if (has_edge(e.id)) fail(ErrorKind::BadInput, "duplicate edge id " + std::to_string(e.id));
  if (e.tail == e.head) fail(ErrorKind::SelfLoop, "edge " + std::to_string(e.id));
  add_vertex(e.tail);
  add_vertex(e.head);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), e.id,
                              [](const Edge& a, EdgeId id) { return a.id < id; });
  std::size_t idx = static_cast<std::size_t>(pos - edges_.begin());
  edges_.insert(pos, e);
  if (idx + 1 == edges_.size()) {
    edge_index_[e.id] = idx;
  } else {
    for (std::size_t i = idx; i < edges_.size(); ++i) edge_index_[edges_[i].id] = i;
  }
  insert_sorted(out_[e.tail], e.id);
  insert_sorted(in_[e.head], e.id);
}

const Edge& Dag::edge(EdgeId e) const {
  auto it = edge_index_.find(e);
  if (it == edge_index_.end()) fail(ErrorKind::UnknownEdge, std::to_string(e));
  return edges_[it->second];
}

const std::vector<EdgeId>& Dag::in_edges(VertexId v) const {
  auto it = in_.find(v);
  if (it == in_.end()) fail(ErrorKind::UnknownVertex, std::to_string(v));
  return it->second;
}

const std::vector<EdgeId>& Dag::out_edges(VertexId v) const {
  auto it = out_.find(v);
  if (it == out_.end()) fail(ErrorKind::UnknownVertex, std::to_string(v));
  return it->second;
}

EdgeId Dag::next_edge_id() const { return edges_.empty() ? 0 : edges_.back().id + 1; }

VertexId Dag::next_vertex_id() const { return vertices_.empty() ? 1 : vertices_.back() + 1; }

void Dag::validate() const {
  for (VertexId v : vertices_) {
    if (in_edges(v).empty() && out_edges(v).empty())
      fail(ErrorKind::IsolatedVertex, std::to_string(v));
  }
  topological_order();
}

std::vector<VertexId> Dag::topological_order() const {
  std::map<VertexId, int> indeg;
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v : vertices_) {
    indeg[v] = in_degree(v);
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  order.reserve(vertices_.size());
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (EdgeId e : out_edges(v)) {
      VertexId h = head(e);
      if (--indeg[h] == 0) ready.push(h);
    }
  }
  if (order.size() != vertices_.size()) fail(ErrorKind::CycleInGraph, "graph has a directed cycle");
  return order;
}

VertexClasses classify_vertices(const Dag& g) {
  VertexClasses c;
  for (VertexId v : g.vertices()) {
    bool src = g.is_source(v), snk = g.is_sink(v);
    if (src && snk) fail(ErrorKind::IsolatedVertex, std::to_string(v));
    if (src)
      c.sources.push_back(v);
    else if (snk)
      c.sinks.push_back(v);
    else
      c.inner.push_back(v);
  }
  return c;
}

FlowDims flow_dims(const Dag& g) {
  int inner = static_cast<int>(classify_vertices(g).inner.size());
  int space = static_cast<int>(g.num_edges()) - inner;
  return {space, space - 1};
}

std::vector<Route> enumerate_routes(const Dag& g, std::size_t cap) {
  std::vector<Route> routes;
  Route cur;
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    if (g.is_sink(v)) {
      if (routes.size() >= cap)
        fail(ErrorKind::RouteExplosion, "more than " + std::to_string(cap) + " routes");
      routes.push_back(cur);
      return;
    }
    for (EdgeId e : g.out_edges(v)) {
      cur.push_back(e);
      dfs(g.head(e));
      cur.pop_back();
    }
  };
  // Routes from different sources start with different edges, so sorting
  // the final list gives lexicographic order by edge ids.
  for (VertexId v : g.vertices())
    if (g.is_source(v) && !g.is_sink(v)) dfs(v);
  std::sort(routes.begin(), routes.end());
  return routes;
}

std::vector<VertexId> path_vertices(const Dag& g, const Route& path) {
  std::vector<VertexId> vs;
  if (path.empty()) return vs;
  vs.reserve(path.size() + 1);
  vs.push_back(g.tail(path.front()));
  for (EdgeId e : path) vs.push_back(g.head(e));
  return vs;
}

bool is_route(const Dag& g, const Route& r) {
  if (r.empty()) return false;
  for (EdgeId e : r)
    if (!g.has_edge(e)) return false;
  if (!g.is_source(g.tail(r.front())) || !g.is_sink(g.head(r.back()))) return false;
  for (std::size_t i = 1; i < r.size(); ++i)
    if (g.head(r[i - 1]) != g.tail(r[i])) return false;
  return true;
}

bool is_idle(const Dag& g, EdgeId e) {
  VertexId t = g.tail(e), h = g.head(e);
  if (g.is_inner(h) && g.in_degree(h) == 1) return true;
  if (g.is_inner(t) && g.out_degree(t) == 1) return true;
  return false;
}

std::vector<EdgeId> idle_edges(const Dag& g) {
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges())
    if (is_idle(g, e.id)) out.push_back(e.id);
  return out;
}

std::vector<EdgeId> ContractionTrace::contracted_edges() const {
  std::vector<EdgeId> out;
  for (const auto& s : steps) out.push_back(s.edge);
  std::sort(out.begin(), out.end());
  return out;
}

Dag contract_edge(const Dag& g, EdgeId eid, ContractionStep* step) {
  const Edge& ce = g.edge(eid);
  VertexId keep = std::min(ce.tail, ce.head);
  VertexId gone = std::max(ce.tail, ce.head);
  Dag out;
  for (VertexId v : g.vertices())
    if (v != gone) out.add_vertex(v);
  for (const Edge& e : g.edges()) {
    if (e.id == eid) continue;
    Edge ne = e;
    if (ne.tail == gone) ne.tail = keep;
    if (ne.head == gone) ne.head = keep;
    out.add_edge(ne);
  }
  if (step) *step = {eid, keep, gone};
  return out;
}

ContractionTrace complete_contraction(
    const Dag& g, const std::function<EdgeId(const std::vector<EdgeId>&)>& pick) {
  ContractionTrace trace;
  trace.result = g;
  for (VertexId v : g.vertices()) trace.vertex_map[v] = v;
  while (true) {
    std::vector<EdgeId> idle = idle_edges(trace.result);
    if (idle.empty()) break;
    EdgeId e = pick(idle);
    ContractionStep step{};
    trace.result = contract_edge(trace.result, e, &step);
    trace.steps.push_back(step);
    for (auto& [orig, cur] : trace.vertex_map)
      if (cur == step.removed) cur = step.kept;
  }
  return trace;
}

ContractionTrace complete_contraction(const Dag& g) {
  return complete_contraction(g, [](const std::vector<EdgeId>& idle) { return idle.front(); });
}

bool is_full(const Dag& g) {
  for (VertexId v : g.vertices())
    if (g.is_inner(v) && (g.in_degree(v) != 2 || g.out_degree(v) != 2)) return false;
  return true;
}

bool is_valid(const Dag& g) { return is_full(complete_contraction(g).result); }

bool idle_edges_form_forest(const Dag& g) {
  std::map<VertexId, VertexId> parent;
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    auto it = parent.find(v);
    if (it == parent.end()) return v;
    VertexId r = find(it->second);
    parent[v] = r;
    return r;
  };
  for (EdgeId e : idle_edges(g)) {
    VertexId a = find(g.tail(e)), b = find(g.head(e));
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

Dag strip_source_sink_edges(const Dag& g) {
  Dag out;
  for (const Edge& e : g.edges())
    if (!(g.is_source(e.tail) && g.is_sink(e.head))) out.add_edge(e);
  return out;
}

namespace {

struct IsoState {
  const Dag* a;
  const Dag* b;
  std::vector<VertexId> order;  // vertices of a, in matching order
  std::map<VertexId, VertexId> map;
  std::set<VertexId> used;
  std::map<std::pair<VertexId, VertexId>, int> mult_a, mult_b;
};

bool iso_extend(IsoState& s, std::size_t i) {
  if (i == s.order.size()) return true;
  VertexId v = s.order[i];
  for (VertexId w : s.b->vertices()) {
    if (s.used.count(w)) continue;
    if (s.a->in_degree(v) != s.b->in_degree(w) || s.a->out_degree(v) != s.b->out_degree(w)) continue;
    bool ok = true;
    for (const auto& [u, x] : s.map) {
      auto ma = [&](VertexId p, VertexId q) {
        auto it = s.mult_a.find({p, q});
        return it == s.mult_a.end() ? 0 : it->second;
      };
      auto mb = [&](VertexId p, VertexId q) {
        auto it = s.mult_b.find({p, q});
        return it == s.mult_b.end() ? 0 : it->second;
      };
      if (ma(u, v) != mb(x, w) || ma(v, u) != mb(w, x)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    s.map[v] = w;
    s.used.insert(w);
    if (iso_extend(s, i + 1)) return true;
    s.map.erase(v);
    s.used.erase(w);
  }
  return false;
}

}  // namespace

bool isomorphic(const Dag& a, const Dag& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  IsoState s{&a, &b, a.topological_order(), {}, {}, {}, {}};
  for (const Edge& e : a.edges()) ++s.mult_a[{e.tail, e.head}];
  for (const Edge& e : b.edges()) ++s.mult_b[{e.tail, e.head}];
  return iso_extend(s, 0);
}

Route project_route(const ContractionTrace& trace, const Route& r) {
  Route out;
  for (EdgeId e : r)
    if (trace.result.has_edge(e)) out.push_back(e);
  return out;
}

Dag make_car(int n) {
  if (n < 3) fail(ErrorKind::BadInput, "car(n) needs n >= 3");
  Dag g;
  for (int v = 1; v <= n; ++v) g.add_vertex(v);
  for (int i = 2; i <= n - 1; ++i) g.add_edge(1, i);
  for (int i = 2; i <= n - 2; ++i) g.add_edge(i, i + 1);
  for (int i = 2; i <= n - 1; ++i) g.add_edge(i, n);
  return g;
}

Dag make_gkn(int k, int m) {
  int n = m - 1;
  if (k < 1 || n < k) fail(ErrorKind::BadInput, "G(k, n+1) needs 1 <= k <= n");
  Dag g;
  for (int v = 1; v <= m; ++v) g.add_vertex(v);
  for (int i = 1; i <= n; ++i) g.add_edge(i, i + 1);
  for (int i = 1; i <= n - k + 1; ++i) g.add_edge(i, i + k);
  return g;
}

}  // namespace flowtri
