#ifndef FLOWTRI_DAG_HPP
#define FLOWTRI_DAG_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "flowtri/errors.hpp"

namespace flowtri {

using VertexId = int;
using EdgeId = int;

// A route is the ordered list of its edges, source to sink.
using Route = std::vector<EdgeId>;

struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;
  // Endpoints in the graph this edge was first created in. Contraction
  // rewrites tail/head but keeps these.
  VertexId orig_tail;
  VertexId orig_head;
};

// Directed acyclic multigraph with stable vertex and edge ids.
// Vertices are kept sorted by id, edges sorted by id, and the in/out lists of
// every vertex are sorted by edge id.
class Dag {
 public:
  Dag() = default;

  void add_vertex(VertexId v);
  // Adds an edge with the next free id; endpoints are created if missing.
  EdgeId add_edge(VertexId tail, VertexId head);
  void add_edge(const Edge& e);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(VertexId v) const { return in_.count(v) > 0; }
  bool has_edge(EdgeId e) const { return edge_index_.count(e) > 0; }
  const Edge& edge(EdgeId e) const;
  VertexId tail(EdgeId e) const { return edge(e).tail; }
  VertexId head(EdgeId e) const { return edge(e).head; }

  const std::vector<EdgeId>& in_edges(VertexId v) const;
  const std::vector<EdgeId>& out_edges(VertexId v) const;
  int in_degree(VertexId v) const { return static_cast<int>(in_edges(v).size()); }
  int out_degree(VertexId v) const { return static_cast<int>(out_edges(v).size()); }

  bool is_source(VertexId v) const { return in_edges(v).empty(); }
  bool is_sink(VertexId v) const { return out_edges(v).empty(); }
  bool is_inner(VertexId v) const { return !is_source(v) && !is_sink(v); }

  EdgeId next_edge_id() const;
  VertexId next_vertex_id() const;

  // Throws on self-loops, directed cycles and isolated vertices.
  void validate() const;

  // Kahn's algorithm, smallest vertex id first among ready vertices.
  std::vector<VertexId> topological_order() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<EdgeId, std::size_t> edge_index_;
  std::map<VertexId, std::vector<EdgeId>> in_;
  std::map<VertexId, std::vector<EdgeId>> out_;
};

struct VertexClasses {
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  std::vector<VertexId> inner;
};

VertexClasses classify_vertices(const Dag& g);

struct FlowDims {
  int flow_space;
  int flow_polytope;
};

FlowDims flow_dims(const Dag& g);

// All maximal paths, lexicographic by edge-id sequence.
std::vector<Route> enumerate_routes(const Dag& g, std::size_t cap = 1000000);

// Vertex sequence of a path given by edges (first tail through last head).
std::vector<VertexId> path_vertices(const Dag& g, const Route& path);

// Checks consecutive edges chain and the path runs source to sink.
bool is_route(const Dag& g, const Route& r);

std::vector<EdgeId> idle_edges(const Dag& g);
bool is_idle(const Dag& g, EdgeId e);

struct ContractionStep {
  EdgeId edge;
  VertexId kept;
  VertexId removed;
};

struct ContractionTrace {
  std::vector<ContractionStep> steps;
  Dag result;
  // Original vertex -> vertex of the result it was merged into.
  std::map<VertexId, VertexId> vertex_map;
  std::vector<EdgeId> contracted_edges() const;
};

// Contracts one edge; the merged vertex keeps the smaller id.
Dag contract_edge(const Dag& g, EdgeId e, ContractionStep* step = nullptr);

// Repeatedly contracts the smallest-id idle edge.
ContractionTrace complete_contraction(const Dag& g);

// Same, but `pick` chooses which idle edge to contract next.
ContractionTrace complete_contraction(
    const Dag& g, const std::function<EdgeId(const std::vector<EdgeId>&)>& pick);

bool is_full(const Dag& g);
bool is_valid(const Dag& g);

// True when the subgraph of idle edges has no undirected cycle.
bool idle_edges_form_forest(const Dag& g);

// Removes edges that go directly from a source to a sink, then any vertex
// left without edges.
Dag strip_source_sink_edges(const Dag& g);

// Multigraph isomorphism by backtracking. Intended for small graphs.
bool isomorphic(const Dag& a, const Dag& b);

// Sends every route of g to the route of the contraction obtained by deleting
// contracted edges.
Route project_route(const ContractionTrace& trace, const Route& r);

// Standard families.
// car(n): vertices 1..n, edges 1->i and i->n for 2<=i<=n-1, path 2->...->n-1.
Dag make_car(int n);
// G(k, m): vertices 1..m, edges (i,i+1) then (i,i+k).
Dag make_gkn(int k, int m);

}  // namespace flowtri

#endif  // FLOWTRI_DAG_HPP
