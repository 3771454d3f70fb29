#ifndef FLOWTRI_FRAMING_HPP
#define FLOWTRI_FRAMING_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "flowtri/bigint.hpp"
#include "flowtri/dag.hpp"

namespace flowtri {

// Linear orders on in(v) and out(v) for every inner vertex v, smallest first.
struct Framing {
  std::map<VertexId, std::vector<EdgeId>> in_order;
  std::map<VertexId, std::vector<EdgeId>> out_order;

  bool operator==(const Framing& o) const = default;
  bool operator<(const Framing& o) const {
    return std::tie(in_order, out_order) < std::tie(o.in_order, o.out_order);
  }
};

// A graph together with a checked framing and rank lookups.
class FramedDag {
 public:
  FramedDag(Dag g, Framing f);

  const Dag& dag() const { return g_; }
  const Framing& framing() const { return f_; }
  // Position of e in the in-order of its head, or -1 if the head is not inner.
  int in_rank(EdgeId e) const;
  // Position of e in the out-order of its tail, or -1 if the tail is not inner.
  int out_rank(EdgeId e) const;

 private:
  Dag g_;
  Framing f_;
  std::unordered_map<EdgeId, int> in_rank_;
  std::unordered_map<EdgeId, int> out_rank_;
};

// Orders every side by edge id.
Framing id_framing(const Dag& g);
// Reverses every order.
Framing reverse_framing(const Framing& f);

// in(v) by original tail ascending, out(v) by original head descending,
// remaining ties by edge id. Longer edges come first.
Framing length_framing(const Dag& g);
// The reverse of the length framing.
Framing paper_g27_framing(const Dag& g);
// "length", "paper-g27" or "id".
Framing named_framing(const Dag& g, const std::string& name);

enum class Side { In, Out };
enum class Ordering { Less, Equal, Greater };

// Compares two paths through v in In(v) (the parts up to v) or Out(v) (the
// parts from v). Divergence is detected at the first differing edge id.
Ordering compare_paths_at(const FramedDag& fd, VertexId v, Side side, const Route& p,
                          const Route& q);

struct Coherence {
  bool coherent = true;
  std::vector<VertexId> conflicts;
};

Coherence routes_coherent(const FramedDag& fd, const Route& r, const Route& s);
// Early-exit version of routes_coherent.
bool coherent(const FramedDag& fd, const Route& r, const Route& s);

// Pairwise coherence of a route list as adjacency rows.
std::vector<std::vector<bool>> coherence_matrix(const FramedDag& fd,
                                                const std::vector<Route>& routes);

// Indices into `routes` of routes coherent with all routes.
std::vector<int> exceptional_indices(const std::vector<std::vector<bool>>& coh);
std::vector<Route> exceptional_routes(const FramedDag& fd, std::size_t max_routes = 1000000);

bool is_ample(const FramedDag& fd, std::size_t max_routes = 1000000);

// Edge label 1 or 2 from the framing of a full graph. Edges with no inner
// endpoint get label 1.
std::map<EdgeId, int> edge_labeling(const FramedDag& fd);

// Framing on a full graph whose induced labeling is `labels`.
Framing framing_from_labels(const Dag& g, const std::map<EdgeId, int>& labels);

struct AdjacencyGraph {
  std::vector<Route> nodes;
  std::vector<std::pair<int, int>> edges;
};

AdjacencyGraph adjacency_graph(const Dag& g, const std::vector<Route>& x);

struct ExceptionalSetCheck {
  bool ok = false;
  // "uncovered edge", "doubly-covered edge", "odd cycle" or empty.
  std::string reason;
  std::optional<EdgeId> witness_edge;
  std::optional<Framing> framing;
};

ExceptionalSetCheck check_exceptional_set(const Dag& g, const std::vector<Route>& x);

enum class ComponentKind { Cycle, Path, SourceSinkEdge };

struct DecompositionComponent {
  ComponentKind kind;
  std::vector<EdgeId> edges;
  // Vertex walk; for a cycle the first vertex is repeated at the end.
  std::vector<VertexId> vertices;
};

struct Decomposition {
  std::vector<DecompositionComponent> components;
  int M() const;
};

// Incremental construction over a linear extension (sources first, sinks
// last, inner vertices in topological order with ties by id).
Decomposition path_cycle_decomposition(const Dag& g);
// Connected components of the partner relation, for cross-checking.
Decomposition partner_components(const Dag& g);

struct IdleReach {
  std::vector<EdgeId> source_reachable;
  std::vector<EdgeId> sink_reachable;
  std::vector<VertexId> v1;  // non-source endpoints of source-reachable edges
  std::vector<VertexId> v2;  // non-sink endpoints of sink-reachable edges
};

enum class ReachRule {
  // Reached from a source along edges that are each the only in-edge of their
  // head (dually for sinks).
  UniqueEntry,
  // Reached from a source along any directed path of idle edges.
  AnyIdlePath,
};

IdleReach idle_reachability(const Dag& g, ReachRule rule = ReachRule::UniqueEntry);

BigInt count_ample_framings(const Dag& g, ReachRule rule = ReachRule::UniqueEntry);

struct TaggedFraming {
  Framing framing;
  std::uint64_t index = 0;
  std::uint64_t swap_partner = 0;
  // The framing in its swap pair where the smallest edge id of the inner
  // components carries label 1.
  bool canonical = false;
};

// Full graphs: the 2^M alternating labelings of the decomposition.
// Valid graphs: every lift of those to g.
std::vector<TaggedFraming> enumerate_ample_framings(const Dag& g);

// Orders at vertices whose sides are not determined by the contraction.
struct LiftChoices {
  std::map<VertexId, std::vector<EdgeId>> in_order;
  std::map<VertexId, std::vector<EdgeId>> out_order;
};

// Vertices of g whose in (resp. out) order a lift leaves free.
struct FreeSides {
  std::vector<VertexId> in;
  std::vector<VertexId> out;
};

FreeSides lift_free_sides(const Dag& g, const ContractionTrace& trace);

Framing lift_framing(const Dag& g, const ContractionTrace& trace, const Framing& f_full,
                     const LiftChoices& choices = {});

std::vector<Framing> enumerate_lifts(const Dag& g, const ContractionTrace& trace,
                                     const Framing& f_full);

// Number of framings of g: product of |in(v)|!|out(v)|! over inner v.
BigInt count_all_framings(const Dag& g);
// Calls fn on every framing; stops early when fn returns false.
void for_each_framing(const Dag& g, const std::function<bool(const Framing&)>& fn);
std::vector<Framing> brute_force_ample_framings(const Dag& g);

}  // namespace flowtri

#endif  // FLOWTRI_FRAMING_HPP
