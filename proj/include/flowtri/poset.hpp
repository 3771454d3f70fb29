#ifndef FLOWTRI_POSET_HPP
#define FLOWTRI_POSET_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flowtri/hvector.hpp"
#include "flowtri/random_dags.hpp"
#include "flowtri/triangulation.hpp"

namespace flowtri {

// Alternating vertex/edge sequence v0 e0 v1 ... vk; a single vertex is {v0}.
using Walk = std::vector<int>;

std::string walk_string(const Walk& w);

// Maximal common subwalks of two routes, in the order they occur.
std::vector<Walk> common_components(const Dag& g, const Route& r1, const Route& r2);

struct PairOrientation {
  // True when the clique holding r1 is the upper one.
  bool first_is_upper;
  Walk brick;
};

// The component of r1 and r2 entered on a 2-labelled edge and left on a
// 1-labelled edge by one route, and the other way round by the other.
// NoQualifyingComponent / MultipleQualifyingComponents otherwise.
PairOrientation orient_pair(const Dag& g, const std::map<EdgeId, int>& labels, const Route& r1,
                            const Route& r2);

struct HasseEdge {
  int lower;
  int upper;
  Walk brick;
};

struct TauPoset {
  std::vector<Clique> nodes;
  std::vector<HasseEdge> edges;
  // Edge indices per node.
  std::vector<std::vector<int>> down;
  std::vector<std::vector<int>> up;

  int dcov(int v) const { return static_cast<int>(down[v].size()); }
  int ucov(int v) const { return static_cast<int>(up[v].size()); }
};

// Orients every dual edge. CycleDetected if the orientation has a directed
// cycle, NotTransitivelyReduced if some oriented edge is implied by others.
TauPoset build_poset(const FramedDag& fd, const Triangulation& t);

// Topological order of the nodes; CycleDetected if none exists.
std::vector<int> topological_nodes(const TauPoset& p);
bool is_linear_extension(const TauPoset& p, const std::vector<int>& ext);
// Sorted by (height, node id).
std::vector<int> default_linear_extension(const TauPoset& p);
std::vector<int> random_linear_extension(const TauPoset& p, Rng& rng);

// Coefficient i counts nodes with i lower covers.
HStarVector dcov_polynomial(const TauPoset& p);
HStarVector ucov_polynomial(const TauPoset& p);

// h_i = number of facets whose restriction in the shelling order `ext` has i
// elements. Restrictions are computed from ridges, not from the cover edges.
HStarVector h_from_shelling(const TauPoset& p, const std::vector<int>& ext);

// kappa(T) is the node whose up-edge bricks are the down-edge bricks of T.
// NoKappaImage / AmbiguousKappaImage when that node is missing or not unique.
std::vector<int> kappa_map(const TauPoset& p);
int kappa(const TauPoset& p, int node);

// Edge map of the relabelling i -> n + 1 - i of the original vertices, read
// through the original endpoints of every edge. Empty if some edge has no
// image.
std::optional<std::map<EdgeId, EdgeId>> reversal_edge_map(const Dag& g, int n);

// Maps cliques through the route reversal induced by `edge_map`. Returns the
// node permutation if it reverses every cover relation, nothing otherwise.
std::optional<std::vector<int>> order_reversing_image(const TauPoset& p, const Dag& g,
                                                      const std::vector<Route>& routes,
                                                      const std::map<EdgeId, EdgeId>& edge_map);

}  // namespace flowtri

#endif  // FLOWTRI_POSET_HPP
