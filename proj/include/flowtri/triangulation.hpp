#ifndef FLOWTRI_TRIANGULATION_HPP
#define FLOWTRI_TRIANGULATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "flowtri/framing.hpp"

namespace flowtri {

// Sorted route indices.
using Clique = std::vector<int>;

struct Caps {
  std::size_t max_routes = 1000000;
  std::size_t max_cliques = 1000000;
};

struct Triangulation {
  std::vector<Route> routes;
  std::vector<std::vector<bool>> coherence;
  std::vector<int> exceptional;
  // Maximal cliques, lexicographic.
  std::vector<Clique> cliques;
};

// Maximal cliques of an undirected graph given as adjacency rows, restricted
// to supersets of `forced` (which must be adjacent to everything). Sorted.
std::vector<Clique> maximal_cliques_of_graph(const std::vector<std::vector<bool>>& adj,
                                             const std::vector<int>& forced,
                                             std::size_t max_cliques = 1000000);

// Bron-Kerbosch with pivoting on the coherence graph; every clique contains
// the exceptional routes.
Triangulation maximal_cliques(const FramedDag& fd, const Caps& caps = {});

struct Flip {
  Clique clique;
  int removed;
  int added;
};

// The other maximal clique containing c minus r, if there is one. Throws
// NoFlip when more than one route could replace r.
std::optional<Flip> try_flip(const Triangulation& t, const Clique& c, int r);
// As try_flip, but a missing flip for a non-exceptional route is a NoFlip error.
Flip flip(const Triangulation& t, const Clique& c, int r);

// Breadth-first closure of the first clique under flips.
std::vector<Clique> cliques_by_flips(const Triangulation& t, std::size_t max_cliques = 1000000);

// True iff the simplex on the routes' characteristic vectors has normalized
// volume 1 in the lattice of integer flows. NotSimplex if the size is not
// dim + 1.
bool verify_unimodular(const Dag& g, const std::vector<Route>& routes, const Clique& c);

struct DualEdge {
  int a;
  int b;
  int route_a;  // route of clique a missing from b
  int route_b;  // route of clique b missing from a
};

struct DualGraph {
  std::size_t nodes = 0;
  std::vector<DualEdge> edges;
  std::vector<int> degree() const;
};

DualGraph dual_graph(const std::vector<Clique>& cliques);

}  // namespace flowtri

#endif  // FLOWTRI_TRIANGULATION_HPP
