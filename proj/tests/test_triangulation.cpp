#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "flowtri/triangulation.hpp"

using namespace flowtri;

TEST_CASE("G(2,7) triangulation") {
  Dag g = fixtures::g27_full();
  FramedDag fd(g, paper_g27_framing(g));
  Triangulation t = maximal_cliques(fd);
  CHECK(t.routes.size() == 13);
  CHECK(t.exceptional.size() == 3);
  CHECK(t.cliques.size() == 16);
  for (const Clique& c : t.cliques) {
    CHECK(c.size() == 6);
    CHECK(verify_unimodular(g, t.routes, c));
    for (int e : t.exceptional) CHECK(std::binary_search(c.begin(), c.end(), e));
  }
  DualGraph dg = dual_graph(t.cliques);
  CHECK(dg.edges.size() == 24);
  for (int d : dg.degree()) CHECK(d == 3);
  CHECK(cliques_by_flips(t) == t.cliques);
}

TEST_CASE("flips are involutions and match the dual graph") {
  Dag g = fixtures::g27_full();
  FramedDag fd(g, paper_g27_framing(g));
  Triangulation t = maximal_cliques(fd);
  DualGraph dg = dual_graph(t.cliques);
  std::set<std::pair<int, int>> edges;
  for (const auto& e : dg.edges) edges.insert({e.a, e.b});
  for (int i = 0; i < static_cast<int>(t.cliques.size()); ++i) {
    const Clique& c = t.cliques[i];
    int flips = 0;
    for (int r : c) {
      bool exc = std::binary_search(t.exceptional.begin(), t.exceptional.end(), r);
      if (exc) {
        CHECK_FALSE(try_flip(t, c, r).has_value());
        CHECK_THROWS_AS(flip(t, c, r), Error);
        continue;
      }
      Flip f = flip(t, c, r);
      ++flips;
      Flip back = flip(t, f.clique, f.added);
      CHECK(back.clique == c);
      CHECK(back.added == r);
      int j = static_cast<int>(std::lower_bound(t.cliques.begin(), t.cliques.end(), f.clique) - t.cliques.begin());
      CHECK(edges.count({std::min(i, j), std::max(i, j)}) == 1);
    }
    CHECK(flips == 3);
  }
}

TEST_CASE("car(8) core triangulation") {
  Dag g = fixtures::car8_core();
  FramedDag fd(g, length_framing(g));
  Triangulation t = maximal_cliques(fd);
  CHECK(t.exceptional.size() == 5);
  // The nine-route clique: the exceptional routes with 123456, 13456, 1456
  // and 156 in the usual labels, parallel edges chosen to avoid conflicts.
  std::set<std::vector<VertexId>> extra = {{1, 3, 4, 5, 6, 7}, {1, 4, 5, 6, 7}, {1, 5, 6, 7}, {1, 6, 7}};
  CHECK(flow_dims(g).flow_polytope + 1 == 9);
  int found = 0;
  for (const Clique& c : t.cliques) {
    std::set<std::vector<VertexId>> walks;
    for (int r : c)
      if (!std::binary_search(t.exceptional.begin(), t.exceptional.end(), r))
        walks.insert(path_vertices(g, t.routes[r]));
    if (walks == extra) ++found;
  }
  CHECK(found == 1);
  for (const Clique& c : t.cliques) CHECK(verify_unimodular(g, t.routes, c));
  DualGraph dg = dual_graph(t.cliques);
  for (int d : dg.degree()) CHECK(d == 4);
  CHECK(cliques_by_flips(t) == t.cliques);
}

TEST_CASE("single route and negative control") {
  Dag one = fixtures::from_pairs({{1, 2}});
  FramedDag fd(one, id_framing(one));
  Triangulation t = maximal_cliques(fd);
  CHECK(t.cliques.size() == 1);
  CHECK(t.cliques[0].size() == 1);
  CHECK(verify_unimodular(one, t.routes, t.cliques[0]));
  CHECK(dual_graph(t.cliques).edges.empty());

  Dag g = fixtures::g27_full();
  Triangulation t27 = maximal_cliques(FramedDag(g, paper_g27_framing(g)));
  Clique c = t27.cliques[0];
  c.pop_back();
  CHECK_THROWS_AS(verify_unimodular(g, t27.routes, c), Error);
  // All thirteen routes taken as a "clique".
  Clique all(13);
  for (int i = 0; i < 13; ++i) all[i] = i;
  CHECK_THROWS_AS(verify_unimodular(g, t27.routes, all), Error);
}
