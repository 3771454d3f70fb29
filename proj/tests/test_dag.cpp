#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "flowtri/dag.hpp"
#include "flowtri/random_dags.hpp"

using namespace flowtri;
using fixtures::from_pairs;

TEST_CASE("classify and dims on small graphs") {
  Dag e = from_pairs({{1, 2}});
  auto c = classify_vertices(e);
  CHECK(c.sources == std::vector<VertexId>{1});
  CHECK(c.sinks == std::vector<VertexId>{2});
  CHECK(c.inner.empty());
  CHECK(flow_dims(e).flow_space == 1);
  CHECK(flow_dims(e).flow_polytope == 0);
  CHECK(enumerate_routes(e).size() == 1);
  CHECK(is_full(e));
}

TEST_CASE("car(8) shape") {
  Dag g = make_car(8);
  auto c = classify_vertices(g);
  CHECK(c.sources == std::vector<VertexId>{1});
  CHECK(c.sinks == std::vector<VertexId>{8});
  CHECK(c.inner == std::vector<VertexId>{2, 3, 4, 5, 6, 7});
  CHECK(g.num_edges() == 17);
  CHECK(flow_dims(g).flow_space == 11);
  CHECK(flow_dims(g).flow_polytope == 10);
  CHECK_FALSE(is_full(g));
  CHECK(is_valid(g));
  // Edge order: (1,3) second, (3,4) eighth, (4,8) fourteenth.
  CHECK(g.edge(1).tail == 1);
  CHECK(g.edge(1).head == 3);
  CHECK(g.edge(7).tail == 3);
  CHECK(g.edge(7).head == 4);
  CHECK(g.edge(13).tail == 4);
  CHECK(g.edge(13).head == 8);
}

TEST_CASE("car(8) contraction") {
  auto tr = complete_contraction(make_car(8));
  const Dag& h = tr.result;
  CHECK(h.vertices() == std::vector<VertexId>{1, 3, 4, 5, 6, 7});
  CHECK(h.num_edges() == 15);
  CHECK(is_full(h));
  CHECK(idle_edges(h).empty());
  int ss = 0;
  for (const Edge& e : h.edges())
    if (h.is_source(e.tail) && h.is_sink(e.head)) ++ss;
  CHECK(ss == 2);
  Dag core = fixtures::car8_core();
  CHECK(core.num_edges() == 13);
  CHECK(core.vertices().size() == 6);
  // Parallel pairs 1->3 (source side) and 6->7 (sink side).
  auto count = [&](VertexId t, VertexId hd) {
    return std::count_if(core.edges().begin(), core.edges().end(),
                         [&](const Edge& e) { return e.tail == t && e.head == hd; });
  };
  CHECK(count(1, 3) == 2);
  CHECK(count(6, 7) == 2);
  CHECK(enumerate_routes(make_car(8)).size() == enumerate_routes(h).size());
}

TEST_CASE("G(2,7) contraction") {
  Dag h = fixtures::g27_full();
  CHECK(h.vertices() == std::vector<VertexId>{1, 3, 4, 5, 6});
  CHECK(h.num_edges() == 9);
  CHECK(classify_vertices(h).inner == std::vector<VertexId>{3, 4, 5});
  CHECK(flow_dims(h).flow_space == 6);
  CHECK(flow_dims(h).flow_polytope == 5);
  CHECK(enumerate_routes(h).size() == 13);
  CHECK(enumerate_routes(make_gkn(2, 7)).size() == 13);
}

TEST_CASE("G(3,10) idle edges") {
  Dag g = make_gkn(3, 10);
  std::vector<std::pair<VertexId, VertexId>> idle;
  for (EdgeId e : idle_edges(g)) idle.push_back({g.tail(e), g.head(e)});
  std::sort(idle.begin(), idle.end());
  CHECK(idle == std::vector<std::pair<VertexId, VertexId>>{{1, 2}, {2, 3}, {8, 9}, {9, 10}});
  auto tr = complete_contraction(g);
  CHECK(tr.result.vertices() == std::vector<VertexId>{1, 4, 5, 6, 7, 8});
  CHECK(is_full(tr.result));
  CHECK(is_valid(g));
  CHECK(idle_edges_form_forest(g));
}

TEST_CASE("non-valid graph") {
  // One inner vertex with three in- and three out-edges.
  Dag g = from_pairs({{1, 2}, {1, 2}, {1, 2}, {2, 3}, {2, 3}, {2, 3}});
  CHECK(idle_edges(g).empty());
  CHECK_FALSE(is_full(g));
  CHECK_FALSE(is_valid(g));
}

TEST_CASE("path graph") {
  Dag g = from_pairs({{1, 2}, {2, 3}});
  CHECK(idle_edges(g).size() == 2);
  auto tr = complete_contraction(g);
  CHECK(tr.result.num_edges() == 1);
  CHECK(is_full(tr.result));
}

TEST_CASE("validation errors") {
  Dag loop;
  CHECK_THROWS_AS(loop.add_edge(1, 1), Error);
  Dag cyc = from_pairs({{1, 2}, {2, 3}, {3, 1}});
  CHECK_THROWS_AS(cyc.validate(), Error);
  Dag iso = from_pairs({{1, 2}});
  iso.add_vertex(5);
  CHECK_THROWS_AS(iso.validate(), Error);
  CHECK_THROWS_AS(enumerate_routes(make_gkn(2, 30), 100), Error);
}

TEST_CASE("contraction is confluent on random valid graphs") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Dag g = random_valid_dag(rng, 3);
    auto base = complete_contraction(g);
    auto shuffled = complete_contraction(g, [&](const std::vector<EdgeId>& idle) {
      return idle[std::uniform_int_distribution<std::size_t>(0, idle.size() - 1)(rng)];
    });
    CHECK(is_full(base.result));
    CHECK(is_full(shuffled.result));
    CHECK(isomorphic(base.result, shuffled.result));
    CHECK(enumerate_routes(g).size() == enumerate_routes(base.result).size());
  }
}

TEST_CASE("idle edges of a valid multigraph can close an undirected cycle") {
  // s -> v twice and v -> t twice, with both source edges expanded.
  Dag g = from_pairs({{1, 3}, {3, 2}, {1, 4}, {4, 2}, {2, 5}, {2, 5}});
  CHECK(is_valid(g));
  CHECK(idle_edges(g).size() == 4);
  CHECK_FALSE(idle_edges_form_forest(g));
  CHECK(idle_edges_form_forest(make_car(8)));
  CHECK(idle_edges_form_forest(make_gkn(3, 10)));
}
