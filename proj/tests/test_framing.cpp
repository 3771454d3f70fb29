#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "flowtri/framing.hpp"
#include "flowtri/random_dags.hpp"

using namespace flowtri;
using fixtures::route_through;

namespace {

std::string component_word(const Dag& g, const DecompositionComponent& c) {
  std::string s;
  for (VertexId v : c.vertices) {
    if (g.is_source(v)) s += 's';
    else if (g.is_sink(v)) s += 't';
    else if (v == 10) s += 'X';
    else s += std::to_string(v);
  }
  return s;
}

}  // namespace

TEST_CASE("path comparisons on the car(8) core") {
  Dag g = fixtures::car8_core();
  FramedDag fd(g, length_framing(g));
  // Usual labels 346 and 3456 are 457 and 4567 here.
  Route p = route_through(g, {4, 5, 7});
  Route q = route_through(g, {4, 5, 6, 7});
  CHECK(compare_paths_at(fd, 4, Side::Out, p, q) == Ordering::Less);
  Route a = route_through(g, {1, 5});
  Route b = route_through(g, {1, 3, 4, 5});
  CHECK(compare_paths_at(fd, 5, Side::In, a, b) == Ordering::Less);
  CHECK(compare_paths_at(fd, 5, Side::In, b, b) == Ordering::Equal);
  CHECK_THROWS_AS(compare_paths_at(fd, 6, Side::In, a, b), Error);
}

TEST_CASE("coherence examples on the car(8) core") {
  Dag g = fixtures::car8_core();
  FramedDag fd(g, length_framing(g));
  auto r1346 = route_through(g, {1, 4, 5, 7});
  auto r1236 = route_through(g, {1, 3, 4, 7});
  auto c = routes_coherent(fd, r1346, r1236);
  CHECK_FALSE(c.coherent);
  CHECK(c.conflicts == std::vector<VertexId>{4});
  auto r13456 = route_through(g, {1, 4, 5, 6, 7});
  auto r12346 = route_through(g, {1, 3, 4, 5, 7});
  c = routes_coherent(fd, r13456, r12346);
  CHECK(c.conflicts == std::vector<VertexId>{4, 5});
  CHECK(coherent(fd, route_through(g, {1, 4, 7}), route_through(g, {1, 3, 4, 5, 6, 7})));
  CHECK(coherent(fd, r1346, r1346));
}

TEST_CASE("exceptional routes and labels on the car(8) core") {
  Dag g = fixtures::car8_core();
  FramedDag fd(g, length_framing(g));
  auto ex = exceptional_routes(fd);
  CHECK(ex.size() == 5);
  CHECK(is_ample(fd));
  auto lab = edge_labeling(fd);
  for (const Route& r : ex) {
    std::set<int> ls;
    for (EdgeId e : r) ls.insert(lab[e]);
    CHECK(ls.size() == 1);
  }
  std::map<EdgeId, int> cover;
  for (const Route& r : ex)
    for (EdgeId e : r) ++cover[e];
  for (const Edge& e : g.edges()) CHECK(cover[e.id] == 1);
  auto rev = edge_labeling(FramedDag(g, reverse_framing(length_framing(g))));
  for (auto [e, l] : lab) CHECK(rev[e] == 3 - l);
}

TEST_CASE("breaking one out-order makes the framing non-ample") {
  Dag g = fixtures::car8_core();
  Framing f = length_framing(g);
  std::reverse(f.out_order[4].begin(), f.out_order[4].end());
  FramedDag fd(g, f);
  CHECK_FALSE(is_ample(fd));
  CHECK_THROWS_AS(edge_labeling(fd), Error);
}

TEST_CASE("exceptional-set classification") {
  Dag g = fixtures::car8_core();
  auto bad = check_exceptional_set(
      g, {route_through(g, {1, 3, 4, 5, 6, 7}), route_through(g, {1, 4, 7}),
          route_through(g, {1, 5, 7}), route_through(g, {1, 3, 4, 7})});
  CHECK_FALSE(bad.ok);
  auto good = check_exceptional_set(
      g, {route_through(g, {1, 3, 4, 5, 6, 7}), route_through(g, {1, 3, 7}, {1}),
          route_through(g, {1, 4, 7}), route_through(g, {1, 5, 7}), route_through(g, {1, 6, 7}, {0, 1})});
  REQUIRE(good.ok);
  FramedDag fd(g, *good.framing);
  CHECK(is_ample(fd));
  CHECK(exceptional_routes(fd).size() == 5);
  Dag one = fixtures::from_pairs({{1, 2}});
  CHECK(check_exceptional_set(one, enumerate_routes(one)).ok);
}

TEST_CASE("decomposition of the source/sink example") {
  Dag g = fixtures::fig8();
  REQUIRE(is_full(g));
  auto dec = path_cycle_decomposition(g);
  std::vector<std::string> words;
  for (const auto& c : dec.components) words.push_back(component_word(g, c));
  CHECK(words == std::vector<std::string>{"s1s", "s2s", "s3s", "s7142536s", "t58794t", "sX6t", "t8t",
                                          "t9t", "tXt"});
  CHECK(dec.M() == 9);
  CHECK(count_ample_framings(g) == 512);
  auto alt = partner_components(g);
  CHECK(alt.components.size() == dec.components.size());
}

TEST_CASE("framing counts") {
  CHECK(count_ample_framings(make_gkn(3, 10)) == 256);
  CHECK(count_ample_framings(make_gkn(2, 7)) == 32);
  CHECK(count_ample_framings(fixtures::from_pairs({{1, 2}})) == 1);
  auto reach = idle_reachability(make_gkn(3, 10));
  CHECK(reach.v1 == std::vector<VertexId>{2, 3});
  CHECK(reach.v2 == std::vector<VertexId>{8, 9});
}

TEST_CASE("enumeration agrees with brute force on small full graphs") {
  Rng rng(11);
  RandomFullParams p;
  p.max_edges = 10;
  p.max_inner = 3;
  for (int trial = 0; trial < 30; ++trial) {
    Dag g = random_full_dag(rng, p);
    auto tagged = enumerate_ample_framings(g);
    std::set<Framing> a, b;
    for (const auto& t : tagged) {
      a.insert(t.framing);
      CHECK(is_ample(FramedDag(g, t.framing)));
    }
    for (const auto& f : brute_force_ample_framings(g)) b.insert(f);
    CHECK(a == b);
    CHECK(BigInt(a.size()) == count_ample_framings(g));
  }
}

TEST_CASE("lifts agree with brute force on valid graphs") {
  Rng rng(5);
  RandomFullParams p;
  p.max_edges = 8;
  p.max_inner = 2;
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 20; ++trial) {
    Dag g = random_valid_dag(rng, 2, p);
    if (g.num_edges() > 10 || count_all_framings(g) > 20000) continue;
    ++checked;
    std::set<Framing> a, b;
    for (const auto& t : enumerate_ample_framings(g)) a.insert(t.framing);
    for (const auto& f : brute_force_ample_framings(g)) b.insert(f);
    CHECK(a == b);
    CHECK(BigInt(b.size()) == count_ample_framings(g));
  }
  CHECK(checked >= 10);
}

TEST_CASE("car(8) lift of the length framing") {
  Dag g = make_car(8);
  auto tr = complete_contraction(g);
  auto lifts = enumerate_lifts(g, tr, length_framing(tr.result));
  // Vertex 2 has a free out-order and vertex 7 a free in-order.
  CHECK(lifts.size() == 4);
  Framing f = length_framing(g);
  CHECK(std::find(lifts.begin(), lifts.end(), f) != lifts.end());
  FramedDag fd(g, f);
  CHECK(is_ample(fd));
  // The two source-to-sink edges add two exceptional routes to the five of the core.
  CHECK(exceptional_routes(fd).size() == 7);
  for (const Framing& l : lifts) CHECK(exceptional_routes(FramedDag(g, l)).size() == 7);
}
