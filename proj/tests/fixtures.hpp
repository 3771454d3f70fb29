#ifndef FLOWTRI_TEST_FIXTURES_HPP
#define FLOWTRI_TEST_FIXTURES_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "flowtri/dag.hpp"

namespace fixtures {

using flowtri::Dag;
using flowtri::EdgeId;
using flowtri::Route;
using flowtri::VertexId;

inline Dag from_pairs(std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  Dag g;
  for (auto [t, h] : pairs) g.add_edge(t, h);
  return g;
}

// Complete contraction of G(2,7); vertices 1,3,4,5,6 with inner 3,4,5.
inline Dag g27_full() { return flowtri::complete_contraction(flowtri::make_gkn(2, 7)).result; }

// The car(8) contraction with its two source-to-sink edges removed. Vertex
// k+1 here is vertex k of the usual drawing for k = 2..6.
inline Dag car8_core() {
  return flowtri::strip_source_sink_edges(flowtri::complete_contraction(flowtri::make_car(8)).result);
}

// Source s = 0, inner 1..10 (10 plays the role of X), sink t = 11.
inline Dag fig8() {
  return from_pairs({{0, 1}, {0, 1}, {0, 2}, {0, 2}, {0, 3}, {0, 3}, {0, 7}, {0, 6}, {0, 10},
                     {1, 4}, {1, 7}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 9}, {5, 8}, {6, 10},
                     {7, 8}, {7, 9}, {4, 11}, {5, 11}, {6, 11}, {8, 11}, {8, 11}, {9, 11},
                     {9, 11}, {10, 11}, {10, 11}});
}

// Route through the given vertices, taking the `pick`-th parallel edge at each
// step (default: smallest id).
inline Route route_through(const Dag& g, std::initializer_list<VertexId> vs,
                           std::initializer_list<int> pick = {}) {
  std::vector<VertexId> v(vs);
  std::vector<int> p(pick);
  Route r;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    int want = i < p.size() ? p[i] : 0;
    for (EdgeId e : g.out_edges(v[i]))
      if (g.head(e) == v[i + 1] && want-- == 0) {
        r.push_back(e);
        break;
      }
  }
  return r;
}

// Edge of a contraction with the given original endpoints.
inline EdgeId edge_by_orig(const Dag& g, VertexId t, VertexId h) {
  for (const auto& e : g.edges())
    if (e.orig_tail == t && e.orig_head == h) return e.id;
  return -1;
}

// Route of the G(2,7) contraction spelled with letters for original edges:
// a=(2,3) A=(1,3) b=(3,4) c=(4,5) d=(5,6) D=(5,7) B=(2,4) C=(3,5) E=(4,6).
inline Route g27_route(const Dag& g, const std::string& word) {
  Route r;
  for (char ch : word) {
    std::pair<VertexId, VertexId> p;
    switch (ch) {
      case 'a': p = {2, 3}; break;
      case 'A': p = {1, 3}; break;
      case 'b': p = {3, 4}; break;
      case 'c': p = {4, 5}; break;
      case 'd': p = {5, 6}; break;
      case 'D': p = {5, 7}; break;
      case 'B': p = {2, 4}; break;
      case 'C': p = {3, 5}; break;
      case 'E': p = {4, 6}; break;
      default: p = {0, 0};
    }
    r.push_back(edge_by_orig(g, p.first, p.second));
  }
  return r;
}

}  // namespace fixtures

#endif  // FLOWTRI_TEST_FIXTURES_HPP
