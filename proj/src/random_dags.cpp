#include "flowtri/random_dags.hpp"

#include <algorithm>
#include <numeric>

namespace flowtri {

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Rebuilds g with edge ids permuted at random and orig endpoints reset.
Dag shuffle_edge_ids(Rng& rng, const Dag& g) {
  std::vector<EdgeId> ids(g.num_edges());
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  Dag out;
  std::size_t i = 0;
  for (const Edge& e : g.edges()) out.add_edge(Edge{ids[i++], e.tail, e.head, e.tail, e.head});
  return out;
}

}  // namespace

Dag random_full_dag(Rng& rng, const RandomFullParams& p) {
  while (true) {
    int n = uniform_int(rng, p.min_inner, p.max_inner);
    int ns = uniform_int(rng, 1, p.max_sources);
    int nt = uniform_int(rng, 1, p.max_sinks);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<int> free_out(n, 2);
    for (int i = 0; i < n; ++i) {
      VertexId v = ns + 1 + i;
      for (int k = 0; k < 2; ++k) {
        std::vector<int> open;
        for (int j = 0; j < i; ++j)
          if (free_out[j] > 0) open.push_back(j);
        if (!open.empty() && coin(rng, 0.7)) {
          int j = open[uniform_int(rng, 0, static_cast<int>(open.size()) - 1)];
          --free_out[j];
          edges.push_back({ns + 1 + j, v});
        } else {
          edges.push_back({uniform_int(rng, 1, ns), v});
        }
      }
    }
    for (int j = 0; j < n; ++j)
      for (; free_out[j] > 0; --free_out[j])
        edges.push_back({ns + 1 + j, ns + n + uniform_int(rng, 1, nt)});
    if (n == 0 || coin(rng, p.bundle_prob))
      edges.push_back({uniform_int(rng, 1, ns), ns + n + uniform_int(rng, 1, nt)});
    if (static_cast<int>(edges.size()) > p.max_edges) continue;
    Dag g;
    for (auto [t, h] : edges) g.add_edge(t, h);
    return shuffle_edge_ids(rng, g);
  }
}

Dag random_idle_expansion(Rng& rng, const Dag& g) {
  while (true) {
    VertexId v = g.vertices()[uniform_int(rng, 0, static_cast<int>(g.num_vertices()) - 1)];
    const auto& ins = g.in_edges(v);
    const auto& outs = g.out_edges(v);
    // Mode 0: the new edge is the only in-edge of the new vertex.
    // Mode 1: the new edge is the only out-edge of the kept vertex.
    std::vector<int> modes;
    if (!outs.empty()) modes.push_back(0);
    if (!ins.empty()) modes.push_back(1);
    int mode = modes[uniform_int(rng, 0, static_cast<int>(modes.size()) - 1)];
    std::vector<EdgeId> moved_in, moved_out;  // edges re-attached to the new vertex
    if (mode == 0) {
      for (EdgeId e : outs)
        if (coin(rng, 0.5)) moved_out.push_back(e);
      if (moved_out.empty()) moved_out.push_back(outs[uniform_int(rng, 0, static_cast<int>(outs.size()) - 1)]);
    } else {
      moved_out = outs;
      std::vector<EdgeId> keep;
      for (EdgeId e : ins) (coin(rng, 0.5) ? keep : moved_in).push_back(e);
      if (keep.empty()) {
        std::size_t k = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(moved_in.size()) - 1));
        moved_in.erase(moved_in.begin() + static_cast<long>(k));
      }
    }
    VertexId w = g.next_vertex_id();
    Dag out;
    for (const Edge& e : g.edges()) {
      Edge ne = e;
      if (std::find(moved_in.begin(), moved_in.end(), e.id) != moved_in.end()) ne.head = w;
      if (std::find(moved_out.begin(), moved_out.end(), e.id) != moved_out.end()) ne.tail = w;
      ne.orig_tail = ne.tail;
      ne.orig_head = ne.head;
      out.add_edge(ne);
    }
    out.add_edge(v, w);
    EdgeId fresh = out.next_edge_id() - 1;
    if (!is_idle(out, fresh)) continue;
    return out;
  }
}

Dag random_valid_dag(Rng& rng, int expansions, const RandomFullParams& p) {
  Dag g = random_full_dag(rng, p);
  for (int i = 0; i < expansions; ++i) g = random_idle_expansion(rng, g);
  return shuffle_edge_ids(rng, g);
}

}  // namespace flowtri
