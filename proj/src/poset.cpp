#include "flowtri/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace flowtri {

std::string walk_string(const Walk& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i)
    s += i % 2 ? " -e" + std::to_string(w[i]) + "-> " : std::to_string(w[i]);
  return s;
}

namespace {

struct Component {
  Walk walk;
  // Entering and exiting edge of each route, -1 at a source or sink.
  EdgeId in1 = -1, out1 = -1, in2 = -1, out2 = -1;
};

std::vector<Component> components(const Dag& g, const Route& r1, const Route& r2) {
  auto v1 = path_vertices(g, r1);
  auto v2 = path_vertices(g, r2);
  std::map<VertexId, int> pos2;
  for (int i = 0; i < static_cast<int>(v2.size()); ++i) pos2[v2[i]] = i;
  std::set<EdgeId> e2(r2.begin(), r2.end());

  std::vector<Component> out;
  int n = static_cast<int>(v1.size());
  int i = 0;
  while (i < n) {
    if (!pos2.count(v1[i])) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < n && e2.count(r1[j])) ++j;
    Component c;
    for (int k = i; k <= j; ++k) {
      c.walk.push_back(v1[k]);
      if (k < j) c.walk.push_back(r1[k]);
    }
    int a = pos2.at(v1[i]), b = pos2.at(v1[j]);
    c.in1 = i > 0 ? r1[i - 1] : -1;
    c.out1 = j < n - 1 ? r1[j] : -1;
    c.in2 = a > 0 ? r2[a - 1] : -1;
    c.out2 = b < static_cast<int>(v2.size()) - 1 ? r2[b] : -1;
    out.push_back(std::move(c));
    i = j + 1;
  }
  return out;
}

}  // namespace

std::vector<Walk> common_components(const Dag& g, const Route& r1, const Route& r2) {
  std::vector<Walk> out;
  for (auto& c : components(g, r1, r2)) out.push_back(c.walk);
  return out;
}

PairOrientation orient_pair(const Dag& g, const std::map<EdgeId, int>& labels, const Route& r1,
                            const Route& r2) {
  std::vector<PairOrientation> found;
  for (const auto& c : components(g, r1, r2)) {
    if (c.in1 < 0 || c.out1 < 0 || c.in2 < 0 || c.out2 < 0) continue;
    int a = labels.at(c.in1), b = labels.at(c.out1), x = labels.at(c.in2), y = labels.at(c.out2);
    if (a == 2 && b == 1 && x == 1 && y == 2) found.push_back({true, c.walk});
    if (a == 1 && b == 2 && x == 2 && y == 1) found.push_back({false, c.walk});
  }
  if (found.empty()) fail(ErrorKind::NoQualifyingComponent, "adjacent routes have no qualifying component");
  if (found.size() > 1)
    fail(ErrorKind::MultipleQualifyingComponents, "adjacent routes have " + std::to_string(found.size()) +
                                                      " qualifying components");
  return found.front();
}

std::vector<int> topological_nodes(const TauPoset& p) {
  std::size_t n = p.nodes.size();
  std::vector<int> indeg(n);
  for (std::size_t v = 0; v < n; ++v) indeg[v] = p.dcov(static_cast<int>(v));
  std::vector<int> ready, order;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<>());
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int e : p.up[v])
      if (--indeg[p.edges[e].upper] == 0) ready.push_back(p.edges[e].upper);
  }
  if (order.size() != n) fail(ErrorKind::CycleDetected, "the oriented dual graph has a directed cycle");
  return order;
}

TauPoset build_poset(const FramedDag& fd, const Triangulation& t) {
  const Dag& g = fd.dag();
  auto labels = edge_labeling(fd);
  TauPoset p;
  p.nodes = t.cliques;
  p.down.assign(p.nodes.size(), {});
  p.up.assign(p.nodes.size(), {});
  for (const DualEdge& d : dual_graph(t.cliques).edges) {
    PairOrientation o = orient_pair(g, labels, t.routes[d.route_a], t.routes[d.route_b]);
    HasseEdge h = o.first_is_upper ? HasseEdge{d.b, d.a, o.brick} : HasseEdge{d.a, d.b, o.brick};
    int id = static_cast<int>(p.edges.size());
    p.down[h.upper].push_back(id);
    p.up[h.lower].push_back(id);
    p.edges.push_back(std::move(h));
  }

  // Strict upper sets, filled from the top of a topological order.
  auto order = topological_nodes(p);
  std::vector<std::vector<bool>> above(p.nodes.size(), std::vector<bool>(p.nodes.size()));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int e : p.up[*it]) {
      int w = p.edges[e].upper;
      above[*it][w] = true;
      for (std::size_t k = 0; k < p.nodes.size(); ++k)
        if (above[w][k]) above[*it][k] = true;
    }
  }
  for (const HasseEdge& h : p.edges)
    for (int e : p.up[h.lower]) {
      int w = p.edges[e].upper;
      if (w != h.upper && above[w][h.upper])
        fail(ErrorKind::NotTransitivelyReduced, "cover " + std::to_string(h.lower) + " < " +
                                                    std::to_string(h.upper) + " is implied by a longer chain");
    }
  return p;
}

bool is_linear_extension(const TauPoset& p, const std::vector<int>& ext) {
  if (ext.size() != p.nodes.size()) return false;
  std::vector<int> pos(p.nodes.size(), -1);
  for (int i = 0; i < static_cast<int>(ext.size()); ++i) {
    if (ext[i] < 0 || ext[i] >= static_cast<int>(pos.size()) || pos[ext[i]] >= 0) return false;
    pos[ext[i]] = i;
  }
  for (const HasseEdge& h : p.edges)
    if (pos[h.lower] > pos[h.upper]) return false;
  return true;
}

std::vector<int> default_linear_extension(const TauPoset& p) {
  std::vector<int> height(p.nodes.size(), 0);
  for (int v : topological_nodes(p))
    for (int e : p.up[v]) height[p.edges[e].upper] = std::max(height[p.edges[e].upper], height[v] + 1);
  std::vector<int> ext(p.nodes.size());
  std::iota(ext.begin(), ext.end(), 0);
  std::stable_sort(ext.begin(), ext.end(), [&](int a, int b) { return height[a] < height[b]; });
  return ext;
}

std::vector<int> random_linear_extension(const TauPoset& p, Rng& rng) {
  std::vector<int> indeg(p.nodes.size());
  std::vector<int> ready, ext;
  for (std::size_t v = 0; v < p.nodes.size(); ++v) {
    indeg[v] = p.dcov(static_cast<int>(v));
    if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
  }
  while (!ready.empty()) {
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
    int v = ready[k];
    ready.erase(ready.begin() + static_cast<long>(k));
    ext.push_back(v);
    for (int e : p.up[v])
      if (--indeg[p.edges[e].upper] == 0) ready.push_back(p.edges[e].upper);
  }
  if (ext.size() != p.nodes.size()) fail(ErrorKind::CycleDetected, "the oriented dual graph has a directed cycle");
  return ext;
}

namespace {

HStarVector tally(const std::vector<int>& values) {
  HStarVector h;
  for (int v : values) {
    if (static_cast<int>(h.size()) <= v) h.resize(v + 1, 0);
    h[v] += 1;
  }
  return h;
}

}  // namespace

HStarVector dcov_polynomial(const TauPoset& p) {
  std::vector<int> d;
  for (std::size_t v = 0; v < p.nodes.size(); ++v) d.push_back(p.dcov(static_cast<int>(v)));
  return tally(d);
}

HStarVector ucov_polynomial(const TauPoset& p) {
  std::vector<int> u;
  for (std::size_t v = 0; v < p.nodes.size(); ++v) u.push_back(p.ucov(static_cast<int>(v)));
  return tally(u);
}

HStarVector h_from_shelling(const TauPoset& p, const std::vector<int>& ext) {
  if (!is_linear_extension(p, ext)) fail(ErrorKind::NotLinearExtension, "not a linear extension of the poset");
  std::vector<int> pos(p.nodes.size());
  for (int i = 0; i < static_cast<int>(ext.size()); ++i) pos[ext[i]] = i;
  std::map<Clique, std::vector<int>> ridges;
  for (int v = 0; v < static_cast<int>(p.nodes.size()); ++v)
    for (std::size_t k = 0; k < p.nodes[v].size(); ++k) {
      Clique r = p.nodes[v];
      r.erase(r.begin() + static_cast<long>(k));
      ridges[r].push_back(v);
    }
  std::vector<int> sizes;
  for (int v : ext) {
    int restriction = 0;
    for (std::size_t k = 0; k < p.nodes[v].size(); ++k) {
      Clique r = p.nodes[v];
      r.erase(r.begin() + static_cast<long>(k));
      for (int w : ridges.at(r))
        if (pos[w] < pos[v]) {
          ++restriction;
          break;
        }
    }
    sizes.push_back(restriction);
  }
  return tally(sizes);
}

std::vector<int> kappa_map(const TauPoset& p) {
  auto bricks = [&](const std::vector<int>& edge_ids) {
    std::vector<Walk> b;
    for (int e : edge_ids) b.push_back(p.edges[e].brick);
    std::sort(b.begin(), b.end());
    return b;
  };
  std::map<std::vector<Walk>, int> by_up, by_down;
  for (int v = 0; v < static_cast<int>(p.nodes.size()); ++v) {
    if (!by_up.emplace(bricks(p.up[v]), v).second)
      fail(ErrorKind::AmbiguousKappaImage, "two nodes share their up-edge bricks");
    if (!by_down.emplace(bricks(p.down[v]), v).second)
      fail(ErrorKind::AmbiguousKappaImage, "two nodes share their down-edge bricks");
  }
  std::vector<int> k(p.nodes.size());
  for (int v = 0; v < static_cast<int>(p.nodes.size()); ++v) {
    auto it = by_up.find(bricks(p.down[v]));
    if (it == by_up.end())
      fail(ErrorKind::NoKappaImage, "no node has the down-edge bricks of node " + std::to_string(v) + " as up-edge bricks");
    k[v] = it->second;
  }
  return k;
}

int kappa(const TauPoset& p, int node) { return kappa_map(p).at(node); }

std::optional<std::map<EdgeId, EdgeId>> reversal_edge_map(const Dag& g, int n) {
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> by_orig;
  for (const Edge& e : g.edges()) by_orig[{e.orig_tail, e.orig_head}].push_back(e.id);
  std::map<EdgeId, EdgeId> m;
  for (const auto& [ends, ids] : by_orig) {
    auto it = by_orig.find({n + 1 - ends.second, n + 1 - ends.first});
    if (it == by_orig.end() || it->second.size() != ids.size()) return std::nullopt;
    for (std::size_t i = 0; i < ids.size(); ++i) m[ids[i]] = it->second[i];
  }
  return m;
}

std::optional<std::vector<int>> order_reversing_image(const TauPoset& p, const Dag& g,
                                                      const std::vector<Route>& routes,
                                                      const std::map<EdgeId, EdgeId>& edge_map) {
  std::map<Route, int> route_index;
  for (int i = 0; i < static_cast<int>(routes.size()); ++i) route_index[routes[i]] = i;
  std::map<Clique, int> node_index;
  for (int v = 0; v < static_cast<int>(p.nodes.size()); ++v) node_index[p.nodes[v]] = v;

  std::vector<int> image(p.nodes.size());
  for (int v = 0; v < static_cast<int>(p.nodes.size()); ++v) {
    Clique c;
    for (int r : p.nodes[v]) {
      Route m;
      for (auto it = routes[r].rbegin(); it != routes[r].rend(); ++it) m.push_back(edge_map.at(*it));
      if (!is_route(g, m)) return std::nullopt;
      auto ri = route_index.find(m);
      if (ri == route_index.end()) return std::nullopt;
      c.push_back(ri->second);
    }
    std::sort(c.begin(), c.end());
    auto ni = node_index.find(c);
    if (ni == node_index.end()) return std::nullopt;
    image[v] = ni->second;
  }
  std::set<std::pair<int, int>> covers;
  for (const HasseEdge& h : p.edges) covers.insert({h.lower, h.upper});
  for (const HasseEdge& h : p.edges)
    if (!covers.count({image[h.upper], image[h.lower]})) return std::nullopt;
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return image;
}

}  // namespace flowtri
