#include "flowtri/gentle.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "flowtri/triangulation.hpp"

namespace flowtri {

void Quiver::add_node(int v) {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (it == nodes_.end() || *it != v) nodes_.insert(it, v);
}

void Quiver::add_arrow(const Arrow& a) {
  if (index_.count(a.id)) fail(ErrorKind::BadInput, "duplicate arrow id " + std::to_string(a.id));
  add_node(a.source);
  add_node(a.target);
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), a.id,
                             [](const Arrow& x, int id) { return x.id < id; });
  arrows_.insert(it, a);
  index_.clear();
  for (std::size_t i = 0; i < arrows_.size(); ++i) index_[arrows_[i].id] = i;
}

void Quiver::add_relation(int a, int b) {
  if (arrow(a).target != arrow(b).source)
    fail(ErrorKind::NotGentle, "relation on non-composable arrows");
  relations_.insert({a, b});
}

bool Quiver::has_node(int v) const { return std::binary_search(nodes_.begin(), nodes_.end(), v); }

const Arrow& Quiver::arrow(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail(ErrorKind::BadInput, "unknown arrow " + std::to_string(id));
  return arrows_[it->second];
}

std::vector<int> Quiver::in_arrows(int v) const {
  std::vector<int> out;
  for (const Arrow& a : arrows_)
    if (a.target == v) out.push_back(a.id);
  return out;
}

std::vector<int> Quiver::out_arrows(int v) const {
  std::vector<int> out;
  for (const Arrow& a : arrows_)
    if (a.source == v) out.push_back(a.id);
  return out;
}

int Quiver::next_arrow_id() const { return arrows_.empty() ? 0 : arrows_.back().id + 1; }
int Quiver::next_node_id() const { return nodes_.empty() ? 0 : nodes_.back() + 1; }

Quiver build_quiver(const FramedDag& fd) {
  const Dag& g = fd.dag();
  if (!is_full(g)) fail(ErrorKind::NotFull, "the quiver needs a full graph");
  if (!is_ample(fd)) fail(ErrorKind::NotAmple, "the quiver needs an ample framing");
  auto labels = edge_labeling(fd);
  Quiver q;
  for (VertexId v : g.vertices())
    if (g.is_inner(v)) q.add_node(v);
  for (const Edge& e : g.edges()) {
    if (!g.is_inner(e.tail) || !g.is_inner(e.head)) continue;
    if (labels[e.id] == 1)
      q.add_arrow({e.id, e.tail, e.head, e.id});
    else
      q.add_arrow({e.id, e.head, e.tail, e.id});
  }
  for (const Arrow& a : q.arrows())
    for (const Arrow& b : q.arrows())
      if (a.target == b.source && labels[a.edge] != labels[b.edge]) q.add_relation(a.id, b.id);
  return q;
}

std::string gentle_violation(const Quiver& q) {
  for (int v : q.nodes()) {
    if (q.in_arrows(v).size() > 2) return "more than two arrows end at node " + std::to_string(v);
    if (q.out_arrows(v).size() > 2) return "more than two arrows start at node " + std::to_string(v);
  }
  for (const Arrow& a : q.arrows()) {
    int free_after = 0, rel_after = 0, free_before = 0, rel_before = 0;
    for (int b : q.out_arrows(a.target)) (q.is_relation(a.id, b) ? rel_after : free_after)++;
    for (int c : q.in_arrows(a.source)) (q.is_relation(c, a.id) ? rel_before : free_before)++;
    if (free_after > 1 || free_before > 1)
      return "arrow " + std::to_string(a.id) + " has two continuations outside the ideal";
    if (rel_after > 1 || rel_before > 1)
      return "arrow " + std::to_string(a.id) + " has two continuations inside the ideal";
  }
  for (auto [a, b] : q.relations())
    if (q.arrow(a).target != q.arrow(b).source) return "relation on non-composable arrows";
  return "";
}

StringWord word(std::vector<Letter> letters) {
  StringWord w;
  w.kind = StringWord::Kind::Word;
  w.letters = std::move(letters);
  return w;
}

StringWord constant(int node) {
  StringWord w;
  w.kind = StringWord::Kind::Constant;
  w.node = node;
  return w;
}

StringWord shifted(int node) {
  StringWord w;
  w.kind = StringWord::Kind::Shifted;
  w.node = node;
  return w;
}

std::vector<Letter> inverse(const std::vector<Letter>& w) {
  std::vector<Letter> r(w.rbegin(), w.rend());
  for (Letter& l : r) l.exp = -l.exp;
  return r;
}

StringWord canonical(const StringWord& w) {
  if (w.kind != StringWord::Kind::Word) return w;
  auto inv = inverse(w.letters);
  return word(std::min(w.letters, inv));
}

namespace {

int letter_start(const Quiver& q, const Letter& l) {
  const Arrow& a = q.arrow(l.arrow);
  return l.exp > 0 ? a.source : a.target;
}

int letter_end(const Quiver& q, const Letter& l) {
  const Arrow& a = q.arrow(l.arrow);
  return l.exp > 0 ? a.target : a.source;
}

// Whether `next` may follow `prev` in a string.
bool can_follow(const Quiver& q, const Letter& prev, const Letter& next) {
  if (letter_end(q, prev) != letter_start(q, next)) return false;
  if (next.arrow == prev.arrow && next.exp == -prev.exp) return false;
  if (prev.exp > 0 && next.exp > 0 && q.is_relation(prev.arrow, next.arrow)) return false;
  if (prev.exp < 0 && next.exp < 0 && q.is_relation(next.arrow, prev.arrow)) return false;
  return true;
}

void extend_right(const Quiver& q, std::vector<Letter>& w, std::vector<int>& nodes,
                  std::set<std::vector<Letter>>& found) {
  found.insert(std::min(w, inverse(w)));
  int x = nodes.back();
  std::vector<Letter> next;
  for (int b : q.out_arrows(x)) next.push_back({b, +1});
  for (int b : q.in_arrows(x)) next.push_back({b, -1});
  for (const Letter& l : next) {
    if (!can_follow(q, w.back(), l)) continue;
    int y = letter_end(q, l);
    if (std::find(nodes.begin(), nodes.end(), y) != nodes.end())
      fail(ErrorKind::StringMultiplicity, "a string visits node " + std::to_string(y) + " twice");
    w.push_back(l);
    nodes.push_back(y);
    extend_right(q, w, nodes, found);
    w.pop_back();
    nodes.pop_back();
  }
}

}  // namespace

std::vector<int> word_nodes(const Quiver& q, const std::vector<Letter>& w) {
  std::vector<int> nodes;
  if (w.empty()) return nodes;
  nodes.push_back(letter_start(q, w[0]));
  for (const Letter& l : w) nodes.push_back(letter_end(q, l));
  return nodes;
}

bool is_string(const Quiver& q, const std::vector<Letter>& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!can_follow(q, w[i], w[i + 1])) return false;
  return true;
}

std::string to_string(const Quiver& q, const StringWord& w) {
  (void)q;
  std::ostringstream os;
  switch (w.kind) {
    case StringWord::Kind::Constant:
      os << "e" << w.node;
      break;
    case StringWord::Kind::Shifted:
      os << "P" << w.node << "[1]";
      break;
    case StringWord::Kind::Word:
      for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << 'a' << w.letters[i].arrow;
        if (w.letters[i].exp < 0) os << "^-1";
      }
      break;
  }
  return os.str();
}

std::vector<StringWord> enumerate_strings(const Quiver& q) {
  std::set<std::vector<Letter>> found;
  for (const Arrow& a : q.arrows())
    for (int exp : {+1, -1}) {
      std::vector<Letter> w{{a.id, exp}};
      std::vector<int> nodes = word_nodes(q, w);
      extend_right(q, w, nodes, found);
    }
  std::vector<StringWord> out;
  for (const auto& w : found) out.push_back(word(w));
  for (int v : q.nodes()) out.push_back(constant(v));
  return out;
}

std::vector<StringWord> objects_T(const Quiver& q) {
  auto out = enumerate_strings(q);
  for (int v : q.nodes()) out.push_back(shifted(v));
  return out;
}

namespace {

EdgeId labelled(const std::vector<EdgeId>& edges, const std::map<EdgeId, int>& labels, int label) {
  for (EdgeId e : edges)
    if (labels.at(e) == label) return e;
  fail(ErrorKind::InconsistentFraming, "no edge with label " + std::to_string(label));
}

// Completes a middle segment to a route: label-1 edges before it, label-2
// edges after it.
Route complete_route(const Dag& g, const std::map<EdgeId, int>& labels, const std::vector<EdgeId>& mid) {
  std::vector<EdgeId> before;
  for (VertexId v = g.tail(mid.front()); !g.is_source(v);) {
    EdgeId e = labelled(g.in_edges(v), labels, 1);
    before.push_back(e);
    v = g.tail(e);
  }
  Route r(before.rbegin(), before.rend());
  r.insert(r.end(), mid.begin(), mid.end());
  for (VertexId v = g.head(mid.back()); !g.is_sink(v);) {
    EdgeId e = labelled(g.out_edges(v), labels, 2);
    r.push_back(e);
    v = g.head(e);
  }
  return r;
}

}  // namespace

StringWord route_to_module(const FramedDag& fd, const std::map<EdgeId, int>& labels, const Route& r) {
  int n = static_cast<int>(r.size());
  int first2 = -1, last1 = -1;
  for (int k = 0; k < n; ++k) {
    if (labels.at(r[k]) == 2 && first2 < 0) first2 = k;
    if (labels.at(r[k]) == 1) last1 = k;
  }
  if (first2 < 0 || last1 < 0) fail(ErrorKind::ExceptionalRoute, "route has constant labels");
  if (last1 < first2) return shifted(fd.dag().tail(r[first2]));
  if (last1 == first2 + 1) return constant(fd.dag().head(r[first2]));
  std::vector<Letter> ls;
  for (int k = first2 + 1; k < last1; ++k) ls.push_back({r[k], labels.at(r[k]) == 1 ? +1 : -1});
  return canonical(word(ls));
}

Route module_to_route(const FramedDag& fd, const std::map<EdgeId, int>& labels, const StringWord& m) {
  const Dag& g = fd.dag();
  switch (m.kind) {
    case StringWord::Kind::Shifted: {
      VertexId x = m.node;
      if (!g.is_inner(x)) fail(ErrorKind::BadInput, "shift at a non-inner vertex");
      return complete_route(g, labels, {labelled(g.in_edges(x), labels, 1)});
    }
    case StringWord::Kind::Constant: {
      VertexId x = m.node;
      if (!g.is_inner(x)) fail(ErrorKind::BadInput, "constant at a non-inner vertex");
      std::vector<EdgeId> mid{labelled(g.in_edges(x), labels, 2), labelled(g.out_edges(x), labels, 1)};
      return complete_route(g, labels, mid);
    }
    case StringWord::Kind::Word: {
      std::vector<Letter> ls = m.letters;
      auto forward = [&](const Letter& l) { return (labels.at(l.arrow) == 1) == (l.exp > 0); };
      if (!forward(ls.front())) ls = inverse(ls);
      std::vector<EdgeId> mid;
      for (const Letter& l : ls) {
        if (!forward(l)) fail(ErrorKind::BadInput, "string is not a path in the graph");
        mid.push_back(l.arrow);
      }
      for (std::size_t i = 0; i + 1 < mid.size(); ++i)
        if (g.head(mid[i]) != g.tail(mid[i + 1])) fail(ErrorKind::BadInput, "string is not a path in the graph");
      mid.insert(mid.begin(), labelled(g.in_edges(g.tail(mid.front())), labels, 2));
      mid.push_back(labelled(g.out_edges(g.head(mid.back())), labels, 1));
      return complete_route(g, labels, mid);
    }
  }
  fail(ErrorKind::BadInput, "unknown object kind");
}

BlossomQuiver blossom(const Quiver& q, BlossomChoice choice) {
  std::string why = gentle_violation(q);
  if (!why.empty()) fail(ErrorKind::NotGentle, why);
  BlossomQuiver bq;
  bq.original_nodes = q.nodes();
  Quiver& b = bq.quiver;
  for (int v : q.nodes()) b.add_node(v);
  for (const Arrow& a : q.arrows()) b.add_arrow(a);
  int next_node = q.next_node_id();
  int next_arrow = q.next_arrow_id();
  for (int v : q.nodes()) {
    for (std::size_t k = q.in_arrows(v).size(); k < 2; ++k) b.add_arrow({next_arrow++, next_node++, v, -1});
    for (std::size_t k = q.out_arrows(v).size(); k < 2; ++k) b.add_arrow({next_arrow++, v, next_node++, -1});
  }
  for (int v : q.nodes()) {
    auto ins = b.in_arrows(v), outs = b.out_arrows(v);
    auto in_q = [&](int a) { return a < q.next_arrow_id(); };
    auto consistent = [&](int flip) {
      for (int i = 0; i < 2; ++i)
        for (int o = 0; o < 2; ++o) {
          if (!in_q(ins[i]) || !in_q(outs[o])) continue;
          bool rel = (i == o) != (flip == 1);
          if (q.is_relation(ins[i], outs[o]) != rel) return false;
        }
      return true;
    };
    int first = choice == BlossomChoice::First ? 0 : 1;
    int pick = consistent(first) ? first : 1 - first;
    if (!consistent(pick)) fail(ErrorKind::NotGentle, "no relation matching at node " + std::to_string(v));
    for (int i = 0; i < 2; ++i) b.add_relation(ins[i], outs[pick == 0 ? i : 1 - i]);
  }
  why = gentle_violation(b);
  if (!why.empty()) fail(ErrorKind::NotGentle, "blossom: " + why);
  return bq;
}

namespace {

std::optional<int> pred_direct(const Quiver& q, int a) {
  for (int c : q.in_arrows(q.arrow(a).source))
    if (!q.is_relation(c, a)) return c;
  return std::nullopt;
}

std::optional<int> succ_direct(const Quiver& q, int a) {
  for (int b : q.out_arrows(q.arrow(a).target))
    if (!q.is_relation(a, b)) return b;
  return std::nullopt;
}

std::optional<int> other_in(const Quiver& q, int a) {
  for (int c : q.in_arrows(q.arrow(a).target))
    if (c != a) return c;
  return std::nullopt;
}

std::optional<int> other_out(const Quiver& q, int a) {
  for (int c : q.out_arrows(q.arrow(a).source))
    if (c != a) return c;
  return std::nullopt;
}

// start, pred_direct(start), pred_direct(...), ...
std::vector<int> pred_chain(const Quiver& q, std::optional<int> start) {
  std::vector<int> out;
  while (start) {
    out.push_back(*start);
    if (out.size() > q.arrows().size()) fail(ErrorKind::StringMultiplicity, "extension does not terminate");
    start = pred_direct(q, *start);
  }
  return out;
}

std::vector<Letter> direct_prefix(const Quiver& q, std::optional<int> start) {
  auto chain = pred_chain(q, start);
  std::vector<Letter> out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.push_back({*it, +1});
  return out;
}

std::vector<Letter> inverse_suffix(const Quiver& q, std::optional<int> start) {
  std::vector<Letter> out;
  for (int a : pred_chain(q, start)) out.push_back({a, -1});
  return out;
}

std::vector<Letter> join(std::vector<Letter> a, const std::vector<Letter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::vector<Letter> extend_string(const BlossomQuiver& bq, const StringWord& w) {
  const Quiver& q = bq.quiver;
  std::vector<Letter> out;
  switch (w.kind) {
    case StringWord::Kind::Word: {
      const auto& ls = w.letters;
      if (ls.empty()) fail(ErrorKind::BadInput, "empty word");
      if (!is_string(q, ls)) fail(ErrorKind::BadInput, "not a string");
      std::optional<int> beta = ls.front().exp > 0 ? other_out(q, ls.front().arrow)
                                                   : succ_direct(q, ls.front().arrow);
      std::optional<int> delta = ls.back().exp > 0 ? succ_direct(q, ls.back().arrow)
                                                   : other_out(q, ls.back().arrow);
      if (!beta || !delta) fail(ErrorKind::NotGentle, "string cannot be extended");
      out = direct_prefix(q, other_in(q, *beta));
      out.push_back({*beta, -1});
      out = join(out, ls);
      out.push_back({*delta, +1});
      out = join(out, inverse_suffix(q, other_in(q, *delta)));
      break;
    }
    case StringWord::Kind::Constant: {
      auto outs = q.out_arrows(w.node);
      if (outs.size() != 2) fail(ErrorKind::NotGentle, "node without two outgoing arrows");
      out = direct_prefix(q, other_in(q, outs[0]));
      out.push_back({outs[0], -1});
      out.push_back({outs[1], +1});
      out = join(out, inverse_suffix(q, other_in(q, outs[1])));
      break;
    }
    case StringWord::Kind::Shifted: {
      auto ins = q.in_arrows(w.node);
      if (ins.size() != 2) fail(ErrorKind::NotGentle, "node without two incoming arrows");
      out = direct_prefix(q, pred_direct(q, ins[0]));
      out.push_back({ins[0], +1});
      out.push_back({ins[1], -1});
      out = join(out, inverse_suffix(q, pred_direct(q, ins[1])));
      break;
    }
  }
  if (!is_string(q, out)) fail(ErrorKind::NotGentle, "extension is not a string");
  return std::min(out, inverse(out));
}

SubstringProfile substring_profile(const Quiver& bq, const std::vector<Letter>& w) {
  SubstringProfile p;
  auto nodes = word_nodes(bq, w);
  int m = static_cast<int>(w.size());
  auto key = [&](int i, int j) {
    // Letters i..j-1 with their nodes i..j, as the smaller of both readings.
    std::vector<int> fwd{nodes[i]}, bwd{nodes[j]};
    for (int k = i; k < j; ++k) {
      fwd.insert(fwd.end(), {w[k].arrow, w[k].exp, nodes[k + 1]});
    }
    for (int k = j - 1; k >= i; --k) {
      bwd.insert(bwd.end(), {w[k].arrow, -w[k].exp, nodes[k]});
    }
    return std::min(fwd, bwd);
  };
  // Substring between node positions i and j (j >= i), with letters i-1 and j
  // on either side.
  for (int i = 1; i < m; ++i)
    for (int j = i; j < m; ++j) {
      bool before_out = w[i - 1].exp < 0;
      bool after_out = w[j].exp > 0;
      if (before_out && after_out) p.top.insert(key(i, j));
      if (!before_out && !after_out) p.bottom.insert(key(i, j));
    }
  return p;
}

bool tau_rigid_pair(const SubstringProfile& a, const SubstringProfile& b) {
  auto meets = [](const std::set<std::vector<int>>& x, const std::set<std::vector<int>>& y) {
    for (const auto& k : x)
      if (y.count(k)) return true;
    return false;
  };
  return !meets(a.top, b.bottom) && !meets(b.top, a.bottom);
}

bool tau_rigid_pair(const BlossomQuiver& bq, const StringWord& a, const StringWord& b) {
  return tau_rigid_pair(substring_profile(bq.quiver, extend_string(bq, a)),
                        substring_profile(bq.quiver, extend_string(bq, b)));
}

std::vector<std::vector<int>> support_tau_tilting(const BlossomQuiver& bq,
                                                  const std::vector<StringWord>& objects,
                                                  std::size_t max_collections) {
  std::vector<SubstringProfile> prof;
  for (const auto& o : objects) prof.push_back(substring_profile(bq.quiver, extend_string(bq, o)));
  std::size_t n = objects.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = tau_rigid_pair(prof[i], prof[j]);
  return maximal_cliques_of_graph(adj, {}, max_collections);
}

}  // namespace flowtri
