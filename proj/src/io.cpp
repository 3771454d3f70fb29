#include "flowtri/io.hpp"

#include <fstream>
#include <sstream>

namespace flowtri {

Json graph_to_json(const Dag& g) {
  Json j;
  j["vertices"] = g.vertices();
  j["edges"] = Json::array();
  for (const Edge& e : g.edges()) {
    Json je = {{"id", e.id}, {"tail", e.tail}, {"head", e.head}};
    if (e.orig_tail != e.tail || e.orig_head != e.head) {
      je["orig_tail"] = e.orig_tail;
      je["orig_head"] = e.orig_head;
    }
    j["edges"].push_back(je);
  }
  return j;
}

Dag graph_from_json(const Json& j) {
  // Reports carry the graph under "graph".
  if (j.is_object() && !j.contains("edges") && j.contains("graph")) return graph_from_json(j.at("graph"));
  try {
    Dag g;
    if (j.contains("vertices"))
      for (const auto& v : j.at("vertices")) g.add_vertex(v.get<VertexId>());
    for (const auto& je : j.at("edges")) {
      Edge e{};
      e.tail = je.at("tail").get<VertexId>();
      e.head = je.at("head").get<VertexId>();
      e.id = je.contains("id") ? je.at("id").get<EdgeId>() : g.next_edge_id();
      e.orig_tail = je.value("orig_tail", e.tail);
      e.orig_head = je.value("orig_head", e.head);
      if (g.has_edge(e.id)) fail(ErrorKind::BadInput, "duplicate edge id " + std::to_string(e.id));
      g.add_edge(e);
    }
    g.validate();
    return g;
  } catch (const Json::exception& ex) {
    fail(ErrorKind::BadInput, std::string("graph JSON: ") + ex.what());
  }
}

Dag parse_edge_list(std::istream& in) {
  Dag g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> xs;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        xs.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(ErrorKind::BadInput, "line " + std::to_string(lineno) + ": not an integer: " + tok);
      }
    }
    if (xs.empty()) continue;
    if (xs.size() < 2 || xs.size() > 3)
      fail(ErrorKind::BadInput, "line " + std::to_string(lineno) + ": expected `tail head [id]`");
    Edge e{};
    e.tail = static_cast<VertexId>(xs[0]);
    e.head = static_cast<VertexId>(xs[1]);
    e.id = xs.size() == 3 ? static_cast<EdgeId>(xs[2]) : g.next_edge_id();
    e.orig_tail = e.tail;
    e.orig_head = e.head;
    if (g.has_edge(e.id)) fail(ErrorKind::BadInput, "duplicate edge id " + std::to_string(e.id));
    g.add_edge(e);
  }
  g.validate();
  return g;
}

std::string edge_list(const Dag& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << ' ' << e.id << '\n';
  return out.str();
}

Dag read_graph_text(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& ex) {
      fail(ErrorKind::BadInput, std::string("graph JSON: ") + ex.what());
    }
    return graph_from_json(j);
  }
  std::istringstream in(text);
  return parse_edge_list(in);
}

Json framing_to_json(const Framing& f) {
  Json j;
  j["in_order"] = Json::object();
  j["out_order"] = Json::object();
  for (const auto& [v, o] : f.in_order) j["in_order"][std::to_string(v)] = o;
  for (const auto& [v, o] : f.out_order) j["out_order"][std::to_string(v)] = o;
  return j;
}

Framing framing_from_json(const Json& j) {
  try {
    Framing f;
    for (const auto& [k, v] : j.at("in_order").items()) f.in_order[std::stoi(k)] = v.get<std::vector<EdgeId>>();
    for (const auto& [k, v] : j.at("out_order").items()) f.out_order[std::stoi(k)] = v.get<std::vector<EdgeId>>();
    return f;
  } catch (const Json::exception& ex) {
    fail(ErrorKind::BadInput, std::string("framing JSON: ") + ex.what());
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::BadInput, "framing JSON: vertex keys must be integers");
  }
}

Json route_to_json(const Dag& g, const Route& r) {
  return {{"edges", r}, {"vertices", path_vertices(g, r)}};
}

Json hvector_to_json(const HStarVector& h) {
  Json j = Json::array();
  for (const BigInt& x : h) {
    if (x <= BigInt(INT64_MAX)) j.push_back(static_cast<std::int64_t>(x));
    else j.push_back(x.str());
  }
  return j;
}

Json string_to_json(const StringWord& w) {
  switch (w.kind) {
    case StringWord::Kind::Constant: return {{"constant", w.node}};
    case StringWord::Kind::Shifted: return {{"shifted", w.node}};
    case StringWord::Kind::Word: break;
  }
  Json letters = Json::array();
  for (const Letter& l : w.letters) letters.push_back(l.exp * (l.arrow + 1));
  return {{"word", letters}};
}

std::string graph_dot(const Dag& g, const std::map<EdgeId, int>* labels) {
  std::ostringstream out;
  out << "digraph G {\n  rankdir=LR;\n";
  for (VertexId v : g.vertices()) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.tail << " -> " << e.head << " [label=\"e" << e.id;
    if (labels && labels->count(e.id)) out << ":" << labels->at(e.id);
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dual_graph_dot(const DualGraph& d) {
  std::ostringstream out;
  out << "graph dual {\n";
  for (std::size_t v = 0; v < d.nodes; ++v) out << "  c" << v << ";\n";
  for (const DualEdge& e : d.edges)
    out << "  c" << e.a << " -- c" << e.b << " [label=\"" << e.route_a << "/" << e.route_b << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string quiver_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph Q {\n";
  for (int v : q.nodes()) out << "  " << v << ";\n";
  for (const Arrow& a : q.arrows())
    out << "  " << a.source << " -> " << a.target << " [label=\"a" << a.id << "\"];\n";
  for (const auto& [a, b] : q.relations()) {
    const Arrow& x = q.arrow(a);
    const Arrow& y = q.arrow(b);
    out << "  " << x.source << " -> " << y.target << " [style=dashed, arrowhead=none, label=\"a" << a << " a"
        << b << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string poset_dot(const TauPoset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t v = 0; v < p.nodes.size(); ++v) out << "  c" << v << ";\n";
  for (const HasseEdge& h : p.edges)
    out << "  c" << h.lower << " -> c" << h.upper << " [label=\"" << walk_string(h.brick) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::BadInput, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::BadInput, "cannot write " + path);
  out << text;
}

}  // namespace flowtri
