#ifndef FLOWTRI_IO_HPP
#define FLOWTRI_IO_HPP

#include <istream>
#include <string>
#include <vector>

#include "json.hpp"

#include "flowtri/gentle.hpp"
#include "flowtri/poset.hpp"
#include "flowtri/triangulation.hpp"

namespace flowtri {

using Json = nlohmann::json;

// {"vertices":[ids],"edges":[{"id","tail","head"}]}. Contracted edges also
// carry "orig_tail"/"orig_head".
Json graph_to_json(const Dag& g);
Dag graph_from_json(const Json& j);

// One edge per line: `tail head [id]`. Blank lines and '#' comments are
// skipped. Edges without an id take the next free one.
Dag parse_edge_list(std::istream& in);
std::string edge_list(const Dag& g);

// JSON if the first non-blank character is '{', otherwise an edge list.
Dag read_graph_text(const std::string& text);

Json framing_to_json(const Framing& f);
Framing framing_from_json(const Json& j);

Json route_to_json(const Dag& g, const Route& r);
Json hvector_to_json(const HStarVector& h);
// {"word": [...]} with arrow id + 1, negated for inverse letters;
// {"constant": v} or {"shifted": v} otherwise.
Json string_to_json(const StringWord& w);

std::string graph_dot(const Dag& g, const std::map<EdgeId, int>* labels = nullptr);
std::string dual_graph_dot(const DualGraph& d);
std::string quiver_dot(const Quiver& q);
std::string poset_dot(const TauPoset& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace flowtri

#endif  // FLOWTRI_IO_HPP
