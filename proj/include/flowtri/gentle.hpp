#ifndef FLOWTRI_GENTLE_HPP
#define FLOWTRI_GENTLE_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flowtri/framing.hpp"

namespace flowtri {

struct Arrow {
  int id;
  int source;
  int target;
  // Edge of the DAG the arrow comes from, or -1 for blossom arrows.
  EdgeId edge;
};

class Quiver {
 public:
  void add_node(int v);
  void add_arrow(const Arrow& a);
  // (a, b) with t(a) = s(b); the path ab lies in the ideal.
  void add_relation(int a, int b);

  const std::vector<int>& nodes() const { return nodes_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::set<std::pair<int, int>>& relations() const { return relations_; }
  bool has_node(int v) const;
  const Arrow& arrow(int id) const;
  bool is_relation(int a, int b) const { return relations_.count({a, b}) > 0; }
  std::vector<int> in_arrows(int v) const;
  std::vector<int> out_arrows(int v) const;
  int next_arrow_id() const;
  int next_node_id() const;

 private:
  std::vector<int> nodes_;
  std::vector<Arrow> arrows_;
  std::map<int, std::size_t> index_;
  std::set<std::pair<int, int>> relations_;
};

// Arrows come from edges between inner vertices: label 1 keeps the edge's
// direction, label 2 reverses it. Arrow ids are edge ids. Relations are the
// composable pairs whose edges carry different labels.
Quiver build_quiver(const FramedDag& fd);

// Empty string when the quiver is gentle, otherwise the violated condition.
std::string gentle_violation(const Quiver& q);

struct Letter {
  int arrow;
  int exp;  // +1 or -1
  auto operator<=>(const Letter&) const = default;
};

struct StringWord {
  enum class Kind { Word, Constant, Shifted };
  Kind kind = Kind::Word;
  std::vector<Letter> letters;  // Kind::Word
  int node = 0;                 // Kind::Constant and Kind::Shifted
  auto operator<=>(const StringWord&) const = default;
};

StringWord word(std::vector<Letter> letters);
StringWord constant(int node);
StringWord shifted(int node);

std::vector<Letter> inverse(const std::vector<Letter>& w);
// Lexicographic minimum of w and its inverse; constants and shifts unchanged.
StringWord canonical(const StringWord& w);
// Node visited before the first letter and after each letter.
std::vector<int> word_nodes(const Quiver& q, const std::vector<Letter>& w);
bool is_string(const Quiver& q, const std::vector<Letter>& w);
std::string to_string(const Quiver& q, const StringWord& w);

// All strings of positive length up to inversion, then constants; canonical
// forms, sorted. StringMultiplicity if a string revisits a node.
std::vector<StringWord> enumerate_strings(const Quiver& q);
// Strings plus one shifted marker per node.
std::vector<StringWord> objects_T(const Quiver& q);

// Route <-> object bijection for an ample framing on a full DAG.
StringWord route_to_module(const FramedDag& fd, const std::map<EdgeId, int>& labels, const Route& r);
Route module_to_route(const FramedDag& fd, const std::map<EdgeId, int>& labels, const StringWord& m);

struct BlossomQuiver {
  Quiver quiver;
  std::vector<int> original_nodes;
};

// Which relation matching to take at a node when both are consistent.
enum class BlossomChoice { First, Last };

BlossomQuiver blossom(const Quiver& q, BlossomChoice choice = BlossomChoice::First);

// Maximal string in the blossom quiver extending an object of the original
// quiver; canonical orientation.
std::vector<Letter> extend_string(const BlossomQuiver& bq, const StringWord& w);

// Substring keys of an extended string where both neighbouring letters point
// out of (top) or into (bottom) the substring.
struct SubstringProfile {
  std::set<std::vector<int>> top;
  std::set<std::vector<int>> bottom;
};

SubstringProfile substring_profile(const Quiver& bq, const std::vector<Letter>& w);

bool tau_rigid_pair(const SubstringProfile& a, const SubstringProfile& b);
bool tau_rigid_pair(const BlossomQuiver& bq, const StringWord& a, const StringWord& b);

// Maximal pairwise rigid collections of objects (indices into `objects`).
std::vector<std::vector<int>> support_tau_tilting(const BlossomQuiver& bq,
                                                  const std::vector<StringWord>& objects,
                                                  std::size_t max_collections = 1000000);

}  // namespace flowtri

#endif  // FLOWTRI_GENTLE_HPP
