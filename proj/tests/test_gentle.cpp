#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "flowtri/gentle.hpp"
#include "flowtri/triangulation.hpp"

using namespace flowtri;

namespace {

bool is_exceptional(const Triangulation& t, int r) {
  return std::binary_search(t.exceptional.begin(), t.exceptional.end(), r);
}

// Letters matching a pattern where 0 stands for any blossom arrow.
bool matches(const BlossomQuiver& bq, const std::vector<Letter>& w, const std::vector<Letter>& pat) {
  auto ok = [&](const std::vector<Letter>& x) {
    if (x.size() != pat.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].exp != pat[i].exp) return false;
      if (pat[i].arrow >= 0 && x[i].arrow != pat[i].arrow) return false;
      if (pat[i].arrow < 0 && bq.quiver.arrow(x[i].arrow).edge >= 0) return false;
    }
    return true;
  };
  return ok(w) || ok(inverse(w));
}

}  // namespace

TEST_CASE("G(2,7) quiver and strings") {
  Dag g = fixtures::g27_full();
  FramedDag fd(g, paper_g27_framing(g));
  Quiver q = build_quiver(fd);
  EdgeId a1 = fixtures::edge_by_orig(g, 3, 4), a2 = fixtures::edge_by_orig(g, 4, 5),
         a3 = fixtures::edge_by_orig(g, 3, 5);
  CHECK(q.nodes() == std::vector<int>{3, 4, 5});
  REQUIRE(q.arrows().size() == 3);
  CHECK(q.arrow(a1).source == 3);
  CHECK(q.arrow(a1).target == 4);
  CHECK(q.arrow(a2).source == 4);
  CHECK(q.arrow(a2).target == 5);
  CHECK(q.arrow(a3).source == 5);
  CHECK(q.arrow(a3).target == 3);
  CHECK(q.relations() == std::set<std::pair<int, int>>{{a2, a3}, {a3, a1}});
  CHECK(gentle_violation(q).empty());

  auto strings = enumerate_strings(q);
  std::set<StringWord> want = {canonical(word({{a1, 1}})), canonical(word({{a2, 1}})), canonical(word({{a3, 1}})),
                               canonical(word({{a1, 1}, {a2, 1}})), constant(3), constant(4), constant(5)};
  CHECK(std::set<StringWord>(strings.begin(), strings.end()) == want);
  CHECK(objects_T(q).size() == 10);
}

TEST_CASE("G(2,7) routes to modules") {
  Dag g = fixtures::g27_full();
  FramedDag fd(g, paper_g27_framing(g));
  auto labels = edge_labeling(fd);
  EdgeId a1 = fixtures::edge_by_orig(g, 3, 4);
  CHECK(route_to_module(fd, labels, fixtures::g27_route(g, "abE")) == shifted(4));
  CHECK(route_to_module(fd, labels, fixtures::g27_route(g, "AbcD")) == canonical(word({{a1, 1}})));
  CHECK(module_to_route(fd, labels, shifted(4)) == fixtures::g27_route(g, "abE"));
  CHECK(module_to_route(fd, labels, word({{a1, 1}})) == fixtures::g27_route(g, "AbcD"));
  CHECK_THROWS_AS(route_to_module(fd, labels, fixtures::g27_route(g, "abcd")), Error);
}

TEST_CASE("G(2,7) blossom and extensions") {
  Dag g = fixtures::g27_full();
  FramedDag fd(g, paper_g27_framing(g));
  Quiver q = build_quiver(fd);
  BlossomQuiver bq = blossom(q);
  CHECK(bq.quiver.nodes().size() == 9);
  CHECK(bq.quiver.arrows().size() == 9);
  for (int v : bq.original_nodes) {
    CHECK(bq.quiver.in_arrows(v).size() == 2);
    CHECK(bq.quiver.out_arrows(v).size() == 2);
  }
  CHECK(gentle_violation(bq.quiver).empty());
  for (auto r : q.relations()) CHECK(bq.quiver.is_relation(r.first, r.second));
  EdgeId a2 = fixtures::edge_by_orig(g, 4, 5);
  // a2 extends to x^-1 a2 y, and the constant at 4 to x^-1 a2 z^-1.
  CHECK(matches(bq, extend_string(bq, word({{a2, 1}})), {{-1, -1}, {a2, 1}, {-1, 1}}));
  CHECK(matches(bq, extend_string(bq, constant(4)), {{-1, -1}, {a2, 1}, {-1, -1}}));
  auto objs = objects_T(q);
  std::set<std::vector<Letter>> ext;
  for (const auto& o : objs) ext.insert(extend_string(bq, o));
  CHECK(ext.size() == objs.size());
}

TEST_CASE("bijection, rigidity and support tau-tilting on the corpus") {
  for (const auto& inst : fixtures::corpus(20)) {
    CAPTURE(inst.name);
    FramedDag fd(inst.g, inst.f);
    auto labels = edge_labeling(fd);
    Triangulation t = maximal_cliques(fd);
    Quiver q = build_quiver(fd);
    CHECK(gentle_violation(q).empty());
    auto objs = objects_T(q);
    CHECK(objs.size() == t.routes.size() - t.exceptional.size());
    std::map<int, int> obj_of_route;
    for (int r = 0; r < static_cast<int>(t.routes.size()); ++r) {
      if (is_exceptional(t, r)) continue;
      StringWord m = route_to_module(fd, labels, t.routes[r]);
      auto it = std::find(objs.begin(), objs.end(), m);
      REQUIRE(it != objs.end());
      obj_of_route[r] = static_cast<int>(it - objs.begin());
      CHECK(module_to_route(fd, labels, m) == t.routes[r]);
    }
    for (const auto& o : objs) {
      Route r = module_to_route(fd, labels, o);
      CHECK(route_to_module(fd, labels, r) == o);
    }
    BlossomQuiver bq = blossom(q), bq2 = blossom(q, BlossomChoice::Last);
    CHECK(gentle_violation(bq.quiver).empty());
    std::vector<SubstringProfile> prof, prof2;
    for (const auto& o : objs) {
      auto w = extend_string(bq, o);
      // Original letters of the extension spell the inner part of the route.
      std::vector<EdgeId> inner;
      for (const Letter& l : w)
        if (bq.quiver.arrow(l.arrow).edge >= 0) inner.push_back(l.arrow);
      std::vector<EdgeId> route_inner;
      for (EdgeId e : module_to_route(fd, labels, o))
        if (inst.g.is_inner(inst.g.tail(e)) && inst.g.is_inner(inst.g.head(e))) route_inner.push_back(e);
      std::vector<EdgeId> rev(route_inner.rbegin(), route_inner.rend());
      CHECK((inner == route_inner || inner == rev));
      prof.push_back(substring_profile(bq.quiver, w));
      prof2.push_back(substring_profile(bq2.quiver, extend_string(bq2, o)));
    }
    for (const auto& [r, i] : obj_of_route)
      for (const auto& [s, j] : obj_of_route) {
        bool rigid = tau_rigid_pair(prof[i], prof[j]);
        CHECK(rigid == t.coherence[r][s]);
        CHECK(rigid == tau_rigid_pair(prof2[i], prof2[j]));
      }
    std::set<std::vector<int>> from_cliques;
    for (const Clique& c : t.cliques) {
      std::vector<int> objs_in;
      for (int r : c)
        if (!is_exceptional(t, r)) objs_in.push_back(obj_of_route[r]);
      std::sort(objs_in.begin(), objs_in.end());
      from_cliques.insert(objs_in);
    }
    auto st = support_tau_tilting(bq, objs);
    CHECK(std::set<std::vector<int>>(st.begin(), st.end()) == from_cliques);
    CHECK(st.size() == t.cliques.size());
  }
}

TEST_CASE("empty quiver") {
  Dag g = fixtures::from_pairs({{1, 2}, {1, 2}});
  FramedDag fd(g, id_framing(g));
  Quiver q = build_quiver(fd);
  CHECK(q.nodes().empty());
  CHECK(objects_T(q).empty());
  BlossomQuiver bq = blossom(q);
  CHECK(bq.quiver.arrows().empty());
  CHECK(support_tau_tilting(bq, {}).size() == 1);
}

TEST_CASE("three-cycle with all relations is not from a graph") {
  Quiver q;
  q.add_arrow({0, 1, 2, -1});
  q.add_arrow({1, 2, 3, -1});
  q.add_arrow({2, 3, 1, -1});
  q.add_relation(0, 1);
  q.add_relation(1, 2);
  q.add_relation(2, 0);
  CHECK(gentle_violation(q).empty());
}
