#include "flowtri/report.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

namespace flowtri {

Json checks_to_json(const std::vector<Check>& checks) {
  Json j = Json::array();
  for (const Check& c : checks) j.push_back({{"claim", c.claim}, {"ok", c.ok}, {"detail", c.detail}});
  return j;
}

bool all_ok(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::string failure_summary(const std::vector<Check>& checks) {
  std::string s;
  for (const Check& c : checks)
    if (!c.ok) s += (s.empty() ? "" : "; ") + c.claim + (c.detail.empty() ? "" : " (" + c.detail + ")");
  return std::string(error_kind_name(ErrorKind::ClaimFailed)) + ": " + s;
}

Framing resolve_framing(const Dag& g, const std::string& name) {
  if (name == "length" || name == "paper-g27" || name == "id") return named_framing(g, name);
  if (std::filesystem::exists(name)) {
    Json j;
    try {
      j = Json::parse(read_file(name));
    } catch (const Json::exception& ex) {
      fail(ErrorKind::BadInput, std::string("framing file: ") + ex.what());
    }
    return framing_from_json(j.contains("framing") ? j.at("framing") : j);
  }
  fail(ErrorKind::BadInput, "unknown framing '" + name + "' (length, paper-g27, id or a JSON file)");
}

Dag generate(const std::string& family, const std::vector<int>& args) {
  if (family == "car") {
    if (args.size() != 1 || args[0] < 3) fail(ErrorKind::BadInput, "usage: gen car n (n >= 3)");
    return make_car(args[0]);
  }
  if (family == "gkn") {
    if (args.size() != 2 || args[0] < 1 || args[1] <= args[0])
      fail(ErrorKind::BadInput, "usage: gen gkn k m (1 <= k < m)");
    return make_gkn(args[0], args[1]);
  }
  fail(ErrorKind::BadInput, "unknown family '" + family + "' (car, gkn)");
}

Json contract_report(const Dag& g, bool strip_bundles) {
  ContractionTrace tr = complete_contraction(g);
  Json j;
  j["steps"] = Json::array();
  for (const auto& s : tr.steps) j["steps"].push_back({{"edge", s.edge}, {"kept", s.kept}, {"removed", s.removed}});
  Json vm = Json::object();
  for (const auto& [v, w] : tr.vertex_map) vm[std::to_string(v)] = w;
  j["vertex_map"] = vm;
  j["input_valid"] = is_valid(g);
  j["input_full"] = is_full(g);
  Dag out = tr.result;
  // A graph made only of source-to-sink edges keeps them.
  if (strip_bundles && strip_source_sink_edges(tr.result).num_edges() > 0) out = strip_source_sink_edges(tr.result);
  j["stripped_source_sink_edges"] = static_cast<int>(tr.result.num_edges() - out.num_edges());
  j["result_full"] = is_full(out);
  j["graph"] = graph_to_json(out);
  return j;
}

namespace {

const char* kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Cycle: return "cycle";
    case ComponentKind::Path: return "path";
    case ComponentKind::SourceSinkEdge: return "source-sink edge";
  }
  return "?";
}

}  // namespace

Json framings_report(const Dag& g, bool enumerate) {
  if (!is_valid(g)) fail(ErrorKind::NotValid, "ample framings are counted on valid graphs");
  ContractionTrace tr = complete_contraction(g);
  Decomposition d = path_cycle_decomposition(tr.result);
  Json j;
  j["M"] = d.M();
  j["components"] = Json::array();
  for (const auto& c : d.components)
    j["components"].push_back({{"kind", kind_name(c.kind)}, {"edges", c.edges}, {"vertices", c.vertices}});
  IdleReach reach = idle_reachability(g);
  j["source_reachable_vertices"] = reach.v1;
  j["sink_reachable_vertices"] = reach.v2;
  j["count"] = count_ample_framings(g).str();
  j["all_framings"] = count_all_framings(g).str();
  if (enumerate) {
    j["framings"] = Json::array();
    for (const auto& tf : enumerate_ample_framings(g))
      if (tf.canonical) j["framings"].push_back({{"index", tf.index}, {"framing", framing_to_json(tf.framing)}});
  }
  return j;
}

FormulaPrediction gkn_ample_formula(int k, int n) {
  FormulaPrediction p;
  if (n >= k + 1 && n <= 2 * k - 1) {
    p.value = BigInt(1) << (2 * (n - k));
    p.branch = "4^(n-k)";
  } else if (n == 2 * k) {
    p.value = BigInt(1) << n;
    p.branch = "2^n (n = 2k)";
  } else if (n >= 2 * k + 1 && n <= 3 * k - 1) {
    p.value = BigInt(1) << n;
    p.branch = "2^n";
  } else if (n >= 3 * k) {
    p.value = BigInt(1) << (3 * k - 1);
    p.branch = "2^(3k-1)";
  } else {
    p.branch = "no prediction";
  }
  return p;
}

namespace {

std::string frac(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

std::vector<Check> exceptional_checks(const FramedDag& fd, const std::vector<Route>& routes,
                                      const std::vector<int>& exc) {
  const Dag& g = fd.dag();
  std::vector<Check> out;
  int expected = 0;
  for (VertexId v : g.vertices())
    if (g.is_source(v)) expected += g.out_degree(v);
  out.push_back({"number of exceptional routes equals the total out-degree of the sources",
                 static_cast<int>(exc.size()) == expected,
                 std::to_string(exc.size()) + " vs " + std::to_string(expected)});
  if (!is_full(g)) return out;

  std::size_t good = 0;
  for (const Edge& e : g.edges()) {
    int holders = 0;
    for (int r : exc) holders += static_cast<int>(std::count(routes[r].begin(), routes[r].end(), e.id));
    if (holders == 1) ++good;
  }
  out.push_back({"every edge lies on exactly one exceptional route", good == g.num_edges(),
                 frac(good, g.num_edges())});

  auto labels = edge_labeling(fd);
  std::size_t constant = 0;
  for (int r : exc) {
    std::set<int> ls;
    for (EdgeId e : routes[r])
      if (g.is_inner(g.tail(e)) || g.is_inner(g.head(e))) ls.insert(labels.at(e));
    if (ls.size() <= 1) ++constant;
  }
  out.push_back({"exceptional routes are label-constant", constant == exc.size(), frac(constant, exc.size())});

  std::vector<Route> x;
  for (int r : exc) x.push_back(routes[r]);
  auto chk = check_exceptional_set(g, x);
  out.push_back({"exceptional routes have a bipartite adjacency graph", chk.ok, chk.reason});
  return out;
}

}  // namespace

RoutesSummary routes_report(const FramedDag& fd, const Options& opt) {
  const Dag& g = fd.dag();
  RoutesSummary s;
  auto routes = enumerate_routes(g, opt.caps.max_routes);
  auto coh = coherence_matrix(fd, routes);
  auto exc = exceptional_indices(coh);
  std::map<EdgeId, int> labels;
  if (is_full(g)) labels = edge_labeling(fd);
  Json rs = Json::array();
  for (int i = 0; i < static_cast<int>(routes.size()); ++i) {
    Json r = route_to_json(g, routes[i]);
    r["index"] = i;
    r["exceptional"] = std::binary_search(exc.begin(), exc.end(), i);
    if (!labels.empty()) {
      std::vector<int> w;
      for (EdgeId e : routes[i]) w.push_back(labels.at(e));
      r["labels"] = w;
    }
    rs.push_back(r);
  }
  s.report["routes"] = rs;
  s.report["exceptional"] = exc;
  s.report["ample"] = is_ample(fd, opt.caps.max_routes);
  s.checks = exceptional_checks(fd, routes, exc);
  return s;
}

CliquesSummary cliques_report(const FramedDag& fd, const Options& opt) {
  const Dag& g = fd.dag();
  CliquesSummary s;
  s.tri = maximal_cliques(fd, opt.caps);
  const Triangulation& t = s.tri;
  int d = flow_dims(g).flow_polytope;
  std::size_t right_size = 0, unimodular = 0, with_exc = 0;
  Json cs = Json::array();
  for (const Clique& c : t.cliques) {
    bool size_ok = static_cast<int>(c.size()) == d + 1;
    bool uni = size_ok && verify_unimodular(g, t.routes, c);
    right_size += size_ok;
    unimodular += uni;
    with_exc += std::includes(c.begin(), c.end(), t.exceptional.begin(), t.exceptional.end());
    cs.push_back({{"routes", c}, {"unimodular", uni}});
  }
  s.report["cliques"] = cs;
  s.report["count"] = t.cliques.size();
  DualGraph dg = dual_graph(t.cliques);
  s.report["dual_edges"] = dg.edges.size();
  auto flips = cliques_by_flips(t, opt.caps.max_cliques);
  std::size_t n = t.cliques.size();
  s.checks.push_back({"every maximal clique has dim + 1 routes", right_size == n, frac(right_size, n)});
  s.checks.push_back({"every maximal clique is a unimodular simplex", unimodular == n, frac(unimodular, n)});
  s.checks.push_back({"every maximal clique contains the exceptional routes", with_exc == n, frac(with_exc, n)});
  s.checks.push_back({"flips from one clique reach every maximal clique", flips.size() == n,
                      frac(flips.size(), n)});
  return s;
}

PosetSummary poset_report(const FramedDag& fd, const Triangulation& t, const Options& opt) {
  const Dag& g = fd.dag();
  PosetSummary s;
  s.poset = build_poset(fd, t);
  const TauPoset& p = s.poset;
  int n = static_cast<int>(classify_vertices(g).inner.size());
  s.dcov = dcov_polynomial(p);

  Json edges = Json::array();
  for (const HasseEdge& h : p.edges)
    edges.push_back({{"lower", h.lower}, {"upper", h.upper}, {"brick", h.brick}, {"brick_text", walk_string(h.brick)}});
  s.report["nodes"] = p.nodes;
  s.report["edges"] = edges;
  s.report["dcov"] = hvector_to_json(s.dcov);
  s.report["dcov_polynomial"] = polynomial_string(s.dcov);
  s.report["ucov"] = hvector_to_json(ucov_polynomial(p));

  std::size_t regular = 0;
  for (std::size_t v = 0; v < p.nodes.size(); ++v)
    if (p.dcov(static_cast<int>(v)) + p.ucov(static_cast<int>(v)) == n) ++regular;
  s.checks.push_back({"Hasse graph is regular of degree #inner vertices", regular == p.nodes.size(),
                      frac(regular, p.nodes.size())});
  s.checks.push_back({"dcov polynomial is palindromic", check_symmetry_unimodality(s.dcov).symmetric,
                      polynomial_string(s.dcov)});
  bool ends = !s.dcov.empty() && s.dcov.front() == 1 && s.dcov.back() == 1 && static_cast<int>(s.dcov.size()) == n + 1;
  s.checks.push_back({"unique minimum and unique maximum", ends, ""});

  Rng rng(opt.seed);
  int agree = 0;
  for (int i = 0; i < opt.shellings; ++i) agree += h_from_shelling(p, random_linear_extension(p, rng)) == s.dcov;
  agree += h_from_shelling(p, default_linear_extension(p)) == s.dcov;
  s.checks.push_back({"shelling h-vector equals the dcov polynomial", agree == opt.shellings + 1,
                      std::to_string(agree) + "/" + std::to_string(opt.shellings + 1) + " linear extensions"});

  auto k = kappa_map(p);
  std::vector<int> sorted = k;
  std::sort(sorted.begin(), sorted.end());
  bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  std::size_t swapped = 0;
  for (std::size_t v = 0; v < p.nodes.size(); ++v) swapped += p.dcov(static_cast<int>(v)) == p.ucov(k[v]);
  s.report["kappa"] = k;
  s.checks.push_back({"kappa is a bijection", bijective, ""});
  s.checks.push_back({"dcov(T) = ucov(kappa(T))", swapped == p.nodes.size(), frac(swapped, p.nodes.size())});

  // Reversal about the middle of the original vertex range.
  int lo = INT32_MAX, hi = INT32_MIN;
  for (const Edge& e : g.edges()) {
    lo = std::min({lo, e.orig_tail, e.orig_head});
    hi = std::max({hi, e.orig_tail, e.orig_head});
  }
  auto rev = reversal_edge_map(g, lo + hi - 1);
  if (rev && lo == 1) {
    auto img = order_reversing_image(p, g, t.routes, *rev);
    s.report["self_dual_under_reversal"] = img.has_value();
  } else {
    s.report["self_dual_under_reversal"] = nullptr;
  }
  return s;
}

GentleSummary gentle_report(const FramedDag& fd, const Triangulation& t, const Options& opt) {
  GentleSummary s;
  auto labels = edge_labeling(fd);
  Quiver q = build_quiver(fd);
  std::string viol = gentle_violation(q);
  s.checks.push_back({"the quiver with its relations is gentle", viol.empty(), viol});
  auto objs = objects_T(q);
  std::size_t nonexc = t.routes.size() - t.exceptional.size();
  s.checks.push_back({"objects of T match non-exceptional routes", objs.size() == nonexc,
                      std::to_string(objs.size()) + " vs " + std::to_string(nonexc)});

  std::map<int, int> obj_of_route;
  std::size_t inverse_ok = 0;
  for (int r = 0; r < static_cast<int>(t.routes.size()); ++r) {
    if (std::binary_search(t.exceptional.begin(), t.exceptional.end(), r)) continue;
    StringWord m = route_to_module(fd, labels, t.routes[r]);
    auto it = std::find(objs.begin(), objs.end(), m);
    if (it != objs.end()) obj_of_route[r] = static_cast<int>(it - objs.begin());
    if (it != objs.end() && module_to_route(fd, labels, m) == t.routes[r]) ++inverse_ok;
  }
  for (const auto& o : objs)
    if (route_to_module(fd, labels, module_to_route(fd, labels, o)) == o) ++inverse_ok;
  s.checks.push_back({"route and module maps are mutually inverse", inverse_ok == nonexc + objs.size(),
                      frac(inverse_ok, nonexc + objs.size())});
  if (obj_of_route.size() != nonexc) return s;

  BlossomQuiver bq = blossom(q);
  std::vector<SubstringProfile> prof;
  for (const auto& o : objs) prof.push_back(substring_profile(bq.quiver, extend_string(bq, o)));
  std::size_t agree = 0, pairs = 0;
  for (const auto& [r, i] : obj_of_route)
    for (const auto& [u, j] : obj_of_route) {
      ++pairs;
      agree += tau_rigid_pair(prof[i], prof[j]) == static_cast<bool>(t.coherence[r][u]);
    }
  s.checks.push_back({"tau-rigid pairs are exactly coherent pairs", agree == pairs, frac(agree, pairs)});

  std::set<std::vector<int>> from_cliques;
  for (const Clique& c : t.cliques) {
    std::vector<int> x;
    for (int r : c)
      if (obj_of_route.count(r)) x.push_back(obj_of_route[r]);
    std::sort(x.begin(), x.end());
    from_cliques.insert(x);
  }
  auto st = support_tau_tilting(bq, objs, opt.caps.max_cliques);
  std::set<std::vector<int>> st_set(st.begin(), st.end());
  s.checks.push_back({"support tau-tilting collections are the cliques without exceptional routes",
                      st_set == from_cliques, std::to_string(st.size()) + " vs " + std::to_string(t.cliques.size())});

  Json arrows = Json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
  Json rels = Json::array();
  for (const auto& [a, b] : q.relations()) rels.push_back({a, b});
  Json strings = Json::array();
  for (const auto& o : objs) strings.push_back(string_to_json(o));
  s.report["quiver"] = {{"nodes", q.nodes()}, {"arrows", arrows}, {"relations", rels}};
  s.report["objects"] = strings;
  s.report["support_tau_tilting"] = st.size();
  return s;
}

OracleSummary oracle_report(const Dag& g, const Options& opt) {
  OracleSummary s;
  s.oracle = ehrhart_oracle(g, opt.max_flow_states);
  const OracleReport& r = s.oracle;
  Json counts = Json::array();
  for (const auto& c : r.table.counts) counts.push_back(c.str());
  s.report["d"] = r.d;
  s.report["counts"] = counts;
  s.report["hstar"] = hvector_to_json(r.hstar);
  s.report["hstar_polynomial"] = polynomial_string(r.hstar);
  s.report["symmetric"] = r.flags.symmetric;
  s.report["unimodal"] = r.flags.unimodal;
  s.report["gorenstein"] = r.flags.gorenstein;
  s.report["differences_vanish"] = r.differences_vanish;
  s.checks.push_back({"finite differences of order d+1 vanish", r.differences_vanish, ""});
  s.checks.push_back({"h* is palindromic (Gorenstein)", r.flags.symmetric, polynomial_string(r.hstar)});
  s.checks.push_back({"h* is unimodal", r.flags.unimodal, polynomial_string(r.hstar)});
  return s;
}

Analysis analyze(const FramedDag& fd, const Options& opt) {
  const Dag& g = fd.dag();
  if (!is_full(g)) fail(ErrorKind::NotFull, "analyze needs a full graph; run contract first");
  if (!is_ample(fd, opt.caps.max_routes)) fail(ErrorKind::NotAmple, "the framing is not ample");
  Analysis a;
  auto add = [&](const std::vector<Check>& cs) { a.checks.insert(a.checks.end(), cs.begin(), cs.end()); };

  FlowDims dims = flow_dims(g);
  VertexClasses vc = classify_vertices(g);
  a.report["graph"] = graph_to_json(g);
  a.report["framing"] = framing_to_json(fd.framing());
  a.report["inner_vertices"] = vc.inner.size();
  a.report["dim_flow_polytope"] = dims.flow_polytope;

  auto routes = routes_report(fd, opt);
  a.report["routes"] = routes.report;
  add(routes.checks);
  auto cl = cliques_report(fd, opt);
  a.report["cliques"] = cl.report;
  add(cl.checks);
  auto ge = gentle_report(fd, cl.tri, opt);
  a.report["gentle"] = ge.report;
  add(ge.checks);
  auto po = poset_report(fd, cl.tri, opt);
  a.report["poset"] = po.report;
  add(po.checks);
  auto orc = oracle_report(g, opt);
  a.report["oracle"] = orc.report;
  add(orc.checks);

  const HStarVector& h = orc.oracle.hstar;
  a.checks.push_back({"oracle h* equals the dcov polynomial", trim_zeros(h) == po.dcov,
                      polynomial_string(h) + " vs " + polynomial_string(po.dcov)});
  BigInt total = 0;
  for (const auto& x : h) total += x;
  a.checks.push_back({"h*(1) equals the number of maximal cliques", total == BigInt(cl.tri.cliques.size()),
                      total.str() + " vs " + std::to_string(cl.tri.cliques.size())});
  a.checks.push_back({"lattice points at dilation 1 are the routes",
                      orc.oracle.table.counts[1] == BigInt(cl.tri.routes.size()), ""});

  auto ss = special_simplex_check(fd, opt.caps.max_routes);
  a.report["special_simplex"] = {{"ok", ss.ok}, {"uncovered", ss.uncovered}, {"multiply_covered", ss.multiply_covered},
                                 {"not_facets", ss.not_facets}};
  a.checks.push_back({"exceptional routes form a special simplex", ss.ok, ""});

  a.report["summary"] = {{"routes", cl.tri.routes.size()},
                         {"exceptional", cl.tri.exceptional.size()},
                         {"cliques", cl.tri.cliques.size()},
                         {"dcov", po.report["dcov"]},
                         {"hstar", orc.report["hstar"]},
                         {"gorenstein", orc.oracle.flags.gorenstein},
                         {"unimodal", orc.oracle.flags.unimodal}};
  a.report["checks"] = checks_to_json(a.checks);
  return a;
}

Analysis fuzz(int count, const Options& opt) {
  Rng rng(opt.seed);
  RandomFullParams params;
  params.max_edges = 10;
  params.max_inner = 4;
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // claim -> (ok, total)
  std::size_t forest_violations = 0, brute_checked = 0;
  Json failures = Json::array();

  for (int i = 0; i < count; ++i) {
    int expansions = std::uniform_int_distribution<int>(0, 3)(rng);
    Dag g = random_valid_dag(rng, expansions, params);
    auto record = [&](const std::string& claim, bool ok) {
      auto& t = tally[claim];
      t.second += 1;
      if (ok) t.first += 1;
      else if (failures.size() < 5) failures.push_back({{"claim", claim}, {"graph", graph_to_json(g)}});
    };

    ContractionTrace tr = complete_contraction(g);
    const Dag& h = tr.result;
    record("contraction is full", is_full(h));
    bool confluent = true;
    for (int k = 0; k < 3; ++k) {
      auto alt = complete_contraction(g, [&](const std::vector<EdgeId>& idle) {
        return idle[std::uniform_int_distribution<std::size_t>(0, idle.size() - 1)(rng)];
      });
      confluent = confluent && isomorphic(alt.result, h);
    }
    record("contraction is independent of the order of idle edges", confluent);
    if (!idle_edges_form_forest(g)) ++forest_violations;

    auto ample = enumerate_ample_framings(h);
    record("2^M ample framings on the contraction",
           BigInt(ample.size()) == (BigInt(1) << path_cycle_decomposition(h).M()));
    const Framing& f = ample[std::uniform_int_distribution<std::size_t>(0, ample.size() - 1)(rng)].framing;
    FramedDag fd(h, f);
    auto routes = enumerate_routes(h, opt.caps.max_routes);
    auto exc = exceptional_indices(coherence_matrix(fd, routes));
    for (const Check& c : exceptional_checks(fd, routes, exc)) record(c.claim, c.ok);

    if (g.num_edges() <= 10) {
      ++brute_checked;
      std::set<Framing> fast, slow;
      for (const auto& tf : enumerate_ample_framings(g)) fast.insert(tf.framing);
      for (const auto& fr : brute_force_ample_framings(g)) slow.insert(fr);
      record("enumerated ample framings equal brute force", fast == slow);
      record("ample framing count matches the product formula", BigInt(fast.size()) == count_ample_framings(g));
    }
  }

  Analysis a;
  for (const auto& [claim, t] : tally) a.checks.push_back({claim, t.first == t.second, frac(t.first, t.second)});
  a.report["graphs"] = count;
  a.report["seed"] = opt.seed;
  a.report["brute_force_checked"] = brute_checked;
  a.report["idle_forest_violations"] = forest_violations;
  a.report["failures"] = failures;
  a.report["checks"] = checks_to_json(a.checks);
  return a;
}

}  // namespace flowtri
