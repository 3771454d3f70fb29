// Command-line front end: generate or read a graph, pick a framing and run
// one analysis. Graphs are read from a file argument or stdin.

#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "flowtri/report.hpp"

using namespace flowtri;

namespace {

struct Settings {
  bool json = false;
  std::string dot;
  std::uint64_t seed = 1;
  std::size_t max_routes = 1000000;
  std::size_t max_cliques = 1000000;
  std::string framing = "length";
  std::string input = "-";
};

Options options(const Settings& s) {
  Options o;
  o.caps.max_routes = s.max_routes;
  o.caps.max_cliques = s.max_cliques;
  o.seed = s.seed;
  return o;
}

Dag load(const Settings& s) {
  std::string text;
  if (s.input == "-") text.assign(std::istreambuf_iterator<char>(std::cin), {});
  else text = read_file(s.input);
  return read_graph_text(text);
}

// Valid graphs are replaced by their complete contraction.
Dag load_full(const Settings& s) {
  Dag g = load(s);
  if (is_full(g)) return g;
  if (!is_valid(g)) fail(ErrorKind::NotValid, "the graph has no full contraction");
  std::cerr << "note: input is not full; using its complete contraction\n";
  return complete_contraction(g).result;
}

void emit_dot(const Settings& s, const std::string& dot) {
  if (!s.dot.empty()) write_file(s.dot, dot);
}

void print_checks(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    std::cout << (c.ok ? "  ok    " : "  FAIL  ") << c.claim << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
}

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

int finish(const std::vector<Check>& checks) {
  if (all_ok(checks)) return 0;
  std::cerr << failure_summary(checks) << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ample framings, DKK triangulations, tau-tilting posets and h*-vectors of flow polytopes"};
  app.require_subcommand(1);
  Settings s;
  app.add_flag("--json", s.json, "JSON report on stdout");
  app.add_option("--dot", s.dot, "Write a DOT drawing to this path");
  app.add_option("--seed", s.seed, "Seed for linear extensions and fuzzing");
  app.add_option("--max-routes", s.max_routes, "Route enumeration cap");
  app.add_option("--max-cliques", s.max_cliques, "Clique enumeration cap");
  app.add_option("--framing", s.framing, "length, paper-g27, id or a framing JSON file");
  app.fallthrough();

  auto* gen = app.add_subcommand("gen", "Generate car n or gkn k m");
  std::string family;
  std::vector<int> gen_args;
  bool edges_format = false;
  gen->add_option("family", family, "car or gkn")->required();
  gen->add_option("args", gen_args, "Parameters")->required();
  gen->add_flag("--edges", edges_format, "Print an edge list instead of JSON");

  auto* contract = app.add_subcommand("contract", "Complete contraction of a valid graph");
  bool keep_direct = false;
  contract->add_flag("--keep-direct", keep_direct, "Keep source-to-sink edges in the result");

  auto* framings = app.add_subcommand("framings", "Count ample framings");
  bool enumerate = false;
  framings->add_flag("--enumerate", enumerate, "List one framing of every 1<->2 swap pair");

  auto* routes = app.add_subcommand("routes", "Routes and exceptional routes");
  auto* cliques = app.add_subcommand("cliques", "Maximal cliques of the DKK triangulation");
  auto* poset = app.add_subcommand("poset", "Tau-tilting poset on the maximal cliques");
  auto* hstar = app.add_subcommand("hstar", "h-vector from down-cover counts");
  auto* oracle = app.add_subcommand("oracle", "Ehrhart h* by counting integer flows");
  auto* analyze_cmd = app.add_subcommand("analyze", "Every analysis and cross-check");
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Cross-checks on random valid graphs");
  int fuzz_count = 200;
  fuzz_cmd->add_option("--count", fuzz_count, "Number of random graphs");

  for (auto* sub : {contract, framings, routes, cliques, poset, hstar, oracle, analyze_cmd})
    sub->add_option("input", s.input, "Graph file (JSON or edge list); stdin if omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Options opt = options(s);

    if (*gen) {
      Dag g = generate(family, gen_args);
      emit_dot(s, graph_dot(g));
      if (edges_format) std::cout << edge_list(g);
      else std::cout << graph_to_json(g).dump() << "\n";
      return 0;
    }

    if (*contract) {
      Dag g = load(s);
      Json rep = contract_report(g, !keep_direct);
      Dag h = graph_from_json(rep["graph"]);
      emit_dot(s, graph_dot(h));
      if (s.json) {
        std::cout << rep.dump(2) << "\n";
      } else {
        std::cerr << "contracted " << rep["steps"].size() << " idle edges; result has " << h.num_vertices()
                  << " vertices and " << h.num_edges() << " edges; full: " << (is_full(h) ? "yes" : "no") << "\n";
        std::cout << rep["graph"].dump() << "\n";
      }
      return is_full(h) ? 0 : 1;
    }

    if (*framings) {
      Dag g = load(s);
      Json rep = framings_report(g, enumerate);
      if (s.json) {
        std::cout << rep.dump(2) << "\n";
        return 0;
      }
      std::cout << "M = " << rep["M"] << "\n";
      for (const auto& c : rep["components"])
        std::cout << "  " << c["kind"].get<std::string>() << ": " << join(c["vertices"].get<std::vector<int>>()) << "\n";
      std::cout << "ample framings: " << rep["count"].get<std::string>() << " of "
                << rep["all_framings"].get<std::string>() << "\n";
      return 0;
    }

    if (*oracle) {
      Dag g = load(s);
      auto o = oracle_report(g, opt);
      std::vector<Check> checks = o.checks;
      if (is_full(g) && app.count("--framing")) {
        FramedDag fd(g, resolve_framing(g, s.framing));
        auto ss = special_simplex_check(fd, opt.caps.max_routes);
        o.report["special_simplex"] = ss.ok;
        checks.push_back({"exceptional routes form a special simplex", ss.ok, ""});
      }
      o.report["checks"] = checks_to_json(checks);
      if (s.json) {
        std::cout << o.report.dump(2) << "\n";
      } else {
        std::cout << "d = " << o.oracle.d << "\ncounts:";
        for (const auto& c : o.oracle.table.counts) std::cout << " " << c;
        std::cout << "\nh* = " << polynomial_string(o.oracle.hstar) << "\n";
        print_checks(checks);
      }
      return finish(checks);
    }

    if (*fuzz_cmd) {
      Analysis a = fuzz(fuzz_count, opt);
      if (s.json) {
        std::cout << a.report.dump(2) << "\n";
      } else {
        std::cout << fuzz_count << " random valid graphs, seed " << s.seed << "\n";
        print_checks(a.checks);
        std::cout << "idle edges not a forest: " << a.report["idle_forest_violations"] << " graphs\n";
      }
      return finish(a.checks);
    }

    if (*routes) {
      Dag g = load(s);
      FramedDag fd(g, resolve_framing(g, s.framing));
      auto r = routes_report(fd, opt);
      r.report["checks"] = checks_to_json(r.checks);
      if (s.json) {
        std::cout << r.report.dump(2) << "\n";
      } else {
        for (const auto& x : r.report["routes"])
          std::cout << (x["exceptional"].get<bool>() ? "* " : "  ") << x["index"] << ": "
                    << join(x["vertices"].get<std::vector<int>>(), "-") << "\n";
        std::cout << r.report["routes"].size() << " routes, " << r.report["exceptional"].size()
                  << " exceptional (*), ample: " << (r.report["ample"].get<bool>() ? "yes" : "no") << "\n";
        print_checks(r.checks);
      }
      return finish(r.checks);
    }

    if (*cliques) {
      Dag g = load(s);
      FramedDag fd(g, resolve_framing(g, s.framing));
      auto c = cliques_report(fd, opt);
      emit_dot(s, dual_graph_dot(dual_graph(c.tri.cliques)));
      c.report["checks"] = checks_to_json(c.checks);
      if (s.json) {
        std::cout << c.report.dump(2) << "\n";
      } else {
        for (const Clique& q : c.tri.cliques) std::cout << "  {" << join(q, ",") << "}\n";
        std::cout << c.tri.cliques.size() << " maximal cliques over " << c.tri.routes.size() << " routes\n";
        print_checks(c.checks);
      }
      return finish(c.checks);
    }

    // The remaining commands need a full graph with an ample framing.
    Dag g = load_full(s);
    FramedDag fd(g, resolve_framing(g, s.framing));
    if (!is_ample(fd, opt.caps.max_routes)) fail(ErrorKind::NotAmple, "the framing is not ample");

    if (*poset || *hstar) {
      auto c = cliques_report(fd, opt);
      auto p = poset_report(fd, c.tri, opt);
      emit_dot(s, poset_dot(p.poset));
      auto flags = check_symmetry_unimodality(p.dcov);
      if (*hstar) {
        Json j = {{"h", hvector_to_json(p.dcov)},
                  {"polynomial", polynomial_string(p.dcov)},
                  {"symmetric", flags.symmetric},
                  {"unimodal", flags.unimodal},
                  {"gorenstein", flags.gorenstein},
                  {"checks", checks_to_json(p.checks)}};
        if (s.json) std::cout << j.dump(2) << "\n";
        else {
          std::cout << std::boolalpha << "h = " << polynomial_string(p.dcov) << "\nsymmetric: " << flags.symmetric
                    << "  unimodal: " << flags.unimodal << "  gorenstein: " << flags.gorenstein << "\n";
          print_checks(p.checks);
        }
        return finish(p.checks);
      }
      p.report["checks"] = checks_to_json(p.checks);
      if (s.json) {
        std::cout << p.report.dump(2) << "\n";
      } else {
        for (const HasseEdge& h : p.poset.edges)
          std::cout << "  c" << h.lower << " < c" << h.upper << "   " << walk_string(h.brick) << "\n";
        std::cout << p.poset.nodes.size() << " nodes, " << p.poset.edges.size()
                  << " cover relations, dcov = " << polynomial_string(p.dcov) << "\n";
        print_checks(p.checks);
      }
      return finish(p.checks);
    }

    if (*analyze_cmd) {
      Analysis a = analyze(fd, opt);
      emit_dot(s, graph_dot(g, nullptr));
      if (s.json) {
        std::cout << a.report.dump(2) << "\n";
      } else {
        const Json& sum = a.report["summary"];
        std::cout << "routes: " << sum["routes"] << "  exceptional: " << sum["exceptional"]
                  << "  maximal cliques: " << sum["cliques"] << "\n";
        std::cout << "dcov = " << a.report["poset"]["dcov_polynomial"].get<std::string>()
                  << "\noracle h* = " << a.report["oracle"]["hstar_polynomial"].get<std::string>() << "\n";
        std::cout << "gorenstein: " << sum["gorenstein"] << "  unimodal: " << sum["unimodal"] << "\n";
        print_checks(a.checks);
      }
      return finish(a.checks);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return is_consistency_failure(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
