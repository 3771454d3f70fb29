#ifndef FLOWTRI_REPORT_HPP
#define FLOWTRI_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowtri/ehrhart.hpp"
#include "flowtri/io.hpp"

namespace flowtri {

// A named identity between two computations and whether it held.
struct Check {
  std::string claim;
  bool ok = false;
  std::string detail;
};

Json checks_to_json(const std::vector<Check>& checks);
bool all_ok(const std::vector<Check>& checks);
// "ClaimFailed: <claim>; <claim>" for the failed checks.
std::string failure_summary(const std::vector<Check>& checks);

struct Options {
  Caps caps;
  std::uint64_t seed = 1;
  // Random linear extensions tested against the dcov polynomial.
  int shellings = 20;
  std::size_t max_flow_states = 2000000;
};

// Named framing ("length", "paper-g27", "id") or a framing JSON file.
Framing resolve_framing(const Dag& g, const std::string& name);

// Generators as on the command line: {"car", n} or {"gkn", k, m}.
Dag generate(const std::string& family, const std::vector<int>& args);

// With `strip_bundles`, source-to-sink edges are dropped unless nothing else
// remains.
Json contract_report(const Dag& g, bool strip_bundles = false);

// Decomposition, M and the count; with `enumerate`, the canonical framings.
Json framings_report(const Dag& g, bool enumerate);

// Number of ample framings of G(k, n+1) predicted by the closed formula, with
// the branch used. n = 2k is covered only by the 2^n branch; n <= k has no
// prediction.
struct FormulaPrediction {
  std::optional<BigInt> value;
  std::string branch;
};
FormulaPrediction gkn_ample_formula(int k, int n);

struct RoutesSummary {
  Json report;
  std::vector<Check> checks;
};
RoutesSummary routes_report(const FramedDag& fd, const Options& opt);

struct CliquesSummary {
  Json report;
  std::vector<Check> checks;
  Triangulation tri;
};
CliquesSummary cliques_report(const FramedDag& fd, const Options& opt);

struct PosetSummary {
  Json report;
  std::vector<Check> checks;
  TauPoset poset;
  HStarVector dcov;
};
PosetSummary poset_report(const FramedDag& fd, const Triangulation& t, const Options& opt);

// Route/module bijection, rigidity against coherence and support tau-tilting
// against cliques.
struct GentleSummary {
  Json report;
  std::vector<Check> checks;
};
GentleSummary gentle_report(const FramedDag& fd, const Triangulation& t, const Options& opt);

struct OracleSummary {
  Json report;
  std::vector<Check> checks;
  OracleReport oracle;
};
OracleSummary oracle_report(const Dag& g, const Options& opt);

// Everything above on one framed full graph, plus oracle h* = dcov.
struct Analysis {
  Json report;
  std::vector<Check> checks;
};
Analysis analyze(const FramedDag& fd, const Options& opt);

// Random valid DAGs: exceptional-route checks on a random ample framing of
// each contraction, enumeration against brute force for small graphs and
// contraction confluence. Forest-property violations are counted, not failed.
Analysis fuzz(int count, const Options& opt);

}  // namespace flowtri

#endif  // FLOWTRI_REPORT_HPP
