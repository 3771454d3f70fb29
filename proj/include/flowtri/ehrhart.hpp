#ifndef FLOWTRI_EHRHART_HPP
#define FLOWTRI_EHRHART_HPP

#include <cstddef>
#include <vector>

#include "flowtri/framing.hpp"
#include "flowtri/hvector.hpp"

namespace flowtri {

// counts[t] = number of integer flows of strength t.
struct FlowCountTable {
  std::vector<BigInt> counts;
};

// Nonnegative integer edge values conserving flow at inner vertices with
// total source outflow t. Dynamic programming over a topological order whose
// state is the inflow collected so far at each pending vertex.
// FrontierExplosion when a layer exceeds max_states.
BigInt count_integer_flows(const Dag& g, int t, std::size_t max_states = 2000000);

FlowCountTable flow_count_table(const Dag& g, int max_t, std::size_t max_states = 2000000);

// Forward difference of the given order starting at t = start.
BigInt finite_difference(const FlowCountTable& tbl, int order, int start = 0);

// h*_k = sum_i (-1)^i C(d+1, i) counts[k-i] for k = 0..d. Entries of the
// series numerator beyond d must vanish for every available count
// (NonIntegralSolution otherwise); negative entries give NegativeCoefficient.
HStarVector hstar_from_counts(const FlowCountTable& tbl, int d);

struct OracleReport {
  int d = 0;
  FlowCountTable table;
  HStarVector hstar;
  ShapeFlags flags;
  // Differences of order d+1 over t = 0..d+1 and 1..d+2.
  bool differences_vanish = false;
};

// Counts t = 0..d+2 with d = dim of the unit flow polytope.
OracleReport ehrhart_oracle(const Dag& g, std::size_t max_states = 2000000);

struct SpecialSimplexReport {
  bool ok = false;
  // Edges contained in no exceptional route, or in more than one.
  std::vector<EdgeId> uncovered;
  std::vector<EdgeId> multiply_covered;
  // Edges whose face x_e = 0 has smaller dimension than a facet.
  std::vector<EdgeId> not_facets;
};

// Every facet x_e = 0 must contain all exceptional routes but one.
SpecialSimplexReport special_simplex_check(const FramedDag& fd, std::size_t max_routes = 1000000);

// Rank over the rationals of integer rows.
int integer_rank(std::vector<std::vector<BigInt>> rows);

}  // namespace flowtri

#endif  // FLOWTRI_EHRHART_HPP
