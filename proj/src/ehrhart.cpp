#include "flowtri/ehrhart.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace flowtri {

BigInt count_integer_flows(const Dag& g, int t, std::size_t max_states) {
  if (t < 0) fail(ErrorKind::BadInput, "negative strength");
  auto order = g.topological_order();
  std::map<VertexId, std::size_t> slot;
  for (std::size_t i = 0; i < order.size(); ++i) slot[order[i]] = i + 1;
  std::size_t last_source = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (g.is_source(order[i])) last_source = i;

  // state[0] is the strength not yet sent out of a source; state[slot[v]]
  // is the inflow collected at v.
  std::map<std::vector<int>, BigInt> layer;
  std::vector<int> start(order.size() + 1, 0);
  start[0] = t;
  layer[start] = 1;

  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId v = order[i];
    if (g.is_sink(v)) continue;
    const auto& outs = g.out_edges(v);
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [state, ways] : layer) {
      std::vector<int> s = state;
      std::vector<int> amounts;
      if (g.is_source(v)) {
        int lo = i == last_source ? s[0] : 0;
        for (int k = lo; k <= s[0]; ++k) amounts.push_back(k);
      } else {
        amounts.push_back(s[slot[v]]);
        s[slot[v]] = 0;
      }
      for (int amount : amounts) {
        std::vector<int> base = s;
        if (g.is_source(v)) base[0] -= amount;
        // Every split of `amount` over the out-edges.
        std::function<void(std::size_t, int, std::vector<int>&)> split = [&](std::size_t k, int left,
                                                                            std::vector<int>& cur) {
          VertexId h = g.head(outs[k]);
          bool tracked = !g.is_sink(h);
          if (k + 1 == outs.size()) {
            if (tracked) cur[slot[h]] += left;
            next[cur] += ways;
            if (tracked) cur[slot[h]] -= left;
            return;
          }
          for (int x = 0; x <= left; ++x) {
            if (tracked) cur[slot[h]] += x;
            split(k + 1, left - x, cur);
            if (tracked) cur[slot[h]] -= x;
          }
        };
        split(0, amount, base);
        if (next.size() > max_states)
          fail(ErrorKind::FrontierExplosion, "more than " + std::to_string(max_states) + " flow states");
      }
    }
    layer = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [state, ways] : layer) total += ways;
  return total;
}

FlowCountTable flow_count_table(const Dag& g, int max_t, std::size_t max_states) {
  FlowCountTable tbl;
  for (int t = 0; t <= max_t; ++t) tbl.counts.push_back(count_integer_flows(g, t, max_states));
  return tbl;
}

BigInt finite_difference(const FlowCountTable& tbl, int order, int start) {
  if (start < 0 || start + order >= static_cast<int>(tbl.counts.size()))
    fail(ErrorKind::BadInput, "not enough counts for this difference");
  BigInt s = 0;
  for (int i = 0; i <= order; ++i) {
    BigInt term = binomial(order, i) * tbl.counts[start + order - i];
    if (i % 2) s -= term;
    else s += term;
  }
  return s;
}

HStarVector hstar_from_counts(const FlowCountTable& tbl, int d) {
  if (d < 0) fail(ErrorKind::BadInput, "negative dimension");
  if (static_cast<int>(tbl.counts.size()) < d + 1) fail(ErrorKind::BadInput, "need counts for t = 0..d");
  HStarVector h;
  for (int k = 0; k < static_cast<int>(tbl.counts.size()); ++k) {
    BigInt s = 0;
    for (int i = 0; i <= std::min(k, d + 1); ++i) {
      BigInt term = binomial(d + 1, i) * tbl.counts[k - i];
      if (i % 2) s -= term;
      else s += term;
    }
    if (k > d) {
      if (s != 0)
        fail(ErrorKind::NonIntegralSolution, "counts are not a polynomial of degree " + std::to_string(d));
      continue;
    }
    if (s < 0) fail(ErrorKind::NegativeCoefficient, "h*_" + std::to_string(k) + " = " + s.str());
    h.push_back(s);
  }
  return h;
}

OracleReport ehrhart_oracle(const Dag& g, std::size_t max_states) {
  OracleReport r;
  r.d = flow_dims(g).flow_polytope;
  r.table = flow_count_table(g, r.d + 2, max_states);
  r.differences_vanish =
      finite_difference(r.table, r.d + 1, 0) == 0 && finite_difference(r.table, r.d + 1, 1) == 0;
  r.hstar = hstar_from_counts(r.table, r.d);
  r.flags = check_symmetry_unimodality(r.hstar);
  return r;
}

int integer_rank(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows.front().size();
  int rank = 0;
  // Fraction-free elimination; rows below the pivot are cross-multiplied.
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      BigInt a = rows[rank][c], b = rows[r][c];
      BigInt gcd = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = rows[r][k] * a - rows[rank][k] * b;
        gcd = boost::multiprecision::gcd(gcd, rows[r][k]);
      }
      if (gcd > 1)
        for (auto& x : rows[r]) x /= gcd;
    }
    ++rank;
  }
  return rank;
}

SpecialSimplexReport special_simplex_check(const FramedDag& fd, std::size_t max_routes) {
  const Dag& g = fd.dag();
  if (!is_full(g)) fail(ErrorKind::NotFull, "special simplex check needs a full graph");
  auto routes = enumerate_routes(g, max_routes);
  auto coh = coherence_matrix(fd, routes);
  auto exc = exceptional_indices(coh);
  int d = flow_dims(g).flow_polytope;

  std::map<EdgeId, std::size_t> col;
  for (const Edge& e : g.edges()) col.emplace(e.id, col.size());

  SpecialSimplexReport rep;
  for (const Edge& e : g.edges()) {
    int holders = 0;
    for (int r : exc)
      if (std::count(routes[r].begin(), routes[r].end(), e.id)) ++holders;
    if (holders == 0) rep.uncovered.push_back(e.id);
    if (holders > 1) rep.multiply_covered.push_back(e.id);

    // A facet of the d-dimensional polytope spans a d-dimensional linear
    // space (its affine hull misses the origin).
    std::vector<std::vector<BigInt>> rows;
    for (const Route& r : routes) {
      if (std::count(r.begin(), r.end(), e.id)) continue;
      std::vector<BigInt> row(col.size(), 0);
      for (EdgeId x : r) row[col[x]] = 1;
      rows.push_back(std::move(row));
    }
    if (integer_rank(std::move(rows)) != d) rep.not_facets.push_back(e.id);
  }
  rep.ok = rep.uncovered.empty() && rep.multiply_covered.empty();
  return rep;
}

}  // namespace flowtri
