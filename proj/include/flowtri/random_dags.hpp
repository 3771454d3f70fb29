#ifndef FLOWTRI_RANDOM_DAGS_HPP
#define FLOWTRI_RANDOM_DAGS_HPP

#include <random>

#include "flowtri/dag.hpp"

namespace flowtri {

using Rng = std::mt19937_64;

struct RandomFullParams {
  int min_inner = 1;
  int max_inner = 4;
  int max_sources = 2;
  int max_sinks = 2;
  // Probability of adding one extra source->sink edge.
  double bundle_prob = 0.1;
  // Graphs with more edges are rejected and redrawn.
  int max_edges = 12;
};

// Random full DAG: inner vertices are wired in index order, each drawing two
// in-edges from sources or earlier inner vertices with free out-slots; the
// remaining out-slots go to sinks.
Dag random_full_dag(Rng& rng, const RandomFullParams& p = {});

// Random valid DAG: a random full DAG followed by `expansions` random
// idle-edge expansions.
Dag random_valid_dag(Rng& rng, int expansions, const RandomFullParams& p = {});

// One random idle-edge expansion of g (splits a vertex along a new idle edge).
Dag random_idle_expansion(Rng& rng, const Dag& g);

}  // namespace flowtri

#endif  // FLOWTRI_RANDOM_DAGS_HPP
