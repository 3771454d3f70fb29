#ifndef FLOWTRI_TEST_CORPUS_HPP
#define FLOWTRI_TEST_CORPUS_HPP

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "flowtri/framing.hpp"
#include "flowtri/random_dags.hpp"

namespace fixtures {

struct Instance {
  std::string name;
  flowtri::Dag g;
  flowtri::Framing f;
};

// G(2,7), the car(8) core and `random` random full DAGs with a random ample
// framing each.
inline std::vector<Instance> corpus(int random, std::uint64_t seed = 2024) {
  std::vector<Instance> out;
  flowtri::Dag g27 = g27_full();
  out.push_back({"G(2,7)", g27, flowtri::paper_g27_framing(g27)});
  flowtri::Dag car = car8_core();
  out.push_back({"car(8) core", car, flowtri::length_framing(car)});
  flowtri::Rng rng(seed);
  flowtri::RandomFullParams p;
  p.max_edges = 12;
  p.max_inner = 5;
  for (int i = 0; i < random; ++i) {
    flowtri::Dag g = flowtri::random_full_dag(rng, p);
    auto all = flowtri::enumerate_ample_framings(g);
    auto pick = std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng);
    out.push_back({"random " + std::to_string(i), g, all[pick].framing});
  }
  return out;
}

}  // namespace fixtures

#endif  // FLOWTRI_TEST_CORPUS_HPP
