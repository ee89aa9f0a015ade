// Serial reference vs OpenMP kernels: Monte Carlo experiment trials,
// Lemma 2 trials, and per-colour all-pairs distances.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "minpaths/generators.hpp"
#include "minpaths/shortest.hpp"
#include "minpaths/stochastic.hpp"

using namespace minpaths;

namespace {

template <typename F>
double seconds(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000;
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    ExperimentConfig config;
    config.n = 6;
    config.trials = trials;
    config.seed = 7;
    ExperimentReport serial, parallel;
    double ts = seconds([&] { serial = run_experiment_serial(config); });
    double tp = seconds([&] { parallel = run_experiment(config); });
    report("experiment n=6", ts, tp, serial.trials == parallel.trials);
  }

  {
    const FixedScale scale;
    std::vector<ColouredEdgeGraph::EdgeSpec> edges{
        {0, 1, 0, scale.whole(1)}, {0, 1, 1, scale.whole(1)}};
    ColouredEdgeGraph pair(2, 2, edges, scale);
    Lemma2Config config;
    config.edge = 0;
    config.r = scale.parse("0.3");
    config.epsilon = scale.parse("0.2");
    config.trials = trials * 50;
    config.seed = 11;
    Lemma2Report serial, parallel;
    double ts = seconds([&] { serial = check_lemma2_serial(pair, config); });
    double tp = seconds([&] { parallel = check_lemma2(pair, config); });
    report("lemma2 two-vertex", ts, tp, serial == parallel);
  }

  {
    ColouredEdgeGraph graph =
        gen_random(160, 8, 0.3, WeightDistribution::uniform(0.0, 1.0), 3);
    std::vector<DistanceMatrix> serial, parallel;
    double ts = seconds([&] { serial = all_colour_all_pairs_serial(graph); });
    double tp = seconds([&] { parallel = all_colour_all_pairs(graph); });
    report("all-pairs n=160 k=8", ts, tp, serial == parallel);
  }
  return 0;
}
