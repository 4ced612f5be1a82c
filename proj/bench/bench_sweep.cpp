// Serial reference vs OpenMP sweep over every cluster up to N points.
// Usage: bench_sweep [max_points=7] [repeats=3]

#include <omp.h>

#include <cstdio>
#include <cstdlib>

#include "nashkit/sweep.hpp"

using namespace nashkit;

int main(int argc, char** argv) {
  std::size_t max_points = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 7;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  if (max_points == 0 || max_points > 9 || repeats < 1) {
    std::fprintf(stderr, "usage: bench_sweep [max_points 1..9] [repeats]\n");
    return 2;
  }
  auto clusters = all_clusters(max_points);
  std::printf("clusters up to %zu points: %zu, threads: %d\n", max_points, clusters.size(), omp_get_max_threads());

  double best_serial = 1e300, best_parallel = 1e300;
  SweepSummary serial, parallel;
  for (int r = 0; r < repeats; ++r) {
    double t0 = omp_get_wtime();
    serial = sweep_lattice_serial(clusters);
    double t1 = omp_get_wtime();
    parallel = sweep_lattice_parallel(clusters);
    double t2 = omp_get_wtime();
    if (t1 - t0 < best_serial) best_serial = t1 - t0;
    if (t2 - t1 < best_parallel) best_parallel = t2 - t1;
  }
  bool same = serial == parallel;
  std::printf("serial   %.3f s\nparallel %.3f s\nspeedup  %.2fx\nresults identical: %s, all checks pass: %s\n",
              best_serial, best_parallel, best_serial / best_parallel, same ? "yes" : "no",
              serial.all_pass() ? "yes" : "no");
  return same && serial.all_pass() ? 0 : 1;
}
