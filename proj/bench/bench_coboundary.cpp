// serial vs OpenMP evaluation of delta(Phi) over basis tensors
#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vcoh/cochain.hpp"

using namespace vcoh;

int main(int argc, char** argv) {
  int weight = argc > 1 ? std::atoi(argv[1]) : 5;
  int reps = argc > 2 ? std::atoi(argv[2]) : 2;
  auto V = make_heisenberg(16);
  EngineOptions o;
  o.dual_cutoff = 3;
  auto inputs = basis_tensors(*V, 2, weight, true);
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("delta(tabulated arity 1) on %zu tensors, dual <= 3, %d thread(s)\n", inputs.size(), threads);
  // warm the mode memo of V, which both kernels share
  evaluate_inputs(coboundary(random_tabulated(*V, 1, 99, o), 2), inputs, o.dual_cutoff, false);
  for (bool parallel : {false, true}) {
    double best = 1e30;
    for (int r = 0; r < reps; ++r) {
      // fresh cochains so that no memo is shared between runs
      auto phi = coboundary(random_tabulated(*V, 1, 100 + r, o), 2);
      auto t = std::chrono::steady_clock::now();
      auto out = evaluate_inputs(phi, inputs, o.dual_cutoff, parallel);
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
      best = std::min(best, s);
      if (out.size() != inputs.size()) return 1;
    }
    std::printf("%-8s %.3f s\n", parallel ? "parallel" : "serial", best);
  }
  return 0;
}
