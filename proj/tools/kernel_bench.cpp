// Compares the serial reference kernels against their OpenMP variants on a
// few graph families and prints one CSV row per (kernel, graph, threads).

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "bcr/graph.hpp"
#include "bcr/kernels.hpp"

namespace {

double now_us() {
  return std::chrono::duration<double, std::micro>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename Fn>
double best_of(int reps, Fn&& fn) {
  double best = bcr::kUnreachable;
  for (int r = 0; r < reps; ++r) {
    double t0 = now_us();
    fn();
    double t1 = now_us();
    best = std::min(best, t1 - t0);
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = 5;
  if (argc > 1) reps = std::max(1, std::atoi(argv[1]));
  const int max_threads = omp_get_max_threads();

  struct Input {
    std::string name;
    bcr::Graph graph;
  };
  std::vector<Input> inputs;
  inputs.push_back({"ternary_d7", bcr::gen_ternary_tree(7)});
  inputs.push_back({"er_n2000", bcr::gen_random_graph(2000, 0.004, 7)});

  std::printf("kernel,graph,n,threads,microseconds\n");
  for (const Input& in : inputs) {
    const int n = in.graph.node_count();
    bcr::NodeMask all(n, 1);
    std::vector<bcr::NodeId> scope(n);
    for (int v = 0; v < n; ++v) scope[v] = v;

    for (int threads : {1, max_threads}) {
      double t = best_of(reps, [&] {
        auto balls = bcr::kernels::hop_balls(in.graph, 2, threads);
        if (balls.empty()) std::abort();
      });
      std::printf("hop_balls,%s,%d,%d,%.1f\n", in.name.c_str(), n, threads, t);
    }
    for (int threads : {1, max_threads}) {
      double t = best_of(reps, [&] {
        auto ecc = bcr::kernels::scope_eccentricities(in.graph, scope, all, threads);
        if (ecc.empty()) std::abort();
      });
      std::printf("scope_eccentricities,%s,%d,%d,%.1f\n", in.name.c_str(), n, threads, t);
    }
  }
  return 0;
}
