// Serial reference vs OpenMP kernels on random stacked triangulations.

#include <chrono>
#include <iostream>
#include <omp.h>
#include <vector>

#include "nestplan/bubbles.hpp"
#include "nestplan/generators.hpp"
#include "nestplan/hierarchy.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace nestplan;
  std::vector<int> sizes = {500, 1000, 2000};
  if (argc > 1) sizes = {std::atoi(argv[1])};
  const auto policy = TieBreakPolicy::SmallestMinVertexIn;

  std::cout << "threads: " << omp_get_max_threads() << "\n";
  for (int n : sizes) {
    PlanarGraph g = random_triangulation(n, 7);
    auto cliques = enumerate_3cliques(g);
    std::cout << "n=" << n << " cliques=" << cliques.size() << "\n";

    std::vector<CliqueOrientation> serial, parallel;
    double t_os = seconds([&] { serial = orient_all_serial(g, cliques, policy); });
    double t_op = seconds([&] { parallel = orient_all(g, cliques, policy); });
    std::cout << "  orient   serial " << t_os << " s   openmp " << t_op << " s\n";

    std::vector<std::optional<std::size_t>> cs, cp;
    double t_cs = seconds([&] { cs = compute_covers_serial(serial); });
    double t_cp = seconds([&] { cp = compute_covers(parallel); });
    std::cout << "  covers   serial " << t_cs << " s   openmp " << t_cp << " s"
              << (cs == cp ? "" : "   MISMATCH") << "\n";

    HierarchyForest h = build_forest(g, cliques, policy);
    std::vector<Bubble> bs, bp;
    double t_bs = seconds([&] { bs = all_bubbles(h); });
    double t_bp = seconds([&] { bp = all_bubbles_parallel(h); });
    std::cout << "  bubbles  serial " << t_bs << " s   openmp " << t_bp << " s\n";
  }
  return 0;
}
