// Compares the OpenMP search kernels against their serial reference
// implementations and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "oplus/classify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using oplus::Int;
namespace classify = oplus::classify;

double seconds(const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return elapsed.count();
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-34s serial %8.3fs   parallel %8.3fs   speedup %.2fx   results %s\n",
              name, serial, parallel, serial / parallel, equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  long long mordell_bound = 2000000;
  long long grid_half_width = 700;
  if (argc > 1) mordell_bound = std::atoll(argv[1]);
  if (argc > 2) grid_half_width = std::atoll(argv[2]);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  {
    classify::MordellSolutionSet serial_result{0, 0, {}}, parallel_result{0, 0, {}};
    double serial = seconds([&] { serial_result = classify::mordell_search_serial(1, mordell_bound); });
    double parallel = seconds([&] { parallel_result = classify::mordell_search(1, mordell_bound); });
    std::string name = "mordell k=1 bound=" + std::to_string(mordell_bound);
    report(name.c_str(), serial, parallel,
           serial_result.solutions == parallel_result.solutions);
  }

  {
    std::vector<std::pair<long long, long long>> serial_result, parallel_result;
    double serial = seconds(
        [&] { serial_result = classify::search_true_pairs_serial(-grid_half_width, grid_half_width); });
    double parallel = seconds(
        [&] { parallel_result = classify::search_true_pairs(-grid_half_width, grid_half_width); });
    std::string name = "true pairs box [-" + std::to_string(grid_half_width) + "," +
                       std::to_string(grid_half_width) + "]^2";
    report(name.c_str(), serial, parallel, serial_result == parallel_result);
  }

  return 0;
}
