// Times the parallel minimality scan against the serial sweep on a range of
// shapes and checks that both produce identical records.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "torbin/orbits.hpp"

namespace {

template <typename F>
double best_of(unsigned repeats, F&& run) {
  double best = 0;
  for (unsigned r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    run();
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark: serial sweep vs parallel minimality scan"};
  unsigned min_cells = 12;
  unsigned max_cells = 18;
  unsigned repeats = 3;
  app.add_option("--min-cells", min_cells, "Smallest m*n to time")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-cells", max_cells, "Largest m*n to time")
      ->check(CLI::PositiveNumber);
  app.add_option("--repeats", repeats, "Repetitions per timing (best kept)")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "threads: " << threads << "\n";
  std::cout << std::left << std::setw(7) << "shape" << std::setw(10) << "group"
            << std::right << std::setw(8) << "orbits" << std::setw(12)
            << "serial_ms" << std::setw(12) << "parallel_ms" << std::setw(9)
            << "speedup" << "\n";

  for (unsigned m = 1; m <= max_cells; ++m) {
    for (unsigned n = m; m * n <= max_cells; ++n) {
      if (m * n < min_cells) continue;
      const torbin::GridShape shape(m, n);
      for (torbin::GroupKind kind :
           {torbin::GroupKind::Cyclic, torbin::GroupKind::Dihedral}) {
        const auto serial =
            torbin::enumerate_orbits_serial(shape, kind, max_cells);
        const auto parallel = torbin::enumerate_orbits(shape, kind, max_cells);
        if (serial != parallel) {
          std::cerr << "MISMATCH at " << m << "x" << n << "\n";
          return 1;
        }
        const double serial_ms = best_of(repeats, [&] {
          torbin::enumerate_orbits_serial(shape, kind, max_cells);
        });
        const double parallel_ms = best_of(repeats, [&] {
          torbin::enumerate_orbits(shape, kind, max_cells);
        });
        std::cout << std::left << std::setw(7)
                  << (std::to_string(m) + "x" + std::to_string(n))
                  << std::setw(10)
                  << (kind == torbin::GroupKind::Cyclic ? "cyclic"
                                                        : "dihedral")
                  << std::right << std::setw(8) << serial.size() << std::fixed
                  << std::setprecision(2) << std::setw(12) << serial_ms
                  << std::setw(12) << parallel_ms << std::setw(9)
                  << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "\n";
      }
    }
  }
  return 0;
}
