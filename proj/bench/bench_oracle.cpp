// Times the parallel sigma-map enumeration against the single-threaded
// scatter reference on generated chordal graphs and checks that the reports
// match exactly.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lll/oracle.hpp"
#include "lll/random_chordal.hpp"

using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 18;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("%4s %10s %12s %12s %8s\n", "n", "indep sets", "serial (s)",
              "parallel (s)", "speedup");

  for (int n = 12; n <= max_n; n += 2) {
    lll::LabeledGraph g = lll::random_chordal(n, 1234 + n, {.max_denominator = 64});

    auto t0 = clock_type::now();
    lll::ShearerReport serial = lll::shearer_check_serial(g, n);
    double serial_s = seconds_since(t0);

    auto t1 = clock_type::now();
    lll::ShearerReport parallel = lll::shearer_check(g, n);
    double parallel_s = seconds_since(t1);

    if (serial.sigma != parallel.sigma ||
        serial.in_family != parallel.in_family) {
      std::printf("MISMATCH at n=%d\n", n);
      return 1;
    }
    std::printf("%4d %10zu %12.4f %12.4f %8.2f\n", n, serial.sets.size(),
                serial_s, parallel_s, serial_s / parallel_s);
  }
  return 0;
}
