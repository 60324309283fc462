// Benchmark comparing the serial reference paths (threads = 1) against the
// OpenMP-parallel kernels, checking result equality along the way.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "critset/completion.hpp"
#include "critset/constructions.hpp"
#include "critset/extremal.hpp"

using namespace critset;
using clock_type = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<void()>& f) {
  auto t0 = clock_type::now();
  f();
  auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-36s %10.1f ms %10.1f ms   x%.2f   results %s\n", name.c_str(), serial_ms,
              parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 2;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (argc > 1) threads = std::atoi(argv[1]);
  std::printf("serial reference vs %d threads\n", threads);
  std::printf("%-36s %13s %13s\n", "kernel", "serial", "parallel");

  {
    PartialMatrix empty = PartialMatrix::empty_uniform(6, 3);
    long long a = 0, b = 0;
    double s = run_ms([&] { a = count_completions(empty, {}, SearchOptions::with_threads(1)); });
    double p = run_ms(
        [&] { b = count_completions(empty, {}, SearchOptions::with_threads(threads)); });
    report("count completions, empty 6x6", s, p, a == b);
  }

  {
    std::vector<PartialMatrix> s_set, p_set;
    PartialMatrix empty = PartialMatrix::empty_uniform(6, 3);
    double s = run_ms(
        [&] { s_set = enumerate_completions(empty, {}, SearchOptions::with_threads(1)); });
    double p = run_ms(
        [&] { p_set = enumerate_completions(empty, {}, SearchOptions::with_threads(threads)); });
    report("enumerate Lambda_6^3", s, p, s_set == p_set);
  }

  {
    ExtremalReport a = class_report(ClassSpec::uniform(4, 2), 1);
    ExtremalReport b = a;
    double s = run_ms([&] { a = class_report(ClassSpec::uniform(4, 2), 1); });
    double p = run_ms([&] { b = class_report(ClassSpec::uniform(4, 2), threads); });
    bool equal = a.scs == b.scs && a.lcs == b.lcs && a.inf == b.inf && a.sup == b.sup;
    report("class report Lambda_4^2", s, p, equal);
  }

  {
    SpotReport a, b;
    double s = run_ms([&] { a = class_scs_spot(ClassSpec::uniform(6, 3), 60, 7, 1); });
    double p = run_ms([&] { b = class_scs_spot(ClassSpec::uniform(6, 3), 60, 7, threads); });
    report("scs spot check 60 x Lambda_6^3", s, p,
           a.min_scs == b.min_scs && a.max_scs == b.max_scs);
  }

  {
    BMaxResult a, b;
    double s = run_ms([&] { a = b_max_critical(7, 1); });
    double p = run_ms([&] { b = b_max_critical(7, threads); });
    report("composition maximum, B_14", s, p,
           a.best == b.best && a.examined == b.examined);
  }

  return 0;
}
