// Compares the OpenMP candidate-evaluation kernel of the cyclotomic search
// against the retained serial reference on growing workloads.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skewbez/lattice.hpp"

using namespace skewbez;

namespace {

template <typename F>
double time_best_of(F&& body, int rounds) {
  double best = 1e100;
  for (int i = 0; i < rounds; ++i) {
    auto start = std::chrono::steady_clock::now();
    body();
    double t =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (t < best) best = t;
  }
  return best;
}

}  // namespace

int main() {
  Field f = Field::rationals();
  Poly lehmer = parse_poly("1,1,0,-1,-1,-1,-1,-1,0,1,1", f);

  struct Workload {
    const char* name;
    Poly q;
    int degree;
  };
  std::vector<Workload> workloads = {
      {"lehmer deg 10", lehmer, 10},
      {"lehmer*Phi4 deg 12", lehmer * cyclotomic(f, 4), 12},
      {"lehmer*Phi12 deg 14", lehmer * cyclotomic(f, 12), 14},
      {"lehmer*Phi4*Phi12 deg 16", lehmer * cyclotomic(f, 4) * cyclotomic(f, 12), 16},
  };

#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled\n");
#endif
  std::printf("%-26s %10s %12s %12s %8s %6s\n", "workload", "candidates",
              "serial [s]", "parallel [s]", "speedup", "hits");

  for (const Workload& w : workloads) {
    LatticeClass target = LatticeClass::parse_target(
        w.degree == 10 ? "I9,1" : "I" + std::to_string(w.degree - 1) + ",1",
        w.degree);
    std::size_t n_candidates = skew_cyclotomic_products(w.degree).size();
    std::vector<CyclotomicProduct> serial, parallel;
    double t_serial = time_best_of(
        [&] { serial = search_cyclotomic_serial(w.q, w.degree, target); }, 3);
    double t_parallel = time_best_of(
        [&] { parallel = search_cyclotomic(w.q, w.degree, target); }, 3);
    if (serial != parallel) {
      std::printf("MISMATCH between serial and parallel results on %s\n", w.name);
      return 1;
    }
    std::printf("%-26s %10zu %12.4f %12.4f %7.2fx %6zu\n", w.name, n_candidates,
                t_serial, t_parallel, t_serial / t_parallel, serial.size());
  }
  return 0;
}
