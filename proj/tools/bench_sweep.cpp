// Compares the serial reference sweep against the OpenMP task loop on the
// same workload and verifies their outputs match byte for byte.

#include <chrono>
#include <cstdio>
#include <string>

#include "riscade/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace riscade;

namespace {

double time_sweep(const ScenarioConfig& cfg, bool parallel, std::string& csv) {
    const auto start = std::chrono::steady_clock::now();
    const SweepResult result = run_sweep(cfg, parallel);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    csv = aggregate_csv(result);
    return elapsed;
}

} // namespace

int main(int argc, char** argv) {
    ScenarioConfig cfg;
    cfg.t_list = {2, 6, 12};
    cfg.trials = argc > 1 ? std::atoi(argv[1]) : 40;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP, parallel path falls back to serial\n");
#endif
    std::printf("workload: %zu sweep points x %d trials x %zu estimators\n",
                cfg.t_list.size(), cfg.trials, cfg.estimators.size());

    std::string serial_csv, parallel_csv;
    const double serial = time_sweep(cfg, false, serial_csv);
    std::printf("serial reference: %.2f s\n", serial);
    const double parallel = time_sweep(cfg, true, parallel_csv);
    std::printf("openmp task loop: %.2f s (speedup %.2fx)\n", parallel,
                serial / parallel);

    if (serial_csv != parallel_csv) {
        std::printf("MISMATCH: serial and parallel aggregates differ\n");
        return 1;
    }
    std::printf("outputs byte-identical\n");
    return 0;
}
