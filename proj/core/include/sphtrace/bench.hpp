#pragma once

#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphtrace/scheduler.hpp"

namespace sphtrace {

struct BenchOptions {
    int warmup_runs = 1;  // discarded
    int timed_runs = 3;   // median is reported
};

struct BenchRow {
    int workers = 1;
    double seconds = 0.0;
    double rays_per_sec = 0.0;  // camera rays (one per pixel per pass)
    double speedup = 1.0;       // relative to the workers=1 row, else the first row
    bool buffers_identical = true;
};

struct BenchReport {
    int width = 0;
    int height = 0;
    int passes = 0;
    std::vector<BenchRow> rows;
};

/// Thrown when two worker counts produce different buffers.
class DeterminismError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Renders cfg.passes passes at each worker count (cfg.workers is ignored),
/// timing each with a monotonic clock. Every buffer must be bit-identical to
/// the first one or DeterminismError is thrown and nothing is reported.
BenchReport run_benchmark(const Scene& scene, const RenderConfig& cfg,
                          std::span<const int> worker_counts, const BenchOptions& options = {});

std::string format_bench_table(const BenchReport& report);

/// Header: workers,seconds,rays_per_sec,speedup,buffers_identical
void write_bench_csv(const BenchReport& report, std::ostream& out);

}  // namespace sphtrace
