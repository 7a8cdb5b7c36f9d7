#include "sphtrace/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>

namespace sphtrace {

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) {
        return values[mid];
    }
    return 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

BenchReport run_benchmark(const Scene& scene, const RenderConfig& cfg,
                          std::span<const int> worker_counts, const BenchOptions& options) {
    if (worker_counts.empty()) {
        throw std::invalid_argument("run_benchmark: no worker counts given");
    }
    if (options.timed_runs < 1 || options.warmup_runs < 0) {
        throw std::invalid_argument("run_benchmark: need at least one timed run");
    }
    for (int w : worker_counts) {
        if (w < 1) {
            throw std::invalid_argument("run_benchmark: worker counts must be positive");
        }
    }
    validate_render_config(cfg);

    BenchReport report;
    report.width = cfg.width;
    report.height = cfg.height;
    report.passes = cfg.passes;

    std::optional<AccumulationBuffer> reference;
    for (int workers : worker_counts) {
        RenderConfig run_cfg = cfg;
        run_cfg.workers = workers;

        for (int i = 0; i < options.warmup_runs; ++i) {
            (void)render(scene, run_cfg);
        }
        std::vector<double> times;
        for (int i = 0; i < options.timed_runs; ++i) {
            const auto start = std::chrono::steady_clock::now();
            AccumulationBuffer buffer = render(scene, run_cfg);
            const auto stop = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double>(stop - start).count());

            if (!reference) {
                reference = std::move(buffer);
            } else if (!(buffer == *reference)) {
                throw DeterminismError("buffer rendered with " + std::to_string(workers) +
                                       " workers differs from the first run");
            }
        }

        BenchRow row;
        row.workers = workers;
        row.seconds = median(std::move(times));
        const double rays = static_cast<double>(cfg.width) * cfg.height * cfg.passes;
        row.rays_per_sec = row.seconds > 0.0 ? rays / row.seconds : 0.0;
        report.rows.push_back(row);
    }

    auto baseline = std::find_if(report.rows.begin(), report.rows.end(),
                                 [](const BenchRow& r) { return r.workers == 1; });
    if (baseline == report.rows.end()) {
        baseline = report.rows.begin();
    }
    const double base_seconds = baseline->seconds;
    for (BenchRow& row : report.rows) {
        row.speedup = row.seconds > 0.0 ? base_seconds / row.seconds : 0.0;
        row.buffers_identical = true;
    }
    return report;
}

std::string format_bench_table(const BenchReport& report) {
    std::ostringstream out;
    char line[128];
    std::snprintf(line, sizeof(line), "%dx%d, %d passes\n", report.width, report.height,
                  report.passes);
    out << line;
    std::snprintf(line, sizeof(line), "%8s %12s %16s %9s %10s\n", "workers", "seconds",
                  "rays/sec", "speedup", "identical");
    out << line;
    for (const BenchRow& r : report.rows) {
        std::snprintf(line, sizeof(line), "%8d %12.4f %16.1f %9.3f %10s\n", r.workers, r.seconds,
                      r.rays_per_sec, r.speedup, r.buffers_identical ? "yes" : "no");
        out << line;
    }
    return out.str();
}

void write_bench_csv(const BenchReport& report, std::ostream& out) {
    out << "workers,seconds,rays_per_sec,speedup,buffers_identical\n";
    char line[160];
    for (const BenchRow& r : report.rows) {
        std::snprintf(line, sizeof(line), "%d,%.6f,%.3f,%.6f,%s\n", r.workers, r.seconds,
                      r.rays_per_sec, r.speedup, r.buffers_identical ? "true" : "false");
        out << line;
    }
}

}  // namespace sphtrace
