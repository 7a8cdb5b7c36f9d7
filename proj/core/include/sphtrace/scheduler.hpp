#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "sphtrace/image.hpp"
#include "sphtrace/tracer.hpp"

namespace sphtrace {

/// Progressive state: per-pixel radiance sums in double precision plus the
/// number of completed passes.
class AccumulationBuffer {
public:
    AccumulationBuffer(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }
    std::uint64_t passes_completed() const { return passes_; }

    const std::vector<Spectrum>& sums() const { return sums_; }
    const Spectrum& sum(int x, int y) const { return sums_[index(x, y)]; }

    /// sums / passes_completed; requires passes_completed > 0.
    Spectrum mean(int x, int y) const;
    Image mean_image() const;

    void add(int x, int y, const Spectrum& s) { sums_[index(x, y)] += s; }
    void finish_pass() { ++passes_; }

    /// Restores a checkpointed state.
    void restore(std::vector<Spectrum> sums, std::uint64_t passes_completed);

    friend bool operator==(const AccumulationBuffer&, const AccumulationBuffer&) = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<Spectrum> sums_;
    std::uint64_t passes_ = 0;
};

struct RenderConfig {
    int width = 640;
    int height = 480;
    int passes = 64;
    TraceConfig trace;
    int workers = 1;
    int tile_size = 32;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate_render_config(const RenderConfig& cfg);

struct Tile {
    int x0 = 0;
    int y0 = 0;
    int x1 = 0;  // exclusive
    int y1 = 0;  // exclusive

    int area() const { return (x1 - x0) * (y1 - y0); }
    friend bool operator==(const Tile&, const Tile&) = default;
};

/// Row-major tiles covering the image exactly once; edge tiles may be smaller.
std::vector<Tile> partition_tiles(int width, int height, int tile_size);

/// Fixed set of threads running index-space jobs. The calling thread takes
/// part in every job, so a pool of one worker spawns no threads.
class WorkerPool {
public:
    explicit WorkerPool(int workers);
    ~WorkerPool();

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    int size() const { return static_cast<int>(threads_.size()) + 1; }

    /// Calls fn(i) for every i in [0, count) and returns once all calls finished.
    void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

private:
    void worker_loop();
    void drain();

    std::vector<std::thread> threads_;
    std::mutex mutex_;
    std::condition_variable work_ready_;
    std::condition_variable work_done_;
    const std::function<void(std::size_t)>* job_ = nullptr;
    std::size_t job_count_ = 0;
    std::size_t next_index_ = 0;
    std::size_t finished_ = 0;
    std::uint64_t generation_ = 0;
    bool stopping_ = false;
};

struct PassStats {
    std::uint64_t kernel_invocations = 0;
};

/// One pass: a single jittered camera ray per pixel, traced per
/// cfg.trace.mode and added to the buffer. Each pixel draws from its own
/// RngStream(seed, pixel, pass_index), so the result does not depend on the
/// worker count, tile size or tile order.
PassStats render_pass(const Scene& scene, const RenderConfig& cfg, AccumulationBuffer& buffer,
                      std::uint64_t pass_index);

/// Same, reusing an existing pool.
PassStats render_pass(WorkerPool& pool, const Scene& scene, const RenderConfig& cfg,
                      AccumulationBuffer& buffer, std::uint64_t pass_index);

/// Called at the barrier after each pass with the index of the pass that
/// just finished. The buffer must not be modified.
using ProgressSink = std::function<void(std::uint64_t pass_index, const AccumulationBuffer& buffer)>;

/// Runs cfg.passes passes from a fresh buffer.
AccumulationBuffer render(const Scene& scene, const RenderConfig& cfg,
                          const ProgressSink& progress = {});

/// Continues from a checkpoint: pass indices start at start.passes_completed(),
/// so N + N passes equal 2N uninterrupted passes bit for bit.
AccumulationBuffer render(const Scene& scene, const RenderConfig& cfg, AccumulationBuffer start,
                          const ProgressSink& progress = {});

}  // namespace sphtrace
