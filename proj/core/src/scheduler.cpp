#include "sphtrace/scheduler.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace sphtrace {

AccumulationBuffer::AccumulationBuffer(int width, int height)
    : width_{width}, height_{height} {
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("AccumulationBuffer: dimensions must be positive");
    }
    sums_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
}

Spectrum AccumulationBuffer::mean(int x, int y) const {
    if (passes_ == 0) {
        throw std::logic_error("AccumulationBuffer: mean of zero passes");
    }
    return sums_[index(x, y)] * (1.0 / static_cast<double>(passes_));
}

Image AccumulationBuffer::mean_image() const {
    Image img(width_, height_);
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x) {
            img.at(x, y) = mean(x, y);
        }
    }
    return img;
}

void AccumulationBuffer::restore(std::vector<Spectrum> sums, std::uint64_t passes_completed) {
    if (sums.size() != sums_.size()) {
        throw std::invalid_argument("AccumulationBuffer: checkpoint size mismatch");
    }
    sums_ = std::move(sums);
    passes_ = passes_completed;
}

void validate_render_config(const RenderConfig& cfg) {
    auto require = [](bool ok, const char* what) {
        if (!ok) {
            throw std::invalid_argument(std::string("invalid render config: ") + what);
        }
    };
    require(cfg.width > 0, "width must be positive");
    require(cfg.height > 0, "height must be positive");
    require(cfg.passes > 0, "passes must be positive");
    require(cfg.workers > 0, "workers must be positive");
    require(cfg.tile_size > 0, "tile_size must be positive");
    require(cfg.trace.max_depth >= 0, "max_depth must be >= 0");
}

std::vector<Tile> partition_tiles(int width, int height, int tile_size) {
    if (width <= 0 || height <= 0 || tile_size <= 0) {
        throw std::invalid_argument("partition_tiles: arguments must be positive");
    }
    std::vector<Tile> tiles;
    for (int y = 0; y < height; y += tile_size) {
        for (int x = 0; x < width; x += tile_size) {
            tiles.push_back({x, y, std::min(x + tile_size, width), std::min(y + tile_size, height)});
        }
    }
    return tiles;
}

WorkerPool::WorkerPool(int workers) {
    if (workers < 1) {
        throw std::invalid_argument("WorkerPool: need at least one worker");
    }
    threads_.reserve(static_cast<std::size_t>(workers - 1));
    for (int i = 1; i < workers; ++i) {
        threads_.emplace_back([this] { worker_loop(); });
    }
}

WorkerPool::~WorkerPool() {
    {
        std::lock_guard lock(mutex_);
        stopping_ = true;
    }
    work_ready_.notify_all();
    for (auto& t : threads_) {
        t.join();
    }
}

void WorkerPool::worker_loop() {
    std::uint64_t seen = 0;
    for (;;) {
        {
            std::unique_lock lock(mutex_);
            work_ready_.wait(lock, [&] { return stopping_ || generation_ != seen; });
            if (stopping_) {
                return;
            }
            seen = generation_;
        }
        drain();
    }
}

void WorkerPool::drain() {
    for (;;) {
        std::size_t i = 0;
        const std::function<void(std::size_t)>* job = nullptr;
        {
            std::lock_guard lock(mutex_);
            if (next_index_ >= job_count_) {
                return;
            }
            i = next_index_++;
            job = job_;
        }
        (*job)(i);
        {
            std::lock_guard lock(mutex_);
            if (++finished_ == job_count_) {
                work_done_.notify_all();
            }
        }
    }
}

void WorkerPool::parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (threads_.empty()) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    {
        std::lock_guard lock(mutex_);
        job_ = &fn;
        job_count_ = count;
        next_index_ = 0;
        finished_ = 0;
        ++generation_;
    }
    work_ready_.notify_all();
    drain();
    std::unique_lock lock(mutex_);
    work_done_.wait(lock, [&] { return finished_ == job_count_; });
    job_ = nullptr;
    job_count_ = 0;
    next_index_ = 0;
    finished_ = 0;
}

PassStats render_pass(WorkerPool& pool, const Scene& scene, const RenderConfig& cfg,
                      AccumulationBuffer& buffer, std::uint64_t pass_index) {
    validate_render_config(cfg);
    if (buffer.width() != cfg.width || buffer.height() != cfg.height) {
        throw std::invalid_argument("render_pass: buffer dimensions do not match config");
    }

    const Camera& camera = scene.camera();
    const CameraBasis basis = build_camera_basis(camera);
    const std::vector<Tile> tiles = partition_tiles(cfg.width, cfg.height, cfg.tile_size);
    TraceConfig trace = cfg.trace;
    trace.pass_index = pass_index;

    std::atomic<std::uint64_t> invocations{0};
    pool.parallel_for(tiles.size(), [&](std::size_t tile_index) {
        const Tile& tile = tiles[tile_index];
        std::uint64_t local = 0;
        for (int y = tile.y0; y < tile.y1; ++y) {
            for (int x = tile.x0; x < tile.x1; ++x) {
                const auto pixel = static_cast<std::uint64_t>(y) * static_cast<std::uint64_t>(cfg.width) +
                                   static_cast<std::uint64_t>(x);
                RngStream rng(trace.seed, pixel, pass_index);
                const double u1 = rng.next();
                const double u2 = rng.next();
                const Ray ray = generate_camera_ray(x, y, u1, u2, cfg.width, cfg.height, camera, basis);
                const Spectrum radiance = trace.mode == TraceMode::local
                                              ? trace_local(ray, scene, rng)
                                              : trace_global_iterative(ray, scene, trace, rng);
                buffer.add(x, y, radiance);
                ++local;
            }
        }
        invocations.fetch_add(local, std::memory_order_relaxed);
    });
    buffer.finish_pass();
    return {invocations.load()};
}

PassStats render_pass(const Scene& scene, const RenderConfig& cfg, AccumulationBuffer& buffer,
                      std::uint64_t pass_index) {
    WorkerPool pool(cfg.workers);
    return render_pass(pool, scene, cfg, buffer, pass_index);
}

AccumulationBuffer render(const Scene& scene, const RenderConfig& cfg, AccumulationBuffer start,
                          const ProgressSink& progress) {
    validate_render_config(cfg);
    if (start.width() != cfg.width || start.height() != cfg.height) {
        throw std::invalid_argument("render: starting buffer dimensions do not match config");
    }
    WorkerPool pool(cfg.workers);
    for (int i = 0; i < cfg.passes; ++i) {
        const std::uint64_t pass_index = start.passes_completed();
        render_pass(pool, scene, cfg, start, pass_index);
        if (progress) {
            progress(pass_index, start);
        }
    }
    return start;
}

AccumulationBuffer render(const Scene& scene, const RenderConfig& cfg, const ProgressSink& progress) {
    validate_render_config(cfg);
    return render(scene, cfg, AccumulationBuffer(cfg.width, cfg.height), progress);
}

}  // namespace sphtrace
