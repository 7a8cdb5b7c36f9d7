#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "sphtrace/scheduler.hpp"

namespace {

using namespace sphtrace;

Scene bundled_scene() {
    std::ifstream in(SPHTRACE_SCENE_FILE);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scene(ss.str());
}

static void BM_IntersectSphere(benchmark::State& state) {
    Sphere s;
    s.center = {0, 0, 5};
    s.radius = 1.0;
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    std::vector<Ray> rays;
    for (int i = 0; i < 1024; ++i) rays.emplace_back(Vec3{0, 0, 0}, Vec3{0.2 * g(rng), 0.2 * g(rng), 1.0});
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersect_sphere(rays[i++ & 1023], s));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_IntersectSphere);

static void BM_TraceGlobal(benchmark::State& state) {
    const Scene scene = bundled_scene();
    TraceConfig cfg;
    cfg.max_depth = static_cast<int>(state.range(0));
    const Ray ray = generate_camera_ray(32, 24, 0.5, 0.5, 64, 48, scene.camera());
    std::uint64_t pass = 0;
    for (auto _ : state) {
        RngStream rng(0, 0, pass++);
        benchmark::DoNotOptimize(trace_global_iterative(ray, scene, cfg, rng));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TraceGlobal)->Arg(0)->Arg(1)->Arg(6);

static void BM_RenderPass(benchmark::State& state) {
    const Scene scene = bundled_scene();
    RenderConfig cfg;
    cfg.width = 160;
    cfg.height = 120;
    cfg.workers = static_cast<int>(state.range(0));
    WorkerPool pool(cfg.workers);
    AccumulationBuffer buffer(cfg.width, cfg.height);
    for (auto _ : state) {
        render_pass(pool, scene, cfg, buffer, buffer.passes_completed());
    }
    state.SetItemsProcessed(state.iterations() * cfg.width * cfg.height);
}
BENCHMARK(BM_RenderPass)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
