#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sphtrace/scheduler.hpp"

namespace sphtrace {
namespace {

Scene load_bundled() {
    std::ifstream in(SPHTRACE_SCENE_FILE);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scene(ss.str());
}

RenderConfig small_config() {
    RenderConfig cfg;
    cfg.width = 24;
    cfg.height = 18;
    cfg.passes = 3;
    cfg.workers = 1;
    cfg.tile_size = 8;
    return cfg;
}

TEST(PartitionTiles, ExactDivision) {
    const auto tiles = partition_tiles(640, 480, 32);
    EXPECT_EQ(tiles.size(), 300u);
}

TEST(PartitionTiles, RemainderColumn) {
    const auto tiles = partition_tiles(641, 480, 32);
    EXPECT_EQ(tiles.size(), 21u * 15u);
    EXPECT_EQ(tiles[20].x0, 640);
    EXPECT_EQ(tiles[20].x1 - tiles[20].x0, 1);
}

TEST(PartitionTiles, DisjointCover) {
    for (auto [w, h, t] : {std::tuple{1, 1, 1}, {7, 3, 2}, {100, 37, 16}, {5, 9, 64}, {33, 33, 32}}) {
        const auto tiles = partition_tiles(w, h, t);
        std::vector<int> covered(static_cast<std::size_t>(w * h), 0);
        for (const Tile& tile : tiles) {
            for (int y = tile.y0; y < tile.y1; ++y)
                for (int x = tile.x0; x < tile.x1; ++x) ++covered[static_cast<std::size_t>(y * w + x)];
        }
        EXPECT_TRUE(std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; }));
    }
    EXPECT_THROW(partition_tiles(0, 4, 4), std::invalid_argument);
}

TEST(WorkerPool, RunsEveryIndexOnce) {
    for (int workers : {1, 2, 5}) {
        WorkerPool pool(workers);
        for (int round = 0; round < 20; ++round) {
            std::vector<int> hits(257, 0);
            pool.parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
            EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        }
        pool.parallel_for(0, [](std::size_t) { FAIL(); });
    }
}

TEST(RenderPass, BlackSceneAddsNothing) {
    Sphere s;
    s.center = {0, 0, 0};
    s.radius = 100;
    const Scene scene({s}, Camera{{0, 0, -10}, {0, 0, 0}, {0, 1, 0}, 45});
    const RenderConfig cfg = small_config();
    AccumulationBuffer buffer(cfg.width, cfg.height);
    render_pass(scene, cfg, buffer, 0);
    EXPECT_EQ(buffer.passes_completed(), 1u);
    for (const Spectrum& v : buffer.sums()) EXPECT_TRUE(v.is_black());
}

TEST(RenderPass, OneKernelPerPixel) {
    RenderConfig cfg = small_config();
    cfg.width = 2;
    cfg.height = 2;
    AccumulationBuffer buffer(2, 2);
    const PassStats stats = render_pass(load_bundled(), cfg, buffer, 0);
    EXPECT_EQ(stats.kernel_invocations, 4u);
}

TEST(RenderPass, DimensionMismatchRejected) {
    const RenderConfig cfg = small_config();
    AccumulationBuffer buffer(cfg.width + 1, cfg.height);
    EXPECT_THROW(render_pass(load_bundled(), cfg, buffer, 0), std::invalid_argument);
}

TEST(Render, IndependentOfWorkersAndTiles) {
    const Scene scene = load_bundled();
    RenderConfig cfg = small_config();
    const AccumulationBuffer reference = render(scene, cfg);
    for (auto [workers, tile] : {std::pair{2, 8}, {3, 5}, {8, 1}, {4, 64}}) {
        cfg.workers = workers;
        cfg.tile_size = tile;
        EXPECT_TRUE(render(scene, cfg) == reference) << workers << " workers, tile " << tile;
    }
    cfg.trace.mode = TraceMode::local;
    cfg.workers = 1;
    const AccumulationBuffer local1 = render(scene, cfg);
    cfg.workers = 4;
    EXPECT_TRUE(render(scene, cfg) == local1);
}

TEST(Render, SinglePassMatchesRenderPass) {
    const Scene scene = load_bundled();
    RenderConfig cfg = small_config();
    cfg.passes = 1;
    AccumulationBuffer manual(cfg.width, cfg.height);
    render_pass(scene, cfg, manual, 0);
    EXPECT_TRUE(render(scene, cfg) == manual);
}

TEST(Render, ResumeFromCheckpointIsBitIdentical) {
    const Scene scene = load_bundled();
    RenderConfig cfg = small_config();
    cfg.passes = 4;
    const AccumulationBuffer first = render(scene, cfg);

    AccumulationBuffer checkpoint(cfg.width, cfg.height);
    checkpoint.restore(first.sums(), first.passes_completed());
    const AccumulationBuffer resumed = render(scene, cfg, checkpoint);

    cfg.passes = 8;
    EXPECT_TRUE(resumed == render(scene, cfg));
}

TEST(Render, PassesAreLinear) {
    // Sum of individually rendered passes equals the accumulated buffer.
    const Scene scene = load_bundled();
    RenderConfig cfg = small_config();
    const AccumulationBuffer total = render(scene, cfg);
    std::vector<Spectrum> manual(total.sums().size());
    for (std::uint64_t p = 0; p < static_cast<std::uint64_t>(cfg.passes); ++p) {
        AccumulationBuffer one(cfg.width, cfg.height);
        render_pass(scene, cfg, one, p);
        for (std::size_t i = 0; i < manual.size(); ++i) manual[i] += one.sums()[i];
    }
    EXPECT_EQ(manual, total.sums());
}

TEST(Render, ProgressSinkSeesEveryPass) {
    const Scene scene = load_bundled();
    RenderConfig cfg = small_config();
    std::vector<std::uint64_t> seen;
    render(scene, cfg, [&](std::uint64_t pass, const AccumulationBuffer& b) {
        seen.push_back(pass);
        EXPECT_EQ(b.passes_completed(), pass + 1);
    });
    EXPECT_EQ(seen, (std::vector<std::uint64_t>{0, 1, 2}));
}

TEST(Render, RejectsBadConfigBeforeRendering) {
    const Scene scene = load_bundled();
    for (auto mutate : {+[](RenderConfig& c) { c.workers = 0; }, +[](RenderConfig& c) { c.tile_size = 0; },
                        +[](RenderConfig& c) { c.passes = 0; }, +[](RenderConfig& c) { c.width = -1; },
                        +[](RenderConfig& c) { c.trace.max_depth = -1; }}) {
        RenderConfig cfg = small_config();
        mutate(cfg);
        bool called = false;
        EXPECT_THROW(render(scene, cfg, [&](std::uint64_t, const AccumulationBuffer&) { called = true; }),
                     std::invalid_argument);
        EXPECT_FALSE(called);
    }
}

TEST(AccumulationBuffer, MeanRequiresPasses) {
    AccumulationBuffer b(2, 2);
    EXPECT_THROW((void)b.mean(0, 0), std::logic_error);
    b.add(1, 0, {2, 4, 6});
    b.finish_pass();
    b.finish_pass();
    EXPECT_EQ(b.mean(1, 0), (Spectrum{1, 2, 3}));
}

}  // namespace
}  // namespace sphtrace
