#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sphtrace/bench.hpp"
#include "sphtrace/imaging.hpp"
#include "sphtrace/oracle.hpp"
#include "sphtrace/scene.hpp"
#include "sphtrace/scheduler.hpp"

namespace sphtrace::cli {

namespace {

struct Options {
    std::string scene_path;
    int width = 640;
    int height = 480;
    int passes = 64;
    std::string mode = "global";
    int depth = 6;
    int workers = 1;
    std::uint64_t seed = 0;
    std::string out_path = "out.ppm";
    bool oracle = false;
    int light_grid = 32;
    int oracle_rays = 16;
    std::vector<int> bench_workers;
    std::string csv_path;
    int snapshot_every = 0;
    int tile_size = 32;
    double gamma = 2.2;
    double exposure = 1.0;
};

std::filesystem::path snapshot_path(const std::filesystem::path& out, std::uint64_t passes) {
    char suffix[32];
    std::snprintf(suffix, sizeof(suffix), "_pass%04llu", static_cast<unsigned long long>(passes));
    std::filesystem::path p = out;
    p.replace_filename(out.stem().string() + suffix + out.extension().string());
    return p;
}

int run(const Options& opt, std::ostream& out, std::ostream& err) {
    std::ifstream in(opt.scene_path, std::ios::binary);
    if (!in) {
        err << "error: cannot read scene file '" << opt.scene_path << "'\n";
        return kIo;
    }
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};

    std::optional<Scene> scene;
    try {
        scene.emplace(parse_scene(text));
    } catch (const ParseError& e) {
        err << "error: " << opt.scene_path << ": " << e.what() << "\n";
        return kSceneParse;
    }

    const ToneMapParams tone{opt.gamma, opt.exposure};

    RenderConfig cfg;
    cfg.width = opt.width;
    cfg.height = opt.height;
    cfg.passes = opt.passes;
    cfg.workers = opt.workers;
    cfg.tile_size = opt.tile_size;
    cfg.trace.mode = opt.mode == "local" ? TraceMode::local : TraceMode::global;
    cfg.trace.max_depth = opt.depth;
    cfg.trace.seed = opt.seed;

    try {
        if (!opt.bench_workers.empty()) {
            const BenchReport report = run_benchmark(*scene, cfg, opt.bench_workers);
            out << format_bench_table(report);
            if (!opt.csv_path.empty()) {
                std::ofstream csv(opt.csv_path);
                if (!csv) {
                    throw IoError("cannot open '" + opt.csv_path + "' for writing");
                }
                write_bench_csv(report, csv);
                if (!csv) {
                    throw IoError("failed writing '" + opt.csv_path + "'");
                }
            }
            return kOk;
        }

        if (opt.oracle) {
            const OracleConfig oc{opt.light_grid, opt.width, opt.height, opt.oracle_rays};
            write_ppm_file(oracle_render_local(*scene, oc), tone, opt.out_path);
            out << "wrote " << opt.out_path << " (reference renderer)\n";
            return kOk;
        }

        ProgressSink sink;
        if (opt.snapshot_every > 0) {
            sink = [&](std::uint64_t, const AccumulationBuffer& buffer) {
                const std::uint64_t done = buffer.passes_completed();
                if (done % static_cast<std::uint64_t>(opt.snapshot_every) == 0) {
                    const auto path = snapshot_path(opt.out_path, done);
                    write_ppm_file(buffer.mean_image(), tone, path);
                    out << "snapshot " << path.string() << "\n";
                }
            };
        }
        const AccumulationBuffer buffer = render(*scene, cfg, sink);
        write_ppm_file(buffer.mean_image(), tone, opt.out_path);
        out << "wrote " << opt.out_path << " (" << buffer.passes_completed() << " passes)\n";
        return kOk;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const DeterminismError& e) {
        err << "error: determinism violation: " << e.what() << "\n";
        return kDeterminism;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    const unsigned hw = std::thread::hardware_concurrency();
    opt.workers = hw == 0 ? 1 : static_cast<int>(hw);

    CLI::App app{"Progressive sphere-scene ray tracer"};
    app.add_option("--scene", opt.scene_path, "Scene file")->required();
    app.add_option("--width", opt.width, "Image width")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--height", opt.height, "Image height")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--passes", opt.passes, "Progressive passes")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--mode", opt.mode, "Illumination model")
        ->check(CLI::IsMember({"local", "global"}))
        ->capture_default_str();
    app.add_option("--depth", opt.depth, "Bounce limit in global mode")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    app.add_option("--out", opt.out_path, "Output PPM path")->capture_default_str();
    app.add_option("--tile-size", opt.tile_size, "Tile edge in pixels")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--gamma", opt.gamma, "Display gamma")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--exposure", opt.exposure, "Exposure scale")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--snapshot-every", opt.snapshot_every, "Write the running mean every K passes")
        ->check(CLI::PositiveNumber);
    auto* oracle = app.add_flag("--oracle", opt.oracle, "Render with the serial reference renderer");
    app.add_option("--light-grid", opt.light_grid, "Reference renderer: light grid resolution")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--oracle-rays", opt.oracle_rays, "Reference renderer: rays per pixel")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto* bench = app.add_option("--bench", opt.bench_workers, "Benchmark worker counts, e.g. 1,2,4")
                      ->delimiter(',')
                      ->check(CLI::PositiveNumber);
    app.add_option("--csv", opt.csv_path, "Benchmark CSV output path")->needs(bench);
    oracle->excludes(bench);

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) {
        args.emplace_back(argv[i]);
    }
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }
    return run(opt, out, err);
}

}  // namespace sphtrace::cli
