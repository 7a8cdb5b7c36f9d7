#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"

namespace sphtrace::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("sphtrace_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(std::vector<std::string> args) {
        args.insert(args.begin(), "sphtrace");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        out_.str({});
        err_.str({});
        return cli_main(static_cast<int>(argv.size()), argv.data(), out_, err_);
    }

    static std::string slurp(const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

TEST_F(CliTest, MissingSceneFileIsIoError) {
    EXPECT_EQ(run({"--scene", path("missing.txt")}), kIo);
    EXPECT_NE(err_.str().find("missing.txt"), std::string::npos);
}

TEST_F(CliTest, MissingRequiredFlagIsUsageError) {
    EXPECT_EQ(run({"--passes", "3"}), kUsage);
    EXPECT_NE(err_.str().find("--scene"), std::string::npos);
    EXPECT_EQ(run({"--scene", SPHTRACE_SCENE_FILE, "--mode", "bogus"}), kUsage);
    EXPECT_EQ(run({"--scene", SPHTRACE_SCENE_FILE, "--passes", "0"}), kUsage);
    EXPECT_EQ(run({"--scene", SPHTRACE_SCENE_FILE, "--oracle", "--bench", "1"}), kUsage);
}

TEST_F(CliTest, HelpExitsZero) {
    EXPECT_EQ(run({"--help"}), kOk);
    EXPECT_NE(out_.str().find("--snapshot-every"), std::string::npos);
}

TEST_F(CliTest, BadSceneIsParseError) {
    std::ofstream(path("bad.scene")) << "camera 0 0 -10 0 0 0 0 1 0 45\nsphere -1 0 0 0 0 0 0 0 0 0 diffuse\n";
    EXPECT_EQ(run({"--scene", path("bad.scene")}), kSceneParse);
    EXPECT_NE(err_.str().find("line 2"), std::string::npos);
}

TEST_F(CliTest, WritesRequestedImage) {
    const std::string out = path("img.ppm");
    ASSERT_EQ(run({"--scene", SPHTRACE_SCENE_FILE, "--passes", "1", "--width", "64", "--height", "48", "--out", out}),
              kOk);
    const auto img = sphtrace::testing::read_ppm(slurp(out));
    ASSERT_TRUE(img);
    EXPECT_EQ(img->width, 64);
    EXPECT_EQ(img->height, 48);
}

TEST_F(CliTest, SameSeedSameBytes) {
    const std::vector<std::string> common{"--scene", SPHTRACE_SCENE_FILE, "--passes", "2", "--width", "32",
                                          "--height", "24", "--seed", "7"};
    auto a = common;
    a.insert(a.end(), {"--out", path("a.ppm"), "--workers", "1"});
    auto b = common;
    b.insert(b.end(), {"--out", path("b.ppm"), "--workers", "3"});
    ASSERT_EQ(run(a), kOk);
    ASSERT_EQ(run(b), kOk);
    EXPECT_EQ(slurp(path("a.ppm")), slurp(path("b.ppm")));

    auto c = common;
    c[9] = "8";
    c.insert(c.end(), {"--out", path("c.ppm")});
    ASSERT_EQ(run(c), kOk);
    EXPECT_NE(slurp(path("a.ppm")), slurp(path("c.ppm")));
}

TEST_F(CliTest, SnapshotEqualsShorterRun) {
    const std::vector<std::string> common{"--scene", SPHTRACE_SCENE_FILE, "--width", "32", "--height", "24"};
    auto full = common;
    full.insert(full.end(), {"--passes", "6", "--snapshot-every", "2", "--out", path("full.ppm")});
    ASSERT_EQ(run(full), kOk);
    for (const char* snap : {"full_pass0002.ppm", "full_pass0004.ppm", "full_pass0006.ppm"}) {
        EXPECT_TRUE(fs::exists(dir_ / snap)) << snap;
    }
    auto shortrun = common;
    shortrun.insert(shortrun.end(), {"--passes", "4", "--out", path("short.ppm")});
    ASSERT_EQ(run(shortrun), kOk);
    EXPECT_EQ(slurp(dir_ / "full_pass0004.ppm"), slurp(path("short.ppm")));
    EXPECT_EQ(slurp(dir_ / "full_pass0006.ppm"), slurp(path("full.ppm")));
}

TEST_F(CliTest, OracleMode) {
    ASSERT_EQ(run({"--scene", SPHTRACE_SCENE_FILE, "--oracle", "--width", "16", "--height", "12", "--light-grid",
                   "4", "--oracle-rays", "1", "--out", path("ref.ppm")}),
              kOk);
    const auto img = sphtrace::testing::read_ppm(slurp(path("ref.ppm")));
    ASSERT_TRUE(img);
    EXPECT_EQ(img->width, 16);
}

TEST_F(CliTest, BenchModeWritesTableAndCsv) {
    ASSERT_EQ(run({"--scene", SPHTRACE_SCENE_FILE, "--bench", "1,2", "--width", "16", "--height", "12", "--passes",
                   "1", "--csv", path("bench.csv")}),
              kOk);
    EXPECT_NE(out_.str().find("speedup"), std::string::npos);
    const std::string csv = slurp(path("bench.csv"));
    EXPECT_EQ(csv.rfind("workers,seconds,rays_per_sec,speedup,buffers_identical\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST_F(CliTest, UnwritableOutputIsIoError) {
    EXPECT_EQ(run({"--scene", SPHTRACE_SCENE_FILE, "--passes", "1", "--width", "4", "--height", "4", "--out",
                   path("no/such/dir/x.ppm")}),
              kIo);
}

}  // namespace
}  // namespace sphtrace::cli
