#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

#include "test_support.hpp"

using namespace pseudoline;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(PSEUDOLINE_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() / ("pseudoline_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    fs::path dir;
};

}  // namespace

TEST_F(Cli, GenerateExamples) {
    EXPECT_EQ(run("generate trivial 4").out, "4\n0 4\n");
    const auto gap = run("generate gap 3");
    EXPECT_EQ(gap.code, 0);
    EXPECT_EQ(parse_wd(gap.out).wire_count(), 9);
    const auto simple = run("generate simple 5 --seed 42");
    const auto d = parse_wd(simple.out);
    EXPECT_EQ(d.event_count(), 10u);
    EXPECT_TRUE(oracle::pairs_cross_once(d));
    EXPECT_EQ(run("generate simple 5 --seed 42").out, simple.out);
    EXPECT_EQ(parse_wd(run("generate efl-reduction --graph 3:1-2,2-3").out).wire_count(), 5);
    EXPECT_EQ(parse_wd(run("generate twisted-bundles 4 14").out).wire_count(), 14);
    EXPECT_EQ(parse_wd(run("generate polygon 5").out).wire_count(), 5);
}

TEST_F(Cli, SeedFromEnvironment) {
    const std::string cli = PSEUDOLINE_CLI;
    FILE* pipe = popen(("PSEUDOLINE_SEED=42 " + cli + " generate simple 5").c_str(), "r");
    std::string out;
    char buf[512];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    pclose(pipe);
    EXPECT_EQ(out, run("generate simple 5 --seed 42").out);
}

TEST_F(Cli, EnumerateToDirectory) {
    EXPECT_EQ(run("generate enumerate 4 -o " + path("all")).code, 0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir / "all")) files += entry.path().extension() == ".wd";
    EXPECT_EQ(files, 25u);
    const auto lines = run("generate enumerate 3").out;
    EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 3);
}

TEST_F(Cli, ColorSelfVerifies) {
    write_text_file(path("poly.wd"), to_wd(construct_polygon_cell(5)));
    const auto cell = run("color " + path("poly.wd") + " --mode cell -o " + path("poly.col"));
    EXPECT_EQ(cell.code, 0);
    EXPECT_NE(cell.out.find("colors: 5"), std::string::npos);
    EXPECT_NE(cell.out.find("verified: yes"), std::string::npos);
    EXPECT_EQ(parse_coloring(read_text_file(path("poly.col"))).color_count(), 5);

    write_text_file(path("s4.wd"), to_wd(gen_random_simple(4, 1)));
    EXPECT_NE(run("color " + path("s4.wd") + " --mode line").out.find("colors: 3"), std::string::npos);
    write_text_file(path("p9.wd"), to_wd(gen_trivial(9)));
    EXPECT_NE(run("color " + path("p9.wd") + " --mode deg4").out.find("colors: 2"), std::string::npos);
    EXPECT_EQ(run("color " + path("p9.wd") + " --mode lll --l 3 --r 6").code, 0);
    EXPECT_EQ(run("color " + path("p9.wd") + " --mode pl").code, 0);
}

TEST_F(Cli, Exact) {
    write_text_file(path("gap.wd"), to_wd(construct_gap(3)));
    const auto r = run("exact " + path("gap.wd") + " --mode pl -o " + path("gap.col"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("minimum: 6"), std::string::npos);
    EXPECT_TRUE(verify_coloring(construct_gap(3), parse_coloring(read_text_file(path("gap.col"))), Mode::pl()).empty());
    write_text_file(path("s5.wd"), to_wd(gen_random_simple(5, 9)));
    EXPECT_NE(run("exact " + path("s5.wd") + " --mode line").out.find("minimum: 5"), std::string::npos);
    const auto capped = run("exact " + path("s5.wd") + " --mode line --cap 4");
    EXPECT_EQ(capped.code, 5);
    EXPECT_NE(capped.out.find("exceeds cap"), std::string::npos);
    write_text_file(path("p4.wd"), to_wd(gen_trivial(4)));
    EXPECT_NE(run("exact " + path("p4.wd") + " --mode cell").out.find("minimum: 1"), std::string::npos);
}

TEST_F(Cli, Search) {
    const auto none = run("search simultaneous 3");
    EXPECT_EQ(none.code, 0);
    EXPECT_NE(none.out.find("witnesses=0"), std::string::npos);
    const auto gap = run("search mx-gap --n 4 -o " + path("gap.txt"));
    EXPECT_EQ(gap.code, 0);
    const auto report = read_text_file(path("gap.txt"));
    EXPECT_NE(report.find("max_gap=1"), std::string::npos);
    // Every record names a valid diagram.
    std::istringstream in(report);
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        EXPECT_TRUE(is_valid(parse_inline(line.substr(0, line.find(' ')))));
    }
}

TEST_F(Cli, RenderDeterministic) {
    write_text_file(path("s3.wd"), "3\n0 2\n1 2\n0 2\n");
    EXPECT_EQ(run("render " + path("s3.wd") + " -o " + path("a.svg")).code, 0);
    EXPECT_EQ(run("render " + path("s3.wd") + " -o " + path("b.svg")).code, 0);
    EXPECT_EQ(read_text_file(path("a.svg")), read_text_file(path("b.svg")));
    EXPECT_EQ(read_text_file(path("a.svg")), render_svg(oracle::simple3()));
    write_text_file(path("big.col"), "crossing 3 3\n0 0\n1 1\n2 2\n");
    EXPECT_EQ(run("render " + path("s3.wd") + " --coloring " + path("big.col")).code, 0);
}

TEST_F(Cli, ExitCodes) {
    write_text_file(path("bad.wd"), "3\n0 2\n0 2\n");
    EXPECT_EQ(run("validate " + path("bad.wd")).code, 3);
    EXPECT_EQ(run("stats " + path("bad.wd")).code, 3);
    write_text_file(path("junk.wd"), "three\n");
    EXPECT_EQ(run("validate " + path("junk.wd")).code, 2);
    EXPECT_EQ(run("color " + path("junk.wd") + " --mode cell").code, 2);
    write_text_file(path("ok.wd"), "3\n0 2\n1 2\n0 2\n");
    EXPECT_EQ(run("validate " + path("ok.wd")).code, 0);
    const auto stats = run("stats " + path("ok.wd"));
    EXPECT_NE(stats.out.find("cells: 7"), std::string::npos);
    EXPECT_NE(stats.out.find("mx: 2"), std::string::npos);
    EXPECT_NE(run("generate nonsense 3").code, 0);
}
