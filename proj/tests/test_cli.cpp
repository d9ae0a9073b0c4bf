#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "gcm3/search.hpp"

using gcm3::cli::Config;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("gcm3_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string fixture_path() { return std::string(GCM3_FIXTURE_DIR) + "/paper_lists.json"; }

}  // namespace

TEST_CASE("weyl command prints the exact reduced fractions") {
    TempDir tmp;
    Config cfg;
    cfg.out = tmp.file("weyl.txt");
    CHECK(gcm3::cli::cmd_weyl(cfg, "c,a,b", "1,1,1") == 0);
    CHECK(slurp(cfg.out) == "rho = 2*a + 9/2*b + 5*c; (rho,rho) = -23/2\n");
}

TEST_CASE("weyl command exit codes") {
    Config cfg;
    cfg.out = "/dev/null";
    CHECK(gcm3::cli::cmd_weyl(cfg, "c,a", "1,1,1") == 2);
    CHECK(gcm3::cli::cmd_weyl(cfg, "c,a,b", "1,1") == 2);
    CHECK(gcm3::cli::cmd_weyl(cfg, "c,a,c", "1,1,1") == 5);  // dependent mirrors
}

TEST_CASE("twists command mirrors the solution listing format") {
    TempDir tmp;
    Config cfg;
    cfg.out = tmp.file("twists.txt");
    CHECK(gcm3::cli::cmd_twists(cfg, "2,4,2", std::nullopt) == 0);
    std::string text = slurp(cfg.out);
    CHECK(text.find("1, 1, 1\n") == 0);
    CHECK(text.find("4, 2, 1\n") != std::string::npos);
    CHECK(text.find("Number of solutions 9\n") != std::string::npos);

    CHECK(gcm3::cli::cmd_twists(cfg, "1,1,1", std::nullopt) == 0);
    CHECK(slurp(cfg.out) == "1, 1, 1\nNumber of solutions 1\n");
}

TEST_CASE("twists command reports unbounded searches") {
    Config cfg;
    cfg.out = "/dev/null";
    CHECK(gcm3::cli::cmd_twists(cfg, "0,0,5", std::nullopt) == 4);
    CHECK(gcm3::cli::cmd_twists(cfg, "0,0,5", 6) == 0);
    CHECK(gcm3::cli::cmd_twists(cfg, "2,4", std::nullopt) == 2);
    CHECK(gcm3::cli::cmd_twists(cfg, "-1,2,2", std::nullopt) == 2);
}

TEST_CASE("enumerate emits csv with the triangle's own triple first") {
    TempDir tmp;
    Config cfg;
    cfg.format = "csv";
    cfg.out = tmp.file("list.csv");
    CHECK(gcm3::cli::cmd_enumerate(cfg, "a", "") == 0);
    std::string text = slurp(cfg.out);
    CHECK(text.find("delta2,delta1,delta3,g12,g13,g23\n") == 0);
    CHECK(text.find("a,c,b,1,2,0\n") != std::string::npos);
    CHECK(gcm3::cli::cmd_enumerate(cfg, "x", "") == 2);
}

TEST_CASE("enumerate diff against the list fixture exits with 3") {
    Config cfg;
    cfg.out = "/dev/null";
    CHECK(gcm3::cli::cmd_enumerate(cfg, "a", fixture_path()) == 0);   // wall a agrees
    CHECK(gcm3::cli::cmd_enumerate(cfg, "all", fixture_path()) == 3);
    CHECK(gcm3::cli::cmd_enumerate(cfg, "all", "/nonexistent.json") == 2);
}

TEST_CASE("extend and render round trip through candidate files") {
    TempDir tmp;
    Config cfg;
    cfg.format = "json";
    cfg.out = tmp.file("tri.json");
    CHECK(gcm3::cli::cmd_extend(cfg, "a,b,c", "1,1,1", "") == 0);

    auto parsed = gcm3::candidate_from_json(slurp(cfg.out));
    REQUIRE(parsed.has_value());
    CHECK(parsed->status == gcm3::PolygonStatus::Closed);

    Config render_cfg;
    render_cfg.out = tmp.file("tri.svg");
    CHECK(gcm3::cli::cmd_render(render_cfg, tmp.file("tri.json")) == 0);
    std::string svg = slurp(render_cfg.out);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);

    // the extend output is readable back as an extend input
    Config again;
    again.format = "json";
    again.out = tmp.file("tri2.json");
    CHECK(gcm3::cli::cmd_extend(again, "", "", tmp.file("tri.json")) == 0);
    CHECK(slurp(tmp.file("tri2.json")) == slurp(tmp.file("tri.json")));
}

TEST_CASE("render rejects degenerate candidates") {
    TempDir tmp;
    std::ofstream bad(tmp.file("bad.json"));
    bad << "{\"deltas\": [], \"lambdas\": []}";
    bad.close();
    Config cfg;
    cfg.out = tmp.file("bad.svg");
    CHECK(gcm3::cli::cmd_render(cfg, tmp.file("bad.json")) == 8);
    CHECK(gcm3::cli::cmd_render(cfg, tmp.file("missing.json")) == 2);
}

TEST_CASE("extend failure exit codes are distinct") {
    Config cfg;
    cfg.out = "/dev/null";
    cfg.lambda_cap = 0;
    CHECK(gcm3::cli::cmd_extend(cfg, "a,b,c", "1,1,1", "") == 6);  // cap exhausted
    Config cfg2;
    cfg2.out = "/dev/null";
    CHECK(gcm3::cli::cmd_extend(cfg2, "b+2c,a", "1,1", "") == 2);
}

TEST_CASE("pipeline writes its three artifacts") {
    TempDir tmp;
    Config cfg;
    cfg.cross_bound = 3;  // keep the sweep small
    cfg.out = tmp.file("results");
    CHECK(gcm3::cli::cmd_pipeline(cfg) == 0);
    CHECK(slurp(tmp.file("results/candidates.json")).find("\"candidates\"") !=
          std::string::npos);
    CHECK(slurp(tmp.file("results/candidates.csv")).find("delta2,") == 0);
    CHECK(slurp(tmp.file("results/summary.txt")).find("pipeline summary") == 0);
}

TEST_CASE("weyl line formatting") {
    CHECK(gcm3::cli::weyl_line("2*a + 9/2*b + 5*c", "-23/2") ==
          "rho = 2*a + 9/2*b + 5*c; (rho,rho) = -23/2");
}

TEST_CASE("worker count from the environment does not change pipeline artifacts") {
    TempDir tmp;
    auto run_with = [&](const char* threads, const std::string& dir) {
        setenv("GCM3_THREADS", threads, 1);
        Config cfg;
        cfg.cross_bound = 4;
        cfg.out = tmp.file(dir);
        REQUIRE(gcm3::cli::cmd_pipeline(cfg) == 0);
        unsetenv("GCM3_THREADS");
        return slurp(tmp.file(dir + "/candidates.json"));
    };
    CHECK(run_with("1", "r1") == run_with("3", "r3"));
}
