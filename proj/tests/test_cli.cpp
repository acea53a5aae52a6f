// End-to-end tests of the specdist binary: spawns the real executable and
// checks stdout text and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "specdist/graph.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(SPECDIST_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("specdist_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    fs::path file(const std::string& name, const std::string& content) const {
        const fs::path p = path / name;
        std::ofstream(p) << content;
        return p;
    }
};

double json_number(const std::string& text, const std::string& key) {
    const auto pos = text.find("\"" + key + "\":");
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + key.size() + 3));
}

}  // namespace

TEST_CASE("spectrum command prints ascending eigenvalues") {
    TempDir dir;
    const auto p2 = dir.file("p2.txt", "n 2\n0 1 1.0\n");
    const auto r = run("spectrum " + p2.string());
    CHECK(r.status == 0);
    CHECK(r.out == "0\n2\n");

    const auto dot = dir.file("dot.txt", "n 1\n");
    const auto r2 = run("spectrum " + dot.string());
    CHECK(r2.status == 0);
    CHECK(r2.out == "1\n");
}

TEST_CASE("spectrum command rejects malformed files with exit code 2") {
    TempDir dir;
    const auto bad = dir.file("bad.txt", "n 3\n0 0 1\n");
    CHECK(run("spectrum " + bad.string()).status == 2);
    CHECK(run("spectrum " + (dir.path / "missing.txt").string()).status == 2);
}

TEST_CASE("dist command reports d_p as JSON") {
    TempDir dir;
    const auto k5 = dir.file("k5.txt", specdist::to_edge_list(specdist::complete(5)));
    const auto k7 = dir.file("k7.txt", specdist::to_edge_list(specdist::complete(7)));
    const auto r = run("dist " + k5.string() + " " + k7.string());
    CHECK(r.status == 0);
    CHECK(json_number(r.out, "p") == 1.0);
    CHECK(json_number(r.out, "d") == doctest::Approx(2.0 / 15.0).epsilon(1e-9));

    const auto same = run("dist " + k5.string() + " " + k5.string());
    CHECK(json_number(same.out, "d") == 0.0);

    const auto dot = dir.file("dot.txt", "n 1\n");
    const auto p2 = dir.file("p2.txt", "n 2\n0 1 1\n");
    const auto ex25 = run("dist --p 2 " + dot.string() + " " + p2.string());
    CHECK(json_number(ex25.out, "d") == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("family command compares oracle and pipeline") {
    const auto cube = run("family cube 3");
    CHECK(cube.status == 0);
    CHECK(cube.out.rfind("family,a,b,oracle,pipeline,abs_diff\n", 0) == 0);
    CHECK(cube.out.find("cube,3,4,0.25,") != std::string::npos);

    const auto path = run("family path 4 --format json");
    CHECK(path.status == 0);
    CHECK(json_number(path.out, "oracle") == doctest::Approx(0.19142135623730951).epsilon(1e-12));
    CHECK(json_number(path.out, "abs_diff") <= 1e-8);

    const auto cycle = run("family cycle 4 --format json");
    CHECK(json_number(cycle.out, "oracle") == doctest::Approx(0.3118033988749895).epsilon(1e-9));
    CHECK(json_number(cycle.out, "abs_diff") <= 1e-8);

    CHECK(run("family complete 5 7 --format json").status == 0);
    CHECK(run("family klein 5").status == 1);
}

TEST_CASE("bound command reports params, bound and interlacing") {
    TempDir dir;
    const auto k10 = dir.file("k10.txt", specdist::to_edge_list(specdist::complete(10)));
    const auto r = run("bound delete-edge " + k10.string() + " 0 1");
    CHECK(r.status == 0);
    CHECK(json_number(r.out, "k1") == 1.0);
    CHECK(json_number(r.out, "k2") == 2.0);
    CHECK(json_number(r.out, "bound") == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(json_number(r.out, "d1") <= 0.8 + 1e-9);
    CHECK(r.out.find("\"interlacing\": \"pass\"") != std::string::npos);

    const auto c10 = dir.file("c10.txt", specdist::to_edge_list(specdist::cycle_graph(10)));
    const auto rc = run("bound contract-edge " + c10.string() + " 0 1");
    CHECK(rc.status == 0);
    CHECK(json_number(rc.out, "bound") == doctest::Approx(0.8).epsilon(1e-12));

    const auto weighted = dir.file("w.txt", "n 3\n0 1 2.0\n1 2 1.0\n");
    CHECK(run("bound contract-edge " + weighted.string() + " 0 1").status == 1);
}

TEST_CASE("rooted command emits a measure CSV") {
    TempDir dir;
    const auto p2 = dir.file("p2.txt", "n 2\n0 1 1\n");
    const auto r = run("rooted " + p2.string() + " --root 0");
    CHECK(r.status == 0);
    // atoms (0, 1/2), (2, 1/2)
    std::istringstream lines(r.out);
    std::string a, b;
    std::getline(lines, a);
    std::getline(lines, b);
    double loc = -1.0, w = -1.0;
    REQUIRE(std::sscanf(a.c_str(), "%lf,%lf", &loc, &w) == 2);
    CHECK(loc == 0.0);
    CHECK(w == doctest::Approx(0.5).epsilon(1e-12));
    REQUIRE(std::sscanf(b.c_str(), "%lf,%lf", &loc, &w) == 2);
    CHECK(loc == 2.0);
    CHECK(w == doctest::Approx(0.5).epsilon(1e-12));

    const auto k5 = dir.file("k5.txt", specdist::to_edge_list(specdist::complete(5)));
    const auto uniform = run("rooted " + k5.string() + " --uniform");
    CHECK(uniform.status == 0);
    CHECK(uniform.out.find("0,0.2") != std::string::npos);

    const auto lonely = dir.file("iso.txt", "n 3\n0 1 1\n");
    CHECK(run("rooted " + lonely.string() + " --root 2").status == 1);
}

TEST_CASE("exhaust command writes per-size files and prints consecutive distances") {
    TempDir dir;
    const auto r = run("exhaust Z 1 2 4 --out-dir " + dir.path.string());
    CHECK(r.status == 0);
    CHECK(fs::exists(dir.path / "exhaust_Z_1.csv"));
    CHECK(fs::exists(dir.path / "exhaust_Z_2.csv"));
    CHECK(fs::exists(dir.path / "exhaust_Z_4.csv"));
    std::ifstream first(dir.path / "exhaust_Z_1.csv");
    std::string line;
    std::getline(first, line);
    CHECK(line == "1,1");  // delta_1
    CHECK(r.out.rfind("n_a,n_b,d1\n", 0) == 0);

    CHECK(run("exhaust Q 1 2").status == 1);
}

TEST_CASE("evolve command writes trajectories and a summary") {
    TempDir dir;
    const auto r = run("evolve --op rewire --n 16 --ba-m 2 --ba-seed-size 4 --steps 6 "
                       "--sample-every 2 --seed 1 --seed 2 --out-dir " +
                       dir.path.string());
    CHECK(r.status == 0);
    CHECK(r.out.find("\"rho\":") != std::string::npos);
    CHECK(r.out.find("\"seed\": 1") != std::string::npos);
    CHECK(r.out.find("\"seed\": 2") != std::string::npos);
    CHECK(fs::exists(dir.path / "evolve_rewire_seed1.csv"));
    CHECK(fs::exists(dir.path / "evolve_rewire_seed2.csv"));
    CHECK(fs::exists(dir.path / "evolve_rewire.dat"));

    std::ifstream csv(dir.path / "evolve_rewire_seed1.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "step,n,d1");
    int rows = 0;
    std::string line;
    while (std::getline(csv, line)) ++rows;
    CHECK(rows == 4);  // steps 0,2,4,6
}

TEST_CASE("batch command emits a symmetric matrix, parallel output identical") {
    TempDir dir;
    dir.file("a.txt", specdist::to_edge_list(specdist::complete(4)));
    dir.file("b.txt", specdist::to_edge_list(specdist::cycle_graph(5)));
    dir.file("c.txt", specdist::to_edge_list(specdist::path_graph(6)));

    const auto seq = run("batch " + dir.path.string());
    CHECK(seq.status == 0);
    CHECK(seq.out.rfind("file,a.txt,b.txt,c.txt\n", 0) == 0);
    CHECK(seq.out.find("a.txt,0,") != std::string::npos);

    const auto par = run("batch " + dir.path.string() + " --parallel 4");
    CHECK(par.status == 0);
    CHECK(par.out == seq.out);  // byte-identical

    const auto json = run("batch " + dir.path.string() + " --format json --p 2");
    CHECK(json.status == 0);
    CHECK(json.out.find("\"n_mu\":") != std::string::npos);

    TempDir empty;
    const auto none = run("batch " + empty.path.string());
    CHECK(none.status == 0);
    CHECK(none.out == "file\n");
}

TEST_CASE("batch matrix is exactly symmetric with zero diagonal") {
    TempDir dir;
    dir.file("x.txt", specdist::to_edge_list(specdist::complete(5)));
    dir.file("y.txt", specdist::to_edge_list(specdist::complete(9)));
    const auto r = run("batch " + dir.path.string());
    // parse the 2x2 block
    std::istringstream in(r.out);
    std::string header, row1, row2;
    std::getline(in, header);
    std::getline(in, row1);
    std::getline(in, row2);
    const auto cell = [](const std::string& row, int idx) {
        std::istringstream ss(row);
        std::string tok;
        for (int i = 0; i <= idx; ++i) std::getline(ss, tok, ',');
        return tok;
    };
    CHECK(cell(row1, 1) == "0");
    CHECK(cell(row2, 2) == "0");
    CHECK(cell(row1, 2) == cell(row2, 1));
}

TEST_CASE("deterministic outputs: same seed gives identical evolve files") {
    TempDir d1, d2;
    const std::string args = "evolve --op dupdiv --n 14 --ba-m 2 --ba-seed-size 4 --steps 5 "
                             "--sample-every 5 --seed 9 --out-dir ";
    const auto r1 = run(args + d1.path.string());
    const auto r2 = run(args + d2.path.string());
    CHECK(r1.out == r2.out);
    std::ifstream f1(d1.path / "evolve_dupdiv_seed9.csv"), f2(d2.path / "evolve_dupdiv_seed9.csv");
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
}
