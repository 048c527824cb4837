#include "cli.hpp"

#include "mdim/design_io.hpp"
#include "mdim/incidence.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = mdim::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Workdir {
    fs::path dir;
    Workdir() : dir(fs::temp_directory_path() / ("mdim-cli-" + std::to_string(::getpid())))
    {
        fs::create_directories(dir);
    }
    ~Workdir() { fs::remove_all(dir); }
    std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string first_line(const std::string& path)
{
    std::ifstream f(path);
    std::string line;
    std::getline(f, line);
    return line;
}

} // namespace

TEST_CASE("construct")
{
    Workdir w;
    auto r = run({"construct", "pg", "2", "-o", w("fano.sd")});
    CHECK(r.code == 0);
    CHECK(first_line(w("fano.sd")) == "SD 7 3 1");
    CHECK(r.out.find("valid") != std::string::npos);

    CHECK(run({"construct", "biaffine", "3", "-o", w("pappus.std")}).code == 0);
    CHECK(first_line(w("pappus.std")) == "STD 3 3 1");
    CHECK(run({"construct", "hadamard-std", "8", "-o", w("h8.std")}).code == 0);
    CHECK(first_line(w("h8.std")) == "STD 2 8 4");
    CHECK(run({"construct", "hadamard-design", "12", "-o", w("h12.sd")}).code == 0);
    CHECK(first_line(w("h12.sd")) == "SD 11 5 2");

    const auto to_stdout = run({"construct", "pg", "2"});
    CHECK(to_stdout.out == slurp(w("fano.sd")));

    const auto bad = run({"construct", "pg", "6"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("not a prime power") != std::string::npos);
    CHECK(run({"construct", "hadamard-design", "6"}).code == 2);
    CHECK(run({"construct", "pg"}).code == 2);
    CHECK(run({"construct", "fano", "2"}).code == 2);
    CHECK(run({"construct", "pg", "2", "--input", w("fano.sd")}).code == 2);

    CHECK(run({"construct", "--input", w("fano.sd"), "-o", w("copy.sd")}).code == 0);
    CHECK(slurp(w("copy.sd")) == slurp(w("fano.sd")));

    // Swap one point of the first line: parses, fails validation.
    std::string text = slurp(w("fano.sd"));
    const auto nl = text.find('\n');
    const auto nl2 = text.find('\n', nl + 1);
    text.replace(nl + 1, nl2 - nl - 1, "0 5 6");
    std::ofstream(w("broken.sd")) << text;
    const auto invalid = run({"construct", "--input", w("broken.sd")});
    CHECK(invalid.code == 1);
    CHECK(invalid.err.find("validation:") != std::string::npos);
}

TEST_CASE("resolve and verify")
{
    Workdir w;
    run({"construct", "pg", "2", "-o", w("fano.sd")});
    run({"construct", "pg", "3", "-o", w("pg3.sd")});
    run({"construct", "biaffine", "3", "-o", w("pappus.std")});

    auto exact = run({"resolve", "--method", "exact", "--target", "semi-points", w("fano.sd"), "-w", w("f.w")});
    CHECK(exact.code == 0);
    CHECK(exact.json()["result"]["size"] == 3);
    CHECK(exact.json()["verification"]["passed"] == true);
    CHECK(run({"verify", w("fano.sd"), w("f.w")}).code == 0);

    auto split = run({"resolve", "--method", "random", "--target", "split", "--seed", "7", w("pg3.sd"), "-w", w("s.w")});
    CHECK(split.code == 0);
    const Json sj = split.json();
    CHECK(sj["result"]["size"].get<int>() <= 24);
    CHECK(sj["result"]["paper_bound"] == 24);
    CHECK(sj["config"]["seed"] == 7);
    CHECK(run({"verify", w("pg3.sd"), w("s.w")}).code == 0);

    auto mdim = run({"resolve", "--target", "full-mdim", w("pappus.std")});
    CHECK(mdim.code == 0);
    CHECK(mdim.json()["result"]["size"] == 4);
    CHECK(mdim.json()["result"]["optimal"] == true);
    CHECK(mdim.json()["config"]["method"] == "exact");

    // The random method needs the existence preconditions unless --sample is given.
    CHECK(run({"resolve", w("pappus.std")}).code == 2);
    CHECK(run({"resolve", "--sample", "5", w("pappus.std")}).code == 0);
    CHECK(run({"resolve", "--sample", "1", "--retries", "3", w("pappus.std")}).code == 1);
    CHECK(run({"resolve", "--target", "full-mdim", "--method", "random", w("fano.sd")}).code == 2);
    CHECK(run({"resolve", "--method", "exact", "--node-budget", "0", w("fano.sd")}).code == 1);
    CHECK(run({"resolve", "--target", "bogus", w("fano.sd")}).code == 2);
    CHECK(run({"resolve", w("missing.sd")}).code == 2);
}

TEST_CASE("every emitted witness re-verifies")
{
    Workdir w;
    run({"construct", "pg", "2", "-o", w("fano.sd")});
    run({"construct", "hadamard-std", "8", "-o", w("h8.std")});
    run({"construct", "biaffine", "4", "-o", w("b4.std")});
    for (const std::string design : {"fano.sd", "h8.std", "b4.std"})
        for (const std::string target : {"semi-points", "semi-blocks", "split", "full-mdim"})
            for (const std::string method : {"random", "greedy", "exact"}) {
                if (target == "full-mdim" && method == "random")
                    continue;
                CAPTURE(design);
                CAPTURE(target);
                CAPTURE(method);
                const auto r = run({"resolve", "--target", target, "--method", method, w(design), "-w", w("x.w")});
                REQUIRE(r.code == 0);
                const auto v = run({"verify", w(design), w("x.w")});
                CHECK(v.code == 0);
                CHECK(v.json()["routes_agree"] == true);
            }
}

TEST_CASE("verify failures and parse errors")
{
    Workdir w;
    run({"construct", "pg", "2", "-o", w("fano.sd")});
    std::ofstream(w("empty.w")) << "RS semi-points\n";
    const auto empty = run({"verify", w("fano.sd"), w("empty.w")});
    CHECK(empty.code == 1);
    CHECK(empty.err.find("unresolved pair") != std::string::npos);
    CHECK(empty.err.find(": 0 1") != std::string::npos);
    CHECK(empty.json()["passed"] == false);

    std::ofstream(w("trunc.sd")) << "SD 7 3 1\n0 1 2\n";
    CHECK(run({"verify", w("trunc.sd"), w("empty.w")}).code == 2);
    std::ofstream(w("bad.w")) << "RS nothing\n";
    CHECK(run({"verify", w("fano.sd"), w("bad.w")}).code == 2);
    std::ofstream(w("range.w")) << "RS full\n99\n";
    CHECK(run({"verify", w("fano.sd"), w("range.w")}).code == 2);
    std::ofstream(w("side.w")) << "RS semi-points\n0\n";
    CHECK(run({"verify", w("fano.sd"), w("side.w")}).code == 2);
}

TEST_CASE("bounds")
{
    Workdir w;
    run({"construct", "pg", "2", "-o", w("fano.sd")});

    const auto e = run({"bounds", "--v", "7", "--m", "4", "--s", "3"});
    CHECK(e.code == 0);
    CHECK(e.json()["expected_unresolved"]["value"] == "3/5");

    const auto paper = run({"bounds", "--design", w("fano.sd"), "--paper-s"});
    CHECK(paper.code == 0);
    CHECK(paper.json()["s"] == 7);
    CHECK(paper.json()["expected_unresolved"]["value"] == "0");
    CHECK(paper.json()["order_bounds"]["upper_ok"] == true);

    const auto pg7 = run({"bounds", "--v", "57", "--m", "14"});
    CHECK(pg7.json()["s"] == 33);
    CHECK(pg7.json()["chain"]["ok"] == true);
    CHECK(pg7.json()["chain"]["links"].size() == 7);

    const auto sweep = run({"bounds", "--sweep", "pg", "--qmax", "11"});
    CHECK(sweep.code == 0);
    std::istringstream lines(sweep.out);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'v')
            continue;
        ++rows;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        for (std::string c; std::getline(ls, c, ',');)
            cells.push_back(c);
        REQUIRE(cells.size() >= 9);
        CHECK(cells[8] == "true");
    }
    CHECK(rows == 8); // q = 2, 3, 4, 5, 7, 8, 9, 11

    CHECK(run({"bounds", "--sweep", "sd", "--vmax", "200"}).code == 0);
    CHECK(run({"bounds", "--sweep", "biaffine", "--qmax", "7"}).code == 0);
    CHECK(run({"bounds", "--sweep", "hadamard", "--nmax", "16"}).code == 0);
    CHECK(run({"bounds", "--sweep", "pg"}).code == 2);
    CHECK(run({"bounds"}).code == 2);
    CHECK(run({"bounds", "--v", "7"}).code == 2);
    CHECK(run({"bounds", "--v", "7", "--m", "4", "--design", w("fano.sd")}).code == 2);
    CHECK(run({"bounds", "--v", "7", "--m", "9"}).code == 2);
}

TEST_CASE("reports are deterministic")
{
    Workdir w;
    run({"construct", "pg", "3", "-o", w("pg3.sd")});
    for (int i = 0; i < 2; ++i) {
        CHECK(run({"resolve", "--target", "split", "--seed", "3", w("pg3.sd"), "-r", w("r" + std::to_string(i))})
                  .code == 0);
        CHECK(run({"bounds", "--sweep", "pg", "--qmax", "5", "--mc-trials", "50", "--seed", "9", "-o",
                   w("c" + std::to_string(i))})
                  .code == 0);
    }
    CHECK(slurp(w("r0")) == slurp(w("r1")));
    CHECK(slurp(w("c0")) == slurp(w("c1")));
    CHECK(slurp(w("c0")).find(",50,9\n") != std::string::npos);

    const auto other = run({"resolve", "--target", "split", "--seed", "4", w("pg3.sd")});
    CHECK(other.json()["config"]["seed"] == 4);
}

TEST_CASE("export and classify")
{
    Workdir w;
    run({"construct", "pg", "2", "-o", w("fano.sd")});
    run({"construct", "hadamard-std", "4", "-o", w("cube.std")});
    CHECK(run({"export", w("fano.sd"), "-o", w("heawood.g")}).code == 0);
    std::ifstream in(w("heawood.g"));
    const mdim::IncidenceGraph g = mdim::read_edge_list(in);
    CHECK(g.size() == 14);
    CHECK(g.num_edges() == 21);

    const auto c = run({"classify", w("heawood.g")});
    CHECK(c.code == 0);
    CHECK(c.json()["intersection_array"] == "{*,1,1,3; 0,0,0,0; 3,2,2,*}");
    CHECK(c.json()["diameter"] == 3);

    const auto cube = run({"classify", w("cube.std")});
    CHECK(cube.code == 0);
    CHECK(cube.json()["matches_expected"] == true);
    CHECK(cube.json()["antipodal"] == true);

    std::ofstream(w("full.w")) << "RS full\n0 1 2 3 4 5 6 7 8 9 10 11 12 13\n";
    CHECK(run({"verify", w("heawood.g"), w("full.w")}).code == 0);
    std::ofstream(w("one.w")) << "RS full\n0\n";
    CHECK(run({"verify", w("heawood.g"), w("one.w")}).code == 1);
}

TEST_CASE("usage")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    for (const char* cmd : {"construct", "resolve", "bounds", "verify", "export", "classify"})
        CHECK(help.out.find(cmd) != std::string::npos);
    CHECK(run({"resolve", "--help"}).out.find("--target") != std::string::npos);
    CHECK(run({"--version"}).out.find("0.1.0") != std::string::npos);
}
