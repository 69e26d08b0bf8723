#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "tww/generators.hpp"
#include "tww/io.hpp"
#include "tww/matrix.hpp"
#include "tww/sequence.hpp"
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string cli;
fs::path scratch;

struct RunOutcome {
    int code;
    std::string out;
};

RunOutcome run(const std::string& args) {
    const fs::path out_file = scratch / "last_stdout.txt";
    const std::string cmd = cli + " " + args + " > " + out_file.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return {WEXITSTATUS(status), buffer.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string at(const char* name) { return (scratch / name).string(); }

} // namespace

TEST_CASE("gen writes graphs that round-trip, plus a manifest") {
    auto res = run("gen fig1 -o " + at("fig1.gr"));
    REQUIRE(res.code == 0);

    tww::Graph g = tww::load_graph(at("fig1.gr"));
    CHECK(g == tww::fig1_graph());
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 13);
    CHECK(fs::exists(at("fig1.gr") + ".manifest.json"));
}

TEST_CASE("gen gt sizes") {
    auto res = run("gen gt --t 2 --depth 3 -o " + at("gt23.gr"));
    REQUIRE(res.code == 0);
    CHECK(tww::load_graph(at("gt23.gr")).vertex_count() == 87);
}

TEST_CASE("gen paley 5 is the 5-cycle") {
    auto res = run("gen paley --q 5 -o " + at("paley5.gr"));
    REQUIRE(res.code == 0);
    tww::Graph g = tww::load_graph(at("paley5.gr"));
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
}

TEST_CASE("identical seeded invocations produce byte-identical outputs") {
    REQUIRE(run("gen random --n 12 --p 0.4 --seed 7 -o " + at("r1.gr")).code == 0);
    REQUIRE(run("gen random --n 12 --p 0.4 --seed 7 -o " + at("r2.gr")).code == 0);
    REQUIRE(run("gen random --n 12 --p 0.4 --seed 8 -o " + at("r3.gr")).code == 0);
    CHECK(slurp(at("r1.gr")) == slurp(at("r2.gr")));
    CHECK(slurp(at("r1.gr")) != slurp(at("r3.gr")));
}

TEST_CASE("verify replays the fig1 witness at width 2") {
    REQUIRE(run("gen fig1 -o " + at("fig1.gr") + " --witness " + at("fig1.seq")).code == 0);

    auto res = run("verify " + at("fig1.gr") + " " + at("fig1.seq") + " --full");
    CHECK(res.code == 0);
    CHECK(res.out.find("width 2") != std::string::npos);

    SUBCASE("expected-width claims are enforced") {
        CHECK(run("verify " + at("fig1.gr") + " " + at("fig1.seq") + " --expect-width 2").code == 0);
        CHECK(run("verify " + at("fig1.gr") + " " + at("fig1.seq") + " --expect-width 1").code == 2);
    }

    SUBCASE("truncated sequences verify as partial") {
        std::ofstream out(at("part.seq"));
        out << "seq 7\nc 5 6 8\nc 1 4 9\n";
        out.close();
        auto partial = run("verify " + at("fig1.gr") + " " + at("part.seq"));
        CHECK(partial.code == 0);
        CHECK(partial.out.find("partial") != std::string::npos);
        CHECK(run("verify " + at("fig1.gr") + " " + at("part.seq") + " --full").code == 2);
    }

    SUBCASE("corrupted steps are violations naming the step") {
        std::ofstream out(at("bad.seq"));
        out << "seq 7\nc 5 6 8\nc 5 1 9\n"; // vertex 5 was already merged away
        out.close();
        auto bad = run("verify " + at("fig1.gr") + " " + at("bad.seq"));
        CHECK(bad.code == 2);
        CHECK(bad.out.find("step 1") != std::string::npos);
    }
}

TEST_CASE("solve modes emit verifiable witnesses") {
    REQUIRE(run("gen fig1 -o " + at("fig1.gr")).code == 0);

    auto exact = run("solve " + at("fig1.gr") + " --exact --witness " + at("fig1w.seq"));
    REQUIRE(exact.code == 0);
    CHECK(exact.out.find("twin-width") != std::string::npos);
    CHECK(run("verify " + at("fig1.gr") + " " + at("fig1w.seq") + " --full --expect-width 2").code ==
          0);

    auto greedy = run("solve " + at("fig1.gr") + " --greedy --witness " + at("fig1g.seq"));
    REQUIRE(greedy.code == 0);
    CHECK(run("verify " + at("fig1.gr") + " " + at("fig1g.seq") + " --full").code == 0);

    auto oriented = run("solve " + at("fig1.gr") + " --oriented");
    REQUIRE(oriented.code == 0);
    CHECK(oriented.out.find("oriented twin-width") != std::string::npos);
}

TEST_CASE("greedy on a tree falls back to the constructive sequence") {
    REQUIRE(run("gen tree --n 40 --seed 5 -o " + at("tree.gr")).code == 0);
    auto res = run("solve " + at("tree.gr") + " --greedy --witness " + at("tree.seq"));
    REQUIRE(res.code == 0);
    CHECK(run("verify " + at("tree.gr") + " " + at("tree.seq") + " --full --expect-width 2").code ==
          0);
}

TEST_CASE("solve is byte-deterministic single-threaded") {
    REQUIRE(run("gen paley --q 13 -o " + at("p13.gr")).code == 0);
    REQUIRE(run("solve " + at("p13.gr") + " --greedy --witness " + at("w1.seq")).code == 0);
    REQUIRE(run("solve " + at("p13.gr") + " --greedy --witness " + at("w2.seq")).code == 0);
    CHECK(slurp(at("w1.seq")) == slurp(at("w2.seq")));
}

TEST_CASE("solve --json carries the run manifest") {
    REQUIRE(run("gen paley --q 5 -o " + at("p5.gr")).code == 0);
    auto res = run("--json solve " + at("p5.gr") + " --exact");
    REQUIRE(res.code == 0);
    CHECK(res.out.find("\"subcommand\": \"solve\"") != std::string::npos);
    CHECK(res.out.find("\"value\": 2") != std::string::npos);
    CHECK(res.out.find("\"exact\": true") != std::string::npos);
}

TEST_CASE("matrix analyses on files of both kinds") {
    // raw matrix input: the all-ones 4x4 has grid number 4
    tww::OrderedMatrix j4(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            j4.set(r, c, true);
    tww::save_matrix(at("j4.mat"), j4);
    auto res = run("matrix " + at("j4.mat") + " --gridnum");
    REQUIRE(res.code == 0);
    CHECK(res.out.find("grid_number 4") != std::string::npos);

    // identity has no 2-grid minor
    tww::OrderedMatrix i4(4, 4);
    for (int i = 0; i < 4; ++i)
        i4.set(i, i, true);
    tww::save_matrix(at("i4.mat"), i4);
    auto grid2 = run("matrix " + at("i4.mat") + " --grid 2");
    REQUIRE(grid2.code == 0);
    CHECK(grid2.out.find("grid_minor false") != std::string::npos);

    // graph input under the generated order, tree part only
    REQUIRE(run("gen gt --t 2 --depth 3 -o " + at("gt.gr")).code == 0);
    auto chain = run("matrix " + at("gt.gr") + " --gt-order --t 2 --depth 3 --tree-only --chain");
    REQUIRE(chain.code == 0);
    CHECK((chain.out.find("chain 1") != std::string::npos ||
           chain.out.find("chain 2") != std::string::npos));

    // explicit order file: reversing the identity leaves the grid number of
    // a symmetric matrix unchanged
    REQUIRE(run("gen paley --q 5 -o " + at("c5.gr")).code == 0);
    std::vector<int> reversed{4, 3, 2, 1, 0};
    tww::save_order(at("rev.ord"), reversed);
    auto with_order = run("matrix " + at("c5.gr") + " --order " + at("rev.ord") + " --gridnum");
    auto natural = run("matrix " + at("c5.gr") + " --gridnum");
    REQUIRE(with_order.code == 0);
    REQUIRE(natural.code == 0);
    CHECK(with_order.out == natural.out);

    // graph-level minimum over all orders
    auto min_grid = run("matrix " + at("c5.gr") + " --min-orders --gridnum");
    REQUIRE(min_grid.code == 0);
    CHECK(min_grid.out.find("graph_grid_number") != std::string::npos);
}

TEST_CASE("export renders the fig1 frames") {
    REQUIRE(run("gen fig1 -o " + at("fig1.gr") + " --witness " + at("fig1.seq")).code == 0);

    auto frame0 = run("export " + at("fig1.gr") + " --dot --seq " + at("fig1.seq") + " --frame 0");
    REQUIRE(frame0.code == 0);
    CHECK(frame0.out.find("color=red") == std::string::npos);

    auto frame1 = run("export " + at("fig1.gr") + " --dot --seq " + at("fig1.seq") + " --frame 1");
    REQUIRE(frame1.code == 0);
    int reds = 0;
    for (std::size_t pos = frame1.out.find("color=red"); pos != std::string::npos;
         pos = frame1.out.find("color=red", pos + 1))
        ++reds;
    CHECK(reds == 2);

    auto last = run("export " + at("fig1.gr") + " --dot --seq " + at("fig1.seq"));
    REQUIRE(last.code == 0);
    CHECK(last.out.find("--") == std::string::npos); // single node, no edges
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("frobnicate").code == 1);
    CHECK(run("gen nosuchfamily -o " + at("x.gr")).code == 1);
    CHECK(run("solve " + at("missing_file.gr")).code == 1);
    CHECK(run("matrix " + at("j4.mat") + " --grid 99").code == 1);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-tww-binary> [doctest args]\n");
        return 1;
    }
    cli = argv[1];
    scratch = fs::temp_directory_path() / ("tww_cli_" + std::to_string(::getpid()));
    fs::create_directories(scratch);

    doctest::Context context;
    context.applyCommandLine(argc - 1, argv + 1);
    const int rc = context.run();
    fs::remove_all(scratch);
    return rc;
}
