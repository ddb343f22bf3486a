#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "polyrec/catalogue.hpp"
#include "polyrec/io.hpp"
#include "polyrec/lattice.hpp"

using namespace polyrec;

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string("'") + POLYREC_BIN + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(status != -1);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    fs::path dir;
    TempDir() : dir(fs::current_path() / "t_cli_tmp") { fs::create_directories(dir); }
    ~TempDir() { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& content) const {
        fs::path p = dir / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }
};

std::string fixture_graph_text(const char* name, std::optional<int> d = std::nullopt) {
    const FixtureRecord* rec = find_fixture(name);
    REQUIRE(rec != nullptr);
    return format_graph(graph_of(build_lattice(rec->vfi)), d);
}

} // namespace

TEST_CASE("catalogue emits fixtures byte for byte") {
    RunResult r = run("catalogue simplex 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == format_incidence(simplex(3)));

    r = run("catalogue table1 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == format_incidence(table1(3)));

    r = run("catalogue cube-3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == format_incidence(find_fixture("cube-3")->vfi));

    r = run("catalogue antiwedge");
    CHECK(r.exit_code == 0);
    CHECK(r.out == format_incidence(tetragonal_antiwedge()));
}

TEST_CASE("catalogue failure modes") {
    CHECK(run("catalogue no-such-fixture").exit_code == 2);
    CHECK(run("catalogue no-such-maker 3").exit_code == 2);
    CHECK(run("catalogue simplex 1").exit_code == 4); // constructor rejects d=1
    CHECK(run("catalogue").exit_code == 2);           // missing argument
    CHECK(run("").exit_code == 2);                    // subcommand required
}

TEST_CASE("info summarises an incidence file") {
    TempDir tmp;
    std::string path = tmp.write("simplex4.json", format_incidence(simplex(4)));
    RunResult r = run("info '" + path + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("kind: incidence\n") != std::string::npos);
    CHECK(r.out.find("f-vector: 5 10 10 5\n") != std::string::npos);
    CHECK(r.out.find("excess: 0\n") != std::string::npos);
    CHECK(r.out.find("pyramid-fold: 2\n") != std::string::npos);
    CHECK(r.out.find("balinski: ok\n") != std::string::npos);
}

TEST_CASE("info on graph files wants a dimension") {
    TempDir tmp;
    std::string bare = tmp.write("bare.json", fixture_graph_text("prism-4"));
    CHECK(run("info '" + bare + "'").exit_code == 2);
    RunResult r = run("info '" + bare + "' --d 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("kind: graph\n") != std::string::npos);
    CHECK(r.out.find("edges: 16\n") != std::string::npos);

    std::string stored = tmp.write("stored.json", fixture_graph_text("prism-4", 4));
    CHECK(run("info '" + stored + "'").exit_code == 0);

    std::string broken = tmp.write("broken.json", "{\"nope\":1}");
    CHECK(run("info '" + broken + "'").exit_code == 2);
}

TEST_CASE("reconstruct from graph files") {
    TempDir tmp;
    std::string prism = tmp.write("prism4.json", fixture_graph_text("prism-4", 4));
    RunResult r = run("reconstruct '" + prism + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out == format_incidence(simplicial_prism(4)));

    std::string pent = tmp.write("pentasm4.json", fixture_graph_text("pentasm-4"));
    r = run("reconstruct '" + pent + "' --d 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == format_incidence(pentasm(4)));

    // twice in a row: byte-identical
    RunResult again = run("reconstruct '" + pent + "' --d 4");
    CHECK(again.out == r.out);

    // incidence input is refused
    std::string inc = tmp.write("inc.json", format_incidence(simplex(3)));
    CHECK(run("reconstruct '" + inc + "'").exit_code == 2);
}

TEST_CASE("reconstruct declines out-of-scope graphs") {
    TempDir tmp;
    std::string t1 = tmp.write("table1.json", fixture_graph_text("table1-1"));
    RunResult r = run("reconstruct '" + t1 + "' --d 4");
    CHECK(r.exit_code == 3);
    CHECK(r.out.substr(0, 36) == "not covered: nonsimple count >= d (d");
}

TEST_CASE("reconstruct respects the orientation budget") {
    TempDir tmp;
    std::string prism = tmp.write("prism5.json", fixture_graph_text("prism-5", 5));
    RunResult r = run("reconstruct '" + prism + "' --max-orientations 10");
    CHECK(r.exit_code == 5);
}

TEST_CASE("compare modes") {
    TempDir tmp;
    std::string a4 = tmp.write("a4.json", format_incidence(bipyramid_over_simplex(4)));
    std::string b4 = tmp.write("b4.json", format_incidence(pyramid_over_bipyramid(4)));
    RunResult r = run("compare '" + a4 + "' '" + b4 + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "isomorphic\n");

    r = run("compare '" + a4 + "' '" + b4 + "' --mode lattice");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "not equivalent\n");

    std::string a5 = tmp.write("a5.json", format_incidence(bipyramid_over_simplex(5)));
    std::string b5 = tmp.write("b5.json", format_incidence(pyramid_over_bipyramid(5)));
    r = run("compare '" + a5 + "' '" + b5 + "' --mode skeleton:2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "isomorphic\n");
    r = run("compare '" + a5 + "' '" + b5 + "' --mode skeleton:3");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "not isomorphic\n");

    CHECK(run("compare '" + a5 + "' '" + b5 + "' --mode skeleton:x").exit_code == 2);
    CHECK(run("compare '" + a5 + "' '" + b5 + "' --mode nope").exit_code == 2);

    // graph mode accepts graph files as well
    std::string g5 = tmp.write("g5.json", fixture_graph_text("bipyramid-5"));
    r = run("compare '" + g5 + "' '" + b5 + "'");
    CHECK(r.exit_code == 0);
}

TEST_CASE("verify command") {
    RunResult r = run("verify --suite excess-theorem");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("suite excess-theorem: ") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    CHECK(run("verify --suite no-such-suite").exit_code == 2);
    CHECK(run("verify").exit_code == 2);
}
