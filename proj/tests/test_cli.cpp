#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string cli = TETHERPLAN_CLI_PATH;

struct TempDir {
    std::string path;
    TempDir() {
        char tmpl[] = "/tmp/tetherplan_cli_XXXXXX";
        path = mkdtemp(tmpl);
    }
    ~TempDir() {
        int rc = std::system(("rm -rf " + path).c_str());
        (void)rc;
    }
    std::string file(const std::string& name) const { return path + "/" + name; }
};

int run(const std::string& args) {
    int rc = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    out << bytes;
}

}  // namespace

TEST_CASE("gen, solve, verify and plot round trip") {
    TempDir dir;
    std::string inst = dir.file("inst.json");
    std::string sol = dir.file("sol.json");
    std::string svg = dir.file("plot.svg");

    CHECK(run("gen --n 12 --alpha 1 --budget 2 --seed 7 --out " + inst) == 0);
    CHECK(run("solve --in " + inst + " --out " + sol) == 0);
    CHECK(run("verify --in " + inst + " --solution " + sol + " --oracle") == 0);
    CHECK(run("plot --in " + inst + " --solution " + sol + " --out " + svg) == 0);
    CHECK(slurp(svg).find("<svg") == 0);
}

TEST_CASE("identical seeds and inputs reproduce identical bytes") {
    TempDir dir;
    std::string a = dir.file("a.json"), b = dir.file("b.json");
    REQUIRE(run("gen --n 20 --alpha 3/2 --budget 1.5 --seed 99 --out " + a) == 0);
    REQUIRE(run("gen --n 20 --alpha 3/2 --budget 1.5 --seed 99 --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));

    std::string sa = dir.file("sa.json"), sb = dir.file("sb.json");
    REQUIRE(run("solve --in " + a + " --out " + sa) == 0);
    REQUIRE(run("solve --in " + b + " --mode bruteforce --out " + sb) == 0);
    // method tag differs by request; everything else matches
    std::string ja = slurp(sa), jb = slurp(sb);
    CHECK(ja.find("\"linear\"") != std::string::npos);
    CHECK(jb.find("\"bruteforce\"") != std::string::npos);

    std::string va = dir.file("va.svg"), vb = dir.file("vb.svg");
    REQUIRE(run("plot --in " + a + " --solution " + sa + " --out " + va) == 0);
    REQUIRE(run("plot --in " + a + " --solution " + sa + " --out " + vb) == 0);
    CHECK(slurp(va) == slurp(vb));
}

TEST_CASE("exit codes: 1 for verification failures, 2 for input errors") {
    TempDir dir;
    std::string inst = dir.file("inst.json");
    std::string sol = dir.file("sol.json");
    REQUIRE(run("gen --n 6 --seed 3 --out " + inst) == 0);
    REQUIRE(run("solve --in " + inst + " --out " + sol) == 0);

    SUBCASE("tampered solution fails verification with exit 1") {
        std::string body = slurp(sol);
        auto at = body.find("\"links\":");
        REQUIRE(at != std::string::npos);
        body.replace(at, 9, "\"links\":9");
        spit(sol, body);
        CHECK(run("verify --in " + inst + " --solution " + sol) == 1);
    }
    SUBCASE("missing input file exits 2") {
        CHECK(run("solve --in " + dir.file("nope.json") + " --out " + sol) == 2);
    }
    SUBCASE("invalid instance exits 2") {
        spit(inst, "{\"alpha\":\"1\"}");
        CHECK(run("solve --in " + inst + " --out " + sol) == 2);
    }
    SUBCASE("zero-size generation exits 2") {
        CHECK(run("gen --n 0 --out " + inst) == 2);
    }
}

TEST_CASE("bench emits the CSV schema") {
    TempDir dir;
    std::string csv = dir.file("bench.csv");
    REQUIRE(run("bench --sizes 50,100 --repeats 1 --seed 1 --out " + csv) == 0);
    std::string body = slurp(csv);
    CHECK(body.rfind("size,method,median_ns\n", 0) == 0);
    CHECK(body.find("50,linear,") != std::string::npos);
    CHECK(body.find("50,bruteforce,") != std::string::npos);
    CHECK(body.find("100,linear,") != std::string::npos);

    SUBCASE("zero repeats still writes the header") {
        REQUIRE(run("bench --sizes 50 --repeats 0 --seed 1 --out " + csv) == 0);
        CHECK(slurp(csv) == "size,method,median_ns\n");
    }
}
