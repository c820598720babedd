#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(FFSI_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("pnt reports the exact q^n identity") {
    auto res = run_cli("pnt --p 3 --r 1 --n 4");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "q,n,h,m,function,raw_exact_num,raw_exact_den,"
                            "main_term_num,main_term_den,normalized_dev_float,elapsed_ms"));
    CHECK(contains(res.out, "3,4,-1,1,lambda,81,1,81,1,0,"));
}

TEST_CASE("global-sum of mu vanishes for n >= 2") {
    auto res = run_cli("global-sum --p 2 --r 1 --n 5 --function mu --no-timing");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "2,5,-1,1,mu,0,1,0,1,0,0"));
}

TEST_CASE("det-check all trials pass") {
    auto res = run_cli("det-check --s 3 --r 5 --trials 20 --seed 7");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "3,5,60,60"));
}

TEST_CASE("char-table emits the S_3 table") {
    auto res = run_cli("char-table --n 3");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "lambda,3,2-1,1-1-1"));
    CHECK(contains(res.out, "3,1,1,1"));
    CHECK(contains(res.out, "2-1,-1,0,2"));
    CHECK(contains(res.out, "1-1-1,1,-1,1"));
}

TEST_CASE("point-count matches the known small case") {
    auto res = run_cli("point-count --p 2 --r 1 --n 4 --h 1 --m 2 --sigmas \"4;4\" --no-timing");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "2,4,1,2,4;4,72,1,64,1,0.125,0"));
}

TEST_CASE("invalid configuration exits 2") {
    auto res = run_cli("variance --p 3 --r 1 --n 4 --h 99 --function lambda");
    CHECK(res.exit_code == 2);
}

TEST_CASE("unknown arguments exit 2") {
    auto res = run_cli("variance --p 3 --r 1 --n 4 --h 1 --bogus 5");
    CHECK(res.exit_code == 2);
}

TEST_CASE("budget violations exit 3") {
    auto res = run_cli("pnt --p 2 --r 1 --n 30 --budget 1000");
    CHECK(res.exit_code == 3);
}

TEST_CASE("help exits 0") {
    auto res = run_cli("--help");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "variance"));
}

TEST_CASE("json output carries exact strings") {
    auto res = run_cli("variance --p 3 --r 1 --n 4 --h 1 --function lambda --format json --no-timing");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "\"raw_exact_num\": \"6\""));
    CHECK(contains(res.out, "\"main_term_num\": \"9\""));
}

TEST_CASE("reports are deterministic across thread counts") {
    std::string base = "covariance --p 2 --r 1 --n 7 --h 2 --functions lambda,mu --no-timing";
    auto a = run_cli(base + " --threads 1");
    auto b = run_cli(base + " --threads 3");
    auto c = run_cli(base + " --threads 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
}

TEST_CASE("custom weight files define a function") {
    std::string path = "cli_custom_weights.csv";
    {
        std::ofstream f(path);
        f << "3,1,3\n2-1,1,2\n1-1-1,1,6\n";
    }
    // Weight 1/|centralizer| per class gives the constant function 1, so the
    // global sum over monic cubics is q^3 = 27 at q = 3.
    auto res = run_cli("global-sum --p 3 --r 1 --n 3 --function custom:" + path + " --no-timing");
    std::remove(path.c_str());
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, ",27,1,"));
}

TEST_CASE("dim-probe parses prime powers") {
    auto res = run_cli("dim-probe --n 4 --h 1 --m 2 --qlist 4,9 --no-timing");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "4,4,1,2,"));
    CHECK(contains(res.out, "9,4,1,2,"));
}
