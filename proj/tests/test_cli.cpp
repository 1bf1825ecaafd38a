#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

std::filesystem::path scratch()
{
    static const auto dir = [] {
        auto d = std::filesystem::temp_directory_path() / ("cfz-cli-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

/// Runs the tool with stderr discarded (or merged when `merge_err`).
Run cfz(const std::string& args, const std::string& env = "", bool merge_err = false)
{
    const std::string cache = (scratch() / "cache.jsonl").string();
    const std::string cmd = "CFZ_CACHE='" + cache + "' " + env + " '" CFZ_CLI_PATH "' " + args +
                            (merge_err ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

} // namespace

TEST_CASE("count")
{
    auto r = cfz("count --variety builtin:S --primes 7 --ext 1");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"variety\":\"S\",\"p\":7,\"k\":1,\"count\":177,\"method\":\"fibered\"}\n");
    r = cfz("count --variety builtin:fermat --primes 7");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"count\":3690"));
    r = cfz("count --variety builtin:S --primes 4", "", true);
    CHECK(r.code == 2);
    CHECK(contains(r.out, "4 is not prime"));
    r = cfz("count --variety builtin:X --primes 5,7 --format tsv");
    CHECK(r.out == "variety\tp\tk\tcount\tmethod\nX\t5\t1\t981\tconvolution\nX\t7\t1\t3690\tconvolution\n");
    r = cfz("count --variety builtin:S --primes 7 --ext 2 --no-cache");
    CHECK(contains(r.out, "\"count\":3453"));
}

TEST_CASE("count from a variety file")
{
    const auto path = scratch() / "conic.json";
    std::ofstream(path) << R"({"name":"conic","ambient":[2],"vars":[["x","y","z"]],"polys":["x^2+y^2-z^2"]})";
    auto r = cfz("count --variety '" + path.string() + "' --primes 11 --no-cache");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"count\":12"));
    r = cfz("count --variety '" + path.string() + "' --primes 11 --no-cache --budget 5", "", true);
    CHECK(r.code == 2);
    CHECK(contains(r.out, "budget"));
    r = cfz("count --variety '" + path.string() + "' --primes 11 --no-cache", "CFZ_BUDGET=5");
    CHECK(r.code == 2);

    const auto bad = scratch() / "bad.json";
    std::ofstream(bad) << R"({"name":"bad","ambient":[2],"vars":[["x","y","z"]],"polys":["x^2+y^3"]})";
    r = cfz("count --variety '" + bad.string() + "' --primes 7 --no-cache", "", true);
    CHECK(r.code == 2);
    CHECK(contains(r.out, "not multihomogeneous"));
}

TEST_CASE("trace-table")
{
    auto r = cfz("trace-table --primes 7,13,19,31,37");
    CHECK(r.code == 0);
    CHECK(r.out == "p\tN1\tresidue\ta_p\tmatch\n"
                   "7\t177\t1\t-13\ttrue\n"
                   "13\t429\t12\t-1\ttrue\n"
                   "19\t753\t11\t11\ttrue\n"
                   "31\t1536\t16\t-46\ttrue\n"
                   "37\t2157\t10\t47\ttrue\n");
    r = cfz("trace-table --primes 11,5");
    CHECK(r.out == "p\tN1\tresidue\ta_p\tmatch\n5\t66\t0\t0\ttrue\n11\t210\t0\t0\ttrue\n");
    r = cfz("trace-table --primes 3", "", true);
    CHECK(r.code == 2);
    CHECK(contains(r.out, "bad prime"));
    r = cfz("trace-table --primes 7 --format json");
    CHECK(r.out == "{\"p\":7,\"N1\":177,\"residue\":1,\"a_p\":-13,\"match\":true}\n");
}

TEST_CASE("identify")
{
    auto r = cfz("identify --primes 7..40");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("{\"twist_index\":0,", 0) == 0);
    CHECK(contains(r.out, "\"status\":\"unique\""));
    r = cfz("identify --primes 5,11");
    CHECK(r.code == 1);
    CHECK(contains(r.out, "ambiguous"));
    r = cfz("identify --primes 7 --residue-override 7:2");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("{\"twist_index\":1,", 0) == 0);
    r = cfz("identify --primes 7 --residue-override 7:3");
    CHECK(r.code == 1);
    CHECK(cfz("identify --primes 7 --residue-override x").code == 2);
    CHECK(cfz("identify --primes 7 --embedding sometimes").code == 2);
}

TEST_CASE("zeta")
{
    auto r = cfz("zeta --prime 7");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"coeffs\":[1,91,2401]"));
    CHECK(contains(r.out, "\"reconstructed_count\":3690"));
    r = cfz("zeta --prime 13");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"reconstructed_count\":34308"));
    r = cfz("zeta --prime 5", "", true);
    CHECK(r.code == 2);
    CHECK(contains(r.out, "--ns-fixed"));
    // t2 = 40 = 8 * 5 at p = 5
    r = cfz("zeta --prime 5 --ns-fixed 8");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"reconstructed_count\":981"));
    CHECK(cfz("zeta --prime 5 --ns-fixed 20").code == 1);
    CHECK(cfz("zeta --prime 7 --ns-fixed 18").code == 1);
    CHECK(cfz("zeta --prime 5 --ns-fixed 7").code == 2);
}

TEST_CASE("verify")
{
    auto r = cfz("verify --suite identities --primes 7,13");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"passed\":true"));
    r = cfz("verify --suite automorphisms --format tsv");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "order 6\n"));
    CHECK(contains(r.out, "order 216\n"));
    r = cfz("verify --suite pluecker --format tsv");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "max_dim=3"));
    CHECK(cfz("verify --suite counts --primes 5,7").code == 0);
    CHECK(cfz("verify --suite forms").code == 0);
    CHECK(cfz("verify --suite everything").code == 2);
}

TEST_CASE("lattice and pluecker")
{
    auto r = cfz("lattice --gram 4,10");
    CHECK(r.out == "{\"h2T\":4,\"TT\":10,\"d\":14,\"special_admissible\":true,\"associated_k3_n\":2}\n");
    r = cfz("lattice --d 20");
    CHECK(contains(r.out, "\"associated_k3_n\":null"));
    CHECK(cfz("lattice").code == 2);
    r = cfz("pluecker --k 1 --n 3 --relations");
    CHECK(r.out == "p01*p23 - p02*p13 + p03*p12\n");
    r = cfz("pluecker --k 1 --n 4 --q 2");
    CHECK(r.out.rfind("{\"k\":1,\"n\":4,\"q\":2,\"max_dim\":3,", 0) == 0);
    CHECK(cfz("pluecker --k 1 --n 4 --q 5 --budget 1000").code == 2);
}

TEST_CASE("usage errors and determinism")
{
    CHECK(cfz("").code == 2);
    CHECK(cfz("count").code == 2);
    CHECK(cfz("count --primes 7 --format xml").code == 2);
    CHECK(cfz("count --primes 7..5").code == 2);
    CHECK(cfz("--help").code == 0);

    const std::string args = "trace-table --primes 5..40";
    const auto cold = cfz(args + " --no-cache").out;
    const auto first = cfz(args).out;
    const auto cached = cfz(args).out;
    CHECK(cold == first);
    CHECK(first == cached);
    CHECK(cfz("count --variety builtin:X --primes 5 --ext 1 --no-cache --workers 3").out ==
          cfz("count --variety builtin:X --primes 5 --no-cache").out);
    std::filesystem::remove_all(scratch());
}
