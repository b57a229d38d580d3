#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "lpso/benchfuncs.hpp"

using namespace lpso;

TEST_CASE("eval_base: optima of the normalized forms")
{
    const std::vector<double> zero(5, 0.0);
    CHECK(eval_base("rastrigin", zero) == 0.0);
    CHECK(std::abs(eval_base("ackley", zero)) < 1e-12);
    CHECK(eval_base("rosenbrock", zero) == 0.0);
    CHECK(std::abs(eval_base("happycat", zero)) < 1e-12);
    CHECK(std::abs(eval_base("hgbat", zero)) < 1e-12);
    CHECK(std::abs(eval_base("griewank", zero)) < 1e-12);
    CHECK(std::abs(eval_base("weierstrass", zero)) < 1e-10);
    CHECK(std::abs(eval_base("katsuura", zero)) < 1e-12);
    // published constants leave a small positive residual at the optimum
    CHECK(eval_base("schwefel", zero) > 0.0);
    CHECK(eval_base("schwefel", zero) < 1e-3);
}

TEST_CASE("eval_base: elliptic hand value")
{
    CHECK(eval_base("elliptic", {1.0, 1.0}) == doctest::Approx(1000001.0).epsilon(1e-12));
}

TEST_CASE("eval_base: unknown name throws")
{
    CHECK_THROWS_AS(eval_base("sphere-of-doom", {0.0}), std::invalid_argument);
}

TEST_CASE("apply_transform: identity rotation and zero shift")
{
    TransformStack stack;
    stack.shift = {0.0, 0.0};
    stack.scale = 2.0;
    auto base = [](const std::vector<double>& z) { return z[0] + 10.0 * z[1]; };
    CHECK(apply_transform(stack, base, {1.0, 3.0}) == doctest::Approx(2.0 + 60.0));
}

TEST_CASE("apply_transform: shift cancels at x = o")
{
    Rng rng(5);
    TransformStack stack;
    stack.shift = {7.0, -3.0, 2.0};
    stack.rotation = random_rotation(3, rng);
    auto rastrigin = [](const std::vector<double>& z) { return eval_base("rastrigin", z); };
    CHECK(std::abs(apply_transform(stack, rastrigin, stack.shift)) < 1e-10);
}

TEST_CASE("apply_transform: dimension mismatch throws")
{
    TransformStack stack;
    stack.shift = {0.0, 0.0};
    auto base = [](const std::vector<double>& z) { return z[0]; };
    CHECK_THROWS_AS(apply_transform(stack, base, {1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("random_rotation is orthogonal")
{
    Rng rng(11);
    for (int dim : {2, 10, 50}) {
        const auto m = random_rotation(dim, rng);
        CHECK(rotation_orthogonality_error(m) < 1e-10);
    }
}

TEST_CASE("build_suite: 30 functions with the four category counts")
{
    const auto suite = build_suite(10, 42);
    REQUIRE(suite.size() == 30);
    int counts[4] = {0, 0, 0, 0};
    for (const auto& f : suite)
        ++counts[static_cast<int>(f.category)];
    CHECK(counts[0] == 3);  // unimodal
    CHECK(counts[1] == 13); // multimodal
    CHECK(counts[2] == 6);  // hybrid
    CHECK(counts[3] == 8);  // composition
    CHECK(suite[0].id == "F1-analog");
    CHECK(suite[29].id == "F30-analog");
}

TEST_CASE("build_suite: deterministic from (dim, seed); seeds move the optima")
{
    const auto a = build_suite(5, 7);
    const auto b = build_suite(5, 7);
    const auto c = build_suite(5, 8);
    for (int i = 0; i < 30; ++i) {
        CHECK(a[i].optimum == b[i].optimum);
        CHECK(a[i].f_star == b[i].f_star);
    }
    CHECK(a[0].optimum != c[0].optimum);
}

TEST_CASE("build_suite: every function returns f_star at its recorded optimum")
{
    const auto suite = build_suite(10, 42);
    for (const auto& f : suite) {
        CHECK(std::abs(f.eval(f.optimum) - f.f_star) < 1e-8);
        for (int d = 0; d < f.dim; ++d) {
            CHECK(f.optimum[d] >= f.bounds.lo[d]);
            CHECK(f.optimum[d] <= f.bounds.hi[d]);
        }
    }
}

TEST_CASE("build_suite: random samples never fall below f_star")
{
    const auto suite = build_suite(6, 3);
    Rng rng(99);
    for (const auto& f : suite) {
        std::vector<double> x(f.dim);
        for (int s = 0; s < 2000; ++s) {
            for (int d = 0; d < f.dim; ++d)
                x[d] = rng.uniform(f.bounds.lo[d], f.bounds.hi[d]);
            CHECK(f.eval(x) >= f.f_star - 1e-9);
        }
    }
}

TEST_CASE("composition_weights: non-negative, sum to one, zero distance wins")
{
    Rng rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> d2(3 + rng.below(3));
        for (auto& v : d2)
            v = rng.uniform(1e-12, 1e4);
        const auto w = composition_weights(d2);
        double total = 0.0;
        for (double v : w) {
            CHECK(v >= 0.0);
            total += v;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
    const auto w = composition_weights({4.0, 0.0, 9.0});
    CHECK(w[0] == 0.0);
    CHECK(w[1] == 1.0);
    CHECK(w[2] == 0.0);
}

TEST_CASE("build_suite rejects dim < 2")
{
    CHECK_THROWS_AS(build_suite(1, 0), std::invalid_argument);
}

TEST_CASE("suite manifest lists all functions with categories")
{
    const auto suite = build_suite(10, 42);
    const std::string manifest = suite_manifest_json(suite, 10, 42);
    CHECK(manifest.find("\"F1-analog\"") != std::string::npos);
    CHECK(manifest.find("\"F30-analog\"") != std::string::npos);
    CHECK(manifest.find("\"composition\"") != std::string::npos);
    CHECK(suite_manifest_json(build_suite(10, 42), 10, 42) == manifest);
}

namespace {

std::string write_temp(const std::string& name, const std::string& content)
{
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("load_official_data: well-formed identity stack")
{
    const std::string path = write_temp("stacks_ok.txt",
                                        "1.5 -2.5\n"
                                        "1 0\n"
                                        "0 1\n");
    const auto stacks = load_official_data(path, 2);
    REQUIRE(stacks.size() == 1);
    CHECK(stacks[0].shift == std::vector<double>{1.5, -2.5});
    CHECK(stacks[0].rotation[0] == std::vector<double>{1.0, 0.0});
    CHECK(stacks[0].rotation[1] == std::vector<double>{0.0, 1.0});
}

TEST_CASE("load_official_data: missing rotation rows name the file")
{
    const std::string path = write_temp("stacks_short.txt",
                                        "1 2\n"
                                        "1 0\n");
    try {
        load_official_data(path, 2);
        FAIL("expected an error");
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("stacks_short.txt") != std::string::npos);
        CHECK(msg.find("rotation") != std::string::npos);
    }
}

TEST_CASE("load_official_data: wrong shift length reports expected vs found")
{
    const std::string path = write_temp("stacks_badshift.txt", "1 2 3\n");
    try {
        load_official_data(path, 2);
        FAIL("expected an error");
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("expected 2") != std::string::npos);
        CHECK(msg.find("found 3") != std::string::npos);
    }
}

TEST_CASE("load_official_data: malformed numbers are rejected with a line number")
{
    const std::string path = write_temp("stacks_garbled.txt",
                                        "1 2\n"
                                        "1 zero\n"
                                        "0 1\n");
    try {
        load_official_data(path, 2);
        FAIL("expected an error");
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find(":2:") != std::string::npos);
        CHECK(msg.find("zero") != std::string::npos);
    }
}

TEST_CASE("build_suite with official stacks replaces the simple-function transforms")
{
    const std::string path = write_temp("stacks_override.txt",
                                        "5 5\n"
                                        "1 0\n"
                                        "0 1\n");
    const auto stacks = load_official_data(path, 2);
    const auto suite = build_suite(2, 42, stacks);
    CHECK(suite[0].optimum == std::vector<double>{5.0, 5.0});
    // overridden optimum still evaluates to f_star
    CHECK(std::abs(suite[0].eval(suite[0].optimum) - suite[0].f_star) < 1e-8);
    // untouched functions keep their seeded transforms
    const auto plain = build_suite(2, 42);
    CHECK(suite[1].optimum == plain[1].optimum);
}

TEST_CASE("hybrid evaluation uses every variable exactly once")
{
    // a deviation in any single coordinate must change the value: with each
    // variable feeding exactly one group, perturbing coordinates one at a
    // time from the optimum strictly increases single-base sums
    const auto suite = build_suite(7, 12);
    for (int fi = 16; fi < 22; ++fi) {
        const auto& f = suite[fi];
        REQUIRE(f.category == FunctionCategory::hybrid);
        for (int d = 0; d < f.dim; ++d) {
            std::vector<double> x = f.optimum;
            x[d] += 3.0;
            CHECK(f.eval(x) > f.f_star + 1e-12);
        }
    }
}
