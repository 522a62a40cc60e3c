#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "delsarte/grid.hpp"
#include "delsarte/verify.hpp"

#include <stdexcept>

using namespace delsarte;

namespace {

std::vector<std::function<long()>> squares(long count)
{
    std::vector<std::function<long()>> tasks;
    for (long i = 0; i < count; ++i) tasks.push_back([i] { return i * i; });
    return tasks;
}

}  // namespace

TEST_CASE("results come back in task order")
{
    for (bool parallel : {false, true}) {
        std::vector<std::size_t> seen;
        const auto out = run_tasks<long>(squares(40), parallel, [&](std::size_t i, const long& v) {
            CHECK(v == static_cast<long>(i * i));
            seen.push_back(i);
        });
        REQUIRE(out.size() == 40);
        for (long i = 0; i < 40; ++i) CHECK(out[i] == i * i);
        REQUIRE(seen.size() == 40);
        for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == i);
    }
}

TEST_CASE("the first failing task is rethrown")
{
    auto tasks = squares(10);
    tasks[3] = []() -> long { throw std::runtime_error("three"); };
    tasks[7] = []() -> long { throw std::runtime_error("seven"); };
    for (bool parallel : {false, true}) {
        try {
            run_tasks<long>(tasks, parallel);
            FAIL("expected an exception");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()) == "three");
        }
    }
}

TEST_CASE("worker count honours the environment")
{
    setenv("DELSARTE_WORKERS", "3", 1);
    CHECK(worker_count() == 3);
    setenv("DELSARTE_WORKERS", "zero", 1);
    CHECK(worker_count() >= 1);
    unsetenv("DELSARTE_WORKERS");
}

TEST_CASE("parallel and serial verification agree")
{
    GridOptions par, ser;
    ser.parallel = false;
    par.n = ser.n = 2;
    for (const std::string suite : {"orthogonality", "affine-optima", "ordinary-optima"}) {
        CAPTURE(suite);
        const auto a = run_verify_suite(suite, par);
        const auto b = run_verify_suite(suite, ser);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].instance == b[i].instance);
            CHECK(a[i].pass == b[i].pass);
            CHECK(a[i].detail == b[i].detail);
        }
        CHECK(summarize(a).failed == 0);
    }
    CHECK_THROWS_AS(run_verify_suite("no-such-suite"), std::invalid_argument);
}
