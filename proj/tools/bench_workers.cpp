// Compares the serial reference executor against the OpenMP worklist on the
// same plan and checks that both produce identical records.

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "lpso/harness.hpp"
#include "lpso/records.hpp"

using namespace lpso;

namespace {

bool same_records(const std::vector<RunRecord>& a, const std::vector<RunRecord>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        RunRecord x = a[i], y = b[i];
        x.wall_ms = y.wall_ms = 0.0;
        if (record_to_json(x) != record_to_json(y))
            return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    long budget = 20000;
    int runs = 10;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 2)
        workers = 2;
    if (argc > 1)
        budget = std::stol(argv[1]);
    if (argc > 2)
        runs = std::stoi(argv[2]);
    if (argc > 3)
        workers = std::stoi(argv[3]);

    ExperimentPlan plan;
    plan.variant = VariantId::clpso;
    plan.arms = LanguidArm::both;
    plan.dim = 10;
    plan.functions = {"F4-analog", "F8-analog", "F10-analog", "F13-analog"};
    plan.grid.n = {20, 40};
    plan.grid.w0 = {0.6};
    plan.grid.c = {1.0};
    plan.runs_per_config = runs;
    plan.master_seed = 7;
    plan.eval_budget_override = budget;

    std::printf("bench: 4 functions x 2 arms x 2 configs x %d runs, budget %ld\n", runs, budget);

    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<RunRecord> serial = execute_plan_serial(plan);
    const auto t1 = std::chrono::steady_clock::now();
    const std::vector<RunRecord> parallel = execute_plan(plan, workers);
    const auto t2 = std::chrono::steady_clock::now();

    const double ms_serial = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double ms_parallel = std::chrono::duration<double, std::milli>(t2 - t1).count();

    std::printf("serial reference: %10.1f ms\n", ms_serial);
    std::printf("%2d workers:       %10.1f ms  (speedup %.2fx)\n", workers, ms_parallel,
                ms_serial / ms_parallel);
    if (!same_records(serial, parallel)) {
        std::printf("FAIL: parallel records differ from serial reference\n");
        return 1;
    }
    std::printf("records identical across executors\n");
    return 0;
}
