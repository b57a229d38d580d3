// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Run it via ctest or directly; criterion names can be
// passed as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "lpso/benchfuncs.hpp"
#include "lpso/harness.hpp"
#include "lpso/records.hpp"
#include "lpso/stats.hpp"
#include "lpso/variants.hpp"

using namespace lpso;

#include "stats_oracle_data.inc"

namespace {

int hw_workers()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& msg)
    {
        ok = false;
        if (detail.empty())
            detail = msg;
    }
    void expect(bool cond, const std::string& msg)
    {
        if (!cond)
            fail(msg);
    }
};

// ---------------------------------------------------------------------------

void determinism_smoke(Check& c)
{
    const auto t0 = std::chrono::steady_clock::now();

    ExperimentPlan plan;
    plan.variant = VariantId::tvac;
    plan.arms = LanguidArm::both;
    plan.dim = 10;
    plan.functions = {"F1-analog", "F8-analog"};
    plan.grid.n = {20, 40};
    plan.grid.w0 = {0.6};
    plan.grid.version = {TopologyKind::gbest};
    plan.runs_per_config = 5;
    plan.master_seed = 31337;

    auto to_bytes = [](std::vector<RunRecord> records) {
        std::string bytes;
        for (auto& r : records) {
            r.wall_ms = 0.0; // the --no-timing convention
            bytes += record_to_json(r) + "\n";
        }
        return bytes;
    };
    const std::string first = to_bytes(execute_plan(plan, 1));
    const std::string second = to_bytes(execute_plan(plan, hw_workers()));
    c.expect(!first.empty(), "no records produced");
    c.expect(first == second, "record files differ across executions/worker counts");

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < 30.0, "smoke plan took " + std::to_string(secs) + " s (limit 30)");
}

void grid_cardinality(Check& c)
{
    for (int dim : {10, 20, 50}) {
        ExperimentPlan tvac;
        tvac.variant = VariantId::tvac;
        tvac.grid = table3_axes(VariantId::tvac, dim);
        c.expect(expand_grid(tvac).size() == 220,
                 "tvac grid at D=" + std::to_string(dim) + " is not 220 configs");

        ExperimentPlan clpso;
        clpso.variant = VariantId::clpso;
        clpso.grid = table3_axes(VariantId::clpso, dim);
        c.expect(expand_grid(clpso).size() == 770,
                 "clpso grid at D=" + std::to_string(dim) + " is not 770 configs");
    }
}

void equation_endpoints(Check& c)
{
    const int t_max = 1000;
    const TvacSchedule tvac;
    const auto [c1i, c2i] = tvac_coefficients(0, tvac, t_max);
    const auto [c1f, c2f] = tvac_coefficients(t_max, tvac, t_max);
    c.expect(std::abs(c1i - 2.5) < 1e-12 && std::abs(c2i - 0.5) < 1e-12,
             "tvac initial coefficients off");
    c.expect(std::abs(c1f - 0.5) < 1e-12 && std::abs(c2f - 2.5) < 1e-12,
             "tvac final coefficients off");

    const LdiwSchedule ldiw{0.4, 0.85, t_max};
    c.expect(std::abs(ldiw_weight(0, ldiw) - 0.85) < 1e-12, "ldiw start weight off");
    c.expect(std::abs(ldiw_weight(t_max, ldiw) - 0.4) < 1e-12, "ldiw end weight off");

    for (int n : {2, 20, 137}) {
        c.expect(std::abs(clpso_learning_probability(1, n) - 0.05) < 1e-12,
                 "learning probability at k=1 off");
        c.expect(std::abs(clpso_learning_probability(n, n) - 0.5) < 1e-12,
                 "learning probability at k=n off");
    }
}

void languid_switch(Check& c)
{
    // a swarm that never improves: constant objective; with zero attraction
    // coefficients the velocity equals the inertia term, which must vanish
    // exactly from t = 2 on
    {
        SwarmConfig cfg;
        cfg.swarm_size = 5;
        cfg.dim = 3;
        cfg.eval_max = 10000000;
        cfg.c1 = cfg.c2 = 0.0;
        cfg.inertia.mode = InertiaMode::languid;
        cfg.bounds = Bounds::cube(3, -100.0, 100.0);
        Objective flat = [](const std::vector<double>&) { return 7.0; };
        Swarm swarm(cfg, 404);
        swarm.init(flat);
        swarm.step({0.7, 0.0, 0.0}, flat);
        for (int t = 2; t <= 1000; ++t) {
            swarm.step({0.7, 0.0, 0.0}, flat);
            for (const auto& s : swarm.particles)
                for (double v : s.v)
                    if (v != 0.0) {
                        c.fail("nonzero inertia at t=" + std::to_string(t));
                        return;
                    }
        }
    }

    // monotone improvement: languid == standard at w(t) + 0.05, bit for bit
    {
        long ticks_a = 0, ticks_b = 0;
        Objective mono_a = [&](const std::vector<double>&) {
            return -static_cast<double>(++ticks_a);
        };
        Objective mono_b = [&](const std::vector<double>&) {
            return -static_cast<double>(++ticks_b);
        };
        SwarmConfig cfg;
        cfg.swarm_size = 10;
        cfg.dim = 5;
        cfg.eval_max = 100000000;
        cfg.topology = TopologyKind::lbest;
        cfg.bounds = Bounds::cube(5, -100.0, 100.0);
        SwarmConfig cfg_l = cfg;
        cfg_l.inertia.mode = InertiaMode::languid;

        Swarm languid(cfg_l, 777), shadow(cfg, 777);
        languid.init(mono_a);
        shadow.init(mono_b);
        const LdiwSchedule sched{0.4, 0.9, 500};
        for (int t = 1; t <= 500; ++t) {
            const double w = ldiw_weight(t, sched);
            languid.step({w, 1.5, 1.5}, mono_a);
            shadow.step({w + 0.05, 1.5, 1.5}, mono_b);
            for (int k = 0; k < 10; ++k) {
                if (languid.particles[k].x != shadow.particles[k].x ||
                    languid.particles[k].v != shadow.particles[k].v) {
                    c.fail("state diverged at t=" + std::to_string(t));
                    return;
                }
            }
        }
    }
}

void one_step_oracle(Check& c)
{
    // frozen from an independent line-by-line execution of the update rules
    SwarmConfig cfg;
    cfg.swarm_size = 3;
    cfg.dim = 2;
    cfg.c1 = cfg.c2 = 1.5;
    cfg.eval_max = 1000;
    cfg.inertia.mode = InertiaMode::languid;
    cfg.bounds = Bounds::cube(2, -100.0, 100.0);

    Objective f = [](const std::vector<double>& x) {
        return (x[0] - 1.0) * (x[0] - 1.0) + (x[1] + 0.5) * (x[1] + 0.5);
    };
    Rng rng = Rng::scripted({
        0.5, 0.25, 0.75, 0.1, 0.2, 0.8, 0.4, 0.6, 0.9, 0.3, 0.05, 0.65,
    });
    Swarm swarm(cfg, std::move(rng));
    swarm.particles.resize(3);
    auto put = [&](int k, std::vector<double> x, std::vector<double> v) {
        swarm.particles[k].x = x;
        swarm.particles[k].v = std::move(v);
        swarm.particles[k].p = x;
        const double fx = f(x);
        swarm.particles[k].f_p = fx;
        swarm.particles[k].f_curr = fx;
        swarm.particles[k].f_prev = std::numeric_limits<double>::infinity();
    };
    put(0, {0.0, 0.0}, {1.0, -2.0});
    put(1, {2.0, 1.0}, {-0.5, 0.5});
    put(2, {-1.0, 3.0}, {0.25, -1.0});
    swarm.topo.kind = TopologyKind::gbest;
    swarm.best_fit = 1.25;
    swarm.best_pos = {0.0, 0.0};
    swarm.evals = 3;

    swarm.step({0.7, 1.5, 1.5}, f);

    const double want[3][6] = {
        // x0, x1, v0, v1, f_p, f_curr
        {0.75, -1.5, 0.75, -1.5, 1.0625, 1.0625},
        {0.875, -0.875, -1.125, -1.875, 0.15625, 0.15625},
        {-0.671875, -1.5281250000000002, 0.328125, -4.528125, 3.8522070312500003,
         3.8522070312500003},
    };
    for (int k = 0; k < 3; ++k) {
        const ParticleState& s = swarm.particles[k];
        const double got[6] = {s.x[0], s.x[1], s.v[0], s.v[1], s.f_p, s.f_curr};
        for (int j = 0; j < 6; ++j)
            if (std::abs(got[j] - want[k][j]) > 1e-12) {
                c.fail("particle " + std::to_string(k) + " field " + std::to_string(j) +
                       " off by " + std::to_string(got[j] - want[k][j]));
                return;
            }
    }
    c.expect(std::abs(swarm.best_fit - 0.15625) < 1e-12, "best-of-swarm off");
    c.expect(swarm.best_pos[0] == swarm.particles[1].x[0], "best position not updated");
}

void budget_accounting(Check& c)
{
    const auto suite = build_suite(10, kDefaultSuiteSeed);
    const long budget = 10000L * 10;
    for (VariantId v :
         {VariantId::ldiw, VariantId::tvac, VariantId::cpso, VariantId::dms, VariantId::clpso}) {
        for (bool languid : {false, true}) {
            long calls = 0;
            Objective counting = [&](const std::vector<double>& x) {
                ++calls;
                return suite[0].eval(x);
            };
            RunConfig rc;
            rc.variant = v;
            rc.languid = languid;
            rc.swarm_size = 30;
            rc.w0 = 0.7;
            rc.c = 1.5;
            rc.version = TopologyKind::lbest;
            rc.dim = 10;
            rc.eval_max = budget;
            const RunResult res = run_variant(rc, counting, 2024);
            const std::string tag = std::string(variant_name(v)) + (languid ? "+L" : "");
            c.expect(res.evals == calls, tag + ": recorded evals != true objective calls");
            c.expect(res.evals > budget - 30 && res.evals <= budget,
                     tag + ": evals " + std::to_string(res.evals) + " outside budget window");
        }
    }
}

void stats_oracles(Check& c)
{
    // exact rank-sum p vs full enumeration over every subset, all m+n <= 10
    Rng rng(55);
    for (int m = 1; m <= 9; ++m) {
        for (int n = 1; m + n <= 10; ++n) {
            for (int trial = 0; trial < 2; ++trial) {
                std::vector<double> a(m), b(n);
                for (auto& v : a)
                    v = rng.uniform01();
                for (auto& v : b)
                    v = rng.uniform01();

                // enumeration oracle
                const int total = m + n;
                std::vector<double> pool(a.begin(), a.end());
                pool.insert(pool.end(), b.begin(), b.end());
                std::vector<double> sorted = pool;
                std::sort(sorted.begin(), sorted.end());
                double w_obs = 0.0;
                for (double v : a)
                    w_obs += static_cast<double>(std::lower_bound(sorted.begin(), sorted.end(),
                                                                  v) -
                                                 sorted.begin()) +
                             1.0;
                std::vector<int> pick(m);
                std::iota(pick.begin(), pick.end(), 0);
                long below = 0, count = 0;
                while (true) {
                    long s = 0;
                    for (int i : pick)
                        s += i + 1;
                    ++count;
                    if (static_cast<double>(s) <= w_obs + 1e-12)
                        ++below;
                    int i = m - 1;
                    while (i >= 0 && pick[i] == total - m + i)
                        --i;
                    if (i < 0)
                        break;
                    ++pick[i];
                    for (int j = i + 1; j < m; ++j)
                        pick[j] = pick[j - 1] + 1;
                }
                const double oracle = static_cast<double>(below) / static_cast<double>(count);
                if (std::abs(wilcoxon_one_sided(a, b) - oracle) > 1e-10) {
                    c.fail("rank-sum exact mismatch at m=" + std::to_string(m) +
                           " n=" + std::to_string(n));
                    return;
                }
            }
        }
    }

    for (const WelchCase& w : kWelchCases)
        if (std::abs(t_test_one_sided(w.a, w.b) - w.p) > 1e-6) {
            c.fail("Welch t-test off reference");
            return;
        }
    for (const SwCase& s : kShapiroCases) {
        const ShapiroWilkResult r = shapiro_wilk(s.sample);
        if (std::abs(r.w - s.w) > 1e-3 || std::abs(r.p - s.p) > 1e-3) {
            c.fail("Shapiro-Wilk off reference");
            return;
        }
    }
}

void alpha_metric(Check& c)
{
    Rng rng(8);
    for (int i = 0; i < 1000000; ++i) {
        const double a = rng.uniform(0.0, 1e8);
        const double b = rng.uniform(0.0, 1e8);
        const double ab = alpha_rating(a, b);
        if (ab != -alpha_rating(b, a) || ab < -2.0 || ab > 2.0) {
            c.fail("antisymmetry/bounds violated");
            return;
        }
    }
    c.expect(alpha_rating(0.0, 0.0) == 0.0, "alpha(0,0) != 0");
    // the published F1 error pair; expected value from direct evaluation of
    // the rating formula on these inputs
    c.expect(std::abs(alpha_rating(1.3184e3, 1.3816e3) - (-0.046814814814814815)) < 1e-5,
             "F1 pair alpha off");
}

void directional_reproduction(Check& c)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> multimodal;
    for (int i = 4; i <= 16; ++i)
        multimodal.push_back("F" + std::to_string(i) + "-analog");

    int positive_seeds = 0;
    for (std::uint64_t master = 1; master <= 10; ++master) {
        const auto records = execute_preset_table1(VariantId::clpso, LanguidArm::both, 10, 100,
                                                   master, kDefaultSuiteSeed, multimodal,
                                                   hw_workers());
        std::vector<double> alphas;
        for (const std::string& fid : multimodal) {
            double sum_pure = 0.0, sum_lang = 0.0;
            long n_pure = 0, n_lang = 0;
            for (const auto& r : records) {
                if (r.function_id != fid || !r.valid)
                    continue;
                if (r.languid) {
                    sum_lang += r.error;
                    ++n_lang;
                } else {
                    sum_pure += r.error;
                    ++n_pure;
                }
            }
            if (n_pure == 0 || n_lang == 0) {
                c.fail("missing arm for " + fid);
                return;
            }
            alphas.push_back(alpha_rating(sum_pure / n_pure, sum_lang / n_lang));
        }
        const AlphaSummary summary = alpha_summary(alphas);
        if (summary.alpha_avg > 0.0)
            ++positive_seeds;
        std::printf("    seed %llu: alpha_avg=%+.4f N+=%d\n",
                    static_cast<unsigned long long>(master), summary.alpha_avg,
                    summary.n_alpha_plus);
    }
    const double mins =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / 60.0;
    std::printf("    positive seeds: %d/10 (%.1f min)\n", positive_seeds, mins);
    c.expect(positive_seeds >= 7, "only " + std::to_string(positive_seeds) +
                                      "/10 seeds show a positive mean alpha (need 7)");
}

void benchmark_integrity(Check& c)
{
    const auto suite = build_suite(10, kDefaultSuiteSeed);
    for (const auto& f : suite) {
        if (std::abs(f.eval(f.optimum) - f.f_star) > 1e-6) {
            c.fail(f.id + ": optimum does not evaluate to f_star");
            return;
        }
        for (double err : f.rotation_orthogonality)
            if (err > 1e-10) {
                c.fail(f.id + ": rotation orthogonality error " + std::to_string(err));
                return;
            }
    }

    std::vector<std::string> floor_failures(suite.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::size_t fi = 0; fi < suite.size(); ++fi) {
        const auto& f = suite[fi];
        Rng rng(derive_seed(2026, f.id, 0, 0));
        std::vector<double> x(f.dim);
        for (int s = 0; s < 100000; ++s) {
            for (int d = 0; d < f.dim; ++d)
                x[d] = rng.uniform(f.bounds.lo[d], f.bounds.hi[d]);
            if (f.eval(x) < f.f_star - 1e-9) {
                floor_failures[fi] = f.id + ": sample below f_star";
                break;
            }
        }
    }
    for (const auto& msg : floor_failures)
        if (!msg.empty()) {
            c.fail(msg);
            return;
        }
}

void partition_identity(Check& c)
{
    // full-suite synthetic reports with randomized outcomes
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<RunRecord> records;
        for (int fi = 1; fi <= 30; ++fi) {
            const double base = rng.uniform(1.0, 5.0);
            const bool exact_tie = rng.uniform01() < 0.2;
            for (bool languid : {false, true}) {
                const double shift = exact_tie ? 0.0 : rng.uniform(-0.5, 0.5);
                for (int run = 0; run < 20; ++run) {
                    RunRecord r;
                    r.function_id = "F" + std::to_string(fi) + "-analog";
                    r.variant = "tvac";
                    r.languid = languid;
                    r.swarm_size = 10;
                    r.w0 = 0.5;
                    r.c = std::nan("");
                    r.version = "gbest";
                    r.config_index = languid ? 1 : 0;
                    r.run_index = run;
                    const double noise =
                        exact_tie ? 0.1 * run : std::abs(rng.gaussian()) * 0.3;
                    r.error = base + (languid ? shift : 0.0) + noise;
                    r.best_fitness = r.error;
                    r.evals = 100;
                    r.valid = true;
                    records.push_back(r);
                }
            }
        }
        const auto rows = make_comparison_rows(records, 0.05);
        if (rows.size() != 30) {
            c.fail("expected 30 comparison rows");
            return;
        }
        const ComparisonCounts counts = summarize_comparisons(rows);
        if (counts.n_l_sig + counts.n_x_sig + counts.n_insig != 30) {
            c.fail("partition identity violated on trial " + std::to_string(trial));
            return;
        }
    }
    c.expect(12 + 9 + 9 == 30, "published summary row arithmetic");
}

} // namespace

int main(int argc, char** argv)
{
    struct Criterion {
        const char* name;
        void (*fn)(Check&);
    };
    const Criterion criteria[] = {
        {"determinism-smoke", determinism_smoke},
        {"grid-cardinality", grid_cardinality},
        {"equation-endpoints", equation_endpoints},
        {"languid-switch", languid_switch},
        {"one-step-oracle", one_step_oracle},
        {"budget-accounting", budget_accounting},
        {"stats-oracles", stats_oracles},
        {"alpha-metric", alpha_metric},
        {"benchmark-integrity", benchmark_integrity},
        {"summary-partition-identity", partition_identity},
        {"directional-reproduction", directional_reproduction},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        if (argc > 1) {
            bool wanted = false;
            for (int i = 1; i < argc; ++i)
                if (std::strcmp(argv[i], cr.name) == 0)
                    wanted = true;
            if (!wanted)
                continue;
        }
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        cr.fn(check);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (check.ok) {
            std::printf("PASS  %-28s (%.1f s)\n", cr.name, secs);
        } else {
            std::printf("FAIL  %-28s (%.1f s): %s\n", cr.name, secs, check.detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
