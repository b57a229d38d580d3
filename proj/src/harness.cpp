#include "lpso/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lpso {

namespace {

TopologyKind parse_version(const std::string& s)
{
    if (s == "gbest")
        return TopologyKind::gbest;
    if (s == "lbest")
        return TopologyKind::lbest;
    throw std::runtime_error("unknown topology version '" + s + "' (want gbest or lbest)");
}

const char* version_name(TopologyKind k)
{
    return k == TopologyKind::gbest ? "gbest" : "lbest";
}

std::string fmt_g(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

} // namespace

ExperimentPlan parse_plan(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("plan: invalid JSON: ") + e.what());
    }

    static const std::set<std::string> known = {
        "variant", "languid", "dim", "suite_seed", "functions",
        "grid",    "runs_per_config", "master_seed", "eval_budget"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key))
            throw std::runtime_error("plan: unknown key '" + key + "'");

    ExperimentPlan plan;
    const std::string vname = j.at("variant").get<std::string>();
    const auto vid = parse_variant(vname);
    if (!vid)
        throw std::runtime_error("plan: unknown variant '" + vname + "'");
    plan.variant = *vid;

    if (j.contains("languid")) {
        const auto& l = j.at("languid");
        if (l.is_boolean())
            plan.arms = l.get<bool>() ? LanguidArm::languid : LanguidArm::pure;
        else if (l.is_string() && l.get<std::string>() == "both")
            plan.arms = LanguidArm::both;
        else
            throw std::runtime_error("plan: languid must be true, false or \"both\"");
    }

    plan.dim = j.at("dim").get<int>();
    if (plan.dim < 2)
        throw std::runtime_error("plan: dim must be >= 2");
    if (j.contains("suite_seed"))
        plan.suite_seed = j.at("suite_seed").get<std::uint64_t>();
    if (j.contains("functions"))
        plan.functions = j.at("functions").get<std::vector<std::string>>();
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        if (g.contains("n"))
            plan.grid.n = g.at("n").get<std::vector<int>>();
        if (g.contains("w0"))
            plan.grid.w0 = g.at("w0").get<std::vector<double>>();
        if (g.contains("c"))
            plan.grid.c = g.at("c").get<std::vector<double>>();
        if (g.contains("version"))
            for (const auto& s : g.at("version").get<std::vector<std::string>>())
                plan.grid.version.push_back(parse_version(s));
    }
    if (j.contains("runs_per_config")) {
        plan.runs_per_config = j.at("runs_per_config").get<int>();
        if (plan.runs_per_config < 1)
            throw std::runtime_error("plan: runs_per_config must be >= 1");
    }
    if (j.contains("master_seed"))
        plan.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("eval_budget")) {
        plan.eval_budget_override = j.at("eval_budget").get<long>();
        if (plan.eval_budget_override < 1)
            throw std::runtime_error("plan: eval_budget must be >= 1");
    }
    return plan;
}

ExperimentPlan load_plan(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open plan '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_plan(ss.str());
}

bool config_less(const ConfigTuple& a, const ConfigTuple& b)
{
    if (a.swarm_size != b.swarm_size)
        return a.swarm_size < b.swarm_size;
    if (a.w0 != b.w0)
        return a.w0 < b.w0;
    const double ca = a.uses_c ? a.c : -1.0;
    const double cb = b.uses_c ? b.c : -1.0;
    if (ca != cb)
        return ca < cb;
    const int va = a.uses_version ? (a.version == TopologyKind::gbest ? 0 : 1) : -1;
    const int vb = b.uses_version ? (b.version == TopologyKind::gbest ? 0 : 1) : -1;
    return va < vb;
}

std::string config_string(const ConfigTuple& c)
{
    std::ostringstream out;
    out << "n=" << c.swarm_size << " w0=" << fmt_g(c.w0)
        << " c=" << (c.uses_c ? fmt_g(c.c) : "-")
        << " version=" << (c.uses_version ? version_name(c.version) : "-");
    return out.str();
}

std::vector<ConfigTuple> expand_grid(const ExperimentPlan& plan)
{
    const bool uses_c = plan.variant != VariantId::tvac;
    const bool uses_version = plan.variant == VariantId::ldiw ||
                              plan.variant == VariantId::tvac ||
                              plan.variant == VariantId::cpso;

    if (plan.grid.n.empty())
        throw std::runtime_error("expand_grid: empty n axis");
    if (plan.grid.w0.empty())
        throw std::runtime_error("expand_grid: empty w0 axis");
    if (uses_c && plan.grid.c.empty())
        throw std::runtime_error("expand_grid: empty c axis");
    if (uses_version && plan.grid.version.empty())
        throw std::runtime_error("expand_grid: empty version axis");

    const std::vector<double> c_axis = uses_c ? plan.grid.c : std::vector<double>{0.0};
    const std::vector<TopologyKind> v_axis =
        uses_version ? plan.grid.version : std::vector<TopologyKind>{TopologyKind::gbest};

    std::vector<ConfigTuple> out;
    out.reserve(plan.grid.n.size() * plan.grid.w0.size() * c_axis.size() * v_axis.size());
    for (int n : plan.grid.n)
        for (double w0 : plan.grid.w0)
            for (double c : c_axis)
                for (TopologyKind v : v_axis)
                    out.push_back({n, w0, c, v, uses_c, uses_version});
    return out;
}

std::uint64_t fnv1a64(const unsigned char* data, std::size_t len)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view function_id,
                          std::uint64_t config_index, std::uint64_t run_index)
{
    std::vector<unsigned char> buf;
    buf.reserve(function_id.size() + 24);
    for (char ch : function_id)
        buf.push_back(static_cast<unsigned char>(ch));
    auto push_le64 = [&buf](std::uint64_t v) {
        for (int i = 0; i < 8; ++i)
            buf.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
    };
    push_le64(master);
    push_le64(config_index);
    push_le64(run_index);
    return fnv1a64(buf.data(), buf.size());
}

RunRecord execute_run(VariantId variant, bool languid, const ConfigTuple& config,
                      int config_index, int run_index, const BenchmarkFunction& function,
                      long eval_budget, std::uint64_t master_seed)
{
    RunRecord rec;
    rec.function_id = function.id;
    rec.variant = variant_name(variant);
    rec.languid = languid;
    rec.swarm_size = config.swarm_size;
    rec.w0 = config.w0;
    rec.c = config.uses_c ? config.c : std::nan("");
    rec.version = config.uses_version ? version_name(config.version) : "-";
    rec.config_index = config_index;
    rec.run_index = run_index;
    rec.seed = derive_seed(master_seed, function.id, static_cast<std::uint64_t>(config_index),
                           static_cast<std::uint64_t>(run_index));

    RunConfig rc;
    rc.variant = variant;
    rc.languid = languid;
    rc.swarm_size = config.swarm_size;
    rc.w0 = config.w0;
    rc.c = config.uses_c ? config.c : 1.5;
    rc.version = config.version;
    rc.dim = function.dim;
    rc.eval_max = eval_budget;
    rc.bounds = function.bounds;

    const auto t0 = std::chrono::steady_clock::now();
    try {
        const RunResult res = run_variant(rc, function.eval, rec.seed);
        rec.best_fitness = res.best_fitness;
        rec.evals = res.evals;
        const double e = res.best_fitness - function.f_star;
        if (e < -1e-9 || std::isnan(e)) {
            rec.valid = false;
            rec.best_fitness = 0.0;
            rec.error = 0.0;
        } else {
            rec.error = std::max(e, 0.0);
        }
    } catch (const std::exception&) {
        rec.valid = false;
        rec.best_fitness = 0.0;
        rec.error = 0.0;
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

namespace {

struct WorkPlan {
    VariantId variant_id = VariantId::tvac;
    std::vector<const BenchmarkFunction*> funcs;
    std::vector<ConfigTuple> configs;
    std::vector<bool> arm_languid; // in execution order: pure first
    int runs = 0;
    long budget = 0;
    std::uint64_t master = 0;
};

// enumeration order (function, arm+config, run) is the documented record
// order; slot index == record position, so any scheduling yields the same
// output
RunRecord work_item(const WorkPlan& wp, long idx)
{
    const long runs = wp.runs;
    const long n_cfg = static_cast<long>(wp.configs.size());
    const long per_arm = n_cfg * runs;
    const long per_func = static_cast<long>(wp.arm_languid.size()) * per_arm;

    const long f = idx / per_func;
    const long rem = idx % per_func;
    const long arm = rem / per_arm;
    const long rem2 = rem % per_arm;
    const long cfg = rem2 / runs;
    const long run = rem2 % runs;

    const int config_index = static_cast<int>(arm * n_cfg + cfg);
    return execute_run(wp.variant_id, wp.arm_languid[arm], wp.configs[cfg], config_index,
                       static_cast<int>(run), *wp.funcs[f], wp.budget, wp.master);
}

std::vector<RunRecord> run_worklist(const WorkPlan& wp, int workers)
{
    const long total = static_cast<long>(wp.funcs.size()) *
                       static_cast<long>(wp.arm_languid.size()) *
                       static_cast<long>(wp.configs.size()) * wp.runs;
    std::vector<RunRecord> out(total);
    if (total == 0)
        return out;

#ifdef _OPENMP
    if (workers > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (long i = 0; i < total; ++i)
            out[i] = work_item(wp, i);
        return out;
    }
#else
    (void)workers;
#endif
    for (long i = 0; i < total; ++i)
        out[i] = work_item(wp, i);
    return out;
}

} // namespace

std::vector<RunRecord> execute_plan(const ExperimentPlan& plan, int workers)
{
    if (workers < 1)
        throw std::invalid_argument("execute_plan: need workers >= 1");
    if (plan.functions.empty())
        return {};

    const std::vector<BenchmarkFunction> suite = build_suite(plan.dim, plan.suite_seed);

    WorkPlan wp;
    wp.variant_id = plan.variant;
    for (const std::string& id : plan.functions) {
        const auto it = std::find_if(suite.begin(), suite.end(),
                                     [&](const BenchmarkFunction& f) { return f.id == id; });
        if (it == suite.end())
            throw std::runtime_error("plan: unknown function '" + id + "'");
        wp.funcs.push_back(&*it);
    }
    wp.configs = expand_grid(plan);
    if (plan.arms == LanguidArm::pure)
        wp.arm_languid = {false};
    else if (plan.arms == LanguidArm::languid)
        wp.arm_languid = {true};
    else
        wp.arm_languid = {false, true};
    wp.runs = plan.runs_per_config;
    wp.budget = plan.eval_budget_override > 0 ? plan.eval_budget_override : 10000L * plan.dim;
    wp.master = plan.master_seed;

    return run_worklist(wp, workers);
}

std::vector<RunRecord> execute_plan_serial(const ExperimentPlan& plan)
{
    return execute_plan(plan, 1);
}

GridAxes table3_axes(VariantId, int dim)
{
    GridAxes g;
    switch (dim) {
    case 10: g.n = {10, 15, 20, 25, 30, 40, 50, 60, 80, 100}; break;
    case 20: g.n = {20, 25, 30, 40, 50, 60, 80, 100, 120, 140}; break;
    case 50: g.n = {30, 40, 50, 60, 80, 100, 120, 140, 170, 200}; break;
    default: throw std::invalid_argument("table3_axes: dims are 10, 20, 50");
    }
    g.w0 = {0.50, 0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95, 1.00};
    g.c = {0.50, 0.75, 1.00, 1.25, 1.50, 1.75, 2.00};
    g.version = {TopologyKind::gbest, TopologyKind::lbest};
    return g;
}

namespace {

constexpr TopologyKind G = TopologyKind::gbest;
constexpr TopologyKind L = TopologyKind::lbest;

// Best performing standard-PSO parameters per function, for D = 10, 20, 50
const Table1Row kTable1[30][3] = {
    {{30, 0.65, 1.00, G}, {40, 0.80, 0.75, G}, {30, 0.70, 1.00, L}},   // F1
    {{100, 0.75, 0.50, L}, {20, 0.50, 1.25, L}, {100, 0.80, 0.75, L}}, // F2
    {{80, 0.60, 1.00, G}, {60, 0.65, 1.00, G}, {30, 0.65, 0.75, L}},   // F3
    {{10, 0.70, 1.25, G}, {30, 0.85, 0.75, G}, {120, 0.55, 1.25, G}},  // F4
    {{25, 0.50, 1.00, L}, {30, 0.55, 1.00, G}, {60, 0.50, 1.25, G}},   // F5
    {{60, 0.60, 1.00, L}, {120, 0.65, 1.00, L}, {170, 0.55, 1.25, L}}, // F6
    {{80, 0.55, 0.75, L}, {120, 0.65, 1.00, L}, {80, 0.60, 1.25, L}},  // F7
    {{40, 0.55, 1.25, L}, {60, 0.55, 1.25, L}, {120, 0.50, 1.25, L}},  // F8
    {{40, 0.60, 1.00, L}, {60, 0.70, 0.75, L}, {60, 0.50, 1.25, L}},   // F9
    {{20, 0.55, 1.50, L}, {120, 0.55, 1.75, G}, {200, 0.60, 1.75, G}}, // F10
    {{30, 0.65, 0.75, L}, {120, 0.60, 1.75, G}, {200, 0.75, 1.25, G}}, // F11
    {{25, 0.60, 1.50, G}, {80, 0.50, 1.75, G}, {60, 0.50, 1.75, G}},   // F12
    {{100, 0.50, 1.00, L}, {120, 0.55, 1.00, L}, {200, 0.50, 1.25, L}}, // F13
    {{100, 0.50, 1.50, L}, {140, 0.60, 1.00, L}, {200, 0.55, 1.25, L}}, // F14
    {{100, 0.60, 1.25, G}, {100, 0.65, 1.50, G}, {200, 0.60, 1.50, G}}, // F15
    {{25, 0.85, 0.50, L}, {25, 0.65, 1.75, G}, {200, 0.85, 0.50, G}},  // F16
    {{30, 0.80, 0.50, G}, {50, 0.85, 0.50, G}, {40, 0.80, 0.50, L}},   // F17
    {{100, 0.50, 1.25, L}, {40, 0.70, 0.75, L}, {200, 0.75, 0.75, L}}, // F18
    {{60, 0.55, 1.00, L}, {100, 0.75, 0.75, L}, {60, 0.70, 1.25, G}},  // F19
    {{100, 0.55, 1.25, L}, {60, 0.65, 1.00, L}, {30, 0.80, 0.75, L}},  // F20
    {{30, 0.70, 1.25, L}, {120, 0.65, 1.00, L}, {30, 0.80, 0.50, L}},  // F21
    {{30, 0.55, 1.50, L}, {60, 0.60, 1.00, L}, {80, 0.70, 0.75, L}},   // F22
    {{40, 0.50, 1.00, G}, {40, 0.50, 1.25, L}, {100, 0.50, 1.00, L}},  // F23
    {{60, 0.70, 0.75, L}, {140, 0.60, 1.00, L}, {200, 0.85, 0.50, L}}, // F24
    {{25, 0.90, 0.50, L}, {140, 0.70, 0.50, L}, {170, 0.80, 0.50, L}}, // F25
    {{80, 0.55, 0.75, L}, {140, 0.50, 1.00, L}, {200, 0.75, 1.25, L}}, // F26
    {{100, 0.85, 1.25, L}, {140, 0.65, 1.00, L}, {200, 0.55, 1.25, L}}, // F27
    {{100, 0.85, 0.75, L}, {120, 0.65, 1.25, L}, {140, 0.50, 1.50, L}}, // F28
    {{100, 0.55, 0.50, L}, {120, 0.50, 1.25, L}, {120, 0.50, 0.75, L}}, // F29
    {{40, 0.50, 1.75, L}, {30, 0.75, 0.75, L}, {100, 0.80, 0.75, L}},  // F30
};

} // namespace

Table1Row table1_params(int function_index, int dim)
{
    if (function_index < 0 || function_index >= 30)
        throw std::invalid_argument("table1_params: function index out of range");
    int col;
    switch (dim) {
    case 10: col = 0; break;
    case 20: col = 1; break;
    case 50: col = 2; break;
    default: throw std::invalid_argument("table1_params: dims are 10, 20, 50");
    }
    return kTable1[function_index][col];
}

std::vector<RunRecord> execute_preset_table1(VariantId variant, LanguidArm arms, int dim,
                                             int runs_per_config, std::uint64_t master_seed,
                                             std::uint64_t suite_seed,
                                             const std::vector<std::string>& function_filter,
                                             int workers)
{
    if (workers < 1 || runs_per_config < 1)
        throw std::invalid_argument("execute_preset_table1: bad workers/runs");

    const std::vector<BenchmarkFunction> suite = build_suite(dim, suite_seed);
    std::vector<int> indices;
    if (function_filter.empty()) {
        indices.resize(30);
        for (int i = 0; i < 30; ++i)
            indices[i] = i;
    } else {
        for (const std::string& id : function_filter) {
            const auto it = std::find_if(suite.begin(), suite.end(),
                                         [&](const BenchmarkFunction& f) { return f.id == id; });
            if (it == suite.end())
                throw std::runtime_error("preset: unknown function '" + id + "'");
            indices.push_back(static_cast<int>(it - suite.begin()));
        }
    }

    const bool uses_c = variant != VariantId::tvac;
    const bool uses_version = variant == VariantId::ldiw || variant == VariantId::tvac ||
                              variant == VariantId::cpso;
    std::vector<bool> arm_languid;
    if (arms == LanguidArm::pure)
        arm_languid = {false};
    else if (arms == LanguidArm::languid)
        arm_languid = {true};
    else
        arm_languid = {false, true};

    const long budget = 10000L * dim;
    const long per_func = static_cast<long>(arm_languid.size()) * runs_per_config;
    const long total = static_cast<long>(indices.size()) * per_func;
    std::vector<RunRecord> out(total);

    auto run_one = [&](long i) {
        const long f = i / per_func;
        const long rem = i % per_func;
        const long arm = rem / runs_per_config;
        const long run = rem % runs_per_config;
        const Table1Row row = table1_params(indices[f], dim);
        const ConfigTuple cfg{row.n, row.w0, row.c, row.version, uses_c, uses_version};
        out[i] = execute_run(variant, arm_languid[arm], cfg, static_cast<int>(arm),
                             static_cast<int>(run), suite[indices[f]], budget, master_seed);
    };

#ifdef _OPENMP
    if (workers > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (long i = 0; i < total; ++i)
            run_one(i);
        return out;
    }
#endif
    for (long i = 0; i < total; ++i)
        run_one(i);
    return out;
}

namespace {

struct ConfigKey {
    int n;
    double w0, c;
    std::string version;

    bool operator<(const ConfigKey& o) const
    {
        if (n != o.n)
            return n < o.n;
        if (w0 != o.w0)
            return w0 < o.w0;
        if (c != o.c)
            return c < o.c;
        return version < o.version;
    }
};

ConfigKey key_of(const RunRecord& r)
{
    return {r.swarm_size, r.w0, std::isnan(r.c) ? -1.0 : r.c, r.version};
}

ConfigTuple tuple_of(const RunRecord& r)
{
    ConfigTuple t;
    t.swarm_size = r.swarm_size;
    t.w0 = r.w0;
    t.uses_c = !std::isnan(r.c);
    t.c = t.uses_c ? r.c : 0.0;
    t.uses_version = r.version != "-";
    t.version = r.version == "lbest" ? TopologyKind::lbest : TopologyKind::gbest;
    return t;
}

} // namespace

std::map<std::pair<std::string, bool>, BestSelection>
select_best(const std::vector<RunRecord>& records)
{
    std::map<std::pair<std::string, bool>, std::map<ConfigKey, std::vector<double>>> groups;
    std::map<std::pair<std::string, bool>, std::map<ConfigKey, ConfigTuple>> tuples;
    for (const auto& r : records) {
        if (!r.valid)
            continue;
        const auto gk = std::make_pair(r.function_id, r.languid);
        const ConfigKey ck = key_of(r);
        groups[gk][ck].push_back(r.error);
        tuples[gk].emplace(ck, tuple_of(r));
    }

    std::map<std::pair<std::string, bool>, BestSelection> out;
    for (auto& [gk, by_config] : groups) {
        bool have = false;
        double best_mean = 0.0;
        ConfigKey best_key{};
        for (const auto& [ck, errors] : by_config) {
            double mean = 0.0;
            for (double e : errors)
                mean += e;
            mean /= static_cast<double>(errors.size());
            if (!have || mean < best_mean ||
                (mean == best_mean && config_less(tuples[gk][ck], tuples[gk][best_key]))) {
                have = true;
                best_mean = mean;
                best_key = ck;
            }
        }
        BestSelection sel;
        sel.config = tuples[gk][best_key];
        sel.summary.values = by_config[best_key];
        sel.summary.mean = best_mean;
        out.emplace(gk, std::move(sel));
    }
    return out;
}

std::vector<ReportRow> make_report(const std::vector<RunRecord>& records, double level)
{
    // function order: first appearance in the records
    std::vector<std::string> order;
    for (const auto& r : records)
        if (std::find(order.begin(), order.end(), r.function_id) == order.end())
            order.push_back(r.function_id);

    const auto best = select_best(records);
    std::vector<ReportRow> rows;
    rows.reserve(order.size());
    for (const std::string& fid : order) {
        const auto px = best.find({fid, false});
        const auto pl = best.find({fid, true});
        if (px == best.end())
            throw std::runtime_error("report: function '" + fid + "' is missing the pure arm");
        if (pl == best.end())
            throw std::runtime_error("report: function '" + fid + "' is missing the languid arm");

        ReportRow row;
        row.function_id = fid;
        row.config_x = px->second.config;
        row.config_xl = pl->second.config;
        row.cmp = compare_pair(px->second.summary, pl->second.summary, level);
        row.cmp.function_id = fid;
        row.cmp.config_x = config_string(row.config_x);
        row.cmp.config_xl = config_string(row.config_xl);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ComparisonRow> make_comparison_rows(const std::vector<RunRecord>& records, double level)
{
    std::vector<ComparisonRow> out;
    for (auto& row : make_report(records, level))
        out.push_back(std::move(row.cmp));
    return out;
}

namespace {

std::string csv_config_fields(const ConfigTuple& c)
{
    std::ostringstream out;
    out << c.swarm_size << "," << fmt_g(c.w0) << "," << (c.uses_c ? fmt_g(c.c) : "-") << ","
        << (c.uses_version ? version_name(c.version) : "-");
    return out.str();
}

std::string fmt_eps(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string report_csv(const std::vector<ReportRow>& rows)
{
    std::ostringstream out;
    out << "function,n_X,w0_X,c_X,version_X,eps_X,n_XL,w0_XL,c_XL,version_XL,eps_XL,"
           "alpha,H1,test,p,significant\n";
    for (const auto& row : rows) {
        out << row.function_id << "," << csv_config_fields(row.config_x) << ","
            << fmt_eps(row.cmp.eps_x) << "," << csv_config_fields(row.config_xl) << ","
            << fmt_eps(row.cmp.eps_xl) << "," << fmt_eps(row.cmp.alpha) << ","
            << hypothesis_name(row.cmp.h1) << "," << test_name(row.cmp.test) << ",";
        if (row.cmp.test == TestKind::none)
            out << "-";
        else
            out << fmt_eps(row.cmp.p);
        out << "," << (row.cmp.significant ? "true" : "false") << "\n";
    }
    return out.str();
}

std::string report_text(const std::vector<ReportRow>& rows)
{
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-14s %-30s %-12s %-30s %-12s %9s %-4s %-9s %9s %s\n",
                  "function", "best X", "eps_X", "best XL", "eps_XL", "alpha", "H1", "test", "p",
                  "sig");
    out << line;
    std::vector<double> alphas;
    for (const auto& row : rows) {
        std::snprintf(line, sizeof(line), "%-14s %-30s %-12s %-30s %-12s %9.4f %-4s %-9s %9s %s\n",
                      row.function_id.c_str(), config_string(row.config_x).c_str(),
                      fmt_eps(row.cmp.eps_x).c_str(), config_string(row.config_xl).c_str(),
                      fmt_eps(row.cmp.eps_xl).c_str(), row.cmp.alpha, hypothesis_name(row.cmp.h1),
                      test_name(row.cmp.test),
                      row.cmp.test == TestKind::none ? "-" : fmt_eps(row.cmp.p).c_str(),
                      row.cmp.significant ? "yes" : "no");
        out << line;
        alphas.push_back(row.cmp.alpha);
    }

    std::vector<ComparisonRow> cs;
    for (const auto& r : rows)
        cs.push_back(r.cmp);
    const ComparisonCounts counts = summarize_comparisons(cs);
    const AlphaSummary asum = alpha_summary(alphas);
    std::snprintf(line, sizeof(line),
                  "\nsummary: alpha_avg=%.4f N_L=%d N_L_sig=%d N_X=%d N_X_sig=%d N_0=%d (of %zu)\n",
                  asum.alpha_avg, counts.n_l, counts.n_l_sig, counts.n_x, counts.n_x_sig,
                  counts.n_insig, rows.size());
    out << line;
    return out.str();
}

std::vector<double> alpha_per_config_pair(const std::vector<RunRecord>& records)
{
    std::vector<std::string> order;
    for (const auto& r : records)
        if (std::find(order.begin(), order.end(), r.function_id) == order.end())
            order.push_back(r.function_id);

    std::map<std::string, std::map<ConfigKey, std::pair<std::vector<double>, std::vector<double>>>>
        pairs;
    for (const auto& r : records) {
        if (!r.valid)
            continue;
        auto& slot = pairs[r.function_id][key_of(r)];
        (r.languid ? slot.second : slot.first).push_back(r.error);
    }

    std::vector<double> alphas;
    for (const std::string& fid : order) {
        for (const auto& [ck, slot] : pairs[fid]) {
            const auto& [pure, languid] = slot;
            if (pure.empty() || languid.empty())
                continue;
            double mx = 0.0, ml = 0.0;
            for (double e : pure)
                mx += e;
            for (double e : languid)
                ml += e;
            mx /= static_cast<double>(pure.size());
            ml /= static_cast<double>(languid.size());
            alphas.push_back(alpha_rating(mx, ml));
        }
    }
    return alphas;
}

} // namespace lpso
