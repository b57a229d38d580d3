// Command-line front end: plan execution, best-vs-best reports, alpha
// histograms, and suite manifests.
//
// Exit codes: 0 success, 1 user error, 2 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "lpso/benchfuncs.hpp"
#include "lpso/harness.hpp"
#include "lpso/records.hpp"
#include "lpso/stats.hpp"

namespace {

int default_workers()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<lpso::RunRecord> read_all_records(const std::vector<std::string>& paths)
{
    std::vector<lpso::RunRecord> all;
    for (const std::string& p : paths) {
        std::vector<lpso::RunRecord> part = lpso::read_records(p);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

void write_text_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output '" + path + "'");
    out << text;
}

struct UserError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cmd_run(const std::string& plan_path, const std::string& preset, const std::string& variant,
            int dim, const std::vector<std::string>& functions, const std::string& out_path,
            int workers, std::uint64_t seed, bool seed_given, int runs, bool runs_given,
            std::uint64_t suite_seed, bool no_timing)
{
    std::vector<lpso::RunRecord> records;
    if (!preset.empty()) {
        if (preset != "table1")
            throw UserError("unknown preset '" + preset + "' (available: table1)");
        const auto vid = lpso::parse_variant(variant);
        if (!vid)
            throw UserError("--preset needs --variant (ldiw|tvac|cpso|dms|clpso)");
        records = lpso::execute_preset_table1(*vid, lpso::LanguidArm::both, dim,
                                              runs_given ? runs : 100, seed, suite_seed,
                                              functions, workers);
    } else {
        if (plan_path.empty())
            throw UserError("run needs --plan or --preset");
        lpso::ExperimentPlan plan;
        try {
            plan = lpso::load_plan(plan_path);
        } catch (const std::exception& e) {
            throw UserError(std::string(e.what()));
        }
        if (seed_given)
            plan.master_seed = seed;
        if (runs_given)
            plan.runs_per_config = runs;
        records = lpso::execute_plan(plan, workers);
    }

    if (no_timing)
        for (auto& r : records)
            r.wall_ms = 0.0;

    lpso::write_records(out_path, records);

    long invalid = 0;
    for (const auto& r : records)
        if (!r.valid)
            ++invalid;
    std::cout << "wrote " << records.size() << " records to " << out_path;
    if (invalid > 0)
        std::cout << " (" << invalid << " failed runs flagged invalid)";
    std::cout << "\n";
    return invalid > 0 ? 2 : 0;
}

int cmd_report(const std::vector<std::string>& record_paths, double level,
               const std::string& format, const std::string& out_path)
{
    std::vector<lpso::RunRecord> records;
    try {
        records = read_all_records(record_paths);
    } catch (const std::exception& e) {
        throw UserError(e.what());
    }
    if (records.empty())
        throw UserError("no records");

    std::vector<lpso::ReportRow> rows;
    try {
        rows = lpso::make_report(records, level);
    } catch (const std::exception& e) {
        throw UserError(e.what());
    }
    write_text_output(out_path, format == "text" ? lpso::report_text(rows)
                                                 : lpso::report_csv(rows));
    return 0;
}

int cmd_hist(const std::vector<std::string>& record_paths, int bins, const std::string& out_path)
{
    std::vector<lpso::RunRecord> records;
    try {
        records = read_all_records(record_paths);
    } catch (const std::exception& e) {
        throw UserError(e.what());
    }
    const std::vector<double> alphas = lpso::alpha_per_config_pair(records);
    if (alphas.empty())
        throw UserError("no (function, config) pairs with both arms present");

    std::string csv = "bin_lo,bin_hi,count\n";
    for (const auto& bin : lpso::histogram_alpha(alphas, bins)) {
        char line[80];
        std::snprintf(line, sizeof(line), "%g,%g,%ld\n", bin.lo, bin.hi, bin.count);
        csv += line;
    }
    write_text_output(out_path, csv);
    return 0;
}

int cmd_suite(int dim, std::uint64_t seed, const std::string& out_path)
{
    std::vector<lpso::BenchmarkFunction> suite;
    try {
        suite = lpso::build_suite(dim, seed);
    } catch (const std::exception& e) {
        throw UserError(e.what());
    }
    write_text_output(out_path, lpso::suite_manifest_json(suite, dim, seed) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"languid particle dynamics PSO benchmark toolkit"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "execute an experiment plan or preset");
    std::string plan_path, preset, variant, out_path = "records.jsonl";
    int dim = 10;
    std::vector<std::string> functions;
    int workers = default_workers();
    std::uint64_t seed = 0, suite_seed = lpso::kDefaultSuiteSeed;
    int runs = 100;
    bool no_timing = false;
    run->add_option("--plan", plan_path, "plan file (JSON)");
    run->add_option("--preset", preset, "built-in protocol preset (table1)");
    run->add_option("--variant", variant, "variant for --preset");
    run->add_option("--dim", dim, "dimension for --preset");
    run->add_option("--functions", functions, "function ids for --preset (default: all 30)");
    run->add_option("--out", out_path, "output records file (JSON lines)");
    run->add_option("--workers", workers, "parallel workers")->envname("PSO_WORKERS");
    auto* seed_opt = run->add_option("--seed", seed, "master seed (overrides plan)");
    auto* runs_opt = run->add_option("--runs", runs, "runs per config (overrides plan)");
    run->add_option("--suite-seed", suite_seed, "benchmark suite seed for --preset");
    run->add_flag("--no-timing", no_timing, "zero the wall_ms field for byte-stable output");

    // report
    auto* report = app.add_subcommand("report", "best-vs-best comparison tables");
    std::vector<std::string> rec_paths;
    double level = 0.05;
    std::string format = "csv", report_out;
    report->add_option("--records", rec_paths, "records files")->required();
    report->add_option("--level", level, "significance level");
    report->add_option("--format", format, "csv or text")
        ->check(CLI::IsMember({"csv", "text"}));
    report->add_option("--out", report_out, "output path (default stdout)");

    // hist
    auto* hist = app.add_subcommand("hist", "alpha histogram over (function, config) pairs");
    std::vector<std::string> hist_paths;
    int bins = 20;
    std::string hist_out;
    hist->add_option("--records", hist_paths, "records files")->required();
    hist->add_option("--bins", bins, "bin count over [-2, 2]");
    hist->add_option("--out", hist_out, "output CSV path")->required();

    // suite
    auto* suite = app.add_subcommand("suite", "export the benchmark suite manifest");
    int suite_dim = 10;
    std::uint64_t manifest_seed = lpso::kDefaultSuiteSeed;
    std::string suite_out;
    suite->add_option("--dim", suite_dim, "dimension")->required();
    suite->add_option("--seed", manifest_seed, "suite seed");
    suite->add_option("--out", suite_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (run->parsed())
            return cmd_run(plan_path, preset, variant, dim, functions, out_path, workers, seed,
                           seed_opt->count() > 0, runs, runs_opt->count() > 0, suite_seed,
                           no_timing);
        if (report->parsed())
            return cmd_report(rec_paths, level, format, report_out);
        if (hist->parsed())
            return cmd_hist(hist_paths, bins, hist_out);
        if (suite->parsed())
            return cmd_suite(suite_dim, manifest_seed, suite_out);
    } catch (const UserError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
