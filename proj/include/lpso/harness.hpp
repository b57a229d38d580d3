#ifndef LPSO_HARNESS_HPP
#define LPSO_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lpso/benchfuncs.hpp"
#include "lpso/records.hpp"
#include "lpso/stats.hpp"
#include "lpso/variants.hpp"

namespace lpso {

constexpr std::uint64_t kDefaultSuiteSeed = 42;

struct GridAxes {
    std::vector<int> n;
    std::vector<double> w0;
    std::vector<double> c;
    std::vector<TopologyKind> version;
};

enum class LanguidArm { pure, languid, both };

struct ExperimentPlan {
    VariantId variant = VariantId::tvac;
    LanguidArm arms = LanguidArm::both;
    int dim = 10;
    std::uint64_t suite_seed = kDefaultSuiteSeed;
    std::vector<std::string> functions; // explicit list; empty runs nothing
    GridAxes grid;
    int runs_per_config = 1;
    std::uint64_t master_seed = 0;
    long eval_budget_override = 0; // 0 = the 1e4*dim rule; anything else is off-protocol
};

ExperimentPlan parse_plan(const std::string& json_text);
ExperimentPlan load_plan(const std::string& path);

struct ConfigTuple {
    int swarm_size = 0;
    double w0 = 0.0;
    double c = 0.0;
    TopologyKind version = TopologyKind::gbest;
    bool uses_c = true;
    bool uses_version = true;
};

// lexicographic over (n, w0, c, version), gbest before lbest
bool config_less(const ConfigTuple& a, const ConfigTuple& b);
std::string config_string(const ConfigTuple& c);

// Cartesian product of the variant's applicable axes, in lexicographic
// order (n outer, then w0, then c, then version). tvac ignores the c axis;
// dms and clpso ignore version. Throws on an empty applicable axis.
std::vector<ConfigTuple> expand_grid(const ExperimentPlan& plan);

// 64-bit FNV-1a over utf8(function_id) + le64(master) + le64(config_index)
// + le64(run_index); stable across platforms and languages.
std::uint64_t fnv1a64(const unsigned char* data, std::size_t len);
std::uint64_t derive_seed(std::uint64_t master, std::string_view function_id,
                          std::uint64_t config_index, std::uint64_t run_index);

// One budgeted run; never throws: an objective failure yields a record with
// valid=false.
RunRecord execute_run(VariantId variant, bool languid, const ConfigTuple& config,
                      int config_index, int run_index, const BenchmarkFunction& function,
                      long eval_budget, std::uint64_t master_seed);

// All (function x arm x config x run) records, ordered by (function as
// listed, config index, run index); identical output for any worker count.
std::vector<RunRecord> execute_plan(const ExperimentPlan& plan, int workers);
std::vector<RunRecord> execute_plan_serial(const ExperimentPlan& plan); // reference path

// Table 3 grids for detailed benchmark testing (dims 10, 20, 50)
GridAxes table3_axes(VariantId variant, int dim);

// Table 1 best-performing standard-PSO parameters per function and dimension
struct Table1Row {
    int n;
    double w0;
    double c;
    TopologyKind version;
};
Table1Row table1_params(int function_index, int dim); // function_index 0-based (F1..F30)

// Preliminary-test protocol: per function, the Table 1 parameters for that
// function/dimension, pure + languid arms (config indices 0 and 1).
std::vector<RunRecord> execute_preset_table1(VariantId variant, LanguidArm arms, int dim,
                                             int runs_per_config, std::uint64_t master_seed,
                                             std::uint64_t suite_seed,
                                             const std::vector<std::string>& function_filter,
                                             int workers);

struct BestSelection {
    ConfigTuple config;
    SampleSummary summary;
};

// Per (function, languid) group: the config with the smallest mean error
// over its runs, ties broken by config_less. Invalid records are skipped.
std::map<std::pair<std::string, bool>, BestSelection>
select_best(const std::vector<RunRecord>& records);

struct ReportRow {
    std::string function_id;
    ConfigTuple config_x, config_xl;
    ComparisonRow cmp;
};

// best-vs-best pipeline: one row per function, in order of first appearance.
// Throws when a function is missing one arm.
std::vector<ReportRow> make_report(const std::vector<RunRecord>& records, double level = 0.05);
std::vector<ComparisonRow> make_comparison_rows(const std::vector<RunRecord>& records,
                                                double level = 0.05);

std::string report_csv(const std::vector<ReportRow>& rows);
std::string report_text(const std::vector<ReportRow>& rows);

// per-(function, config) alpha values across arms, for histogramming.
// Order: functions by first appearance, configs ascending.
std::vector<double> alpha_per_config_pair(const std::vector<RunRecord>& records);

} // namespace lpso

#endif
