#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "lpso/records.hpp"

namespace {

std::string cli_path()
{
    const char* p = std::getenv("LPSO_CLI");
    REQUIRE(p != nullptr);
    return p;
}

int run_cli(const std::string& args)
{
    const std::string cmd = cli_path() + " " + args + " >/tmp/cli_out.txt 2>/tmp/cli_err.txt";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path);
    out << content;
}

const char* kSmokePlan = R"({
    "variant": "tvac",
    "languid": "both",
    "dim": 4,
    "functions": ["F1-analog"],
    "grid": {"n": [8], "w0": [0.6], "version": ["gbest"]},
    "runs_per_config": 3,
    "master_seed": 2,
    "eval_budget": 1500
})";

} // namespace

TEST_CASE("run: a tiny plan writes the expected number of records")
{
    write_file("/tmp/cli_plan.json", kSmokePlan);
    CHECK(run_cli("run --plan /tmp/cli_plan.json --out /tmp/cli_rec.jsonl --workers 2") == 0);
    const auto records = lpso::read_records("/tmp/cli_rec.jsonl");
    CHECK(records.size() == 6); // 1 function x 2 arms x 1 config x 3 runs
}

TEST_CASE("run: identical flags with --no-timing give byte-identical files")
{
    write_file("/tmp/cli_plan.json", kSmokePlan);
    CHECK(run_cli("run --plan /tmp/cli_plan.json --out /tmp/cli_a.jsonl --workers 1 --no-timing") == 0);
    CHECK(run_cli("run --plan /tmp/cli_plan.json --out /tmp/cli_b.jsonl --workers 2 --no-timing") == 0);
    CHECK(slurp("/tmp/cli_a.jsonl") == slurp("/tmp/cli_b.jsonl"));
    CHECK(!slurp("/tmp/cli_a.jsonl").empty());
}

TEST_CASE("run: a bad plan path names the path and exits 1")
{
    CHECK(run_cli("run --plan /tmp/no_such_plan.json --out /tmp/x.jsonl") == 1);
    CHECK(slurp("/tmp/cli_err.txt").find("/tmp/no_such_plan.json") != std::string::npos);
}

TEST_CASE("unknown flags are rejected with usage text")
{
    CHECK(run_cli("run --blorp 3") == 1);
    CHECK(run_cli("frobnicate") == 1);
}

TEST_CASE("report: CSV columns and all-tie summary")
{
    // synthetic all-tie records: both arms identical errors
    std::vector<lpso::RunRecord> records;
    for (const char* fid : {"F1-analog", "F2-analog"}) {
        for (bool languid : {false, true}) {
            for (int run = 0; run < 3; ++run) {
                lpso::RunRecord r;
                r.function_id = fid;
                r.variant = "tvac";
                r.languid = languid;
                r.swarm_size = 10;
                r.w0 = 0.5;
                r.c = std::nan("");
                r.version = "gbest";
                r.config_index = languid ? 1 : 0;
                r.run_index = run;
                r.best_fitness = 1.0;
                r.error = 1.0;
                r.evals = 100;
                r.valid = true;
                records.push_back(r);
            }
        }
    }
    lpso::write_records("/tmp/cli_ties.jsonl", records);

    CHECK(run_cli("report --records /tmp/cli_ties.jsonl --format csv --out /tmp/cli_rep.csv") == 0);
    const std::string csv = slurp("/tmp/cli_rep.csv");
    CHECK(csv.substr(0, csv.find('\n')) ==
          "function,n_X,w0_X,c_X,version_X,eps_X,n_XL,w0_XL,c_XL,version_XL,eps_XL,"
          "alpha,H1,test,p,significant");
    CHECK(csv.find("tie,none,-,false") != std::string::npos);

    CHECK(run_cli("report --records /tmp/cli_ties.jsonl --format text") == 0);
    const std::string text = slurp("/tmp/cli_out.txt");
    CHECK(text.find("N_L=0") != std::string::npos);
    CHECK(text.find("N_L_sig=0") != std::string::npos);
    CHECK(text.find("N_0=2") != std::string::npos);
}

TEST_CASE("report: one-armed records name the missing arm and exit 1")
{
    std::vector<lpso::RunRecord> records;
    lpso::RunRecord r;
    r.function_id = "F1-analog";
    r.variant = "tvac";
    r.languid = false;
    r.best_fitness = 1.0;
    r.error = 1.0;
    r.valid = true;
    records.push_back(r);
    lpso::write_records("/tmp/cli_onearm.jsonl", records);
    CHECK(run_cli("report --records /tmp/cli_onearm.jsonl") == 1);
    CHECK(slurp("/tmp/cli_err.txt").find("languid arm") != std::string::npos);
}

TEST_CASE("hist: all-zero alphas land in one bin; counts are conserved")
{
    CHECK(run_cli("hist --records /tmp/cli_ties.jsonl --bins 4 --out /tmp/cli_hist.csv") == 0);
    const std::string csv = slurp("/tmp/cli_hist.csv");
    CHECK(csv.substr(0, csv.find('\n')) == "bin_lo,bin_hi,count");
    long total = 0;
    std::istringstream lines(csv.substr(csv.find('\n') + 1));
    std::string line;
    int nonzero_bins = 0;
    while (std::getline(lines, line)) {
        const auto last_comma = line.rfind(',');
        const long count = std::stol(line.substr(last_comma + 1));
        total += count;
        if (count > 0)
            ++nonzero_bins;
    }
    CHECK(total == 2); // one pair per function
    CHECK(nonzero_bins == 1);

    CHECK(run_cli("hist --records /tmp/cli_ties.jsonl --bins 1 --out /tmp/cli_hist1.csv") == 0);
    const std::string one = slurp("/tmp/cli_hist1.csv");
    CHECK(one.find("-2,2,2") != std::string::npos);
}

TEST_CASE("hist: records without matching arm pairs exit 1")
{
    CHECK(run_cli("hist --records /tmp/cli_onearm.jsonl --bins 4 --out /tmp/cli_histx.csv") == 1);
}

TEST_CASE("suite: manifest with 30 entries and the four category counts")
{
    CHECK(run_cli("suite --dim 10 --seed 5 --out /tmp/cli_suite.json") == 0);
    const std::string manifest = slurp("/tmp/cli_suite.json");
    int functions = 0;
    for (std::size_t pos = 0; (pos = manifest.find("\"id\"", pos)) != std::string::npos; ++pos)
        ++functions;
    CHECK(functions == 30);
    auto count_of = [&manifest](const std::string& cat) {
        int c = 0;
        for (std::size_t pos = 0; (pos = manifest.find("\"" + cat + "\"", pos)) != std::string::npos;
             ++pos)
            ++c;
        return c;
    };
    CHECK(count_of("unimodal") == 3);
    CHECK(count_of("multimodal") == 13);
    CHECK(count_of("hybrid") == 6);
    CHECK(count_of("composition") == 8);

    CHECK(run_cli("suite --dim 10 --seed 5 --out /tmp/cli_suite2.json") == 0);
    CHECK(slurp("/tmp/cli_suite2.json") == manifest);
}

TEST_CASE("suite: dim below 2 is a user error")
{
    CHECK(run_cli("suite --dim 1 --seed 5 --out /tmp/cli_suitex.json") == 1);
}

TEST_CASE("run: preset table1 honors --functions and --runs")
{
    CHECK(run_cli("run --preset table1 --variant clpso --dim 10 --functions F4-analog "
                  "--runs 2 --seed 3 --out /tmp/cli_preset.jsonl --workers 2 --no-timing") == 0);
    const auto records = lpso::read_records("/tmp/cli_preset.jsonl");
    REQUIRE(records.size() == 4); // 1 function x 2 arms x 2 runs
    CHECK(records[0].function_id == "F4-analog");
    CHECK(records[0].swarm_size == 10); // Table 1 F4 D=10
    CHECK(records[0].variant == "clpso");
    CHECK(records[0].version == "-");   // clpso has no gbest/lbest version
    CHECK(records[0].c == 1.25);
}
