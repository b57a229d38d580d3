#ifndef LPSO_RECORDS_HPP
#define LPSO_RECORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lpso {

// One optimization run. `c` and `version` are NaN / "-" for variants that do
// not use them. config_index is the global index into the expanded grid,
// with the languid arm offset by the grid size so the two arms draw disjoint
// seeds.
struct RunRecord {
    std::string function_id;
    std::string variant;
    bool languid = false;
    int swarm_size = 0;
    double w0 = 0.0;
    double c = 0.0;
    std::string version = "-";
    int config_index = 0;
    int run_index = 0;
    std::uint64_t seed = 0;
    double best_fitness = 0.0;
    double error = 0.0;
    long evals = 0;
    double wall_ms = 0.0;
    bool valid = true;
};

// JSON-lines, one record per line, floats at 17 significant digits so a
// write/read round trip is lossless. Rejects NaN fitness/error on valid
// records.
std::string record_to_json(const RunRecord& r);
RunRecord record_from_json(const std::string& line, int line_no);

void write_records(const std::string& path, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_records(const std::string& path);

} // namespace lpso

#endif
