#include "lpso/records.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lpso {

namespace {

std::string fmt_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string record_to_json(const RunRecord& r)
{
    if (std::isnan(r.best_fitness) || std::isnan(r.error))
        throw std::invalid_argument("record_to_json: NaN fitness in record for " + r.function_id);

    std::ostringstream out;
    out << "{\"function\":\"" << r.function_id << "\""
        << ",\"variant\":\"" << r.variant << "\""
        << ",\"languid\":" << (r.languid ? "true" : "false")
        << ",\"n\":" << r.swarm_size
        << ",\"w0\":" << fmt_double(r.w0)
        << ",\"c\":" << (std::isnan(r.c) ? "null" : fmt_double(r.c))
        << ",\"version\":\"" << r.version << "\""
        << ",\"config\":" << r.config_index
        << ",\"run\":" << r.run_index
        << ",\"seed\":" << r.seed
        << ",\"best\":" << fmt_double(r.best_fitness)
        << ",\"error\":" << fmt_double(r.error)
        << ",\"evals\":" << r.evals
        << ",\"wall_ms\":" << fmt_double(r.wall_ms)
        << ",\"valid\":" << (r.valid ? "true" : "false") << "}";
    return out.str();
}

RunRecord record_from_json(const std::string& line, int line_no)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
        throw std::runtime_error("records line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
        RunRecord r;
        r.function_id = j.at("function").get<std::string>();
        r.variant = j.at("variant").get<std::string>();
        r.languid = j.at("languid").get<bool>();
        r.swarm_size = j.at("n").get<int>();
        r.w0 = j.at("w0").get<double>();
        r.c = j.at("c").is_null() ? std::nan("") : j.at("c").get<double>();
        r.version = j.at("version").get<std::string>();
        r.config_index = j.at("config").get<int>();
        r.run_index = j.at("run").get<int>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.best_fitness = j.at("best").get<double>();
        r.error = j.at("error").get<double>();
        r.evals = j.at("evals").get<long>();
        r.wall_ms = j.at("wall_ms").get<double>();
        r.valid = j.at("valid").get<bool>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("records line " + std::to_string(line_no) + ": " + e.what());
    }
}

void write_records(const std::string& path, const std::vector<RunRecord>& records)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_records: cannot open '" + path + "'");
    for (const auto& r : records)
        out << record_to_json(r) << "\n";
    if (!out)
        throw std::runtime_error("write_records: write failed for '" + path + "'");
}

std::vector<RunRecord> read_records(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("read_records: cannot open '" + path + "'");
    std::vector<RunRecord> records;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        records.push_back(record_from_json(line, line_no));
    }
    return records;
}

} // namespace lpso
