#ifndef LPSO_BENCHFUNCS_HPP
#define LPSO_BENCHFUNCS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lpso/rng.hpp"
#include "lpso/swarm.hpp"

namespace lpso {

enum class FunctionCategory { unimodal, multimodal, hybrid, composition };

const char* category_name(FunctionCategory c);

// Base test functions, normalized so the global minimum sits at z = 0 with
// value 0 (modified schwefel carries a tiny positive residual from its
// published constants). Known names: elliptic, bent-cigar, discus,
// rosenbrock, ackley, rastrigin, griewank, weierstrass, schwefel, happycat,
// hgbat, katsuura. Throws on anything else.
double eval_base(const std::string& name, const std::vector<double>& z);

struct TransformStack {
    std::vector<double> shift;                  // o
    std::vector<std::vector<double>> rotation;  // row-major, empty = identity
    double scale = 1.0;
};

// f_base(M * (scale * (x - o)))
double apply_transform(const TransformStack& stack,
                       const std::function<double(const std::vector<double>&)>& f_base,
                       const std::vector<double>& x);

struct BenchmarkFunction {
    std::string id; // "F1-analog" ... "F30-analog"
    FunctionCategory category = FunctionCategory::unimodal;
    int dim = 0;
    Bounds bounds;
    double f_star = 0.0;
    std::vector<double> optimum;
    std::function<double(const std::vector<double>&)> eval; // immutable, safe to share across threads
    std::vector<double> rotation_orthogonality; // ||M^T M - I||_inf per rotation used
};

// Deterministic 30-function suite: 3 unimodal, 13 shifted/rotated multimodal,
// 6 hybrid, 8 composition functions over [-100, 100]^dim. f_star is the
// value at the recorded optimum, computed during construction.
std::vector<BenchmarkFunction> build_suite(int dim, std::uint64_t seed);

// Same, but the shift/rotation of the first min(16, stacks.size()) simple
// functions are taken from externally loaded data (per-base scales are part
// of the function definitions and stay).
std::vector<BenchmarkFunction> build_suite(int dim, std::uint64_t seed,
                                           const std::vector<TransformStack>& official);

// Plain-text transform data: repeated blocks of one shift line (dim values)
// followed by dim rotation rows (dim values each), whitespace-separated,
// locale-independent. Errors carry file name and line number.
std::vector<TransformStack> load_official_data(const std::string& path, int dim);

// random orthogonal matrix (Gram-Schmidt on a gaussian matrix)
std::vector<std::vector<double>> random_rotation(int dim, Rng& rng);

// ||M^T M - I||_inf
double rotation_orthogonality_error(const std::vector<std::vector<double>>& m);

// normalized inverse-squared-distance weights; an exact zero distance makes
// that component's weight 1
std::vector<double> composition_weights(const std::vector<double>& sq_dists);

std::string suite_manifest_json(const std::vector<BenchmarkFunction>& suite,
                                int dim, std::uint64_t seed);

} // namespace lpso

#endif
