#ifndef LPSO_VARIANTS_HPP
#define LPSO_VARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpso/swarm.hpp"

namespace lpso {

enum class VariantId { ldiw, tvac, cpso, dms, clpso };

const char* variant_name(VariantId v);
std::optional<VariantId> parse_variant(std::string_view name);

// ---- schedules -----------------------------------------------------------

struct LdiwSchedule {
    double w_min = 0.4;
    double w_max = 0.9;
    int t_max = 1;
};

// linearly decreasing inertia weight: w_max at t=0 down to w_min at t_max
double ldiw_weight(int t, const LdiwSchedule& sched);

struct TvacSchedule {
    double c1_i = 2.5, c1_f = 0.5;
    double c2_i = 0.5, c2_f = 2.5;
};

std::pair<double, double> tvac_coefficients(int t, const TvacSchedule& sched, int t_max);

// ---- chaotic local search --------------------------------------------------

struct ClsParams {
    double mu = 4.0; // logistic parameter; 4 gives chaotic behavior
    int iters = 10;
};

double cls_encode(double x, double lo, double hi);
double cls_decode(double xi, double lo, double hi);
double logistic_step(double xi, double mu);

struct ClsResult {
    std::vector<double> g;
    double f_g;
    long evals;
};

// Probes around g by iterating the logistic map jointly over all encoded
// coordinates, one candidate (and one evaluation) per CLS iteration, at most
// `iters` of them and never more than eval_budget. Stops at the first strict
// improvement. Encoded starting values within 1e-12 of {0, 1/4, 1/2, 3/4, 1}
// are fixed points or short cycles of the map, so they get nudged by 1e-7
// (wrapping back into (0,1)).
ClsResult chaotic_local_search(const std::vector<double>& g, double f_g, const Bounds& b,
                               const Objective& f, const ClsParams& params, long eval_budget);

// Keeps the ceil(n/5) fittest particles (by current fitness, ties by index)
// untouched and reinitializes the rest: fresh position/velocity by the init
// rule, personal best reset to the new position, fitness memory cleared.
// Each reinitialized particle costs one evaluation; stops early when the
// budget runs out. Rejects n < 5.
void cpso_regenerate(Swarm& swarm, const Objective& f);

// ---- dynamic multiswarm ----------------------------------------------------

// Shuffles particle indices and cuts them into consecutive groups of
// max(5, n/10); a trailing remainder smaller than that is merged into the
// last full group. Rejects n < 5.
std::vector<std::vector<int>> dms_partition(int n, Rng& rng);

Topology dms_topology(const std::vector<std::vector<int>>& groups, int n);

// Draws a fresh partition when the swarm best failed to strictly improve.
// Returns whether a regroup happened.
bool dms_regroup_if_stalled(double best_prev, double best_now, Swarm& swarm);

// ---- comprehensive learning -------------------------------------------------

// P_k = 0.05 + 0.45 * (e^(10(k-1)/(n-1)) - 1) / (e^10 - 1), k is 1-based.
double clpso_learning_probability(int k, int n);

// Builds the exemplar for particle k (0-based): per dimension, with
// probability p_k the component comes from the fitter of two tournament-drawn
// other particles' personal bests, otherwise from the particle's own. If
// every dimension ended up own, one uniformly chosen dimension is overwritten
// with a tournament winner's component.
std::vector<double> clpso_exemplar(int k, const std::vector<ParticleState>& particles,
                                   double p_k, Rng& rng);

// ---- run driver -------------------------------------------------------------

struct RunConfig {
    VariantId variant = VariantId::ldiw;
    bool languid = false;
    int swarm_size = 30;
    double w0 = 0.7;
    double c = 1.5;                              // ignored by tvac
    TopologyKind version = TopologyKind::gbest;  // ignored by dms/clpso
    int dim = 10;
    long eval_max = 0; // 0 = 1e4 * dim
    Bounds bounds;     // empty = [-100, 100]^dim
    int neighbors = 3;
};

struct RunResult {
    double best_fitness;
    long evals;
    int iterations;
};

// Runs one full optimization to the evaluation budget. Deterministic from
// (config, seed).
RunResult run_variant(const RunConfig& rc, const Objective& f, std::uint64_t seed);

} // namespace lpso

#endif
