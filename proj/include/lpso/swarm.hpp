#ifndef LPSO_SWARM_HPP
#define LPSO_SWARM_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "lpso/rng.hpp"

namespace lpso {

using Objective = std::function<double(const std::vector<double>&)>;

struct Bounds {
    std::vector<double> lo, hi;

    static Bounds cube(int dim, double lo_v, double hi_v)
    {
        Bounds b;
        b.lo.assign(dim, lo_v);
        b.hi.assign(dim, hi_v);
        return b;
    }
    int dim() const { return static_cast<int>(lo.size()); }
};

enum class TopologyKind {
    gbest,     // every particle informed by the whole swarm
    lbest,     // K random informers per particle, re-randomized on stagnation
    subswarms, // disjoint fully connected groups (dynamic multiswarm)
};

// informers[k] never contains k itself; the particle's own personal best is
// always consulted in addition (neighborhood_best).
struct Topology {
    TopologyKind kind = TopologyKind::gbest;
    int neighbors = 0; // K, lbest only
    std::vector<std::vector<int>> informers;
};

enum class InertiaMode { standard, languid };

struct InertiaPolicy {
    InertiaMode mode = InertiaMode::standard;
    double languid_bonus = 0.05; // fixed
};

struct SwarmConfig {
    int swarm_size = 0; // n
    int dim = 0;        // D
    double w0 = 0.7;
    double c1 = 1.5, c2 = 1.5;
    TopologyKind topology = TopologyKind::gbest;
    int neighbors = 3; // K for lbest
    InertiaPolicy inertia;
    long eval_max = 0;
    Bounds bounds;
};

struct ParticleState {
    std::vector<double> x, v, p;
    double f_p = std::numeric_limits<double>::infinity();
    double f_curr = std::numeric_limits<double>::infinity(); // fitness of x at t-1
    double f_prev = std::numeric_limits<double>::infinity(); // fitness of x at t-2
};

// inertia term of the velocity update. Standard mode scales the previous
// velocity by w. Languid mode grants inertia, with a +0.05 weight bonus,
// only when the particle's fitness strictly improved in the previous
// iteration (or t < 2, when no comparison exists yet); otherwise the
// inertia term is the exact zero vector.
std::vector<double> inertial_velocity(const InertiaPolicy& policy, double w,
                                      const std::vector<double>& v_prev,
                                      bool improved, int t);

// full velocity update: v_I + c1*r1.*(p-x) + c2*r2.*(g-x).
// Consumes exactly 2*D uniforms: all of r1 first, then all of r2.
std::vector<double> velocity_update(const ParticleState& s, const std::vector<double>& g,
                                    double w, double c1, double c2,
                                    const InertiaPolicy& policy, int t, Rng& rng);

std::vector<double> position_update(const std::vector<double>& x, const std::vector<double>& v);

// clamp x into bounds; zero the velocity component of every clamped
// coordinate. Values exactly on a bound are left alone.
void enforce_bounds(std::vector<double>& x, std::vector<double>& v, const Bounds& b);

// lbest topology with K distinct informers per particle (self excluded),
// drawn uniformly. Rejects K >= n.
Topology randomize_topology(int n, int k_neighbors, Rng& rng);

// index of the minimum-f_p member of {k} + informers(k); ties broken by
// the lowest particle index.
int neighborhood_best(int k, const Topology& topo, const std::vector<ParticleState>& particles);

// per-iteration coefficients supplied by the variant schedules
struct StepCoefficients {
    double w = 0.7;
    double c1 = 1.5, c2 = 1.5;
};

// Particle swarm with one owned random stream. A swarm is strictly
// single-threaded; parallelism lives across independent runs.
struct Swarm {
    SwarmConfig cfg;
    std::vector<ParticleState> particles;
    Topology topo;
    Rng rng;
    long evals = 0;
    int iteration = 0; // t
    double best_fit = std::numeric_limits<double>::infinity(); // best-so-far, tracked outside particles
    std::vector<double> best_pos;
    bool best_improved_last_step = false;

    Swarm(SwarmConfig config, std::uint64_t seed) : cfg(std::move(config)), rng(seed) {}
    Swarm(SwarmConfig config, Rng stream) : cfg(std::move(config)), rng(std::move(stream)) {}

    // objective call that charges the run budget
    double evaluate(const Objective& f, const std::vector<double>& x)
    {
        ++evals;
        return f(x);
    }

    long remaining_budget() const { return cfg.eval_max - evals; }

    // Initialization, consuming exactly n evaluations. Draw order per
    // particle: D uniforms for x, then D uniforms for the velocity draws
    // (v = (U(lo,hi) - x)/2); particles in index order; then the topology.
    void init(const Objective& f);

    // One iteration: particles move in index order (stopping early when the
    // budget runs out, so a trailing partial iteration is possible), each
    // consuming one evaluation; afterwards a stalled lbest topology is
    // re-randomized. `exemplars`, when given, replaces the usual
    // personal/neighborhood attraction with a single exemplar term
    // c1*r.*(q-x) consuming D uniforms per particle (comprehensive
    // learning). Returns evaluations consumed.
    long step(const StepCoefficients& coef, const Objective& f,
              const std::vector<std::vector<double>>* exemplars = nullptr);
};

} // namespace lpso

#endif
