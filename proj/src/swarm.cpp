#include "lpso/swarm.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lpso {

std::vector<double> inertial_velocity(const InertiaPolicy& policy, double w,
                                      const std::vector<double>& v_prev,
                                      bool improved, int t)
{
    std::vector<double> vi(v_prev.size(), 0.0);
    if (policy.mode == InertiaMode::standard) {
        for (std::size_t d = 0; d < v_prev.size(); ++d)
            vi[d] = w * v_prev[d];
        return vi;
    }
    // languid: inertia only while advancing (or before two fitness values exist)
    if (improved || t < 2) {
        const double wl = w + policy.languid_bonus;
        for (std::size_t d = 0; d < v_prev.size(); ++d)
            vi[d] = wl * v_prev[d];
    }
    return vi;
}

std::vector<double> velocity_update(const ParticleState& s, const std::vector<double>& g,
                                    double w, double c1, double c2,
                                    const InertiaPolicy& policy, int t, Rng& rng)
{
    const std::size_t dim = s.x.size();
    std::vector<double> r1(dim), r2(dim);
    for (std::size_t d = 0; d < dim; ++d)
        r1[d] = rng.uniform01();
    for (std::size_t d = 0; d < dim; ++d)
        r2[d] = rng.uniform01();

    const bool improved = s.f_curr < s.f_prev;
    std::vector<double> v = inertial_velocity(policy, w, s.v, improved, t);
    for (std::size_t d = 0; d < dim; ++d)
        v[d] += c1 * r1[d] * (s.p[d] - s.x[d]) + c2 * r2[d] * (g[d] - s.x[d]);
    return v;
}

std::vector<double> position_update(const std::vector<double>& x, const std::vector<double>& v)
{
    assert(x.size() == v.size());
    std::vector<double> out(x.size());
    for (std::size_t d = 0; d < x.size(); ++d)
        out[d] = x[d] + v[d];
    return out;
}

void enforce_bounds(std::vector<double>& x, std::vector<double>& v, const Bounds& b)
{
    for (std::size_t d = 0; d < x.size(); ++d) {
        if (x[d] < b.lo[d]) {
            x[d] = b.lo[d];
            v[d] = 0.0;
        } else if (x[d] > b.hi[d]) {
            x[d] = b.hi[d];
            v[d] = 0.0;
        }
    }
}

Topology randomize_topology(int n, int k_neighbors, Rng& rng)
{
    if (k_neighbors < 1 || k_neighbors >= n)
        throw std::invalid_argument("randomize_topology: need 1 <= K <= n-1");

    Topology topo;
    topo.kind = TopologyKind::lbest;
    topo.neighbors = k_neighbors;
    topo.informers.resize(n);

    std::vector<int> pool(n - 1);
    for (int k = 0; k < n; ++k) {
        int idx = 0;
        for (int j = 0; j < n; ++j)
            if (j != k)
                pool[idx++] = j;
        // partial Fisher-Yates: first K entries are a uniform K-subset
        for (int j = 0; j < k_neighbors; ++j) {
            const int swap_at = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1 - j)));
            std::swap(pool[j], pool[swap_at]);
        }
        topo.informers[k].assign(pool.begin(), pool.begin() + k_neighbors);
    }
    return topo;
}

int neighborhood_best(int k, const Topology& topo, const std::vector<ParticleState>& particles)
{
    if (topo.kind == TopologyKind::gbest) {
        int best = 0;
        for (int i = 1; i < static_cast<int>(particles.size()); ++i)
            if (particles[i].f_p < particles[best].f_p)
                best = i;
        return best;
    }
    int best = k;
    for (int i : topo.informers[k])
        if (particles[i].f_p < particles[best].f_p ||
            (particles[i].f_p == particles[best].f_p && i < best))
            best = i;
    return best;
}

void Swarm::init(const Objective& f)
{
    const int n = cfg.swarm_size;
    const int dim = cfg.dim;
    if (n < 2 || dim < 1 || cfg.eval_max < n || cfg.bounds.dim() != dim)
        throw std::invalid_argument("Swarm::init: invalid configuration");

    particles.assign(n, ParticleState{});
    for (auto& s : particles) {
        s.x.resize(dim);
        s.v.resize(dim);
        for (int d = 0; d < dim; ++d)
            s.x[d] = rng.uniform(cfg.bounds.lo[d], cfg.bounds.hi[d]);
        for (int d = 0; d < dim; ++d)
            s.v[d] = (rng.uniform(cfg.bounds.lo[d], cfg.bounds.hi[d]) - s.x[d]) / 2.0;
        s.p = s.x;
    }
    for (auto& s : particles) {
        s.f_curr = evaluate(f, s.x);
        s.f_p = s.f_curr;
        s.f_prev = std::numeric_limits<double>::infinity();
    }

    best_fit = particles[0].f_p;
    best_pos = particles[0].p;
    for (const auto& s : particles)
        if (s.f_p < best_fit) {
            best_fit = s.f_p;
            best_pos = s.p;
        }

    if (cfg.topology == TopologyKind::lbest) {
        topo = randomize_topology(n, cfg.neighbors, rng);
    } else {
        topo.kind = cfg.topology;
        topo.informers.clear();
    }
    iteration = 0;
}

long Swarm::step(const StepCoefficients& coef, const Objective& f,
                 const std::vector<std::vector<double>>* exemplars)
{
    const int n = cfg.swarm_size;
    const int t = iteration + 1;
    const double best_before = best_fit;
    long used = 0;

    for (int k = 0; k < n; ++k) {
        if (evals >= cfg.eval_max)
            break; // partial final iteration: remaining particles stay put
        ParticleState& s = particles[k];

        std::vector<double> v;
        if (exemplars) {
            // comprehensive-learning update: single attractor, D uniforms
            const std::vector<double>& q = (*exemplars)[k];
            const std::size_t dim = s.x.size();
            std::vector<double> r(dim);
            for (std::size_t d = 0; d < dim; ++d)
                r[d] = rng.uniform01();
            const bool improved = s.f_curr < s.f_prev;
            v = inertial_velocity(cfg.inertia, coef.w, s.v, improved, t);
            for (std::size_t d = 0; d < dim; ++d)
                v[d] += coef.c1 * r[d] * (q[d] - s.x[d]);
        } else {
            const std::vector<double>& g = particles[neighborhood_best(k, topo, particles)].p;
            v = velocity_update(s, g, coef.w, coef.c1, coef.c2, cfg.inertia, t, rng);
        }

        s.x = position_update(s.x, v);
        s.v = std::move(v);
        enforce_bounds(s.x, s.v, cfg.bounds);

        const double fx = evaluate(f, s.x);
        ++used;
        s.f_prev = s.f_curr;
        s.f_curr = fx;
        if (fx < s.f_p) {
            s.f_p = fx;
            s.p = s.x;
        }
        if (fx < best_fit) {
            best_fit = fx;
            best_pos = s.x;
        }
    }

    iteration = t;
    best_improved_last_step = best_fit < best_before;
    if (!best_improved_last_step && topo.kind == TopologyKind::lbest && evals < cfg.eval_max)
        topo = randomize_topology(n, cfg.neighbors, rng);
    return used;
}

} // namespace lpso
