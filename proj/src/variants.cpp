#include "lpso/variants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lpso {

const char* variant_name(VariantId v)
{
    switch (v) {
    case VariantId::ldiw: return "ldiw";
    case VariantId::tvac: return "tvac";
    case VariantId::cpso: return "cpso";
    case VariantId::dms: return "dms";
    case VariantId::clpso: return "clpso";
    }
    return "?";
}

std::optional<VariantId> parse_variant(std::string_view name)
{
    if (name == "ldiw") return VariantId::ldiw;
    if (name == "tvac") return VariantId::tvac;
    if (name == "cpso") return VariantId::cpso;
    if (name == "dms") return VariantId::dms;
    if (name == "clpso") return VariantId::clpso;
    return std::nullopt;
}

double ldiw_weight(int t, const LdiwSchedule& sched)
{
    return sched.w_max - (sched.w_max - sched.w_min) * static_cast<double>(t) / sched.t_max;
}

std::pair<double, double> tvac_coefficients(int t, const TvacSchedule& sched, int t_max)
{
    const double frac = static_cast<double>(t) / t_max;
    return {sched.c1_i + (sched.c1_f - sched.c1_i) * frac,
            sched.c2_i + (sched.c2_f - sched.c2_i) * frac};
}

double cls_encode(double x, double lo, double hi) { return (x - lo) / (hi - lo); }
double cls_decode(double xi, double lo, double hi) { return lo + xi * (hi - lo); }
double logistic_step(double xi, double mu) { return mu * xi * (1.0 - xi); }

namespace {

// nudge encoded values away from the fixed points / short cycles of the map
double nudge_forbidden(double xi)
{
    static const double forbidden[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (double fv : forbidden) {
        if (std::abs(xi - fv) < 1e-12) {
            xi += 1e-7;
            if (xi >= 1.0)
                xi -= 1.0;
            return xi;
        }
    }
    return xi;
}

} // namespace

ClsResult chaotic_local_search(const std::vector<double>& g, double f_g, const Bounds& b,
                               const Objective& f, const ClsParams& params, long eval_budget)
{
    const std::size_t dim = g.size();
    std::vector<double> xi(dim);
    for (std::size_t d = 0; d < dim; ++d)
        xi[d] = nudge_forbidden(cls_encode(g[d], b.lo[d], b.hi[d]));

    ClsResult out{g, f_g, 0};
    std::vector<double> cand(dim);
    for (int i = 0; i < params.iters && out.evals < eval_budget; ++i) {
        for (std::size_t d = 0; d < dim; ++d) {
            xi[d] = logistic_step(xi[d], params.mu);
            cand[d] = cls_decode(xi[d], b.lo[d], b.hi[d]);
        }
        const double fc = f(cand);
        ++out.evals;
        if (fc < f_g) {
            out.g = cand;
            out.f_g = fc;
            break;
        }
    }
    return out;
}

void cpso_regenerate(Swarm& swarm, const Objective& f)
{
    const int n = swarm.cfg.swarm_size;
    if (n < 5)
        throw std::invalid_argument("cpso_regenerate: need n >= 5");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return swarm.particles[a].f_curr < swarm.particles[b].f_curr;
    });

    const int keep = (n + 4) / 5; // ceil(n/5)
    std::vector<char> kept(n, 0);
    for (int i = 0; i < keep; ++i)
        kept[order[i]] = 1;

    const int dim = swarm.cfg.dim;
    for (int k = 0; k < n; ++k) {
        if (kept[k])
            continue;
        if (swarm.evals >= swarm.cfg.eval_max)
            break;
        ParticleState& s = swarm.particles[k];
        for (int d = 0; d < dim; ++d)
            s.x[d] = swarm.rng.uniform(swarm.cfg.bounds.lo[d], swarm.cfg.bounds.hi[d]);
        for (int d = 0; d < dim; ++d)
            s.v[d] = (swarm.rng.uniform(swarm.cfg.bounds.lo[d], swarm.cfg.bounds.hi[d]) - s.x[d]) / 2.0;
        s.p = s.x;
        s.f_curr = swarm.evaluate(f, s.x);
        s.f_p = s.f_curr;
        s.f_prev = std::numeric_limits<double>::infinity();
        if (s.f_curr < swarm.best_fit) {
            swarm.best_fit = s.f_curr;
            swarm.best_pos = s.x;
        }
    }
}

std::vector<std::vector<int>> dms_partition(int n, Rng& rng)
{
    if (n < 5)
        throw std::invalid_argument("dms_partition: need n >= 5");

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(idx[i], idx[j]);
    }

    const int s = std::max(5, n / 10);
    const int full = n / s;
    std::vector<std::vector<int>> groups;
    groups.reserve(full);
    for (int g = 0; g < full; ++g)
        groups.emplace_back(idx.begin() + g * s, idx.begin() + (g + 1) * s);
    // remainder merged into the last full group
    for (int i = full * s; i < n; ++i)
        groups.back().push_back(idx[i]);
    return groups;
}

Topology dms_topology(const std::vector<std::vector<int>>& groups, int n)
{
    Topology topo;
    topo.kind = TopologyKind::subswarms;
    topo.informers.assign(n, {});
    for (const auto& group : groups)
        for (int a : group)
            for (int bidx : group)
                if (bidx != a)
                    topo.informers[a].push_back(bidx);
    return topo;
}

bool dms_regroup_if_stalled(double best_prev, double best_now, Swarm& swarm)
{
    if (best_now < best_prev)
        return false;
    swarm.topo = dms_topology(dms_partition(swarm.cfg.swarm_size, swarm.rng), swarm.cfg.swarm_size);
    return true;
}

double clpso_learning_probability(int k, int n)
{
    if (n < 2)
        throw std::invalid_argument("clpso_learning_probability: need n >= 2");
    const double num = std::exp(10.0 * (k - 1) / (n - 1)) - 1.0;
    const double den = std::exp(10.0) - 1.0;
    return 0.05 + 0.45 * (num / den);
}

namespace {

// two distinct tournament candidates, both != k; returns the fitter one
// (tie: the first drawn)
int tournament_pick(int k, const std::vector<ParticleState>& particles, Rng& rng)
{
    const int n = static_cast<int>(particles.size());
    int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    if (a >= k)
        ++a;
    int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2)));
    const int lo = std::min(a, k), hi = std::max(a, k);
    if (b >= lo)
        ++b;
    if (b >= hi)
        ++b;
    return particles[b].f_p < particles[a].f_p ? b : a;
}

} // namespace

std::vector<double> clpso_exemplar(int k, const std::vector<ParticleState>& particles,
                                   double p_k, Rng& rng)
{
    const int n = static_cast<int>(particles.size());
    if (n < 3)
        throw std::invalid_argument("clpso_exemplar: need n >= 3");
    const std::size_t dim = particles[k].p.size();

    std::vector<double> q(dim);
    bool any_foreign = false;
    for (std::size_t d = 0; d < dim; ++d) {
        if (rng.uniform01() < p_k) {
            const int l = tournament_pick(k, particles, rng);
            q[d] = particles[l].p[d];
            any_foreign = true;
        } else {
            q[d] = particles[k].p[d];
        }
    }
    if (!any_foreign) {
        const std::size_t d = static_cast<std::size_t>(rng.below(dim));
        const int l = tournament_pick(k, particles, rng);
        q[d] = particles[l].p[d];
    }
    return q;
}

RunResult run_variant(const RunConfig& rc, const Objective& f, std::uint64_t seed)
{
    const int n = rc.swarm_size;
    if (n < 2)
        throw std::invalid_argument("run_variant: need n >= 2");
    if ((rc.variant == VariantId::cpso || rc.variant == VariantId::dms) && n < 5)
        throw std::invalid_argument("run_variant: this variant needs n >= 5");
    if (rc.variant == VariantId::clpso && n < 3)
        throw std::invalid_argument("run_variant: clpso needs n >= 3");

    SwarmConfig scfg;
    scfg.swarm_size = n;
    scfg.dim = rc.dim;
    scfg.w0 = rc.w0;
    scfg.c1 = scfg.c2 = rc.c;
    scfg.neighbors = rc.neighbors;
    scfg.inertia.mode = rc.languid ? InertiaMode::languid : InertiaMode::standard;
    scfg.eval_max = rc.eval_max > 0 ? rc.eval_max : 10000L * rc.dim;
    scfg.bounds = rc.bounds.dim() == rc.dim ? rc.bounds : Bounds::cube(rc.dim, -100.0, 100.0);

    switch (rc.variant) {
    case VariantId::ldiw:
    case VariantId::tvac:
    case VariantId::cpso:
        scfg.topology = rc.version;
        break;
    case VariantId::dms:
        scfg.topology = TopologyKind::subswarms;
        break;
    case VariantId::clpso:
        scfg.topology = TopologyKind::gbest; // unused: exemplar update consults no neighborhood
        break;
    }

    Swarm swarm(scfg, seed);
    swarm.init(f);

    const int t_max = static_cast<int>(scfg.eval_max / n);
    const LdiwSchedule ldiw{0.4, rc.w0 + 0.2, t_max};
    const TvacSchedule tvac;
    const ClsParams cls;

    if (rc.variant == VariantId::dms)
        swarm.topo = dms_topology(dms_partition(n, swarm.rng), n);

    // comprehensive-learning state
    std::vector<std::vector<double>> exemplars;
    std::vector<int> stagnation;
    std::vector<double> learn_prob;
    constexpr int refresh_gap = 7;
    if (rc.variant == VariantId::clpso) {
        learn_prob.resize(n);
        for (int k = 0; k < n; ++k)
            learn_prob[k] = clpso_learning_probability(k + 1, n);
        exemplars.resize(n);
        for (int k = 0; k < n; ++k)
            exemplars[k] = clpso_exemplar(k, swarm.particles, learn_prob[k], swarm.rng);
        stagnation.assign(n, 0);
    }

    std::vector<double> fp_before;
    while (swarm.evals < scfg.eval_max) {
        const int t = swarm.iteration + 1;
        StepCoefficients coef;
        coef.w = ldiw_weight(std::min(t, t_max), ldiw);
        if (rc.variant == VariantId::tvac) {
            const auto [c1, c2] = tvac_coefficients(std::min(t, t_max), tvac, t_max);
            coef.c1 = c1;
            coef.c2 = c2;
        } else {
            coef.c1 = coef.c2 = rc.c;
        }

        const double best_prev = swarm.best_fit;
        if (rc.variant == VariantId::clpso) {
            fp_before.resize(n);
            for (int k = 0; k < n; ++k)
                fp_before[k] = swarm.particles[k].f_p;
            swarm.step(coef, f, &exemplars);
            for (int k = 0; k < n; ++k) {
                if (swarm.particles[k].f_p < fp_before[k]) {
                    stagnation[k] = 0;
                } else if (++stagnation[k] >= refresh_gap) {
                    exemplars[k] = clpso_exemplar(k, swarm.particles, learn_prob[k], swarm.rng);
                    stagnation[k] = 0;
                }
            }
        } else {
            swarm.step(coef, f);
        }

        if (rc.variant == VariantId::cpso) {
            if (swarm.evals < scfg.eval_max) {
                ClsResult res = chaotic_local_search(swarm.best_pos, swarm.best_fit, scfg.bounds,
                                                     f, cls, scfg.eval_max - swarm.evals);
                swarm.evals += res.evals;
                if (res.f_g < swarm.best_fit) {
                    // adopt as the new g: track it and give it to the current
                    // argmin-f_p particle so neighborhoods see it
                    swarm.best_fit = res.f_g;
                    swarm.best_pos = res.g;
                    int bk = 0;
                    for (int k = 1; k < n; ++k)
                        if (swarm.particles[k].f_p < swarm.particles[bk].f_p)
                            bk = k;
                    swarm.particles[bk].p = res.g;
                    swarm.particles[bk].f_p = res.f_g;
                }
            }
            if (swarm.evals < scfg.eval_max)
                cpso_regenerate(swarm, f);
        } else if (rc.variant == VariantId::dms) {
            dms_regroup_if_stalled(best_prev, swarm.best_fit, swarm);
        }
    }

    return {swarm.best_fit, swarm.evals, swarm.iteration};
}

} // namespace lpso
