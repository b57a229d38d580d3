#include "lpso/benchfuncs.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lpso {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using BaseFn = double (*)(const std::vector<double>&);

double f_elliptic(const std::vector<double>& z)
{
    const int dim = static_cast<int>(z.size());
    if (dim == 1)
        return z[0] * z[0];
    double s = 0.0;
    for (int i = 0; i < dim; ++i)
        s += std::pow(1e6, static_cast<double>(i) / (dim - 1)) * z[i] * z[i];
    return s;
}

double f_bent_cigar(const std::vector<double>& z)
{
    double s = z[0] * z[0];
    for (std::size_t i = 1; i < z.size(); ++i)
        s += 1e6 * z[i] * z[i];
    return s;
}

double f_discus(const std::vector<double>& z)
{
    double s = 1e6 * z[0] * z[0];
    for (std::size_t i = 1; i < z.size(); ++i)
        s += z[i] * z[i];
    return s;
}

double f_rosenbrock(const std::vector<double>& z)
{
    // internal +1 shift puts the optimum at z = 0
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        const double yi = z[i] + 1.0;
        const double yn = z[i + 1] + 1.0;
        const double a = yi * yi - yn;
        const double b = yi - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double f_ackley(const std::vector<double>& z)
{
    const double dim = static_cast<double>(z.size());
    double s1 = 0.0, s2 = 0.0;
    for (double v : z) {
        s1 += v * v;
        s2 += std::cos(kTwoPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(s1 / dim)) - std::exp(s2 / dim) + 20.0 + std::numbers::e;
}

double f_rastrigin(const std::vector<double>& z)
{
    double s = 0.0;
    for (double v : z)
        s += v * v - 10.0 * std::cos(kTwoPi * v) + 10.0;
    return s;
}

double f_griewank(const std::vector<double>& z)
{
    double s = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        s += z[i] * z[i] / 4000.0;
        prod *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s - prod + 1.0;
}

struct WeierstrassTables {
    static constexpr int kmax = 20;
    std::array<double, kmax + 1> ak{};
    std::array<double, kmax + 1> tpbk{};
    double c0 = 0.0;
    WeierstrassTables()
    {
        double a = 1.0, b = 1.0;
        for (int k = 0; k <= kmax; ++k) {
            ak[k] = a;
            tpbk[k] = kTwoPi * b;
            c0 += a * std::cos(tpbk[k] * 0.5);
            a *= 0.5;
            b *= 3.0;
        }
    }
};
const WeierstrassTables weier;

double f_weierstrass(const std::vector<double>& z)
{
    double s = 0.0;
    for (double v : z) {
        double inner = 0.0;
        for (int k = 0; k <= WeierstrassTables::kmax; ++k)
            inner += weier.ak[k] * std::cos(weier.tpbk[k] * (v + 0.5));
        s += inner;
    }
    return s - static_cast<double>(z.size()) * weier.c0;
}

double f_schwefel(const std::vector<double>& z)
{
    const double dim = static_cast<double>(z.size());
    double s = 0.0;
    for (double v : z) {
        const double y = v + 4.209687462275036e2;
        double g;
        if (std::abs(y) <= 500.0) {
            g = y * std::sin(std::sqrt(std::abs(y)));
        } else if (y > 500.0) {
            const double t = 500.0 - std::fmod(y, 500.0);
            g = t * std::sin(std::sqrt(std::abs(t))) - (y - 500.0) * (y - 500.0) / (10000.0 * dim);
        } else {
            const double t = std::fmod(std::abs(y), 500.0) - 500.0;
            g = t * std::sin(std::sqrt(std::abs(t))) - (y + 500.0) * (y + 500.0) / (10000.0 * dim);
        }
        s += g;
    }
    return 418.9829 * dim - s;
}

double f_happycat(const std::vector<double>& z)
{
    const double dim = static_cast<double>(z.size());
    double s1 = 0.0, s2 = 0.0;
    for (double v : z) {
        const double w = v - 1.0;
        s1 += w;
        s2 += w * w;
    }
    return std::pow(std::abs(s2 - dim), 0.25) + (0.5 * s2 + s1) / dim + 0.5;
}

double f_hgbat(const std::vector<double>& z)
{
    const double dim = static_cast<double>(z.size());
    double s1 = 0.0, s2 = 0.0;
    for (double v : z) {
        const double w = v - 1.0;
        s1 += w;
        s2 += w * w;
    }
    return std::sqrt(std::abs(s2 * s2 - s1 * s1)) + (0.5 * s2 + s1) / dim + 0.5;
}

double f_katsuura(const std::vector<double>& z)
{
    const double dim = static_cast<double>(z.size());
    const double ep = 10.0 / std::pow(dim, 1.2);
    double prod = 1.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        double t = 0.0;
        double p2 = 1.0;
        for (int j = 1; j <= 32; ++j) {
            p2 *= 2.0;
            const double w = p2 * z[i];
            t += std::abs(w - std::round(w)) / p2;
        }
        prod *= std::pow(1.0 + (i + 1) * t, ep);
    }
    const double c = 10.0 / (dim * dim);
    return c * prod - c;
}

struct BaseEntry {
    const char* name;
    BaseFn fn;
    double scale; // maps [-100,100] onto the base's classical domain
};

constexpr BaseEntry kBases[] = {
    {"elliptic", f_elliptic, 1.0},
    {"bent-cigar", f_bent_cigar, 1.0},
    {"discus", f_discus, 1.0},
    {"rosenbrock", f_rosenbrock, 2.048 / 100.0},
    {"ackley", f_ackley, 1.0},
    {"rastrigin", f_rastrigin, 5.12 / 100.0},
    {"griewank", f_griewank, 6.0},
    {"weierstrass", f_weierstrass, 0.5 / 100.0},
    {"schwefel", f_schwefel, 10.0},
    {"happycat", f_happycat, 5.0 / 100.0},
    {"hgbat", f_hgbat, 5.0 / 100.0},
    {"katsuura", f_katsuura, 5.0 / 100.0},
};

const BaseEntry& base_entry(const std::string& name)
{
    for (const auto& e : kBases)
        if (name == e.name)
            return e;
    throw std::invalid_argument("eval_base: unknown function '" + name + "'");
}

// shift -> scale -> rotate -> base, with thread-local scratch to keep
// hot-path evaluation allocation-free
struct SimpleFunc {
    std::vector<double> shift;
    std::vector<std::vector<double>> rot; // empty = identity
    double scale = 1.0;
    BaseFn base = nullptr;
};

double eval_simple(const SimpleFunc& sf, const std::vector<double>& x)
{
    thread_local std::vector<double> y, z;
    const std::size_t dim = x.size();
    y.resize(dim);
    for (std::size_t d = 0; d < dim; ++d)
        y[d] = (x[d] - sf.shift[d]) * sf.scale;
    if (sf.rot.empty())
        return sf.base(y);
    z.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        double acc = 0.0;
        const std::vector<double>& row = sf.rot[i];
        for (std::size_t j = 0; j < dim; ++j)
            acc += row[j] * y[j];
        z[i] = acc;
    }
    return sf.base(z);
}

struct HybridGroup {
    int start = 0, len = 0;
    double scale = 1.0;
    BaseFn base = nullptr;
};

struct HybridFunc {
    std::vector<double> shift;
    std::vector<std::vector<double>> rot;
    std::vector<int> perm;
    std::vector<HybridGroup> groups;
};

double eval_hybrid(const HybridFunc& hf, const std::vector<double>& x)
{
    thread_local std::vector<double> y, z, sub;
    const std::size_t dim = x.size();
    y.resize(dim);
    z.resize(dim);
    for (std::size_t d = 0; d < dim; ++d)
        y[d] = x[d] - hf.shift[d];
    for (std::size_t i = 0; i < dim; ++i) {
        double acc = 0.0;
        const std::vector<double>& row = hf.rot[i];
        for (std::size_t j = 0; j < dim; ++j)
            acc += row[j] * y[j];
        z[i] = acc;
    }
    double total = 0.0;
    for (const auto& g : hf.groups) {
        sub.resize(g.len);
        for (int i = 0; i < g.len; ++i)
            sub[i] = z[hf.perm[g.start + i]] * g.scale;
        total += g.base(sub);
    }
    return total;
}

struct CompComponent {
    SimpleFunc func;
    double lambda = 1.0;
    double bias = 0.0;
};

struct CompFunc {
    std::vector<CompComponent> parts;
};

double eval_composition(const CompFunc& cf, const std::vector<double>& x)
{
    thread_local std::vector<double> d2, vals;
    const std::size_t m = cf.parts.size();
    d2.resize(m);
    vals.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& p = cf.parts[i];
        double s = 0.0;
        for (std::size_t d = 0; d < x.size(); ++d) {
            const double diff = x[d] - p.func.shift[d];
            s += diff * diff;
        }
        d2[i] = s;
        vals[i] = p.lambda * eval_simple(p.func, x) + p.bias;
    }
    const std::vector<double> w = composition_weights(d2);
    double out = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        out += w[i] * vals[i];
    return out;
}

std::vector<double> central_shift(int dim, const Bounds& b, Rng& rng)
{
    // optima kept inside the central 80% of the domain
    std::vector<double> o(dim);
    for (int d = 0; d < dim; ++d) {
        const double margin = 0.1 * (b.hi[d] - b.lo[d]);
        o[d] = rng.uniform(b.lo[d] + margin, b.hi[d] - margin);
    }
    return o;
}

} // namespace

const char* category_name(FunctionCategory c)
{
    switch (c) {
    case FunctionCategory::unimodal: return "unimodal";
    case FunctionCategory::multimodal: return "multimodal";
    case FunctionCategory::hybrid: return "hybrid";
    case FunctionCategory::composition: return "composition";
    }
    return "?";
}

double eval_base(const std::string& name, const std::vector<double>& z)
{
    return base_entry(name).fn(z);
}

double apply_transform(const TransformStack& stack,
                       const std::function<double(const std::vector<double>&)>& f_base,
                       const std::vector<double>& x)
{
    if (x.size() != stack.shift.size())
        throw std::invalid_argument("apply_transform: dimension mismatch");
    SimpleFunc sf;
    sf.shift = stack.shift;
    sf.rot = stack.rotation;
    sf.scale = stack.scale;
    const std::size_t dim = x.size();
    std::vector<double> y(dim), z(dim);
    for (std::size_t d = 0; d < dim; ++d)
        y[d] = (x[d] - stack.shift[d]) * stack.scale;
    if (stack.rotation.empty())
        return f_base(y);
    if (stack.rotation.size() != dim)
        throw std::invalid_argument("apply_transform: rotation dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < dim; ++j)
            acc += stack.rotation[i][j] * y[j];
        z[i] = acc;
    }
    return f_base(z);
}

std::vector<std::vector<double>> random_rotation(int dim, Rng& rng)
{
    // modified Gram-Schmidt with one re-orthogonalization pass on a
    // gaussian matrix; columns become the rotation's columns
    std::vector<std::vector<double>> cols(dim, std::vector<double>(dim));
    for (int j = 0; j < dim; ++j) {
        auto& c = cols[j];
        while (true) {
            for (int i = 0; i < dim; ++i)
                c[i] = rng.gaussian();
            for (int pass = 0; pass < 2; ++pass) {
                for (int prev = 0; prev < j; ++prev) {
                    double r = 0.0;
                    for (int i = 0; i < dim; ++i)
                        r += cols[prev][i] * c[i];
                    for (int i = 0; i < dim; ++i)
                        c[i] -= r * cols[prev][i];
                }
            }
            double norm = 0.0;
            for (int i = 0; i < dim; ++i)
                norm += c[i] * c[i];
            norm = std::sqrt(norm);
            if (norm > 1e-8) {
                for (int i = 0; i < dim; ++i)
                    c[i] /= norm;
                break;
            }
        }
    }
    std::vector<std::vector<double>> m(dim, std::vector<double>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m[i][j] = cols[j][i];
    return m;
}

double rotation_orthogonality_error(const std::vector<std::vector<double>>& m)
{
    const int dim = static_cast<int>(m.size());
    double worst = 0.0;
    for (int i = 0; i < dim; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < dim; ++j) {
            double acc = 0.0;
            for (int k = 0; k < dim; ++k)
                acc += m[k][i] * m[k][j];
            if (i == j)
                acc -= 1.0;
            row_sum += std::abs(acc);
        }
        worst = std::max(worst, row_sum);
    }
    return worst;
}

std::vector<double> composition_weights(const std::vector<double>& sq_dists)
{
    const std::size_t m = sq_dists.size();
    std::vector<double> w(m, 0.0);
    double d2min = sq_dists[0];
    for (double d : sq_dists)
        d2min = std::min(d2min, d);
    if (d2min == 0.0) {
        for (std::size_t i = 0; i < m; ++i)
            if (sq_dists[i] == 0.0) {
                w[i] = 1.0;
                return w;
            }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        w[i] = d2min / sq_dists[i]; // in (0, 1], overflow-free
        total += w[i];
    }
    for (double& v : w)
        v /= total;
    return w;
}

namespace {

struct SimpleSpec {
    const char* base;
    bool rotated;
};

// F1-F3 unimodal, F4-F16 multimodal analogs
constexpr SimpleSpec kSimpleSpecs[16] = {
    {"elliptic", true},    // F1
    {"bent-cigar", true},  // F2
    {"discus", true},      // F3
    {"rosenbrock", true},  // F4
    {"ackley", true},      // F5
    {"weierstrass", true}, // F6
    {"griewank", true},    // F7
    {"rastrigin", false},  // F8 (shift only)
    {"rastrigin", true},   // F9
    {"schwefel", false},   // F10 (shift only)
    {"schwefel", true},    // F11
    {"katsuura", true},    // F12
    {"happycat", true},    // F13
    {"hgbat", true},       // F14
    {"rosenbrock", true},  // F15
    {"ackley", true},      // F16
};

struct HybridSpec {
    std::vector<const char*> bases;
};

const std::vector<HybridSpec>& hybrid_specs()
{
    static const std::vector<HybridSpec> specs = {
        {{"elliptic", "rastrigin", "schwefel"}},                       // F17
        {{"bent-cigar", "hgbat", "rastrigin"}},                        // F18
        {{"griewank", "weierstrass", "rosenbrock", "ackley"}},         // F19
        {{"hgbat", "discus", "griewank", "rastrigin"}},                // F20
        {{"katsuura", "hgbat", "rosenbrock", "schwefel", "elliptic"}}, // F21
        {{"happycat", "katsuura", "griewank", "schwefel", "ackley"}},  // F22
    };
    return specs;
}

struct CompSpec {
    std::vector<std::pair<const char*, double>> parts; // (base, lambda)
};

const std::vector<CompSpec>& comp_specs()
{
    static const std::vector<CompSpec> specs = {
        {{{"rosenbrock", 1.0}, {"elliptic", 1e-6}, {"bent-cigar", 1e-6}, {"discus", 1e-6}, {"elliptic", 1e-6}}}, // F23
        {{{"schwefel", 1.0}, {"rastrigin", 1.0}, {"hgbat", 1.0}}},                                               // F24
        {{{"schwefel", 0.25}, {"rastrigin", 1.0}, {"weierstrass", 2.5}}},                                        // F25
        {{{"schwefel", 0.25}, {"happycat", 1.0}, {"elliptic", 1e-7}, {"weierstrass", 2.5}, {"griewank", 10.0}}}, // F26
        {{{"hgbat", 10.0}, {"rastrigin", 10.0}, {"schwefel", 2.5}, {"bent-cigar", 2.5e-3}, {"elliptic", 1e-6}}}, // F27
        {{{"ackley", 2.5}, {"griewank", 10.0}, {"rosenbrock", 2.5}, {"happycat", 5.0}, {"bent-cigar", 1e-4}}},   // F28
        {{{"katsuura", 1.0}, {"schwefel", 0.25}, {"griewank", 10.0}}},                                           // F29
        {{{"discus", 1e-6}, {"weierstrass", 2.5}, {"rastrigin", 1.0}}},                                          // F30
    };
    return specs;
}

std::vector<int> group_sizes(int dim, int wanted_groups)
{
    const int groups = std::min(wanted_groups, dim);
    std::vector<int> sizes(groups, dim / groups);
    for (int i = 0; i < dim % groups; ++i)
        ++sizes[i];
    return sizes;
}

} // namespace

std::vector<BenchmarkFunction> build_suite(int dim, std::uint64_t seed)
{
    return build_suite(dim, seed, {});
}

std::vector<BenchmarkFunction> build_suite(int dim, std::uint64_t seed,
                                           const std::vector<TransformStack>& official)
{
    if (dim < 2)
        throw std::invalid_argument("build_suite: need dim >= 2");

    const Bounds bounds = Bounds::cube(dim, -100.0, 100.0);
    Rng rng(seed);
    std::vector<BenchmarkFunction> suite;
    suite.reserve(30);

    auto finish = [&](BenchmarkFunction& bf) {
        bf.dim = dim;
        bf.bounds = bounds;
        bf.f_star = bf.eval(bf.optimum);
        suite.push_back(std::move(bf));
    };

    // F1-F16: single-base functions
    for (int fi = 0; fi < 16; ++fi) {
        const auto& spec = kSimpleSpecs[fi];
        const BaseEntry& be = base_entry(spec.base);
        auto sf = std::make_shared<SimpleFunc>();
        sf->shift = central_shift(dim, bounds, rng);
        if (spec.rotated)
            sf->rot = random_rotation(dim, rng);
        if (fi < static_cast<int>(official.size())) {
            sf->shift = official[fi].shift;
            sf->rot = official[fi].rotation;
        }
        sf->scale = be.scale;
        sf->base = be.fn;

        BenchmarkFunction bf;
        bf.id = "F" + std::to_string(fi + 1) + "-analog";
        bf.category = fi < 3 ? FunctionCategory::unimodal : FunctionCategory::multimodal;
        bf.optimum = sf->shift;
        if (!sf->rot.empty())
            bf.rotation_orthogonality.push_back(rotation_orthogonality_error(sf->rot));
        bf.eval = [sf](const std::vector<double>& x) { return eval_simple(*sf, x); };
        finish(bf);
    }

    // F17-F22: hybrids
    for (std::size_t hi = 0; hi < hybrid_specs().size(); ++hi) {
        const auto& spec = hybrid_specs()[hi];
        auto hf = std::make_shared<HybridFunc>();
        hf->shift = central_shift(dim, bounds, rng);
        hf->rot = random_rotation(dim, rng);
        hf->perm.resize(dim);
        std::iota(hf->perm.begin(), hf->perm.end(), 0);
        for (int i = dim - 1; i > 0; --i) {
            const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
            std::swap(hf->perm[i], hf->perm[j]);
        }
        const std::vector<int> sizes = group_sizes(dim, static_cast<int>(spec.bases.size()));
        int start = 0;
        for (std::size_t g = 0; g < sizes.size(); ++g) {
            const BaseEntry& be = base_entry(spec.bases[g]);
            hf->groups.push_back({start, sizes[g], be.scale, be.fn});
            start += sizes[g];
        }

        BenchmarkFunction bf;
        bf.id = "F" + std::to_string(17 + hi) + "-analog";
        bf.category = FunctionCategory::hybrid;
        bf.optimum = hf->shift;
        bf.rotation_orthogonality.push_back(rotation_orthogonality_error(hf->rot));
        bf.eval = [hf](const std::vector<double>& x) { return eval_hybrid(*hf, x); };
        finish(bf);
    }

    // F23-F30: compositions; the recorded optimum is the zero-bias
    // component's shift
    for (std::size_t ci = 0; ci < comp_specs().size(); ++ci) {
        const auto& spec = comp_specs()[ci];
        auto cf = std::make_shared<CompFunc>();
        for (std::size_t p = 0; p < spec.parts.size(); ++p) {
            const BaseEntry& be = base_entry(spec.parts[p].first);
            CompComponent comp;
            comp.func.shift = central_shift(dim, bounds, rng);
            comp.func.rot = random_rotation(dim, rng);
            comp.func.scale = be.scale;
            comp.func.base = be.fn;
            comp.lambda = spec.parts[p].second;
            comp.bias = 100.0 * static_cast<double>(p);
            cf->parts.push_back(std::move(comp));
        }

        BenchmarkFunction bf;
        bf.id = "F" + std::to_string(23 + ci) + "-analog";
        bf.category = FunctionCategory::composition;
        bf.optimum = cf->parts[0].func.shift;
        for (const auto& part : cf->parts)
            bf.rotation_orthogonality.push_back(rotation_orthogonality_error(part.func.rot));
        bf.eval = [cf](const std::vector<double>& x) { return eval_composition(*cf, x); };
        finish(bf);
    }

    return suite;
}

namespace {

std::vector<double> parse_real_line(const std::string& line, const std::string& path, int line_no)
{
    std::vector<double> vals;
    const char* s = line.data();
    const char* end = s + line.size();
    while (s < end) {
        while (s < end && (*s == ' ' || *s == '\t' || *s == '\r'))
            ++s;
        if (s >= end)
            break;
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(s, end, v);
        if (ec != std::errc{}) {
            const char* tok_end = s;
            while (tok_end < end && *tok_end != ' ' && *tok_end != '\t')
                ++tok_end;
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": malformed number '" +
                                     std::string(s, tok_end) + "'");
        }
        vals.push_back(v);
        s = ptr;
    }
    return vals;
}

} // namespace

std::vector<TransformStack> load_official_data(const std::string& path, int dim)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_official_data: cannot open '" + path + "'");

    std::vector<TransformStack> stacks;
    std::string line;
    int line_no = 0;
    while (true) {
        // skip blank lines between blocks
        std::vector<double> shift;
        int shift_line = 0;
        while (std::getline(in, line)) {
            ++line_no;
            std::vector<double> vals = parse_real_line(line, path, line_no);
            if (!vals.empty()) {
                shift = std::move(vals);
                shift_line = line_no;
                break;
            }
        }
        if (shift.empty())
            break; // clean EOF
        if (static_cast<int>(shift.size()) != dim)
            throw std::runtime_error(path + ":" + std::to_string(shift_line) +
                                     ": shift vector: expected " + std::to_string(dim) +
                                     " values, found " + std::to_string(shift.size()));
        TransformStack st;
        st.shift = std::move(shift);
        st.rotation.reserve(dim);
        for (int r = 0; r < dim; ++r) {
            if (!std::getline(in, line))
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": expected " + std::to_string(dim) +
                                         " rotation rows, found " + std::to_string(r));
            ++line_no;
            std::vector<double> row = parse_real_line(line, path, line_no);
            if (static_cast<int>(row.size()) != dim)
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": rotation row: expected " + std::to_string(dim) +
                                         " values, found " + std::to_string(row.size()));
            st.rotation.push_back(std::move(row));
        }
        stacks.push_back(std::move(st));
    }
    return stacks;
}

std::string suite_manifest_json(const std::vector<BenchmarkFunction>& suite,
                                int dim, std::uint64_t seed)
{
    std::ostringstream out;
    out << "{\"dim\":" << dim << ",\"seed\":" << seed << ",\"functions\":[";
    char buf[40];
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const auto& f = suite[i];
        std::snprintf(buf, sizeof(buf), "%.17g", f.f_star);
        out << (i ? "," : "") << "{\"id\":\"" << f.id << "\",\"category\":\""
            << category_name(f.category) << "\",\"dim\":" << f.dim
            << ",\"f_star\":" << buf << ",\"seed\":" << seed << "}";
    }
    out << "]}";
    return out.str();
}

} // namespace lpso
