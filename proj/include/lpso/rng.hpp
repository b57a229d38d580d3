#ifndef LPSO_RNG_HPP
#define LPSO_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lpso {

// Deterministic random stream. mt19937_64 is fully specified by the
// standard, and every derived draw (uniform doubles, bounded integers,
// gaussians) is implemented here rather than via std distributions, whose
// output is implementation-defined. This makes runs replay bit-for-bit
// from a seed on any platform.
//
// Draw order contract: callers consume the stream in a documented order;
// see Swarm::init and Swarm::step.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Test hook: replays a fixed sequence of [0,1) uniforms and fails loudly
    // when the sequence is exhausted.
    static Rng scripted(std::vector<double> uniforms)
    {
        Rng r(0);
        r.scripted_ = true;
        r.script_ = std::move(uniforms);
        return r;
    }

    // uniform on [0, 1), 53-bit resolution
    double uniform01()
    {
        if (scripted_) {
            if (script_pos_ >= script_.size())
                throw std::runtime_error("scripted rng exhausted");
            return script_[script_pos_++];
        }
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // uniform integer in [0, n), unbiased via rejection
    std::uint64_t below(std::uint64_t n)
    {
        if (n == 0)
            throw std::invalid_argument("Rng::below: n must be positive");
        if (scripted_)
            return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    // standard normal, Marsaglia polar method (pair cached)
    double gaussian()
    {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

private:
    std::mt19937_64 gen_;
    std::vector<double> script_;
    std::size_t script_pos_ = 0;
    bool scripted_ = false;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace lpso

#endif
