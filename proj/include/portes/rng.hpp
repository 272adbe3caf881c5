#pragma once

#include <cstdint>
#include <random>

namespace portes {

/// Deterministic random stream.
///
/// Every Monte Carlo replicate owns a private stream derived from
/// (seed, replicate index) so that results are bit-identical regardless of
/// how replicates are scheduled across workers. All variate transforms are
/// implemented here (rather than via std::*_distribution) so draws are
/// pinned to this library, not to the standard library vendor.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(mix(mix(seed))) {}

    /// Stream for one replicate; `attempt` separates retry streams after a
    /// failed refit.
    static Rng replicate_stream(std::uint64_t seed, std::uint64_t replicate,
                                std::uint64_t attempt = 0) {
        std::uint64_t s = mix(seed);
        s = mix(s ^ (0x9e3779b97f4a7c15ull + replicate));
        s = mix(s ^ (0xbf58476d1ce4e5b9ull + attempt));
        return Rng(s);
    }

    /// Uniform draw strictly inside (0, 1).
    double uniform() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    /// Standard normal (Box-Muller, spare cached).
    double normal();

    /// Exponential with rate 1.
    double exponential();

    /// Gamma(shape, scale 1) via Marsaglia-Tsang.
    double gamma(double shape);

    double chi_square(double df) { return 2.0 * gamma(0.5 * df); }

    /// Student t with integer degrees of freedom.
    double student_t(int dft);

    /// Uniform index in [0, n).
    std::size_t uniform_index(std::size_t n) {
        auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace portes
