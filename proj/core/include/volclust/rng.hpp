#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace volclust {

/// SplitMix64 mixing step. Used for seed derivation only.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

/// Child-stream seed: documented splitting rule for parallel or per-task
/// generators. Distinct streams of the same master seed are independent.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) ^ stream);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stream_name) {
    return derive_seed(master, fnv1a64(stream_name));
}

/// Deterministic random source. The engine is std::mt19937_64 (exactly
/// specified by the standard) and every distribution is implemented here
/// rather than taken from <random>, so a seed reproduces the identical
/// stream on any platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe as a log() argument.
    double next_open_unit() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

    /// Unbiased uniform integer on [0, bound) via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return x % bound;
        }
    }

    /// Standard normal draw, Box-Muller form. Pairs are generated together
    /// and the second value is cached.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = next_open_unit();
        const double u2 = next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace volclust
