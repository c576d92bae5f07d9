#ifndef GFW_RNG_HPP
#define GFW_RNG_HPP

#include <cmath>
#include <cstdint>

namespace gfw {

/// Counter-based 64-bit PRNG: output i of stream `seed` is the splitmix64
/// finalizer applied to seed + (i+1) * golden-ratio increment. Every draw is
/// a pure function of (seed, counter), so streams are reproducible across
/// platforms and the state is trivially copyable.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    /// Derive an independent stream (e.g. one per trial).
    CounterRng fork(std::uint64_t stream_id) const {
        return CounterRng(mix(seed_ ^ mix(stream_id + 0x5851F42D4C957F2DULL)));
    }

    std::uint64_t next_u64() {
        ++counter_;
        return mix(seed_ + counter_ * 0x9E3779B97F4A7C15ULL);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n), n >= 1. Simple modulo; the bias is
    /// negligible for the small n used here and keeps the stream layout flat.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    /// Standard normal via the trigonometric Box-Muller transform; the pair
    /// (cos, sin) is consumed in that order, the second value is cached.
    double next_normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log1p(-u1));
        double theta = 2.0 * M_PI * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

    std::uint64_t seed() const { return seed_; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace gfw

#endif
