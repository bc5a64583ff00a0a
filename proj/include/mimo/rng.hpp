#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace mimo {

// SplitMix64 step. Used to whiten seed material.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives a task seed from a master seed plus counters (stream id, channel
// index, ...). Same words in, same seed out, independent of execution order.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words) {
    std::uint64_t state = 0x243f6a8885a308d3ULL;
    std::uint64_t out = 0;
    for (std::uint64_t w : words) {
        state ^= w;
        out = splitmix64(state) ^ (out * 0x100000001b3ULL);
    }
    return out;
}

// Deterministic random source. The raw generator (mt19937_64) has a
// standard-specified output sequence, and all floating-point conversions are
// done here instead of std::*_distribution, so identical seeds give identical
// streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller; the second deviate of each pair is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Circularly symmetric complex Gaussian with E|z|^2 = 1.
    std::complex<double> circular_gaussian() {
        return {normal() * 0.7071067811865475244, normal() * 0.7071067811865475244};
    }

    // n < 64 random bits, most significant first when split by the caller.
    std::uint32_t bits(unsigned n) {
        if (bit_count_ < n) {
            bit_buffer_ = raw();
            bit_count_ = 64;
        }
        std::uint32_t out = static_cast<std::uint32_t>(bit_buffer_ & ((1ULL << n) - 1));
        bit_buffer_ >>= n;
        bit_count_ -= n;
        return out;
    }

    // Uniform integer in [0, n).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
    std::uint64_t bit_buffer_ = 0;
    unsigned bit_count_ = 0;
};

}  // namespace mimo
