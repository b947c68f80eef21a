#pragma once

#include <array>
#include <cstdint>

namespace kshr {

// Deterministic PRNG used by every stochastic operation in the library:
// xoshiro256** seeded through splitmix64. <random> engines/distributions
// are not specified identically across standard library implementations;
// this one gives bit-identical sequences for a fixed seed on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t z = seed;
        for (auto& word : state_) {
            word = splitmix64(z);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53 bits of randomness.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). Fixed-point multiply keeps the mapping
    // platform-independent; the bias is below n / 2^64.
    std::uint64_t next_below(std::uint64_t n) {
        __extension__ using uint128 = unsigned __int128;
        return static_cast<std::uint64_t>(
            (static_cast<uint128>(next_u64()) * n) >> 64);
    }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Decorrelated sub-seed for stream `index` of a master seed. Used to give
    // every Monte Carlo run (or per-node simulation) its own generator so
    // results do not depend on execution order.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
        std::uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
        z = splitmix64(z);
        return splitmix64(z);
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& z) {
        z += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = z;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace kshr
