#pragma once

#include <cstdint>
#include <string_view>

#include <random>

namespace psn {

// Deterministic random source. All distribution transforms are spelled out
// here instead of using std <random> distributions, whose output is
// implementation-defined; mt19937_64 itself is bit-exact everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi], inclusive, rejection-sampled to stay unbiased.
    int64_t uniform_int(int64_t lo, int64_t hi);

    // Standard normal via Box-Muller; one spare value is cached.
    double normal();

    // Named substream derivation so parallel/per-item seeds never collide.
    static uint64_t derive(uint64_t base, std::string_view stream, uint64_t index = 0);

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace psn
