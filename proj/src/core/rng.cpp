#include "core/rng.hpp"

#include <cmath>

#include "core/error.hpp"

namespace psn {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

int64_t Rng::uniform_int(int64_t lo, int64_t hi) {
    if (lo > hi) fail_invalid("uniform_int: empty range");
    uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<int64_t>(eng_()); // full 64-bit span
    uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    uint64_t v;
    do {
        v = eng_();
    } while (v >= limit);
    return lo + static_cast<int64_t>(v % range);
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1, u2;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    u2 = uniform();
    double mag = std::sqrt(-2.0 * std::log(u1));
    double ang = 2.0 * M_PI * u2;
    spare_ = mag * std::sin(ang);
    has_spare_ = true;
    return mag * std::cos(ang);
}

uint64_t Rng::derive(uint64_t base, std::string_view stream, uint64_t index) {
    // FNV-1a over the stream name, then splitmix finalizers fold in base and index.
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : stream) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    h = splitmix64(h ^ splitmix64(base));
    return splitmix64(h ^ splitmix64(index + 0x51ed2701ULL));
}

} // namespace psn
