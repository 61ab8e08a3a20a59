#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace gtam {

// Input/contract violation (bad dimensions, malformed files, invalid script step).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured bound was exhausted before the result was complete.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solver failed to produce a verified result within its retry budget.
struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic RNG. Every randomized operation takes one of these explicitly;
// identical seed means identical output.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    // Uniform integer in [0, n).
    uint64_t below(uint64_t n) {
        std::uniform_int_distribution<uint64_t> d(0, n - 1);
        return d(eng_);
    }

    uint64_t bits() { return eng_(); }

    // Derive an independent stream for a sub-task.
    Rng fork(uint64_t salt) { return Rng(eng_() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

private:
    std::mt19937_64 eng_;
};

inline int ceil_log2(uint64_t n) {
    int k = 0;
    while ((1ULL << k) < n) ++k;
    return k;
}

inline int floor_log2(uint64_t n) {
    int k = 0;
    while ((2ULL << k) <= n) ++k;
    return k;
}

} // namespace gtam
