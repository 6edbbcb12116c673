#pragma once

// Seeded random streams keyed by a path of integers, e.g. (seed, stage, trial).
// Each path yields an independent std::mt19937_64 seeded through std::seed_seq,
// so any stream can be regenerated on its own without replaying the others.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace lowwafom {

using Rng = std::mt19937_64;

/// Stream domains, so that different consumers never share a path.
enum class StreamTag : std::uint64_t {
    search_trial = 1,
    genz_instance = 2,
    monte_carlo = 3,
    seqgen_trial = 4,
    test = 99,
};

inline Rng make_stream(std::uint64_t seed, StreamTag tag, std::initializer_list<std::uint64_t> path) {
    std::vector<std::uint32_t> words;
    words.reserve(2 * (path.size() + 2));
    auto push = [&](std::uint64_t v) {
        words.push_back(static_cast<std::uint32_t>(v));
        words.push_back(static_cast<std::uint32_t>(v >> 32));
    };
    push(seed);
    push(static_cast<std::uint64_t>(tag));
    for (std::uint64_t v : path) push(v);
    std::seed_seq seq(words.begin(), words.end());
    return Rng(seq);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace lowwafom
