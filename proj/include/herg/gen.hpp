#pragma once

// Deterministic pseudo-random graphs and the verification corpus.
// PRNG: SplitMix64 with a 64-bit seed; bounded draws take the output modulo
// the bound. The draw order is fixed (edge endpoints, then half-ribbon
// vertices, then twist bits, then one Fisher-Yates shuffle per vertex in
// index order), so a seed pins the graph byte for byte.

#include <cstdint>
#include <string>
#include <vector>

#include "herg/herg.hpp"

namespace herg {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

Herg gen(int vertices, int edges, int halves, std::uint64_t seed, bool allow_twists);

struct NamedHerg {
    std::string name;
    Herg g;
};

// Seeded sweep over v in [1,4], e in [0,max_edges], |H| in [0,3], with and
// without twists, two samples per combination, deduplicated up to
// isomorphism.
std::vector<NamedHerg> corpus(std::uint64_t seed, int max_edges);

}  // namespace herg
