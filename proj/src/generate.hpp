#pragma once

// Seed-deterministic random instance generation. All randomness flows
// through one named engine (std::mt19937_64, whose output sequence the
// C++ standard fixes) and rejection-sampled uniform draws, so a seed
// reproduces the same instance on any platform.

#include <cstdint>
#include <random>

#include "instance.hpp"

namespace embrace {

class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform draw from [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);
    // Uniform draw from [lo, hi], inclusive.
    std::int64_t in_range(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

// Connected digraph on n vertices with m distinct arcs: a directed
// backbone path over a random vertex order (so a directed s-t tree
// path always exists), random extra arcs, and two embracing spanning
// trees drawn uniformly from the exhaustive enumeration when feasible
// (randomized tree walks otherwise). A equals B only when the digraph
// admits a single embracing tree.
Instance gen_graphic(std::size_t n, std::size_t m, std::uint64_t seed);

// `count` random rational points around the origin in dimension d,
// redrawn until the configuration (with the origin appended as the
// anchor) is in general position and contains two disjoint simplices
// that strictly embrace the origin.
Instance gen_affine(std::size_t d, std::size_t count, std::uint64_t seed);

}  // namespace embrace
