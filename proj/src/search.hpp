#pragma once

// Exact brute-force oracles over embracing bases: breadth-first search
// on the single-exchange graph (optionally monotone-restricted), plus
// ordered-pair reachability under symmetric exchanges. All searches
// return exact values; depth- or size-bounded runs say so explicitly
// instead of reporting unreachability.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "oracle.hpp"

namespace embrace {

enum class GroundMode : std::uint8_t {
    union_of_endpoints,  // exchanged-in elements drawn from A + B only
    full,                // exchanged-in elements drawn from the whole ground set
};

struct SearchOptions {
    GroundMode ground_mode = GroundMode::union_of_endpoints;
    bool monotone_only = false;            // forbid steps that shrink |T & B|
    std::optional<std::size_t> max_depth;  // stop expanding past this depth
    std::size_t pair_cap = 1'000'000;      // reachable-pair budget
};

struct DistanceResult {
    enum class Status {
        finite,
        infinite,              // component of the start exhausted, target absent
        unknown_beyond_bound,  // search stopped by max_depth first
    };
    Status status = Status::infinite;
    std::size_t distance = 0;                 // meaningful iff finite
    std::optional<ExchangeSequence> witness;  // present iff finite; length = distance
    std::size_t explored = 0;                 // bases discovered, start included
};

// One line per step `- <removed> + <added>`, preceded by
// `start: <sorted ids>` and followed by `distance: <k|infinite|unknown>`.
std::string format_distance_result(const BasisSet& start, const DistanceResult& result);

// |A \ B|; the length of the shortest unrestricted exchange sequence
// and a lower bound for every embracing distance.
std::size_t unoriented_distance(const BasisSet& A, const BasisSet& B);

// Minimum number of single-element exchanges joining A to B through
// embracing bases only, with a lexicographically smallest witness.
DistanceResult embracing_distance(const OrientedMatroidOracle& oracle, const BasisSet& A,
                                  const BasisSet& B, const SearchOptions& options = {});

// embracing_distance with the monotone restriction switched on.
DistanceResult monotone_embracing_distance(const OrientedMatroidOracle& oracle,
                                           const BasisSet& A, const BasisSet& B,
                                           SearchOptions options = {});

struct PairReachabilityReport {
    bool target_reached = false;    // (B, A) reached from (A, B)
    std::size_t min_exchanges = 0;  // meaningful iff target_reached
    std::vector<std::pair<BasisSet, BasisSet>> reachable_pairs;  // discovery order
    bool truncated = false;  // pair_cap or max_depth cut the search short
    std::size_t explored = 0;
};

// Breadth-first search over ordered basis pairs. A move picks e in the
// first basis only and f in the second only such that first-e+f and
// second-f+e are both embracing bases. When the search is truncated,
// an unreached target is inconclusive rather than proven unreachable.
PairReachabilityReport symmetric_exchange_reachability(const OrientedMatroidOracle& oracle,
                                                       const BasisSet& A, const BasisSet& B,
                                                       const SearchOptions& options = {});

}  // namespace embrace
