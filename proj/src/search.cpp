#include "search.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace embrace {

namespace {

struct IdVectorHash {
    std::size_t operator()(const std::vector<ElementId>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (ElementId e : v) {
            h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

void check_endpoint(const OrientedMatroidOracle& oracle, const BasisSet& basis,
                    const char* which) {
    if (!oracle.is_basis(basis)) {
        throw Error(ErrorCode::not_a_basis, std::string(which) + " is not a basis");
    }
    if (!oracle.is_embracing(basis)) {
        throw Error(ErrorCode::not_embracing,
                    std::string(which) + " is not an embracing basis");
    }
}

// Elements a search step may bring in: the whole ground set or just
// the endpoints' union, minus the anchor in either case.
std::vector<ElementId> addable_pool(const OrientedMatroidOracle& oracle, const BasisSet& A,
                                    const BasisSet& B, GroundMode mode) {
    std::vector<ElementId> pool;
    if (mode == GroundMode::full) {
        pool.reserve(oracle.ground_size());
        for (ElementId e = 0; e < oracle.ground_size(); ++e) pool.push_back(e);
    } else {
        std::set_union(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(pool));
    }
    std::erase(pool, oracle.anchor_element_id());
    return pool;
}

}  // namespace

std::size_t unoriented_distance(const BasisSet& A, const BasisSet& B) {
    if (A.size() != B.size()) {
        throw Error(ErrorCode::cardinality_mismatch,
                    "bases have sizes " + std::to_string(A.size()) + " and " +
                        std::to_string(B.size()));
    }
    return A.difference(B).size();
}

DistanceResult embracing_distance(const OrientedMatroidOracle& oracle, const BasisSet& A,
                                  const BasisSet& B, const SearchOptions& options) {
    check_endpoint(oracle, A, "start");
    check_endpoint(oracle, B, "target");

    DistanceResult result;
    if (A == B) {
        result.status = DistanceResult::Status::finite;
        result.witness = ExchangeSequence{A, {}};
        result.explored = 1;
        return result;
    }

    const std::vector<ElementId> pool = addable_pool(oracle, A, B, options.ground_mode);

    struct Node {
        BasisSet basis;
        std::uint32_t parent = 0;
        ExchangeStep step{};
        std::uint32_t depth = 0;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::vector<ElementId>, std::uint32_t, IdVectorHash> index;
    nodes.push_back(Node{A});
    index.emplace(A.elements(), 0u);

    // FIFO processing with (removed, added)-ascending expansion yields
    // the lexicographically smallest witness among shortest ones.
    std::optional<std::uint32_t> found;
    bool bounded_out = false;
    for (std::size_t head = 0; head < nodes.size() && !found; ++head) {
        const std::uint32_t depth = nodes[head].depth;
        if (options.max_depth && depth >= *options.max_depth) {
            bounded_out = true;
            continue;
        }
        const BasisSet current = nodes[head].basis;  // copy: nodes may reallocate
        const std::size_t floor =
            options.monotone_only ? current.intersection_size(B) : 0;
        for (ElementId removed : current) {
            for (ElementId added : pool) {
                if (current.contains(added)) continue;
                BasisSet next = current.with_exchange(removed, added);
                if (index.contains(next.elements())) continue;
                if (!oracle.is_basis(next)) continue;
                if (options.monotone_only && next.intersection_size(B) < floor) continue;
                if (!oracle.is_embracing(next)) continue;
                index.emplace(next.elements(), static_cast<std::uint32_t>(nodes.size()));
                const bool is_target = next == B;
                nodes.push_back(Node{std::move(next), static_cast<std::uint32_t>(head),
                                     ExchangeStep{removed, added}, depth + 1});
                if (is_target) {
                    found = static_cast<std::uint32_t>(nodes.size() - 1);
                    break;
                }
            }
            if (found) break;
        }
    }

    result.explored = nodes.size();
    if (found) {
        std::vector<ExchangeStep> steps;
        for (std::uint32_t v = *found; v != 0; v = nodes[v].parent) {
            steps.push_back(nodes[v].step);
        }
        std::reverse(steps.begin(), steps.end());
        result.status = DistanceResult::Status::finite;
        result.distance = steps.size();
        result.witness = ExchangeSequence{A, std::move(steps)};
    } else {
        result.status = bounded_out ? DistanceResult::Status::unknown_beyond_bound
                                    : DistanceResult::Status::infinite;
    }
    return result;
}

DistanceResult monotone_embracing_distance(const OrientedMatroidOracle& oracle,
                                           const BasisSet& A, const BasisSet& B,
                                           SearchOptions options) {
    options.monotone_only = true;
    return embracing_distance(oracle, A, B, options);
}

PairReachabilityReport symmetric_exchange_reachability(const OrientedMatroidOracle& oracle,
                                                       const BasisSet& A, const BasisSet& B,
                                                       const SearchOptions& options) {
    check_endpoint(oracle, A, "start");
    check_endpoint(oracle, B, "target");

    struct PairNode {
        BasisSet first;
        BasisSet second;
        std::uint32_t depth = 0;
    };
    auto key_of = [](const BasisSet& s, const BasisSet& t) {
        std::vector<ElementId> key;
        key.reserve(s.size() + t.size());
        key.insert(key.end(), s.begin(), s.end());
        key.insert(key.end(), t.begin(), t.end());
        return key;
    };

    PairReachabilityReport report;
    std::vector<PairNode> nodes;
    std::unordered_map<std::vector<ElementId>, std::uint32_t, IdVectorHash> index;
    nodes.push_back(PairNode{A, B, 0});
    index.emplace(key_of(A, B), 0u);
    if (A == B) {
        report.target_reached = true;
        report.min_exchanges = 0;
    }

    // The search runs to exhaustion so the reachable set is complete;
    // the target's first discovery already fixes the minimum.
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        const std::uint32_t depth = nodes[head].depth;
        if (options.max_depth && depth >= *options.max_depth) {
            report.truncated = true;
            continue;
        }
        const BasisSet first = nodes[head].first;
        const BasisSet second = nodes[head].second;
        const std::vector<ElementId> outs = first.difference(second);
        const std::vector<ElementId> ins = second.difference(first);
        for (ElementId e : outs) {
            for (ElementId f : ins) {
                BasisSet next_first = first.with_exchange(e, f);
                BasisSet next_second = second.with_exchange(f, e);
                std::vector<ElementId> key = key_of(next_first, next_second);
                if (index.contains(key)) continue;
                if (!oracle.is_basis(next_first) || !oracle.is_basis(next_second)) continue;
                if (!oracle.is_embracing(next_first) || !oracle.is_embracing(next_second)) {
                    continue;
                }
                if (nodes.size() >= options.pair_cap) {
                    report.truncated = true;
                    continue;
                }
                if (!report.target_reached && next_first == B && next_second == A) {
                    report.target_reached = true;
                    report.min_exchanges = depth + 1;
                }
                index.emplace(std::move(key), static_cast<std::uint32_t>(nodes.size()));
                nodes.push_back(
                    PairNode{std::move(next_first), std::move(next_second), depth + 1});
            }
        }
    }

    report.explored = nodes.size();
    report.reachable_pairs.reserve(nodes.size());
    for (PairNode& node : nodes) {
        report.reachable_pairs.emplace_back(std::move(node.first), std::move(node.second));
    }
    return report;
}

std::string format_distance_result(const BasisSet& start, const DistanceResult& result) {
    std::ostringstream os;
    os << "start:";
    for (ElementId e : start) os << ' ' << e;
    os << '\n';
    if (result.witness) {
        for (const ExchangeStep& step : result.witness->steps) {
            os << "- " << step.removed << " + " << step.added << '\n';
        }
    }
    os << "distance: ";
    switch (result.status) {
        case DistanceResult::Status::finite:
            os << result.distance;
            break;
        case DistanceResult::Status::infinite:
            os << "infinite";
            break;
        case DistanceResult::Status::unknown_beyond_bound:
            os << "unknown";
            break;
    }
    os << '\n';
    return os.str();
}

}  // namespace embrace
