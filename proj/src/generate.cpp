#include "generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace embrace {

std::uint64_t DeterministicRng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw Error(ErrorCode::invalid_argument, "empty range");
    }
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t threshold = max - max % bound;  // largest multiple of bound
    std::uint64_t draw = engine_();
    while (draw >= threshold) draw = engine_();
    return draw % bound;
}

std::int64_t DeterministicRng::in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

// Moves a uniform k-subset (in uniform order) to the front.
template <typename T>
void partial_shuffle(std::vector<T>& v, std::size_t k, DeterministicRng& rng) {
    for (std::size_t i = 0; i < k && i + 1 < v.size(); ++i) {
        std::swap(v[i], v[i + rng.below(v.size() - i)]);
    }
}

// n choose k with saturation, to size up enumeration work.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        if (result > cap) return cap + 1;
        result = result * (n - k + i) / i;
    }
    return std::min(result, cap + 1);
}

BasisSet random_spanning_tree(const Digraph& d, DeterministicRng& rng) {
    std::vector<ElementId> order(d.arc_count());
    std::iota(order.begin(), order.end(), ElementId(0));
    partial_shuffle(order, order.size(), rng);
    std::vector<VertexId> parent(d.vertex_count());
    std::iota(parent.begin(), parent.end(), VertexId(0));
    auto find = [&parent](VertexId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::vector<ElementId> picked;
    picked.reserve(d.vertex_count() - 1);
    for (ElementId id : order) {
        const VertexId a = find(d.arc(id).tail);
        const VertexId b = find(d.arc(id).head);
        if (a == b) continue;
        parent[a] = b;
        picked.push_back(id);
        if (picked.size() + 1 == d.vertex_count()) break;
    }
    return BasisSet(std::move(picked));
}

}  // namespace

Instance gen_graphic(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 2) throw Error(ErrorCode::invalid_argument, "need at least 2 vertices");
    if (m + 1 < n) throw Error(ErrorCode::invalid_argument, "need at least n-1 arcs");
    if (m > n * (n - 1)) {
        throw Error(ErrorCode::generation_failed,
                    "only " + std::to_string(n * (n - 1)) + " distinct arcs exist");
    }
    DeterministicRng rng(seed);

    // Random vertex order; the backbone path along it keeps the digraph
    // connected and guarantees one embracing tree from front to back.
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId(0));
    partial_shuffle(order, n, rng);
    const VertexId s = order.front();
    const VertexId t = order.back();

    std::vector<Arc> arcs;
    arcs.reserve(m);
    std::vector<char> used(n * n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        arcs.push_back(Arc{order[i], order[i + 1]});
        used[order[i] * n + order[i + 1]] = 1;
    }
    std::vector<std::uint32_t> free_pairs;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            if (u != v && !used[u * n + v]) free_pairs.push_back(u * n + v);
        }
    }
    partial_shuffle(free_pairs, m - (n - 1), rng);
    for (std::size_t i = 0; i < m - (n - 1); ++i) {
        arcs.push_back(Arc{static_cast<VertexId>(free_pairs[i] / n),
                           static_cast<VertexId>(free_pairs[i] % n)});
    }
    Digraph d(n, std::move(arcs));

    BasisSet A{}, B{};
    constexpr std::size_t enumeration_budget = 5'000'000;
    if (n <= 8 && binomial_capped(m, n - 1, enumeration_budget) <= enumeration_budget) {
        const std::vector<BasisSet> trees = all_st_embracing_trees(d, s, t);
        if (trees.empty()) {
            throw Error(ErrorCode::internal_error, "backbone tree lost during generation");
        }
        if (trees.size() == 1) {
            A = B = trees.front();
        } else {
            const std::size_t i = rng.below(trees.size());
            std::size_t j = rng.below(trees.size() - 1);
            if (j >= i) ++j;
            A = trees[i];
            B = trees[j];
        }
    } else {
        // Random tree walks: collect embracing trees until two distinct
        // ones appear; the backbone (arcs 0..n-2) is the safety net.
        std::vector<BasisSet> found;
        for (std::size_t attempt = 0; attempt < 200 && found.size() < 2; ++attempt) {
            BasisSet tree = random_spanning_tree(d, rng);
            if (!is_st_embracing(d, tree, s, t)) continue;
            if (found.empty() || !(found.front() == tree)) found.push_back(std::move(tree));
        }
        if (found.empty()) {
            std::vector<ElementId> backbone(n - 1);
            std::iota(backbone.begin(), backbone.end(), ElementId(0));
            found.push_back(BasisSet(std::move(backbone)));
        }
        A = found.front();
        B = found.back();
    }

    Instance instance{Instance::Kind::graphic, std::move(d), Anchor::of_vertices(s, t),
                      std::move(A), std::move(B), seed};
    validate_instance(instance);
    return instance;
}

Instance gen_affine(std::size_t d, std::size_t count, std::uint64_t seed) {
    if (d < 1) throw Error(ErrorCode::invalid_argument, "dimension must be at least 1");
    if (count < 2 * (d + 1)) {
        throw Error(ErrorCode::invalid_argument,
                    "need at least " + std::to_string(2 * (d + 1)) + " points");
    }
    DeterministicRng rng(seed);

    for (std::size_t attempt = 0; attempt < 500; ++attempt) {
        PointConfiguration config;
        config.dimension = d;
        config.points.reserve(count + 1);
        for (std::size_t i = 0; i < count; ++i) {
            RationalPoint p(d);
            bool zero = true;
            do {
                zero = true;
                for (std::size_t c = 0; c < d; ++c) {
                    p[c] = Rational(rng.in_range(-40, 40), rng.in_range(1, 12));
                    if (p[c] != 0) zero = false;
                }
            } while (zero);  // the origin is reserved for the anchor
            config.points.push_back(std::move(p));
        }
        config.points.push_back(RationalPoint(d, Rational(0)));
        config.anchor_index = static_cast<ElementId>(count);

        if (!check_general_position(config).ok) continue;

        std::vector<BasisSet> embracing;
        bool duplicate = false;
        for (std::size_t i = 0; i < count && !duplicate; ++i) {
            for (std::size_t j = i + 1; j < count; ++j) {
                if (config.points[i] == config.points[j]) duplicate = true;
            }
        }
        if (duplicate) continue;
        // all (d+1)-subsets of the count non-anchor points
        {
            std::vector<ElementId> idx(d + 1);
            std::iota(idx.begin(), idx.end(), ElementId(0));
            while (true) {
                BasisSet simplex{std::vector<ElementId>(idx)};
                if (is_zero_embracing(config, simplex)) embracing.push_back(std::move(simplex));
                std::size_t i = d + 1;
                while (i > 0 && idx[i - 1] == count - (d + 1) + (i - 1)) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < d + 1; ++j) idx[j] = idx[j - 1] + 1;
            }
        }

        std::vector<std::pair<std::size_t, std::size_t>> disjoint;
        for (std::size_t i = 0; i < embracing.size(); ++i) {
            for (std::size_t j = i + 1; j < embracing.size(); ++j) {
                if (embracing[i].intersection_size(embracing[j]) == 0) {
                    disjoint.emplace_back(i, j);
                }
            }
        }
        if (disjoint.empty()) continue;

        auto [ia, ib] = disjoint[rng.below(disjoint.size())];
        if (rng.below(2) == 1) std::swap(ia, ib);
        Instance instance{Instance::Kind::affine, std::move(config),
                          Anchor::of_element(static_cast<ElementId>(count)),
                          std::move(embracing[ia]), std::move(embracing[ib]), seed};
        validate_instance(instance);
        return instance;
    }
    throw Error(ErrorCode::generation_failed,
                "no general-position draw with two disjoint embracing simplices");
}

}  // namespace embrace
