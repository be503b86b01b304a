#include "digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace embrace {

namespace {

// Union-find with path halving over reusable per-thread buffers; sits
// on the hot path of every basis test.
struct UnionFindScratch {
    std::vector<VertexId> parent;

    void reset(std::size_t n) {
        parent.resize(n);
        std::iota(parent.begin(), parent.end(), VertexId(0));
    }

    VertexId find(VertexId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // False when the endpoints were already connected.
    bool unite(VertexId a, VertexId b) {
        VertexId ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    }
};

thread_local UnionFindScratch uf_scratch;
thread_local TreeWalker local_walker;

void resolve_anchor_endpoints(const Digraph& d, const Anchor& anchor, VertexId& tail,
                              VertexId& head, ElementId& id) {
    if (anchor.is_element()) {
        id = anchor.element();
        if (id >= d.arc_count()) {
            throw Error(ErrorCode::invalid_argument,
                        "anchor arc id " + std::to_string(id) + " out of range");
        }
        tail = d.arc(id).tail;
        head = d.arc(id).head;
    } else {
        tail = anchor.source();
        head = anchor.target();
        if (tail >= d.vertex_count() || head >= d.vertex_count()) {
            throw Error(ErrorCode::invalid_argument, "anchor vertex out of range");
        }
        id = static_cast<ElementId>(d.arc_count());
    }
}

}  // namespace

std::size_t TreeWalker::walk(const Digraph& d, std::span<const ElementId> tree,
                             VertexId root) {
    const std::size_t n = d.vertex_count();
    if (offset_.size() < n + 1) {
        offset_.resize(n + 1);
        parent_.resize(n);
        queue_.resize(n);
        stamp_.resize(n, 0);
    }
    if (entry_.size() < 2 * tree.size()) {
        entry_.resize(2 * tree.size());
        entry_other_.resize(2 * tree.size());
    }

    std::fill(offset_.begin(), offset_.begin() + static_cast<std::ptrdiff_t>(n) + 1, 0);
    for (ElementId a : tree) {
        ++offset_[d.arc(a).tail + 1];
        ++offset_[d.arc(a).head + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offset_[v + 1] += offset_[v];

    // Offsets advance while scattering entries, then shift back so
    // offset_[v] is the slice start again.
    for (ElementId a : tree) {
        const Arc& arc = d.arc(a);
        entry_[offset_[arc.tail]] = static_cast<std::int32_t>((a << 1) | 1);
        entry_other_[offset_[arc.tail]++] = arc.head;
        entry_[offset_[arc.head]] = static_cast<std::int32_t>(a << 1);
        entry_other_[offset_[arc.head]++] = arc.tail;
    }
    for (std::size_t v = n; v > 0; --v) offset_[v] = offset_[v - 1];
    offset_[0] = 0;

    ++epoch_;
    if (epoch_ == 0) {  // stamp wrap-around: start a fresh era
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }

    std::size_t head = 0, count = 0;
    queue_[count++] = root;
    stamp_[root] = epoch_;
    parent_[root] = -1;
    while (head < count) {
        VertexId x = queue_[head++];
        for (std::int32_t i = offset_[x]; i < offset_[x + 1]; ++i) {
            VertexId y = entry_other_[i];
            if (stamp_[y] == epoch_) continue;
            stamp_[y] = epoch_;
            parent_[y] = entry_[i];
            queue_[count++] = y;
        }
    }
    return count;
}

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs)
    : n_(vertex_count), arcs_(std::move(arcs)) {
    for (const Arc& a : arcs_) {
        if (a.tail >= n_ || a.head >= n_) {
            throw Error(ErrorCode::invalid_argument, "arc endpoint out of range");
        }
        if (a.tail == a.head) {
            throw Error(ErrorCode::invalid_argument,
                        "self-loop at vertex " + std::to_string(a.tail));
        }
    }
    if (n_ == 0) {
        connected_ = true;  // vacuous
        return;
    }
    uf_scratch.reset(n_);
    std::size_t merges = 0;
    for (const Arc& a : arcs_) merges += uf_scratch.unite(a.tail, a.head);
    connected_ = merges + 1 == n_;
}

bool is_spanning_tree(const Digraph& d, const BasisSet& arcs) {
    const std::size_t n = d.vertex_count();
    if (n == 0) return arcs.empty();
    if (arcs.size() + 1 != n) return false;
    for (ElementId a : arcs) {
        if (a >= d.arc_count()) return false;
    }
    uf_scratch.reset(n);
    for (ElementId a : arcs) {
        if (!uf_scratch.unite(d.arc(a).tail, d.arc(a).head)) return false;
    }
    return true;  // n-1 acyclic edges on n vertices span
}

bool is_spanning_tree_swap(const Digraph& d, std::span<const ElementId> tree,
                           ElementId removed, ElementId added) {
    const std::size_t n = d.vertex_count();
    if (n == 0 || added >= d.arc_count()) return false;
    uf_scratch.reset(n);
    std::size_t merges = uf_scratch.unite(d.arc(added).tail, d.arc(added).head);
    for (ElementId a : tree) {
        if (a == removed) continue;
        if (!uf_scratch.unite(d.arc(a).tail, d.arc(a).head)) return false;
        ++merges;
    }
    return merges + 1 == n;
}

void require_spanning_tree(const Digraph& d, const BasisSet& arcs) {
    const std::size_t n = d.vertex_count();
    if (n == 0) {
        if (!arcs.empty()) {
            throw Error(ErrorCode::not_a_tree, "nonempty tree on an empty digraph");
        }
        return;
    }
    if (arcs.size() + 1 != n) {
        throw Error(ErrorCode::not_a_tree,
                    "tree has " + std::to_string(arcs.size()) + " arcs, expected " +
                        std::to_string(n - 1));
    }
    for (ElementId a : arcs) {
        if (a >= d.arc_count()) {
            throw Error(ErrorCode::not_a_tree, "arc id " + std::to_string(a) + " out of range");
        }
    }
    uf_scratch.reset(n);
    for (ElementId a : arcs) {
        if (!uf_scratch.unite(d.arc(a).tail, d.arc(a).head)) {
            throw Error(ErrorCode::not_a_tree, "arc set contains a cycle");
        }
    }
    if (!d.connected()) {
        throw Error(ErrorCode::not_a_tree, "digraph is not connected");
    }
}

TreePath tree_path(const Digraph& d, const BasisSet& tree, VertexId u, VertexId v) {
    if (u >= d.vertex_count() || v >= d.vertex_count()) {
        throw Error(ErrorCode::invalid_argument, "path endpoint out of range");
    }
    if (u == v) {
        throw Error(ErrorCode::invalid_argument, "tree path endpoints must differ");
    }
    require_spanning_tree(d, tree);

    local_walker.walk(d, tree.elements(), u);
    // Collect the chain v -> u; each stored away-flag is exactly the
    // traversal direction of the u -> v path at that arc.
    TreePath path;
    for (VertexId x = v; x != u; x = local_walker.parent_vertex(d, x)) {
        path.push_back(PathStep{local_walker.parent_arc(x), local_walker.arc_points_away(x)});
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_st_embracing(const Digraph& d, const BasisSet& tree, VertexId s, VertexId t) {
    if (s >= d.vertex_count() || t >= d.vertex_count() || s == t) {
        throw Error(ErrorCode::invalid_argument, "invalid s, t vertex pair");
    }
    require_spanning_tree(d, tree);
    // Root the walk at t; on the s -> t chain an arc is forward exactly
    // when it does not point away from t.
    local_walker.walk(d, tree.elements(), t);
    for (VertexId x = s; x != t; x = local_walker.parent_vertex(d, x)) {
        if (local_walker.arc_points_away(x)) return false;
    }
    return true;
}

SignedCircuit graphic_anchored_circuit(const Digraph& d, const BasisSet& tree,
                                       const Anchor& anchor) {
    VertexId u = 0, v = 0;
    ElementId anchor_id = 0;
    resolve_anchor_endpoints(d, anchor, u, v, anchor_id);
    if (anchor.is_element() && tree.contains(anchor_id)) {
        throw Error(ErrorCode::anchor_in_basis,
                    "anchor arc " + std::to_string(anchor_id) + " belongs to the tree");
    }
    std::vector<ElementId> positive, negative;
    for (const PathStep& step : tree_path(d, tree, u, v)) {
        (step.forward ? positive : negative).push_back(step.arc);
    }
    negative.push_back(anchor_id);
    return SignedCircuit(std::move(positive), std::move(negative));
}

std::vector<SignedCircuit> all_graphic_circuits(const Digraph& d) {
    const std::size_t m = d.arc_count();
    if (m > 20) {
        throw Error(ErrorCode::invalid_argument,
                    "cycle enumeration supports at most 20 arcs, got " + std::to_string(m));
    }
    std::vector<SignedCircuit> out;
    std::vector<int> degree(d.vertex_count(), 0);
    std::vector<ElementId> members;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        members.clear();
        for (std::uint32_t bits = mask; bits;) {
            members.push_back(static_cast<ElementId>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
        bool valid = true;
        for (ElementId a : members) {
            if (++degree[d.arc(a).tail] > 2 || ++degree[d.arc(a).head] > 2) {
                valid = false;
                break;
            }
        }
        if (valid) {
            for (std::size_t v = 0; v < d.vertex_count(); ++v) {
                if (degree[v] == 1) {
                    valid = false;
                    break;
                }
            }
        }
        for (std::size_t v = 0; v < d.vertex_count(); ++v) degree[v] = 0;
        if (!valid || members.size() < 2) continue;

        // Walk the candidate from its lowest arc; every touched vertex
        // has degree two, so the traversal is forced. Returning early
        // means the subset splits into vertex-disjoint cycles.
        std::vector<ElementId> positive, negative;
        std::uint32_t used = 1u << members.front();
        positive.push_back(members.front());
        const VertexId start = d.arc(members.front()).tail;
        VertexId current = d.arc(members.front()).head;
        while (current != start) {
            bool advanced = false;
            for (ElementId a : members) {
                if (used & (1u << a)) continue;
                const Arc& arc = d.arc(a);
                if (arc.tail != current && arc.head != current) continue;
                used |= 1u << a;
                if (arc.tail == current) {
                    positive.push_back(a);
                    current = arc.head;
                } else {
                    negative.push_back(a);
                    current = arc.tail;
                }
                advanced = true;
                break;
            }
            if (!advanced) break;
        }
        if (current != start || std::popcount(used) != static_cast<int>(members.size())) {
            continue;
        }

        SignedCircuit circuit(std::move(positive), std::move(negative));
        out.push_back(circuit.negated());
        out.push_back(std::move(circuit));
    }
    return out;
}

namespace {

template <typename Visit>
void for_each_combination(std::size_t m, std::size_t k, Visit&& visit) {
    if (k > m) return;
    std::vector<ElementId> pick(k);
    std::iota(pick.begin(), pick.end(), ElementId(0));
    while (true) {
        visit(pick);
        // Advance the rightmost index that still has room.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
        if (i == 0) return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

std::vector<BasisSet> all_spanning_trees(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<BasisSet> out;
    if (n == 0 || !d.connected()) return out;
    for_each_combination(d.arc_count(), n - 1, [&](const std::vector<ElementId>& pick) {
        uf_scratch.reset(n);
        for (ElementId a : pick) {
            if (!uf_scratch.unite(d.arc(a).tail, d.arc(a).head)) return;
        }
        out.push_back(BasisSet(pick));
    });
    return out;
}

std::vector<BasisSet> all_st_embracing_trees(const Digraph& d, VertexId s, VertexId t) {
    std::vector<BasisSet> out;
    for (BasisSet& tree : all_spanning_trees(d)) {
        if (is_st_embracing(d, tree, s, t)) out.push_back(std::move(tree));
    }
    return out;
}

GraphicOracle::GraphicOracle(Digraph d, Anchor anchor)
    : d_(std::move(d)), anchor_(anchor) {
    ElementId id = 0;
    resolve_anchor_endpoints(d_, anchor_, tail_, head_, id);
}

ElementId GraphicOracle::anchor_element_id() const {
    return anchor_.is_element() ? anchor_.element()
                                : static_cast<ElementId>(d_.arc_count());
}

bool GraphicOracle::is_basis(const BasisSet& candidate) const {
    return is_spanning_tree(d_, candidate);
}

SignedCircuit GraphicOracle::anchored_fundamental_circuit(const BasisSet& basis) const {
    return graphic_anchored_circuit(d_, basis, anchor_);
}

bool GraphicOracle::is_embracing(const BasisSet& basis) const {
    if (anchor_.is_element() && basis.contains(anchor_.element())) {
        throw Error(ErrorCode::anchor_in_basis,
                    "anchor arc " + std::to_string(anchor_.element()) +
                        " belongs to the basis");
    }
    // Same walk as is_st_embracing, minus revalidation of the tree: the
    // walk itself detects non-spanning inputs.
    const std::size_t n = d_.vertex_count();
    if (basis.size() + 1 != n) {
        throw Error(ErrorCode::not_a_tree, "basis size is not the graphic rank");
    }
    if (!basis.empty() && basis.elements().back() >= d_.arc_count()) {
        throw Error(ErrorCode::not_a_tree, "basis contains a non-arc element");
    }
    if (local_walker.walk(d_, basis.elements(), head_) != n) {
        throw Error(ErrorCode::not_a_tree, "arc set does not span the digraph");
    }
    for (VertexId x = tail_; x != head_; x = local_walker.parent_vertex(d_, x)) {
        if (local_walker.arc_points_away(x)) return false;
    }
    return true;
}

}  // namespace embrace
