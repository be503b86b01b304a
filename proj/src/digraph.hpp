#pragma once

// Directed multigraphs as oriented matroids: spanning trees, tree paths
// with traversal directions, signed fundamental cycles and the graphic
// oracle. Parallel and anti-parallel arcs are permitted, self-loops are
// not. Arc ids index the arc list; a vertex-pair anchor (s, t) occupies
// the virtual element id arc_count().

#include <cstdint>
#include <span>
#include <vector>

#include "core.hpp"
#include "oracle.hpp"

namespace embrace {

struct Arc {
    VertexId tail = 0;
    VertexId head = 0;

    bool operator==(const Arc&) const = default;
};

class Digraph {
public:
    Digraph(std::size_t vertex_count, std::vector<Arc> arcs);

    std::size_t vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    const Arc& arc(ElementId id) const { return arcs_[id]; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    // Connectivity of the underlying undirected multigraph.
    bool connected() const { return connected_; }

private:
    std::size_t n_;
    std::vector<Arc> arcs_;
    bool connected_ = false;
};

struct PathStep {
    ElementId arc = 0;
    bool forward = true;  // arc orientation agrees with traversal direction

    bool operator==(const PathStep&) const = default;
};

using TreePath = std::vector<PathStep>;

// Allocation-free breadth-first walker over one tree's arcs. Buffers
// are reused across calls, so walkers sit in thread-local storage on
// the hot paths. A walk overwrites the previous walk's results.
class TreeWalker {
public:
    // BFS from `root` over `tree`; arc ids must be < d.arc_count().
    // Returns the number of vertices reached (== n iff spanning).
    std::size_t walk(const Digraph& d, std::span<const ElementId> tree, VertexId root);

    bool reached(VertexId v) const { return stamp_[v] == epoch_; }

    // Valid for reached vertices other than the root.
    ElementId parent_arc(VertexId v) const {
        return static_cast<ElementId>(parent_[v] >> 1);
    }
    // True when the connecting arc points away from the root.
    bool arc_points_away(VertexId v) const { return (parent_[v] & 1) != 0; }
    VertexId parent_vertex(const Digraph& d, VertexId v) const {
        const Arc& a = d.arc(parent_arc(v));
        return a.tail == v ? a.head : a.tail;
    }

private:
    std::vector<std::int32_t> offset_;
    std::vector<std::int32_t> entry_;
    std::vector<VertexId> entry_other_;
    std::vector<std::int64_t> parent_;
    std::vector<VertexId> queue_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
};

bool is_spanning_tree(const Digraph& d, const BasisSet& arcs);

// Spanning test for tree - removed + added without materializing the
// exchanged set; `removed` must be in `tree`, `added` outside it.
bool is_spanning_tree_swap(const Digraph& d, std::span<const ElementId> tree,
                           ElementId removed, ElementId added);

// Throws NotATree naming the failed requirement.
void require_spanning_tree(const Digraph& d, const BasisSet& arcs);

// Unique tree path from u to v with per-arc traversal directions.
TreePath tree_path(const Digraph& d, const BasisSet& tree, VertexId u, VertexId v);

// True iff the unique s-t tree path is directed from s to t.
bool is_st_embracing(const Digraph& d, const BasisSet& tree, VertexId s, VertexId t);

// Fundamental cycle of the anchor with respect to the tree: anchor
// negative, each tree arc positive iff it is forward on the tree path
// from the anchor's tail to its head. Accepts an arc anchor (must be
// outside the tree) or a vertex pair (virtual arc s->t).
SignedCircuit graphic_anchored_circuit(const Digraph& d, const BasisSet& tree,
                                       const Anchor& anchor);

// Every simple cycle of the underlying multigraph, signed by traversal,
// in both orientations (closed under negation). Subset enumeration;
// guarded against arc counts past 20.
std::vector<SignedCircuit> all_graphic_circuits(const Digraph& d);

// All spanning trees / all st-embracing spanning trees, enumerated over
// (n-1)-subsets of arcs. Intended for generation and small audits.
std::vector<BasisSet> all_spanning_trees(const Digraph& d);
std::vector<BasisSet> all_st_embracing_trees(const Digraph& d, VertexId s, VertexId t);

class GraphicOracle final : public OrientedMatroidOracle {
public:
    GraphicOracle(Digraph d, Anchor anchor);

    std::size_t ground_size() const override { return d_.arc_count(); }
    std::size_t rank() const override { return d_.vertex_count() - 1; }
    ElementId anchor_element_id() const override;

    bool is_basis(const BasisSet& candidate) const override;
    SignedCircuit anchored_fundamental_circuit(const BasisSet& basis) const override;
    bool is_embracing(const BasisSet& basis) const override;

    const Digraph& digraph() const { return d_; }
    const Anchor& anchor() const { return anchor_; }
    VertexId anchor_tail() const { return tail_; }
    VertexId anchor_head() const { return head_; }

private:
    Digraph d_;
    Anchor anchor_;
    VertexId tail_ = 0, head_ = 0;
};

}  // namespace embrace
