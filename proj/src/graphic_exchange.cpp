#include "graphic_exchange.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace embrace {

namespace {

thread_local TreeWalker rule_walker;
thread_local TreeWalker check_walker;

[[noreturn]] void precondition(const std::string& clause) {
    throw Error(ErrorCode::precondition_violated, clause);
}

// Vertices v_0..v_k of a directed path given by its arcs; also checks
// directedness and chaining.
std::vector<VertexId> directed_path_vertices(const Digraph& d, const TreePath& b_path) {
    if (b_path.empty()) precondition("path is empty");
    std::vector<VertexId> verts;
    verts.reserve(b_path.size() + 1);
    verts.push_back(d.arc(b_path.front().arc).tail);
    for (const PathStep& step : b_path) {
        if (!step.forward) precondition("path is not directed");
        if (step.arc >= d.arc_count()) precondition("path arc id out of range");
        const Arc& a = d.arc(step.arc);
        if (a.tail != verts.back()) precondition("path arcs do not chain");
        verts.push_back(a.head);
    }
    return verts;
}

// The phase-one removal rule: walk the tree path from `from` to `to`
// and keep the last arc for which `in_suffix` is false. The walker's
// state afterwards is rooted at `to`.
template <typename InSuffix>
ElementId last_arc_outside_suffix(const Digraph& d, TreeWalker& walker,
                                  std::span<const ElementId> tree, VertexId from,
                                  VertexId to, InSuffix&& in_suffix) {
    walker.walk(d, tree, to);
    ElementId removed = 0;
    bool found = false;
    for (VertexId x = from; x != to; x = walker.parent_vertex(d, x)) {
        ElementId a = walker.parent_arc(x);
        if (!in_suffix(a)) {
            removed = a;
            found = true;
        }
    }
    if (!found) {
        // Impossible when the added arc is outside the tree: the whole
        // tree path lying on B's suffix would close a cycle in B.
        throw Error(ErrorCode::internal_error,
                    "no removable arc on the tree path; exchange rule failed");
    }
    return removed;
}

// Confirms that the tree path from `start` to `target` over `tree` is
// exactly arcs[0..count) traversed forward.
bool path_prefix_matches(const Digraph& d, TreeWalker& walker,
                         std::span<const ElementId> tree, VertexId start, VertexId target,
                         std::span<const ElementId> arcs, std::size_t count) {
    if (walker.walk(d, tree, target) != d.vertex_count()) return false;
    std::size_t pos = 0;
    for (VertexId x = start; x != target; x = walker.parent_vertex(d, x)) {
        if (pos == count) return false;
        if (walker.arc_points_away(x)) return false;
        if (walker.parent_arc(x) != arcs[pos]) return false;
        ++pos;
    }
    return pos == count;
}

bool sorted_contains(const std::vector<ElementId>& sorted, ElementId e) {
    return std::binary_search(sorted.begin(), sorted.end(), e);
}

void sorted_exchange(std::vector<ElementId>& sorted, ElementId removed, ElementId added) {
    sorted.erase(std::lower_bound(sorted.begin(), sorted.end(), removed));
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), added), added);
}

}  // namespace

PathAdoptionResult adopt_path_arc(const Digraph& d, const BasisSet& tree,
                                  const TreePath& b_path, std::size_t i) {
    std::vector<VertexId> verts = directed_path_vertices(d, b_path);
    const VertexId s = verts.front();
    const VertexId t = verts.back();
    if (i < 1 || i > b_path.size()) precondition("step index out of range");

    try {
        if (!is_st_embracing(d, tree, s, t)) precondition("tree is not st-embracing");
    } catch (const Error& err) {
        if (err.code() == ErrorCode::precondition_violated) throw;
        precondition(std::string("tree is not an st-embracing spanning tree: ") + err.what());
    }
    for (std::size_t j = 0; j + 1 < i; ++j) {
        if (!tree.contains(b_path[j].arc)) {
            precondition("path prefix is not contained in the tree");
        }
    }
    const ElementId added = b_path[i - 1].arc;
    if (tree.contains(added)) precondition("path arc already in the tree");

    ElementId removed = last_arc_outside_suffix(
        d, rule_walker, tree.elements(), verts[i - 1], verts[i], [&](ElementId a) {
            for (std::size_t j = i; j < b_path.size(); ++j) {
                if (b_path[j].arc == a) return true;
            }
            return false;
        });

    PathAdoptionResult result;
    result.removed = removed;
    result.tree_after = tree.with_exchange(removed, added);

    // The adopted prefix must now be the tree path to v_i, and the
    // result must stay st-embracing; either failing means the exchange
    // rule itself is broken, so report loudly.
    std::vector<ElementId> prefix;
    prefix.reserve(i);
    for (std::size_t j = 0; j < i; ++j) prefix.push_back(b_path[j].arc);
    if (!path_prefix_matches(d, check_walker, result.tree_after.elements(), s, verts[i],
                             prefix, i)) {
        throw Error(ErrorCode::internal_error,
                    "adopted path prefix is not the tree path after the exchange");
    }
    if (!is_st_embracing(d, result.tree_after, s, t)) {
        throw Error(ErrorCode::internal_error,
                    "tree lost the directed s-t path after the exchange");
    }
    return result;
}

ExchangeSequence monotone_exchange_sequence(const Digraph& d, VertexId s, VertexId t,
                                            const BasisSet& A, const BasisSet& B) {
    if (s >= d.vertex_count() || t >= d.vertex_count() || s == t) {
        throw Error(ErrorCode::invalid_argument, "invalid s, t vertex pair");
    }
    require_spanning_tree(d, A);
    require_spanning_tree(d, B);

    ExchangeSequence seq;
    seq.start = A;
    if (A == B) return seq;

    const std::size_t n = d.vertex_count();

    // Reused per-thread buffers: the current tree, B's s-t path and a
    // stamped position map marking where each arc sits on that path.
    thread_local std::vector<ElementId> current;
    thread_local std::vector<ElementId> bpath;
    thread_local std::vector<VertexId> verts;
    thread_local std::vector<std::uint32_t> mark_stamp;
    thread_local std::vector<std::uint32_t> mark_pos;
    thread_local std::uint32_t epoch = 0;

    // Collect B[s,t] and check both premises with one walk each.
    check_walker.walk(d, B.elements(), t);
    bpath.clear();
    verts.clear();
    verts.push_back(s);
    for (VertexId x = s; x != t; x = check_walker.parent_vertex(d, x)) {
        if (check_walker.arc_points_away(x)) {
            throw Error(ErrorCode::not_embracing, "B has no directed s-t tree path");
        }
        bpath.push_back(check_walker.parent_arc(x));
        verts.push_back(check_walker.parent_vertex(d, x));
    }
    check_walker.walk(d, A.elements(), t);
    for (VertexId x = s; x != t; x = check_walker.parent_vertex(d, x)) {
        if (check_walker.arc_points_away(x)) {
            throw Error(ErrorCode::not_embracing, "A has no directed s-t tree path");
        }
    }

    if (mark_stamp.size() < d.arc_count()) {
        mark_stamp.resize(d.arc_count(), 0);
        mark_pos.resize(d.arc_count(), 0);
    }
    ++epoch;
    if (epoch == 0) {
        std::fill(mark_stamp.begin(), mark_stamp.end(), 0);
        epoch = 1;
    }
    const std::size_t k = bpath.size();
    for (std::size_t j = 0; j < k; ++j) {
        mark_stamp[bpath[j]] = epoch;
        mark_pos[bpath[j]] = static_cast<std::uint32_t>(j + 1);
    }

    current.assign(A.begin(), A.end());

    // Phase one: adopt B's path arcs in order.
    for (std::size_t i = 1; i <= k; ++i) {
        const ElementId added = bpath[i - 1];
        if (sorted_contains(current, added)) continue;
        ElementId removed = last_arc_outside_suffix(
            d, rule_walker, current, verts[i - 1], verts[i], [&](ElementId a) {
                return mark_stamp[a] == epoch && mark_pos[a] > i;
            });
        seq.steps.push_back(ExchangeStep{removed, added});
        sorted_exchange(current, removed, added);
        if (!path_prefix_matches(d, check_walker, current, s, verts[i],
                                 std::span<const ElementId>(bpath.data(), k), i)) {
            throw Error(ErrorCode::internal_error,
                        "adopted path prefix is not the tree path after phase-one step " +
                            std::to_string(i));
        }
    }
    if (!path_prefix_matches(d, check_walker, current, s, t,
                             std::span<const ElementId>(bpath.data(), k), k)) {
        throw Error(ErrorCode::internal_error,
                    "tree path after phase one differs from B's s-t path");
    }

    // Phase two: replace leftover arcs, smallest ids first. Every added
    // arc comes from B, so these swaps leave the s-t path untouched.
    const std::vector<ElementId>& target = B.elements();
    while (current != target) {
        ElementId removed = 0;
        bool have_removed = false;
        {
            std::size_t ci = 0, bi = 0;
            while (ci < current.size()) {
                if (bi < target.size() && target[bi] < current[ci]) {
                    ++bi;
                } else if (bi < target.size() && target[bi] == current[ci]) {
                    ++bi;
                    ++ci;
                } else {
                    removed = current[ci];
                    have_removed = true;
                    break;
                }
            }
        }
        if (!have_removed) {
            throw Error(ErrorCode::internal_error, "trees differ but no removable arc found");
        }
        bool have_added = false;
        for (ElementId f : target) {
            if (sorted_contains(current, f)) continue;
            if (is_spanning_tree_swap(d, current, removed, f)) {
                seq.steps.push_back(ExchangeStep{removed, f});
                sorted_exchange(current, removed, f);
                have_added = true;
                break;
            }
        }
        if (!have_added) {
            throw Error(ErrorCode::internal_error,
                        "no feasible replacement arc; exchange axiom failed");
        }
    }

    if (seq.steps.size() > n - 1) {
        throw Error(ErrorCode::internal_error,
                    "exchange sequence exceeds the n-1 bound: " +
                        std::to_string(seq.steps.size()));
    }
    return seq;
}

}  // namespace embrace
