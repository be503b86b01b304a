#include "doctest.h"

#include <algorithm>
#include <set>

#include "digraph.hpp"

using namespace embrace;

namespace {

// s=0 u=1 v=2 w=3 t=4; arcs 0=su 1=sv 2=uw 3=vw 4=ut 5=vt.
Digraph example_digraph() {
    return Digraph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
}
const BasisSet kA{0, 2, 3, 4};
const BasisSet kB{1, 2, 3, 5};

// Brute-force cycle finder used only as a cross-check: a subset of arcs
// is a simple cycle iff every touched vertex has undirected degree two
// and the subset is connected. Signs follow a walk around the cycle.
std::vector<SignedCircuit> cycles_by_degree_walk(const Digraph& d) {
    const std::size_t m = d.arc_count();
    std::vector<SignedCircuit> out;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<std::size_t> degree(d.vertex_count(), 0);
        std::vector<ElementId> arcs;
        for (ElementId a = 0; a < m; ++a) {
            if (mask & (1u << a)) {
                arcs.push_back(a);
                ++degree[d.arc(a).tail];
                ++degree[d.arc(a).head];
            }
        }
        if (std::ranges::any_of(degree, [](std::size_t x) { return x != 0 && x != 2; }))
            continue;

        // Walk from the lowest arc's tail; the walk must use every arc
        // once and return home, otherwise the subset is two cycles.
        std::vector<bool> used(m, false);
        VertexId start = d.arc(arcs.front()).tail;
        VertexId at = start;
        std::vector<ElementId> pos, neg;
        std::size_t steps = 0;
        for (;;) {
            ElementId next = m;
            bool forward = true;
            for (ElementId a : arcs) {
                if (used[a]) continue;
                if (d.arc(a).tail == at) {
                    next = a;
                    forward = true;
                    break;
                }
                if (d.arc(a).head == at) {
                    next = a;
                    forward = false;
                    break;
                }
            }
            if (next == m) break;
            used[next] = true;
            (forward ? pos : neg).push_back(next);
            at = forward ? d.arc(next).head : d.arc(next).tail;
            ++steps;
        }
        if (steps != arcs.size() || at != start) continue;
        SignedCircuit c(pos, neg);
        out.push_back(c);
        out.push_back(c.negated());
    }
    return out;
}

std::set<std::string> as_canonical_strings(const std::vector<SignedCircuit>& circuits) {
    std::set<std::string> out;
    for (const SignedCircuit& c : circuits) out.insert(c.canonical().to_string());
    return out;
}

}  // namespace

TEST_CASE("digraph construction rejects loops and bad endpoints") {
    CHECK_THROWS_AS(Digraph(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(Digraph(3, {{0, 3}}), Error);
    CHECK(Digraph(2, {{0, 1}, {1, 0}}).connected());       // anti-parallel pair
    CHECK_FALSE(Digraph(3, {{0, 1}}).connected());
    CHECK(example_digraph().connected());
}

TEST_CASE("tree paths carry per-arc traversal directions") {
    Digraph d = example_digraph();
    CHECK(tree_path(d, kA, 0, 4) == TreePath{{0, true}, {4, true}});
    CHECK(tree_path(d, kA, 4, 0) == TreePath{{4, false}, {0, false}});
    CHECK(tree_path(d, kA, 0, 2) == TreePath{{0, true}, {2, true}, {3, false}});
    CHECK_THROWS_AS(tree_path(d, kA, 1, 1), Error);  // endpoints must differ
    CHECK_THROWS_AS(tree_path(d, BasisSet{0, 1, 2}, 0, 4), Error);  // not spanning
}

TEST_CASE("a tree embraces the pair exactly when its pair path is directed") {
    Digraph d = example_digraph();
    CHECK(is_st_embracing(d, kA, 0, 4));
    CHECK(is_st_embracing(d, kB, 0, 4));
    CHECK_FALSE(is_st_embracing(d, BasisSet{0, 2, 3, 5}, 0, 4));
    CHECK_FALSE(is_st_embracing(d, kA, 4, 0));  // reversed pair
}

TEST_CASE("anchored cycles orient tree arcs by traversal direction") {
    Digraph d = example_digraph();
    Anchor st = Anchor::of_vertices(0, 4);

    SignedCircuit on_a = graphic_anchored_circuit(d, kA, st);
    CHECK(on_a.positive() == std::vector<ElementId>{0, 4});
    CHECK(on_a.negative() == std::vector<ElementId>{6});  // virtual pair element

    SignedCircuit mixed = graphic_anchored_circuit(d, BasisSet{0, 2, 3, 5}, st);
    CHECK(mixed.positive() == std::vector<ElementId>{0, 2, 5});
    CHECK(mixed.negative() == std::vector<ElementId>{3, 6});

    SignedCircuit by_arc = graphic_anchored_circuit(d, kA, Anchor::of_element(5));
    CHECK(by_arc.positive() == std::vector<ElementId>{3, 4});
    CHECK(by_arc.negative() == std::vector<ElementId>{2, 5});

    SignedCircuit sv_arc = graphic_anchored_circuit(d, kA, Anchor::of_element(1));
    CHECK(sv_arc.positive() == std::vector<ElementId>{0, 2});
    CHECK(sv_arc.negative() == std::vector<ElementId>{1, 3});

    // Anchor arc inside the tree is a misuse, not a circuit.
    try {
        graphic_anchored_circuit(d, kA, Anchor::of_element(0));
        FAIL_CHECK("no exception for in-tree anchor");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::anchor_in_basis);
    }
}

TEST_CASE("a triangle's anchored cycle is the two-arc path plus the anchor") {
    Digraph d(3, {{0, 1}, {1, 2}, {0, 2}});
    SignedCircuit c = graphic_anchored_circuit(d, BasisSet{0, 1}, Anchor::of_element(2));
    CHECK(c.positive() == std::vector<ElementId>{0, 1});
    CHECK(c.negative() == std::vector<ElementId>{2});

    Digraph flipped(3, {{0, 1}, {2, 1}, {0, 2}});
    SignedCircuit f = graphic_anchored_circuit(flipped, BasisSet{0, 1}, Anchor::of_element(2));
    CHECK(f.positive() == std::vector<ElementId>{0});
    CHECK(f.negative() == std::vector<ElementId>{1, 2});
}

TEST_CASE("cycle enumeration matches an independent degree-and-walk finder") {
    for (const Digraph& d :
         {example_digraph(), Digraph(3, {{0, 1}, {1, 2}, {0, 2}}),
          Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}),
          Digraph(2, {{0, 1}, {0, 1}, {1, 0}})}) {
        CHECK(as_canonical_strings(all_graphic_circuits(d)) ==
              as_canonical_strings(cycles_by_degree_walk(d)));
    }
}

TEST_CASE("spanning tree enumeration agrees with the subset definition") {
    Digraph d = example_digraph();
    std::vector<BasisSet> trees = all_spanning_trees(d);
    CHECK(trees.size() == 12);

    std::vector<BasisSet> embracing = all_st_embracing_trees(d, 0, 4);
    CHECK(embracing.size() == 10);
    for (const BasisSet& t : embracing) {
        CHECK(is_spanning_tree(d, t));
        CHECK(is_st_embracing(d, t, 0, 4));
    }
    CHECK(std::ranges::count_if(trees, [&](const BasisSet& t) {
              return is_st_embracing(d, t, 0, 4);
          }) == 10);
}

TEST_CASE("swap spanning test agrees with materialized exchanges") {
    Digraph d = example_digraph();
    for (const BasisSet& tree : all_spanning_trees(d)) {
        for (ElementId removed : tree) {
            for (ElementId added = 0; added < d.arc_count(); ++added) {
                if (tree.contains(added)) continue;
                std::vector<ElementId> raw = tree.elements();
                std::erase(raw, removed);
                raw.push_back(added);
                bool direct = is_spanning_tree(d, BasisSet(raw));
                bool swapped = is_spanning_tree_swap(d, tree.elements(), removed, added);
                CHECK(direct == swapped);
            }
        }
    }
}

TEST_CASE("the tree walker reports parents and directions consistently") {
    Digraph d = example_digraph();
    TreeWalker walker;
    std::vector<ElementId> arcs = kA.elements();
    CHECK(walker.walk(d, arcs, 0) == 5);
    for (VertexId v = 0; v < 5; ++v) CHECK(walker.reached(v));
    CHECK(walker.parent_arc(1) == 0);
    CHECK(walker.arc_points_away(1));  // su points away from root s
    CHECK(walker.parent_vertex(d, 1) == 0);
    CHECK(walker.parent_arc(2) == 3);
    CHECK_FALSE(walker.arc_points_away(2));  // vw enters v toward the root side
    CHECK(walker.parent_vertex(d, 2) == 3);

    // A non-spanning arc set reaches fewer vertices; stale state from
    // the previous walk must not leak.
    std::vector<ElementId> partial{0, 2};
    CHECK(walker.walk(d, partial, 0) == 3);
    CHECK(walker.reached(3));
    CHECK_FALSE(walker.reached(2));
    CHECK_FALSE(walker.reached(4));
}

TEST_CASE("the graphic oracle wires anchors, bases and embracing together") {
    Digraph d = example_digraph();
    GraphicOracle oracle(d, Anchor::of_vertices(0, 4));
    CHECK(oracle.ground_size() == 6);
    CHECK(oracle.rank() == 4);
    CHECK(oracle.anchor_element_id() == 6);
    CHECK(oracle.anchor_tail() == 0);
    CHECK(oracle.anchor_head() == 4);

    CHECK(oracle.is_basis(kA));
    CHECK_FALSE(oracle.is_basis(BasisSet{0, 1, 4, 5}));  // the s-u-t-v cycle
    CHECK_FALSE(oracle.is_basis(BasisSet{0, 1, 2}));

    CHECK(oracle.is_embracing(kA));
    CHECK(oracle.is_embracing(kB));
    CHECK_FALSE(oracle.is_embracing(BasisSet{0, 2, 3, 5}));

    GraphicOracle by_arc(Digraph(3, {{0, 1}, {1, 2}, {0, 2}}), Anchor::of_element(2));
    CHECK(by_arc.anchor_element_id() == 2);
    CHECK(by_arc.is_embracing(BasisSet{0, 1}));
    CHECK_THROWS_AS(by_arc.is_embracing(BasisSet{0, 2}), Error);  // contains anchor

    CHECK_THROWS_AS(GraphicOracle(d, Anchor::of_element(6)), Error);
    CHECK_THROWS_AS(GraphicOracle(d, Anchor::of_vertices(0, 5)), Error);
}

TEST_CASE("parallel arcs are distinct elements with distinct cycles") {
    Digraph d(2, {{0, 1}, {0, 1}});
    CHECK(is_spanning_tree(d, BasisSet{0}));
    CHECK(is_spanning_tree(d, BasisSet{1}));
    SignedCircuit c = graphic_anchored_circuit(d, BasisSet{0}, Anchor::of_element(1));
    CHECK(c.positive() == std::vector<ElementId>{0});
    CHECK(c.negative() == std::vector<ElementId>{1});

    // Anti-parallel arcs form a directed two-cycle; anchored at arc 1
    // the whole cycle is negative.
    Digraph anti(2, {{0, 1}, {1, 0}});
    SignedCircuit a = graphic_anchored_circuit(anti, BasisSet{0}, Anchor::of_element(1));
    CHECK(a.positive().empty());
    CHECK(a.negative() == std::vector<ElementId>{0, 1});
}

