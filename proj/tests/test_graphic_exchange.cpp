#include "doctest.h"

#include <algorithm>
#include <bit>

#include "digraph.hpp"
#include "graphic_exchange.hpp"
#include "search.hpp"
#include "sequence.hpp"

using namespace embrace;

namespace {

// s=0 u=1 v=2 w=3 t=4; arcs 0=su 1=sv 2=uw 3=vw 4=ut 5=vt.
Digraph example_digraph() {
    return Digraph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
}
const BasisSet kA{0, 2, 3, 4};
const BasisSet kB{1, 2, 3, 5};

// Every digraph on `n` vertices whose arc set is a subset of the
// complete ordered-pair list, filtered to connected ones. Arc lists
// stay below the enumeration guard for n <= 3 plus handpicked cases.
std::vector<Digraph> small_connected_digraphs(std::size_t n, std::size_t max_arcs) {
    std::vector<Arc> all;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = 0; b < n; ++b) {
            if (a != b) all.push_back({a, b});
        }
    }
    std::vector<Digraph> out;
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > max_arcs) continue;
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (mask & (1u << i)) arcs.push_back(all[i]);
        }
        if (arcs.size() + 1 < n) continue;
        Digraph d(n, std::move(arcs));
        if (d.connected()) out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

TEST_CASE("adopting the first missing path arc removes the blocking arc") {
    Digraph d = example_digraph();
    // B's s-t path is sv, vt. Adopting sv into A closes the cycle
    // sv+vw-uw-su; the last arc along A's v-to-s path outside the
    // remaining B path is vw.
    TreePath b_path = tree_path(d, kB, 0, 4);
    REQUIRE(b_path == TreePath{{1, true}, {5, true}});

    PathAdoptionResult step = adopt_path_arc(d, kA, b_path, 1);
    CHECK(step.removed == 3);
    CHECK(step.tree_after == BasisSet{0, 1, 2, 4});
    CHECK(is_st_embracing(d, step.tree_after, 0, 4));

    PathAdoptionResult second = adopt_path_arc(d, step.tree_after, b_path, 2);
    CHECK(second.removed == 4);
    CHECK(second.tree_after == BasisSet{0, 1, 2, 5});
    CHECK(is_st_embracing(d, second.tree_after, 0, 4));
}

TEST_CASE("adoption preconditions are reported by clause") {
    Digraph d = example_digraph();
    TreePath b_path = tree_path(d, kB, 0, 4);

    auto code_of = [&](const TreePath& path, const BasisSet& tree, std::size_t i) {
        try {
            adopt_path_arc(d, tree, path, i);
            return ErrorCode::internal_error;  // marker: no throw
        } catch (const Error& e) {
            return e.code();
        }
    };

    CHECK(code_of(b_path, kA, 0) == ErrorCode::precondition_violated);
    CHECK(code_of(b_path, kA, 3) == ErrorCode::precondition_violated);
    // Arc already in the tree: adopting uw into A.
    CHECK(code_of(TreePath{{2, true}}, kA, 1) == ErrorCode::precondition_violated);
    // Backward step disqualifies the path.
    CHECK(code_of(TreePath{{1, false}, {5, true}}, kA, 1) ==
          ErrorCode::precondition_violated);
    // Tree that does not embrace the path's endpoints.
    CHECK(code_of(b_path, BasisSet{0, 2, 3, 5}, 1) == ErrorCode::precondition_violated);
}

TEST_CASE("the constructed sequence on the five-vertex example is the known one") {
    Digraph d = example_digraph();
    ExchangeSequence seq = monotone_exchange_sequence(d, 0, 4, kA, kB);
    REQUIRE(seq.steps.size() == 3);
    CHECK(seq.start == kA);
    CHECK(seq.steps[0] == ExchangeStep{3, 1});
    CHECK(seq.steps[1] == ExchangeStep{4, 5});
    CHECK(seq.steps[2] == ExchangeStep{0, 3});
    CHECK(seq.final_basis() == kB);

    GraphicOracle oracle(d, Anchor::of_vertices(0, 4));
    VerificationReport report = verify_exchange_sequence(oracle, kA, kB, seq);
    CHECK(report.valid);
    CHECK(report.monotone);
}

TEST_CASE("identical endpoints produce the empty sequence") {
    Digraph d = example_digraph();
    ExchangeSequence seq = monotone_exchange_sequence(d, 0, 4, kA, kA);
    CHECK(seq.steps.empty());
    CHECK(seq.final_basis() == kA);
}

TEST_CASE("non-embracing premises are rejected") {
    Digraph d = example_digraph();
    BasisSet not_embracing{0, 2, 3, 5};
    CHECK_THROWS_AS(monotone_exchange_sequence(d, 0, 4, not_embracing, kB), Error);
    CHECK_THROWS_AS(monotone_exchange_sequence(d, 0, 4, kA, not_embracing), Error);
    CHECK_THROWS_AS(monotone_exchange_sequence(d, 0, 4, BasisSet{0, 1, 2}, kB), Error);
}

TEST_CASE("every pair of embracing trees on small digraphs gets a short sequence") {
    std::size_t pairs_checked = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
        for (const Digraph& d : small_connected_digraphs(n, n + 2)) {
            for (VertexId s = 0; s < n; ++s) {
                for (VertexId t = 0; t < n; ++t) {
                    if (s == t) continue;
                    std::vector<BasisSet> trees = all_st_embracing_trees(d, s, t);
                    if (trees.empty()) continue;
                    GraphicOracle oracle(d, Anchor::of_vertices(s, t));
                    for (const BasisSet& a : trees) {
                        for (const BasisSet& b : trees) {
                            ExchangeSequence seq =
                                monotone_exchange_sequence(d, s, t, a, b);
                            VerificationReport r =
                                verify_exchange_sequence(oracle, a, b, seq);
                            REQUIRE(r.valid);
                            REQUIRE(r.monotone);
                            REQUIRE(seq.steps.size() <= n - 1);
                            ++pairs_checked;
                        }
                    }
                }
            }
        }
    }
    // Non-vacuity: the sweep must actually exercise many pairs.
    CHECK(pairs_checked > 10000);
}

TEST_CASE("constructed length is bounded below by the exact distance") {
    Digraph d = example_digraph();
    GraphicOracle oracle(d, Anchor::of_vertices(0, 4));
    SearchOptions options;
    options.ground_mode = GroundMode::full;
    DistanceResult exact = embracing_distance(oracle, kA, kB, options);
    REQUIRE(exact.status == DistanceResult::Status::finite);
    ExchangeSequence seq = monotone_exchange_sequence(d, 0, 4, kA, kB);
    CHECK(seq.steps.size() >= exact.distance);
    CHECK(seq.steps.size() <= d.vertex_count() - 1);
}
