#pragma once

// Constructive monotone exchange sequences between two st-embracing
// spanning trees. Phase one adopts the arcs of B's s-t path in order,
// one exchange per missing arc; phase two swaps the remaining tree
// arcs pairwise, which cannot disturb the already-directed s-t path.
// The produced sequence has length at most n-1 and never decreases
// |T ∩ B|.

#include "core.hpp"
#include "digraph.hpp"

namespace embrace {

struct PathAdoptionResult {
    ElementId removed = 0;
    BasisSet tree_after;
};

// One phase-one step: insert the i-th arc (1-based) of the directed
// path `b_path` into `tree`, removing the last arc along the tree path
// between its endpoints that does not lie on b_path's suffix beyond i.
// The result is again st-embracing and contains b_path's first i arcs
// as its s-to-v_i path.
//
// Preconditions (PreconditionViolated names the failed clause):
// b_path is a directed path; 1 <= i <= |b_path|; tree is st-embracing
// for b_path's endpoints; b_path's first i-1 arcs lie in tree; arc i
// does not.
PathAdoptionResult adopt_path_arc(const Digraph& d, const BasisSet& tree,
                                  const TreePath& b_path, std::size_t i);

// Full two-phase construction from A to B. Throws NotATree/NotEmbracing
// when a premise tree is malformed or not st-embracing.
ExchangeSequence monotone_exchange_sequence(const Digraph& d, VertexId s, VertexId t,
                                            const BasisSet& A, const BasisSet& B);

}  // namespace embrace
