#pragma once

// Self-checking reproductions of the two worked examples: the
// five-vertex digraph whose embracing exchange distance is exactly 3,
// and the two interlocked circle triangles that admit a single
// symmetric exchange. Each run re-derives every claimed fact and
// reports pass/fail per check.

#include <string>

namespace embrace {

struct ReproReport {
    bool ok = true;
    std::string text;
};

// Digraph example: distance exactly 3, no two-step sequence
// (exhaustively), the known three-step monotone sequence verifies, and
// the constructive two-phase sequence verifies within the n-1 bound.
ReproReport repro_example1();

// Circle example: from the triangle pair exactly one symmetric
// exchange keeps both triangles embracing, the pair graph has exactly
// two nodes, the swapped pair is unreachable, and the plain embracing
// distance stays within the rank.
ReproReport repro_example2();

}  // namespace embrace
