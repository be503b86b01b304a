#pragma once

// Validation of the signed-circuit axioms for an explicitly listed
// collection of circuits: (C1) no empty circuit, (C2) closure under
// negation, (C3) support incomparability up to sign, (C4) weak circuit
// elimination. The list is taken literally, so a collection that omits
// one orientation of a circuit fails (C2).

#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace embrace {

struct AxiomCheck {
    bool passed = true;
    // On failure: the circuits involved, the pivot element if the axiom
    // has one, and a one-line description.
    std::vector<SignedCircuit> witness_circuits;
    std::optional<ElementId> witness_element;
    std::string note;
};

struct AxiomReport {
    AxiomCheck input;            // all ids < ground_size
    AxiomCheck nontrivial;       // C1
    AxiomCheck symmetry;         // C2
    AxiomCheck incomparability;  // C3
    AxiomCheck elimination;      // C4

    bool all_passed() const {
        return input.passed && nontrivial.passed && symmetry.passed &&
               incomparability.passed && elimination.passed;
    }

    std::string to_string() const;
};

// Exhaustive check of the axioms over the given list. Malformed input
// (out-of-range ids) is reported through `input`, never thrown.
AxiomReport validate_circuit_axioms(const std::vector<SignedCircuit>& circuits,
                                    std::size_t ground_size);

}  // namespace embrace
