#pragma once

// Representation-independent view of an oriented matroid with a chosen
// anchor. Concrete backends (graphic, affine, explicit circuit list)
// implement basis queries and anchored fundamental circuits; generic
// algorithms (sequence verification, breadth-first distance search)
// work against this interface only.

#include "core.hpp"

namespace embrace {

class OrientedMatroidOracle {
public:
    virtual ~OrientedMatroidOracle() = default;

    // Elements are 0..ground_size()-1. A vertex-pair anchor occupies one
    // extra virtual id equal to ground_size(); anchor_element_id() names
    // the anchor in either case.
    virtual std::size_t ground_size() const = 0;
    virtual std::size_t rank() const = 0;
    virtual ElementId anchor_element_id() const = 0;

    virtual bool is_basis(const BasisSet& candidate) const = 0;

    // Fundamental circuit of the anchor with respect to `basis`, oriented
    // so the anchor is negative. Requires that `basis` is a basis not
    // containing the anchor and that the anchor lies in its span.
    virtual SignedCircuit anchored_fundamental_circuit(const BasisSet& basis) const = 0;

    // True when every non-anchor element of the anchored fundamental
    // circuit is positive. The circuit is oriented anchor-negative, so
    // this is equivalent to the negative part being exactly the anchor.
    // Backends may override with a cheaper check.
    virtual bool is_embracing(const BasisSet& basis) const {
        SignedCircuit circuit = anchored_fundamental_circuit(basis);
        const auto& neg = circuit.negative();
        return neg.size() == 1 && neg.front() == anchor_element_id();
    }
};

}  // namespace embrace
