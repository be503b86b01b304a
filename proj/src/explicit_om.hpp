#pragma once

// Oriented matroids given by an explicit signed-circuit list, plus the
// text format for them: header `ground <n> rank <r>`, one circuit per
// line as `+ e1 e2 ... ; - f1 f2 ...`, `#` comments.

#include <iosfwd>
#include <string>
#include <vector>

#include "core.hpp"
#include "oracle.hpp"

namespace embrace {

struct ExplicitOM {
    std::size_t ground_size = 0;
    std::size_t rank = 0;
    // Canonical representatives, deduplicated; either orientation is
    // accepted on input.
    std::vector<SignedCircuit> circuits;

    // Every stored circuit together with its negation, for axiom checks.
    std::vector<SignedCircuit> circuits_with_negations() const;
};

ExplicitOM parse_explicit_om(const std::vector<std::string>& lines);
std::string write_explicit_om(const ExplicitOM& om);

class ExplicitOracle final : public OrientedMatroidOracle {
public:
    ExplicitOracle(ExplicitOM om, ElementId anchor);

    std::size_t ground_size() const override { return om_.ground_size; }
    std::size_t rank() const override { return om_.rank; }
    ElementId anchor_element_id() const override { return anchor_; }

    // A set is independent iff it contains no circuit support; a basis
    // is an independent set of full rank.
    bool is_basis(const BasisSet& candidate) const override;

    SignedCircuit anchored_fundamental_circuit(const BasisSet& basis) const override;

    const ExplicitOM& om() const { return om_; }

private:
    ExplicitOM om_;
    ElementId anchor_;
};

}  // namespace embrace
