#pragma once

// Replay-based verification of exchange sequences between two embracing
// bases. All failures are report entries, never exceptions, so the
// verifier can double as the judge for search witnesses and for
// hand-written sequences alike.

#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "oracle.hpp"

namespace embrace {

struct StepViolation {
    enum class Kind {
        start_mismatch,  // seq.start differs from A
        bad_exchange,    // removed not a member / added already a member
        not_a_basis,
        not_embracing,
        wrong_final,     // replay ended somewhere other than B
    };

    Kind kind = Kind::bad_exchange;
    // Index of the offending step, 1-based; 0 refers to the start basis
    // and length+1 to the final-basis comparison.
    std::size_t step = 0;
    std::string detail;
};

struct VerificationReport {
    bool valid = false;
    std::optional<StepViolation> violation;

    // Only meaningful when valid: |T_i ∩ B| non-decreasing, and length
    // equal to |A \ B| (each step trades an element of A\B for one of
    // B\A, which forces strict growth of the intersection).
    bool monotone = false;
    bool strictly_monotone = false;

    // |T_i ∩ B| for every replayed basis, diagnostics for audit output.
    std::vector<std::size_t> intersection_sizes;

    std::string to_string() const;
};

VerificationReport verify_exchange_sequence(const OrientedMatroidOracle& oracle,
                                            const BasisSet& A, const BasisSet& B,
                                            const ExchangeSequence& seq);

}  // namespace embrace
