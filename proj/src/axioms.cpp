#include "axioms.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace embrace {

namespace {

// Fixed-width bitmask over the ground set; one per circuit part keeps
// the elimination check at a few word operations per candidate.
struct Mask {
    std::vector<std::uint64_t> words;

    explicit Mask(std::size_t ground_size) : words((ground_size + 63) / 64, 0) {}

    void set(ElementId e) { words[e >> 6] |= std::uint64_t(1) << (e & 63); }
    void clear(ElementId e) { words[e >> 6] &= ~(std::uint64_t(1) << (e & 63)); }

    bool subset_of(const Mask& other) const {
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (words[i] & ~other.words[i]) return false;
        }
        return true;
    }

    Mask union_with(const Mask& other) const {
        Mask out = *this;
        for (std::size_t i = 0; i < words.size(); ++i) out.words[i] |= other.words[i];
        return out;
    }

    bool operator==(const Mask& other) const = default;
};

Mask mask_of(const std::vector<ElementId>& elements, std::size_t ground_size) {
    Mask m(ground_size);
    for (ElementId e : elements) m.set(e);
    return m;
}

AxiomCheck fail(std::vector<SignedCircuit> circuits, std::optional<ElementId> element,
                std::string note) {
    AxiomCheck check;
    check.passed = false;
    check.witness_circuits = std::move(circuits);
    check.witness_element = element;
    check.note = std::move(note);
    return check;
}

void describe(std::ostringstream& os, const char* label, const AxiomCheck& check) {
    os << label << ": " << (check.passed ? "ok" : "FAIL");
    if (!check.passed) {
        os << "  " << check.note;
        for (const SignedCircuit& c : check.witness_circuits) {
            os << "  [" << c.to_string() << "]";
        }
        if (check.witness_element) os << "  element " << *check.witness_element;
    }
    os << '\n';
}

}  // namespace

std::string AxiomReport::to_string() const {
    std::ostringstream os;
    describe(os, "input", input);
    describe(os, "nontrivial (C1)", nontrivial);
    describe(os, "symmetry (C2)", symmetry);
    describe(os, "incomparability (C3)", incomparability);
    describe(os, "elimination (C4)", elimination);
    os << (all_passed() ? "all axioms hold" : "axiom check failed");
    return os.str();
}

AxiomReport validate_circuit_axioms(const std::vector<SignedCircuit>& circuits,
                                    std::size_t ground_size) {
    AxiomReport report;

    for (const SignedCircuit& c : circuits) {
        for (ElementId e : c.support()) {
            if (e >= ground_size) {
                report.input = fail({c}, e, "element id out of range");
                return report;  // later checks would index out of bounds
            }
        }
    }

    // (C1): no circuit has empty support.
    for (const SignedCircuit& c : circuits) {
        if (c.support_size() == 0) {
            report.nontrivial = fail({c}, std::nullopt, "empty circuit present");
            break;
        }
    }

    // (C2): the list is closed under negation.
    for (const SignedCircuit& c : circuits) {
        SignedCircuit neg = c.negated();
        if (std::find(circuits.begin(), circuits.end(), neg) == circuits.end()) {
            report.symmetry = fail({c}, std::nullopt, "negation missing from list");
            break;
        }
    }

    const std::size_t k = circuits.size();
    std::vector<Mask> pos, negm, supp;
    pos.reserve(k);
    negm.reserve(k);
    supp.reserve(k);
    for (const SignedCircuit& c : circuits) {
        pos.push_back(mask_of(c.positive(), ground_size));
        negm.push_back(mask_of(c.negative(), ground_size));
        supp.push_back(pos.back().union_with(negm.back()));
    }

    // (C3): supp(C) ⊆ supp(D) forces C ∈ {D, −D}.
    for (std::size_t i = 0; i < k && report.incomparability.passed; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (!supp[i].subset_of(supp[j])) continue;
            if (circuits[i] == circuits[j] || circuits[i] == circuits[j].negated()) continue;
            report.incomparability =
                fail({circuits[i], circuits[j]}, std::nullopt,
                     "support contained in another circuit's support");
            break;
        }
    }

    // (C4): for C1 ≠ −C2 and e ∈ C1⁺ ∩ C2⁻ some listed circuit Z has
    // Z⁺ ⊆ (C1⁺ ∪ C2⁺) \ {e} and Z⁻ ⊆ (C1⁻ ∪ C2⁻) \ {e}.
    for (std::size_t i = 0; i < k && report.elimination.passed; ++i) {
        for (std::size_t j = 0; j < k && report.elimination.passed; ++j) {
            if (circuits[i] == circuits[j].negated()) continue;
            const auto& neg_j = circuits[j].negative();
            for (ElementId e : circuits[i].positive()) {
                if (!std::binary_search(neg_j.begin(), neg_j.end(), e)) continue;
                Mask pos_bound = pos[i].union_with(pos[j]);
                Mask neg_bound = negm[i].union_with(negm[j]);
                pos_bound.clear(e);
                neg_bound.clear(e);
                bool found = false;
                for (std::size_t z = 0; z < k; ++z) {
                    if (pos[z].subset_of(pos_bound) && negm[z].subset_of(neg_bound)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    report.elimination =
                        fail({circuits[i], circuits[j]}, e, "no eliminating circuit in list");
                    break;
                }
            }
        }
    }

    return report;
}

}  // namespace embrace
