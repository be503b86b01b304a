#pragma once

// Core vocabulary shared by every oriented-matroid representation:
// ground-set elements, signed circuits, bases, anchors and exchange
// sequences, plus the error type used across the library.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace embrace {

using ElementId = std::uint32_t;
using VertexId = std::uint32_t;

enum class ErrorCode {
    parse_error,
    invalid_argument,
    anchor_in_basis,
    anchor_not_spanned,
    not_a_tree,
    not_a_basis,
    not_embracing,
    precondition_violated,
    not_a_circuit,
    degenerate_simplex,
    anchor_on_face,
    cardinality_mismatch,
    generation_failed,
    io_error,
    internal_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Sorted set of element ids. Used for bases, spanning trees and simplex
// vertex sets alike; the owning oracle decides what counts as a basis.
class BasisSet {
public:
    BasisSet() = default;
    explicit BasisSet(std::vector<ElementId> elements);
    BasisSet(std::initializer_list<ElementId> elements)
        : BasisSet(std::vector<ElementId>(elements)) {}

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(ElementId e) const;

    // Basis resulting from one exchange. `removed` must be a member and
    // `added` a non-member.
    BasisSet with_exchange(ElementId removed, ElementId added) const;

    std::size_t intersection_size(const BasisSet& other) const;
    std::vector<ElementId> difference(const BasisSet& other) const;

    const std::vector<ElementId>& elements() const { return elements_; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    bool operator==(const BasisSet& other) const = default;
    auto operator<=>(const BasisSet& other) const = default;

    std::string to_string() const;

private:
    std::vector<ElementId> elements_;
};

// A signed circuit: disjoint positive and negative element sets, at
// least one of them nonempty. Both parts are kept sorted.
class SignedCircuit {
public:
    SignedCircuit() = default;
    SignedCircuit(std::vector<ElementId> positive, std::vector<ElementId> negative);

    const std::vector<ElementId>& positive() const { return positive_; }
    const std::vector<ElementId>& negative() const { return negative_; }

    SignedCircuit negated() const;

    // Representative under sign flip: the smaller of C and -C in the
    // element-wise (id, sign) order with '+' before '-'. Makes circuit
    // sets well-defined containers.
    SignedCircuit canonical() const;

    std::vector<ElementId> support() const;
    std::size_t support_size() const { return positive_.size() + negative_.size(); }
    bool contains(ElementId e) const;
    bool is_positive(ElementId e) const;
    bool is_negative(ElementId e) const;

    bool operator==(const SignedCircuit& other) const = default;
    auto operator<=>(const SignedCircuit& other) const = default;

    std::string to_string() const;

private:
    std::vector<ElementId> positive_;
    std::vector<ElementId> negative_;
};

// Anchor of the embracing predicate: either a ground-set element, or a
// vertex pair (s, t) for graphic ground sets, where the anchored circuit
// is taken with respect to a virtual arc s->t that need not exist.
class Anchor {
public:
    enum class Kind { element, vertex_pair };

    static Anchor of_element(ElementId e) {
        Anchor a;
        a.kind_ = Kind::element;
        a.element_ = e;
        return a;
    }
    static Anchor of_vertices(VertexId s, VertexId t);

    Kind kind() const { return kind_; }
    bool is_element() const { return kind_ == Kind::element; }
    bool is_vertex_pair() const { return kind_ == Kind::vertex_pair; }

    ElementId element() const;
    VertexId source() const;
    VertexId target() const;

    std::string to_string() const;

private:
    Anchor() = default;
    Kind kind_ = Kind::element;
    ElementId element_ = 0;
    VertexId s_ = 0, t_ = 0;
};

struct ExchangeStep {
    ElementId removed = 0;
    ElementId added = 0;

    bool operator==(const ExchangeStep&) const = default;
    auto operator<=>(const ExchangeStep&) const = default;
};

// Ordered list of single-element exchanges applied to a start basis.
struct ExchangeSequence {
    BasisSet start;
    std::vector<ExchangeStep> steps;

    std::size_t length() const { return steps.size(); }

    // Basis after applying all steps; throws invalid_argument if a step
    // removes a non-member or adds a member.
    BasisSet final_basis() const;
};

}  // namespace embrace
