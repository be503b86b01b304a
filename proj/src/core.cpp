#include "core.hpp"

#include <algorithm>
#include <sstream>

namespace embrace {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::anchor_in_basis: return "anchor_in_basis";
        case ErrorCode::anchor_not_spanned: return "anchor_not_spanned";
        case ErrorCode::not_a_tree: return "not_a_tree";
        case ErrorCode::not_a_basis: return "not_a_basis";
        case ErrorCode::not_embracing: return "not_embracing";
        case ErrorCode::precondition_violated: return "precondition_violated";
        case ErrorCode::not_a_circuit: return "not_a_circuit";
        case ErrorCode::degenerate_simplex: return "degenerate_simplex";
        case ErrorCode::anchor_on_face: return "anchor_on_face";
        case ErrorCode::cardinality_mismatch: return "cardinality_mismatch";
        case ErrorCode::generation_failed: return "generation_failed";
        case ErrorCode::io_error: return "io_error";
        case ErrorCode::internal_error: return "internal_error";
    }
    return "unknown";
}

BasisSet::BasisSet(std::vector<ElementId> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    auto dup = std::adjacent_find(elements_.begin(), elements_.end());
    if (dup != elements_.end()) {
        throw Error(ErrorCode::invalid_argument,
                    "duplicate element " + std::to_string(*dup) + " in basis set");
    }
}

bool BasisSet::contains(ElementId e) const {
    return std::binary_search(elements_.begin(), elements_.end(), e);
}

BasisSet BasisSet::with_exchange(ElementId removed, ElementId added) const {
    if (!contains(removed)) {
        throw Error(ErrorCode::invalid_argument,
                    "exchange removes " + std::to_string(removed) + " which is not a member");
    }
    if (contains(added)) {
        throw Error(ErrorCode::invalid_argument,
                    "exchange adds " + std::to_string(added) + " which is already a member");
    }
    std::vector<ElementId> out;
    out.reserve(elements_.size());
    for (ElementId e : elements_) {
        if (e != removed) out.push_back(e);
    }
    out.insert(std::upper_bound(out.begin(), out.end(), added), added);
    BasisSet result;
    result.elements_ = std::move(out);
    return result;
}

std::size_t BasisSet::intersection_size(const BasisSet& other) const {
    std::size_t count = 0;
    auto a = elements_.begin();
    auto b = other.elements_.begin();
    while (a != elements_.end() && b != other.elements_.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            ++count;
            ++a;
            ++b;
        }
    }
    return count;
}

std::vector<ElementId> BasisSet::difference(const BasisSet& other) const {
    std::vector<ElementId> out;
    std::set_difference(elements_.begin(), elements_.end(), other.elements_.begin(),
                        other.elements_.end(), std::back_inserter(out));
    return out;
}

std::string BasisSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) os << ' ';
        os << elements_[i];
    }
    os << '}';
    return os.str();
}

namespace {

void sort_and_check_unique(std::vector<ElementId>& v, const char* what) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        throw Error(ErrorCode::invalid_argument,
                    std::string("duplicate element in ") + what + " part of circuit");
    }
}

}  // namespace

SignedCircuit::SignedCircuit(std::vector<ElementId> positive, std::vector<ElementId> negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
    sort_and_check_unique(positive_, "positive");
    sort_and_check_unique(negative_, "negative");
    std::vector<ElementId> overlap;
    std::set_intersection(positive_.begin(), positive_.end(), negative_.begin(),
                          negative_.end(), std::back_inserter(overlap));
    if (!overlap.empty()) {
        throw Error(ErrorCode::invalid_argument,
                    "element " + std::to_string(overlap.front()) +
                        " appears in both parts of a signed circuit");
    }
}

SignedCircuit SignedCircuit::negated() const {
    SignedCircuit out;
    out.positive_ = negative_;
    out.negative_ = positive_;
    return out;
}

SignedCircuit SignedCircuit::canonical() const {
    // Compare the (id, sign) sequences of C and -C with '+' < '-' and
    // keep the smaller one.
    auto p = positive_.begin();
    auto n = negative_.begin();
    while (p != positive_.end() && n != negative_.end()) {
        if (*p < *n) return *this;   // smallest differing id is positive in C
        if (*n < *p) return negated();
        ++p;
        ++n;
    }
    if (p != positive_.end()) return *this;
    if (n != negative_.end()) return negated();
    return *this;  // empty circuit; callers reject these separately
}

std::vector<ElementId> SignedCircuit::support() const {
    std::vector<ElementId> out;
    out.reserve(support_size());
    std::merge(positive_.begin(), positive_.end(), negative_.begin(), negative_.end(),
               std::back_inserter(out));
    return out;
}

bool SignedCircuit::contains(ElementId e) const {
    return std::binary_search(positive_.begin(), positive_.end(), e) ||
           std::binary_search(negative_.begin(), negative_.end(), e);
}

bool SignedCircuit::is_positive(ElementId e) const {
    return std::binary_search(positive_.begin(), positive_.end(), e);
}

bool SignedCircuit::is_negative(ElementId e) const {
    return std::binary_search(negative_.begin(), negative_.end(), e);
}

std::string SignedCircuit::to_string() const {
    std::ostringstream os;
    os << "+ ";
    for (std::size_t i = 0; i < positive_.size(); ++i) {
        if (i) os << ' ';
        os << positive_[i];
    }
    os << " ; - ";
    for (std::size_t i = 0; i < negative_.size(); ++i) {
        if (i) os << ' ';
        os << negative_[i];
    }
    return os.str();
}

Anchor Anchor::of_vertices(VertexId s, VertexId t) {
    if (s == t) {
        throw Error(ErrorCode::invalid_argument, "vertex-pair anchor requires distinct vertices");
    }
    Anchor a;
    a.kind_ = Kind::vertex_pair;
    a.s_ = s;
    a.t_ = t;
    return a;
}

ElementId Anchor::element() const {
    if (kind_ != Kind::element) {
        throw Error(ErrorCode::invalid_argument, "anchor is not a ground-set element");
    }
    return element_;
}

VertexId Anchor::source() const {
    if (kind_ != Kind::vertex_pair) {
        throw Error(ErrorCode::invalid_argument, "anchor is not a vertex pair");
    }
    return s_;
}

VertexId Anchor::target() const {
    if (kind_ != Kind::vertex_pair) {
        throw Error(ErrorCode::invalid_argument, "anchor is not a vertex pair");
    }
    return t_;
}

std::string Anchor::to_string() const {
    if (kind_ == Kind::element) return "element " + std::to_string(element_);
    return "vertices " + std::to_string(s_) + " " + std::to_string(t_);
}

BasisSet ExchangeSequence::final_basis() const {
    BasisSet current = start;
    for (const ExchangeStep& step : steps) {
        current = current.with_exchange(step.removed, step.added);
    }
    return current;
}

}  // namespace embrace
