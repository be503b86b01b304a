#include "explicit_om.hpp"

#include <algorithm>
#include <sstream>

namespace embrace {

namespace {

bool support_subset_of(const SignedCircuit& circuit, const BasisSet& set, ElementId extra) {
    for (ElementId e : circuit.positive()) {
        if (e != extra && !set.contains(e)) return false;
    }
    for (ElementId e : circuit.negative()) {
        if (e != extra && !set.contains(e)) return false;
    }
    return true;
}

}  // namespace

std::vector<SignedCircuit> ExplicitOM::circuits_with_negations() const {
    std::vector<SignedCircuit> out;
    out.reserve(circuits.size() * 2);
    for (const SignedCircuit& c : circuits) {
        out.push_back(c);
        out.push_back(c.negated());
    }
    return out;
}

ExplicitOM parse_explicit_om(const std::vector<std::string>& lines) {
    ExplicitOM om;
    bool saw_header = false;
    for (const std::string& raw : lines) {
        std::istringstream in(raw);
        std::string head;
        if (!(in >> head) || head[0] == '#') continue;

        if (!saw_header) {
            long long n = -1, r = -1;
            std::string rank_word;
            if (head != "ground" || !(in >> n >> rank_word >> r) || rank_word != "rank" ||
                n < 0 || r < 0 || r > n) {
                throw Error(ErrorCode::parse_error,
                            "expected header 'ground <n> rank <r>', got: " + raw);
            }
            om.ground_size = static_cast<std::size_t>(n);
            om.rank = static_cast<std::size_t>(r);
            saw_header = true;
            continue;
        }

        if (head != "+") {
            throw Error(ErrorCode::parse_error, "expected circuit line starting with '+': " + raw);
        }
        std::vector<ElementId> positive, negative;
        std::vector<ElementId>* part = &positive;
        bool saw_separator = false, saw_minus = false;
        std::string tok;
        while (in >> tok) {
            if (tok == ";") {
                if (saw_separator) {
                    throw Error(ErrorCode::parse_error, "duplicate ';' in circuit line: " + raw);
                }
                saw_separator = true;
            } else if (tok == "-") {
                if (!saw_separator || saw_minus) {
                    throw Error(ErrorCode::parse_error, "misplaced '-' in circuit line: " + raw);
                }
                saw_minus = true;
                part = &negative;
            } else {
                std::size_t pos = 0;
                unsigned long id = 0;
                try {
                    id = std::stoul(tok, &pos);
                } catch (const std::exception&) {
                    pos = 0;
                }
                if (pos != tok.size()) {
                    throw Error(ErrorCode::parse_error, "bad element id '" + tok + "' in: " + raw);
                }
                if (saw_separator && !saw_minus) {
                    throw Error(ErrorCode::parse_error, "expected '-' after ';' in: " + raw);
                }
                if (id >= om.ground_size) {
                    throw Error(ErrorCode::parse_error,
                                "element id " + tok + " out of range (ground " +
                                    std::to_string(om.ground_size) + ")");
                }
                part->push_back(static_cast<ElementId>(id));
            }
        }
        if (!saw_separator || !saw_minus) {
            throw Error(ErrorCode::parse_error, "circuit line missing '; -' separator: " + raw);
        }
        SignedCircuit circuit =
            SignedCircuit(std::move(positive), std::move(negative)).canonical();
        if (std::find(om.circuits.begin(), om.circuits.end(), circuit) == om.circuits.end()) {
            om.circuits.push_back(std::move(circuit));
        }
    }
    if (!saw_header) {
        throw Error(ErrorCode::parse_error, "missing 'ground <n> rank <r>' header");
    }
    return om;
}

std::string write_explicit_om(const ExplicitOM& om) {
    std::ostringstream os;
    os << "ground " << om.ground_size << " rank " << om.rank << '\n';
    for (const SignedCircuit& c : om.circuits) {
        os << c.to_string() << '\n';
    }
    return os.str();
}

ExplicitOracle::ExplicitOracle(ExplicitOM om, ElementId anchor)
    : om_(std::move(om)), anchor_(anchor) {
    if (anchor_ >= om_.ground_size) {
        throw Error(ErrorCode::invalid_argument,
                    "anchor " + std::to_string(anchor_) + " outside ground set of size " +
                        std::to_string(om_.ground_size));
    }
    std::vector<SignedCircuit> canon;
    canon.reserve(om_.circuits.size());
    for (const SignedCircuit& c : om_.circuits) {
        if (c.support_size() == 0) {
            throw Error(ErrorCode::invalid_argument, "empty circuit in explicit oriented matroid");
        }
        SignedCircuit cc = c.canonical();
        if (std::find(canon.begin(), canon.end(), cc) == canon.end()) {
            canon.push_back(std::move(cc));
        }
    }
    om_.circuits = std::move(canon);
}

bool ExplicitOracle::is_basis(const BasisSet& candidate) const {
    if (candidate.size() != om_.rank) return false;
    for (ElementId e : candidate) {
        if (e >= om_.ground_size) return false;
    }
    for (const SignedCircuit& c : om_.circuits) {
        bool inside = true;
        for (ElementId e : c.positive()) {
            if (!candidate.contains(e)) {
                inside = false;
                break;
            }
        }
        if (inside) {
            for (ElementId e : c.negative()) {
                if (!candidate.contains(e)) {
                    inside = false;
                    break;
                }
            }
        }
        if (inside) return false;
    }
    return true;
}

SignedCircuit ExplicitOracle::anchored_fundamental_circuit(const BasisSet& basis) const {
    if (basis.contains(anchor_)) {
        throw Error(ErrorCode::anchor_in_basis,
                    "anchor " + std::to_string(anchor_) + " belongs to the basis");
    }
    const SignedCircuit* found = nullptr;
    for (const SignedCircuit& c : om_.circuits) {
        if (!c.contains(anchor_)) continue;
        if (!support_subset_of(c, basis, anchor_)) continue;
        if (found != nullptr) {
            throw Error(ErrorCode::not_a_circuit,
                        "multiple circuits fit the basis plus anchor; the circuit list is "
                        "not matroidal");
        }
        found = &c;
    }
    if (found == nullptr) {
        throw Error(ErrorCode::anchor_not_spanned,
                    "no circuit inside basis plus anchor " + std::to_string(anchor_));
    }
    return found->is_positive(anchor_) ? found->negated() : *found;
}

}  // namespace embrace
