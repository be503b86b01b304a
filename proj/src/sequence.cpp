#include "sequence.hpp"

#include <sstream>

namespace embrace {

namespace {

const char* violation_name(StepViolation::Kind kind) {
    switch (kind) {
        case StepViolation::Kind::start_mismatch: return "start mismatch";
        case StepViolation::Kind::bad_exchange: return "bad exchange";
        case StepViolation::Kind::not_a_basis: return "not a basis";
        case StepViolation::Kind::not_embracing: return "not embracing";
        case StepViolation::Kind::wrong_final: return "wrong final basis";
    }
    return "unknown";
}

}  // namespace

std::string VerificationReport::to_string() const {
    std::ostringstream os;
    if (valid) {
        os << "valid";
        os << (monotone ? ", monotone" : ", not monotone");
        if (strictly_monotone) os << ", strictly monotone";
    } else if (violation) {
        os << "invalid at step " << violation->step << ": " << violation_name(violation->kind);
        if (!violation->detail.empty()) os << " (" << violation->detail << ")";
    } else {
        os << "invalid";
    }
    return os.str();
}

VerificationReport verify_exchange_sequence(const OrientedMatroidOracle& oracle,
                                            const BasisSet& A, const BasisSet& B,
                                            const ExchangeSequence& seq) {
    VerificationReport report;

    auto reject = [&](StepViolation::Kind kind, std::size_t step, std::string detail) {
        report.violation = StepViolation{kind, step, std::move(detail)};
    };

    if (seq.start != A) {
        reject(StepViolation::Kind::start_mismatch, 0,
               "sequence starts at " + seq.start.to_string() + ", expected " + A.to_string());
        return report;
    }

    auto check_state = [&](const BasisSet& basis, std::size_t step) {
        if (!oracle.is_basis(basis)) {
            reject(StepViolation::Kind::not_a_basis, step, basis.to_string());
            return false;
        }
        try {
            if (!oracle.is_embracing(basis)) {
                reject(StepViolation::Kind::not_embracing, step, basis.to_string());
                return false;
            }
        } catch (const Error& err) {
            reject(StepViolation::Kind::not_embracing, step,
                   basis.to_string() + ": " + err.what());
            return false;
        }
        report.intersection_sizes.push_back(basis.intersection_size(B));
        return true;
    };

    BasisSet current = seq.start;
    if (!check_state(current, 0)) return report;

    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const ExchangeStep& step = seq.steps[i];
        try {
            current = current.with_exchange(step.removed, step.added);
        } catch (const Error& err) {
            reject(StepViolation::Kind::bad_exchange, i + 1, err.what());
            return report;
        }
        if (!check_state(current, i + 1)) return report;
    }

    if (current != B) {
        reject(StepViolation::Kind::wrong_final, seq.steps.size() + 1,
               "replay ends at " + current.to_string() + ", expected " + B.to_string());
        return report;
    }

    report.valid = true;
    report.monotone = true;
    for (std::size_t i = 1; i < report.intersection_sizes.size(); ++i) {
        if (report.intersection_sizes[i] < report.intersection_sizes[i - 1]) {
            report.monotone = false;
            break;
        }
    }
    report.strictly_monotone = seq.steps.size() == A.difference(B).size();
    return report;
}

}  // namespace embrace
