#pragma once

// Batch conjecture auditing: per-instance distance measurements, the
// distance-at-most-rank verdict, counterexample dumps for violations,
// and a deterministic text report (fixed columns, no timestamps, and
// worker-count-independent output).

#include <optional>
#include <string>
#include <vector>

#include "instance.hpp"
#include "search.hpp"

namespace embrace {

struct AuditOptions {
    bool run_union_mode = true;
    bool run_full_mode = true;
    bool require_monotone_finite = false;  // treat an infinite monotone distance as a violation
    std::size_t workers = 1;
    // Dump directory; empty falls back to $EMBRACE_COUNTEREXAMPLE_DIR,
    // then "./counterexamples".
    std::string counterexample_dir;
    // Fault-injection hook: audit verdicts against this rank instead of
    // the oracle's. Exists to exercise the dump path in tests.
    std::optional<std::size_t> rank_override;
};

struct AuditValue {
    enum class State { skipped, finite, infinite, unknown };
    State state = State::skipped;
    std::size_t value = 0;

    static AuditValue of(const DistanceResult& r);
    static AuditValue finite(std::size_t v) { return {State::finite, v}; }
    std::string to_string() const;  // number | "inf" | "?" | "-"
};

struct AuditRecord {
    std::string id;
    std::string fingerprint;
    Instance::Kind kind = Instance::Kind::graphic;
    std::size_t ground = 0;
    std::size_t rank = 0;
    AuditValue unoriented;
    AuditValue dist_union;
    AuditValue dist_full;
    AuditValue mono_union;
    AuditValue mono_full;
    AuditValue constructive;  // two-phase sequence length; graphic st instances only
    bool violation = false;
    std::string dump_path;  // set when a counterexample dump was written
    std::string error;      // set when the instance could not be audited

    std::string to_line() const;
};

struct AuditReport {
    std::vector<AuditRecord> records;
    std::size_t violations = 0;
    std::size_t errors = 0;
    // Largest finite distance/rank ratio seen, as an exact fraction.
    std::size_t max_ratio_distance = 0;
    std::size_t max_ratio_rank = 1;

    std::string to_text() const;
};

// Column names of the per-record report lines.
std::string audit_report_columns();

// Audits every instance (ids g0/a2/e5... by position and kind) and
// writes one dump file per violating instance. Instance-level errors
// are recorded, never fatal.
AuditReport audit(const std::vector<Instance>& instances, const AuditOptions& options = {});

}  // namespace embrace
