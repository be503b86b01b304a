#include "audit.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "graphic_exchange.hpp"
#include "sequence.hpp"

namespace embrace {

AuditValue AuditValue::of(const DistanceResult& r) {
    switch (r.status) {
        case DistanceResult::Status::finite:
            return {State::finite, r.distance};
        case DistanceResult::Status::infinite:
            return {State::infinite, 0};
        case DistanceResult::Status::unknown_beyond_bound:
            return {State::unknown, 0};
    }
    return {};
}

std::string AuditValue::to_string() const {
    switch (state) {
        case State::finite:
            return std::to_string(value);
        case State::infinite:
            return "inf";
        case State::unknown:
            return "?";
        case State::skipped:
            return "-";
    }
    return "-";
}

namespace {

const char* kind_name(Instance::Kind kind) {
    switch (kind) {
        case Instance::Kind::graphic:
            return "graphic";
        case Instance::Kind::affine:
            return "affine";
        case Instance::Kind::explicit_om:
            return "explicit";
    }
    return "unknown";
}

char kind_prefix(Instance::Kind kind) {
    switch (kind) {
        case Instance::Kind::graphic:
            return 'g';
        case Instance::Kind::affine:
            return 'a';
        case Instance::Kind::explicit_om:
            return 'e';
    }
    return 'x';
}

// Exceeding the rank bound, in either plain mode, is the audited
// conjecture's violation; an infinite or undecided distance also
// fails the bound.
bool breaks_bound(const AuditValue& v, std::size_t rank) {
    switch (v.state) {
        case AuditValue::State::finite:
            return v.value > rank;
        case AuditValue::State::infinite:
        case AuditValue::State::unknown:
            return true;
        case AuditValue::State::skipped:
            return false;
    }
    return false;
}

std::string dump_directory(const AuditOptions& options) {
    if (!options.counterexample_dir.empty()) return options.counterexample_dir;
    if (const char* env = std::getenv("EMBRACE_COUNTEREXAMPLE_DIR")) {
        if (*env) return env;
    }
    return "counterexamples";
}

std::string commented(const std::string& text) {
    std::ostringstream os;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) os << "# " << line << '\n';
    return os.str();
}

struct DumpSink {
    std::string directory;
    std::mutex mutex;
    bool created = false;

    std::string write(const std::string& name, const std::string& content) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!created) {
            std::error_code ec;
            std::filesystem::create_directories(directory, ec);
            if (ec) {
                throw Error(ErrorCode::io_error,
                            "cannot create dump directory '" + directory + "'");
            }
            created = true;
        }
        const std::string path = (std::filesystem::path(directory) / name).string();
        std::ofstream out(path);
        if (!out) throw Error(ErrorCode::io_error, "cannot write dump '" + path + "'");
        out << content;
        return path;
    }
};

void audit_one(const Instance& instance, const AuditOptions& options, AuditRecord& record,
               DumpSink& dumps) {
    record.kind = instance.kind;
    record.fingerprint = instance_fingerprint(instance);
    record.ground = instance.ground_size();
    try {
        std::unique_ptr<OrientedMatroidOracle> oracle = instance.make_oracle();
        record.rank = options.rank_override.value_or(oracle->rank());
        record.unoriented =
            AuditValue::finite(unoriented_distance(instance.A, instance.B));

        SearchOptions union_mode, full_mode;
        full_mode.ground_mode = GroundMode::full;
        DistanceResult witness_source;
        if (options.run_union_mode) {
            DistanceResult r = embracing_distance(*oracle, instance.A, instance.B, union_mode);
            record.dist_union = AuditValue::of(r);
            record.mono_union = AuditValue::of(
                monotone_embracing_distance(*oracle, instance.A, instance.B, union_mode));
            witness_source = std::move(r);
        }
        if (options.run_full_mode) {
            DistanceResult r = embracing_distance(*oracle, instance.A, instance.B, full_mode);
            record.dist_full = AuditValue::of(r);
            record.mono_full = AuditValue::of(
                monotone_embracing_distance(*oracle, instance.A, instance.B, full_mode));
            if (!options.run_union_mode) witness_source = std::move(r);
        }

        if (instance.kind == Instance::Kind::graphic && instance.anchor.is_vertex_pair()) {
            ExchangeSequence seq = monotone_exchange_sequence(
                instance.digraph(), instance.anchor.source(), instance.anchor.target(),
                instance.A, instance.B);
            VerificationReport check =
                verify_exchange_sequence(*oracle, instance.A, instance.B, seq);
            if (!check.valid || !check.monotone) {
                throw Error(ErrorCode::internal_error,
                            "constructive sequence failed verification: " + check.to_string());
            }
            record.constructive = AuditValue::finite(seq.steps.size());
        }

        record.violation = breaks_bound(record.dist_union, record.rank) ||
                           breaks_bound(record.dist_full, record.rank);
        if (options.require_monotone_finite) {
            record.violation = record.violation ||
                               record.mono_union.state == AuditValue::State::infinite ||
                               record.mono_full.state == AuditValue::State::infinite;
        }

        if (record.violation) {
            std::ostringstream dump;
            dump << "# conjecture violation: embracing distance vs rank "
                 << record.rank << '\n';
            dump << "# " << audit_report_columns() << '\n';
            dump << "# " << record.to_line() << '\n';
            dump << instance.to_text();
            dump << "# witness of the measured distance:\n";
            dump << commented(format_distance_result(instance.A, witness_source));
            record.dump_path =
                dumps.write("counterexample-" + record.id + "-" + record.fingerprint + ".txt",
                            dump.str());
        }
    } catch (const Error& e) {
        record.error = std::string(error_code_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
        record.error = std::string("exception: ") + e.what();
    }
}

}  // namespace

std::string AuditRecord::to_line() const {
    std::ostringstream os;
    os << id << ' ' << fingerprint << ' ' << kind_name(kind) << ' ' << ground << ' ' << rank
       << ' ' << unoriented.to_string() << ' ' << dist_union.to_string() << ' '
       << dist_full.to_string() << ' ' << mono_union.to_string() << ' '
       << mono_full.to_string() << ' ' << constructive.to_string() << ' ';
    if (!error.empty()) {
        os << "error";
    } else {
        os << (violation ? "VIOLATION" : "pass");
    }
    return os.str();
}

std::string audit_report_columns() {
    return "id fingerprint kind ground rank unoriented dist_union dist_full mono_union "
           "mono_full constructive verdict";
}

std::string AuditReport::to_text() const {
    std::ostringstream os;
    os << "# embracing-exchange audit: checks embracing distance <= rank per ground mode\n";
    os << "# affine instances are audited in general position only\n";
    os << audit_report_columns() << '\n';
    for (const AuditRecord& r : records) {
        os << r.to_line() << '\n';
        if (!r.error.empty()) os << "# " << r.id << " failed: " << r.error << '\n';
        if (!r.dump_path.empty()) os << "# " << r.id << " dumped: " << r.dump_path << '\n';
    }
    os << "# summary: instances=" << records.size() << " violations=" << violations
       << " errors=" << errors << " max-distance/rank=" << max_ratio_distance << '/'
       << max_ratio_rank << '\n';
    return os.str();
}

AuditReport audit(const std::vector<Instance>& instances, const AuditOptions& options) {
    AuditReport report;
    report.records.resize(instances.size());

    std::vector<std::size_t> kind_counter(3, 0);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const std::size_t ordinal = kind_counter[static_cast<int>(instances[i].kind)]++;
        report.records[i].id = kind_prefix(instances[i].kind) + std::to_string(ordinal);
    }

    DumpSink dumps{dump_directory(options)};
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) break;
            audit_one(instances[i], options, report.records[i], dumps);
        }
    };
    const std::size_t workers =
        std::max<std::size_t>(1, std::min(options.workers, instances.size() + 1));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    for (const AuditRecord& r : report.records) {
        if (!r.error.empty()) ++report.errors;
        if (r.violation) ++report.violations;
        for (const AuditValue* v : {&r.dist_union, &r.dist_full}) {
            if (v->state == AuditValue::State::finite && r.rank > 0 &&
                v->value * report.max_ratio_rank > report.max_ratio_distance * r.rank) {
                report.max_ratio_distance = v->value;
                report.max_ratio_rank = r.rank;
            }
        }
    }
    return report;
}

}  // namespace embrace
