#include "embrace.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "audit.hpp"
#include "axioms.hpp"
#include "core.hpp"
#include "generate.hpp"
#include "graphic_exchange.hpp"
#include "instance.hpp"
#include "repro.hpp"
#include "search.hpp"
#include "sequence.hpp"

struct emb_instance {
    embrace::Instance value;
};

namespace {

thread_local std::string g_last_error;

emb_status status_of(embrace::ErrorCode code) {
    using embrace::ErrorCode;
    switch (code) {
        case ErrorCode::parse_error:
            return EMB_ERR_PARSE;
        case ErrorCode::invalid_argument:
            return EMB_ERR_INVALID_ARGUMENT;
        case ErrorCode::anchor_in_basis:
            return EMB_ERR_ANCHOR_IN_BASIS;
        case ErrorCode::anchor_not_spanned:
            return EMB_ERR_ANCHOR_NOT_SPANNED;
        case ErrorCode::not_a_tree:
            return EMB_ERR_NOT_A_TREE;
        case ErrorCode::not_a_basis:
            return EMB_ERR_NOT_A_BASIS;
        case ErrorCode::not_embracing:
            return EMB_ERR_NOT_EMBRACING;
        case ErrorCode::precondition_violated:
            return EMB_ERR_PRECONDITION;
        case ErrorCode::not_a_circuit:
            return EMB_ERR_NOT_A_CIRCUIT;
        case ErrorCode::degenerate_simplex:
            return EMB_ERR_DEGENERATE_SIMPLEX;
        case ErrorCode::anchor_on_face:
            return EMB_ERR_ANCHOR_ON_FACE;
        case ErrorCode::cardinality_mismatch:
            return EMB_ERR_CARDINALITY;
        case ErrorCode::generation_failed:
            return EMB_ERR_GENERATION;
        case ErrorCode::io_error:
            return EMB_ERR_IO;
        case ErrorCode::internal_error:
            return EMB_ERR_INTERNAL;
    }
    return EMB_ERR_UNKNOWN;
}

template <typename Fn>
emb_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return EMB_OK;
    } catch (const embrace::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return EMB_ERR_UNKNOWN;
    } catch (...) {
        g_last_error = "unknown failure";
        return EMB_ERR_UNKNOWN;
    }
}

emb_status fail(emb_status status, const char* message) {
    g_last_error = message;
    return status;
}

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

std::vector<embrace::SignedCircuit> instance_circuits(const embrace::Instance& instance) {
    switch (instance.kind) {
        case embrace::Instance::Kind::graphic:
            return embrace::all_graphic_circuits(instance.digraph());
        case embrace::Instance::Kind::affine:
            return embrace::all_affine_circuits(instance.points());
        case embrace::Instance::Kind::explicit_om:
            return instance.explicit_circuits().circuits_with_negations();
    }
    throw embrace::Error(embrace::ErrorCode::internal_error, "unreachable instance kind");
}

}  // namespace

extern "C" {

const char* emb_last_error(void) { return g_last_error.c_str(); }

void emb_string_free(char* text) { std::free(text); }

void emb_instance_free(emb_instance* instance) { delete instance; }

emb_status emb_instance_parse(const char* text, emb_instance** out) {
    if (!text || !out) return fail(EMB_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new emb_instance{embrace::parse_instance_text(text)}; });
}

emb_status emb_instance_read_file(const char* path, emb_instance** out) {
    if (!path || !out) return fail(EMB_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new emb_instance{embrace::read_instance_file(path)}; });
}

emb_status emb_instance_to_text(const emb_instance* instance, char** out) {
    if (!instance || !out) return fail(EMB_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = dup_string(instance->value.to_text()); });
}

const char* emb_instance_kind(const emb_instance* instance) {
    if (!instance) return nullptr;
    switch (instance->value.kind) {
        case embrace::Instance::Kind::graphic:
            return "graphic";
        case embrace::Instance::Kind::affine:
            return "affine";
        case embrace::Instance::Kind::explicit_om:
            return "explicit";
    }
    return nullptr;
}

emb_status emb_generate_graphic(size_t vertices, size_t arcs, uint64_t seed,
                                emb_instance** out) {
    if (!out) return fail(EMB_ERR_INVALID_ARGUMENT, "null argument");
    return guarded(
        [&] { *out = new emb_instance{embrace::gen_graphic(vertices, arcs, seed)}; });
}

emb_status emb_generate_affine(size_t dimension, size_t points, uint64_t seed,
                               emb_instance** out) {
    if (!out) return fail(EMB_ERR_INVALID_ARGUMENT, "null argument");
    return guarded(
        [&] { *out = new emb_instance{embrace::gen_affine(dimension, points, seed)}; });
}

emb_status emb_validate_axioms(const emb_instance* instance, char** report, int* passed) {
    if (!instance || !report || !passed) {
        return fail(EMB_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        const embrace::AxiomReport result = embrace::validate_circuit_axioms(
            instance_circuits(instance->value), instance->value.ground_size());
        *passed = result.all_passed() ? 1 : 0;
        *report = dup_string(result.to_string());
    });
}

emb_status emb_distance(const emb_instance* instance, uint32_t flags, char** report,
                        int64_t* distance) {
    if (!instance || !report) return fail(EMB_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        embrace::SearchOptions options;
        if (flags & EMB_DISTANCE_FULL_GROUND) {
            options.ground_mode = embrace::GroundMode::full;
        }
        options.monotone_only = (flags & EMB_DISTANCE_MONOTONE) != 0;
        const std::unique_ptr<embrace::OrientedMatroidOracle> oracle =
            instance->value.make_oracle();
        const embrace::DistanceResult result = embrace::embracing_distance(
            *oracle, instance->value.A, instance->value.B, options);
        if (distance) {
            *distance = result.status == embrace::DistanceResult::Status::finite
                            ? static_cast<int64_t>(result.distance)
                            : -1;
        }
        *report = dup_string(embrace::format_distance_result(instance->value.A, result));
    });
}

emb_status emb_exchange_sequence(const emb_instance* instance, char** report,
                                 int64_t* length) {
    if (!instance || !report) return fail(EMB_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const embrace::Instance& value = instance->value;
        if (value.kind != embrace::Instance::Kind::graphic || !value.anchor.is_vertex_pair()) {
            throw embrace::Error(
                embrace::ErrorCode::invalid_argument,
                "the two-phase sequence needs a graphic instance with a vertex-pair anchor");
        }
        const embrace::ExchangeSequence sequence = embrace::monotone_exchange_sequence(
            value.digraph(), value.anchor.source(), value.anchor.target(), value.A, value.B);
        const std::unique_ptr<embrace::OrientedMatroidOracle> oracle = value.make_oracle();
        const embrace::VerificationReport check =
            embrace::verify_exchange_sequence(*oracle, value.A, value.B, sequence);

        std::string text = "start:";
        for (embrace::ElementId e : value.A) text += ' ' + std::to_string(e);
        text += '\n';
        for (const embrace::ExchangeStep& step : sequence.steps) {
            text += "- " + std::to_string(step.removed) + " + " + std::to_string(step.added) +
                    '\n';
        }
        text += "length: " + std::to_string(sequence.steps.size()) + '\n';
        text += "verification: " + check.to_string() + '\n';
        if (!check.valid || !check.monotone) {
            throw embrace::Error(embrace::ErrorCode::internal_error,
                                 "constructed sequence failed verification: " +
                                     check.to_string());
        }
        if (length) *length = static_cast<int64_t>(sequence.steps.size());
        *report = dup_string(text);
    });
}

emb_status emb_audit(const emb_instance* const* instances, size_t count, uint32_t flags,
                     size_t workers, const char* dump_dir, int64_t inject_rank,
                     char** report, size_t* violations) {
    if ((!instances && count > 0) || !report) {
        return fail(EMB_ERR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        std::vector<embrace::Instance> batch;
        batch.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!instances[i]) {
                throw embrace::Error(embrace::ErrorCode::invalid_argument,
                                     "null instance in batch");
            }
            batch.push_back(instances[i]->value);
        }
        embrace::AuditOptions options;
        options.run_union_mode = (flags & EMB_AUDIT_UNION_MODE) != 0;
        options.run_full_mode = (flags & EMB_AUDIT_FULL_MODE) != 0;
        if (!options.run_union_mode && !options.run_full_mode) {
            throw embrace::Error(embrace::ErrorCode::invalid_argument,
                                 "select at least one ground mode");
        }
        options.require_monotone_finite = (flags & EMB_AUDIT_REQUIRE_MONOTONE) != 0;
        options.workers = workers;
        if (dump_dir) options.counterexample_dir = dump_dir;
        if (inject_rank >= 0) options.rank_override = static_cast<std::size_t>(inject_rank);
        const embrace::AuditReport result = embrace::audit(batch, options);
        if (violations) *violations = result.violations;
        *report = dup_string(result.to_text());
    });
}

emb_status emb_repro(const char* name, char** report, int* passed) {
    if (!name || !report || !passed) return fail(EMB_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const std::string which = name;
        embrace::ReproReport result;
        if (which == "example1") {
            result = embrace::repro_example1();
        } else if (which == "example2") {
            result = embrace::repro_example2();
        } else {
            throw embrace::Error(embrace::ErrorCode::invalid_argument,
                                 "unknown reproduction '" + which + "'");
        }
        *passed = result.ok ? 1 : 0;
        *report = dup_string(result.text);
    });
}

}  // extern "C"
