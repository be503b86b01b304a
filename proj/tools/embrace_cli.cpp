// Command-line front end for the embracing-bases library. Talks to the
// core exclusively through the C API in embrace.h.
//
// Exit codes: 0 success, 1 error, 2 when an audit dumped at least one
// conjecture violation.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "embrace.h"

namespace {

struct InstanceHandle {
    emb_instance* ptr = nullptr;
    InstanceHandle() = default;
    InstanceHandle(const InstanceHandle&) = delete;
    InstanceHandle& operator=(const InstanceHandle&) = delete;
    InstanceHandle(InstanceHandle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
    InstanceHandle& operator=(InstanceHandle&& other) noexcept {
        std::swap(ptr, other.ptr);
        return *this;
    }
    ~InstanceHandle() { emb_instance_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { emb_string_free(ptr); }
};

int fail(const std::string& context) {
    std::fprintf(stderr, "error: %s: %s\n", context.c_str(), emb_last_error());
    return 1;
}

int run_validate_axioms(const std::string& file) {
    InstanceHandle instance;
    if (emb_instance_read_file(file.c_str(), &instance.ptr) != EMB_OK) {
        return fail("reading " + file);
    }
    StringHandle report;
    int passed = 0;
    if (emb_validate_axioms(instance.ptr, &report.ptr, &passed) != EMB_OK) {
        return fail("validating axioms");
    }
    std::fputs(report.ptr, stdout);
    return passed ? 0 : 1;
}

int run_distance(const std::string& file, const std::string& mode, bool monotone) {
    InstanceHandle instance;
    if (emb_instance_read_file(file.c_str(), &instance.ptr) != EMB_OK) {
        return fail("reading " + file);
    }
    uint32_t flags = 0;
    if (mode == "full") flags |= EMB_DISTANCE_FULL_GROUND;
    if (monotone) flags |= EMB_DISTANCE_MONOTONE;
    StringHandle report;
    int64_t distance = -1;
    if (emb_distance(instance.ptr, flags, &report.ptr, &distance) != EMB_OK) {
        return fail("computing the distance");
    }
    std::fputs(report.ptr, stdout);
    return 0;
}

int run_theorem2(const std::string& file) {
    InstanceHandle instance;
    if (emb_instance_read_file(file.c_str(), &instance.ptr) != EMB_OK) {
        return fail("reading " + file);
    }
    StringHandle report;
    int64_t length = 0;
    if (emb_exchange_sequence(instance.ptr, &report.ptr, &length) != EMB_OK) {
        return fail("constructing the exchange sequence");
    }
    std::fputs(report.ptr, stdout);
    return 0;
}

int run_repro(const std::string& which) {
    StringHandle report;
    int passed = 0;
    if (emb_repro(which.c_str(), &report.ptr, &passed) != EMB_OK) {
        return fail("running " + which);
    }
    std::fputs(report.ptr, stdout);
    return passed ? 0 : 1;
}

struct GenParams {
    std::string kind;
    std::size_t vertices = 6;
    std::size_t arcs = 0;  // 0: derived from the vertex count
    std::size_t dimension = 2;
    std::size_t points = 0;  // 0: derived from the dimension
    std::uint64_t seed = 0;
};

emb_status generate_one(const GenParams& params, std::uint64_t seed, emb_instance** out) {
    if (params.kind == "graphic") {
        std::size_t arcs = params.arcs;
        if (arcs == 0) {
            arcs = std::min(2 * params.vertices - 2,
                            params.vertices * (params.vertices - 1));
        }
        return emb_generate_graphic(params.vertices, arcs, seed, out);
    }
    std::size_t points = params.points;
    if (points == 0) points = 2 * (params.dimension + 1);
    return emb_generate_affine(params.dimension, points, seed, out);
}

int run_generate(const GenParams& params) {
    InstanceHandle instance;
    if (generate_one(params, params.seed, &instance.ptr) != EMB_OK) {
        return fail("generating the instance");
    }
    StringHandle text;
    if (emb_instance_to_text(instance.ptr, &text.ptr) != EMB_OK) {
        return fail("serializing the instance");
    }
    std::fputs(text.ptr, stdout);
    return 0;
}

int run_audit(const GenParams& params, std::size_t count, const std::string& mode,
              std::size_t workers, bool require_monotone, int64_t inject_rank,
              const std::string& dump_dir) {
    std::vector<InstanceHandle> handles;
    handles.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        InstanceHandle instance;
        if (generate_one(params, params.seed + i, &instance.ptr) != EMB_OK) {
            return fail("generating instance " + std::to_string(i));
        }
        handles.push_back(std::move(instance));
    }
    std::vector<const emb_instance*> batch;
    batch.reserve(count);
    for (const InstanceHandle& h : handles) batch.push_back(h.ptr);

    uint32_t flags = 0;
    if (mode == "union" || mode == "both") flags |= EMB_AUDIT_UNION_MODE;
    if (mode == "full" || mode == "both") flags |= EMB_AUDIT_FULL_MODE;
    if (require_monotone) flags |= EMB_AUDIT_REQUIRE_MONOTONE;

    StringHandle report;
    size_t violations = 0;
    if (emb_audit(batch.data(), batch.size(), flags, workers,
                  dump_dir.empty() ? nullptr : dump_dir.c_str(), inject_rank, &report.ptr,
                  &violations) != EMB_OK) {
        return fail("auditing");
    }
    std::fputs(report.ptr, stdout);
    return violations > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"embracing bases: exact exchange-sequence toolkit"};
    app.require_subcommand(1);

    std::string va_file;
    CLI::App* validate =
        app.add_subcommand("validate-axioms", "run the signed-circuit axiom checker on an "
                                              "instance's circuit collection");
    validate->add_option("file", va_file, "instance file")->required();

    std::string d_file, d_mode = "union";
    bool d_monotone = false;
    CLI::App* distance = app.add_subcommand(
        "distance", "exact embracing exchange distance between the instance's bases");
    distance->add_option("instance", d_file, "instance file")->required();
    distance->add_option("--mode", d_mode, "where exchanged-in elements come from")
        ->check(CLI::IsMember({"union", "full"}))
        ->capture_default_str();
    distance->add_flag("--monotone", d_monotone, "restrict to monotone sequences");

    std::string t_file;
    CLI::App* theorem2 = app.add_subcommand(
        "theorem2", "constructive two-phase monotone sequence between two embracing trees");
    theorem2->add_option("instance", t_file, "graphic instance file")->required();

    std::string r_which;
    CLI::App* repro =
        app.add_subcommand("repro", "re-derive a worked example and verify its claims");
    repro->add_option("name", r_which, "example1 or example2")
        ->required()
        ->check(CLI::IsMember({"example1", "example2"}));

    GenParams gen_params;
    std::size_t a_count = 10;
    std::string a_mode = "both";
    std::size_t a_workers = 1;
    bool a_require_monotone = false;
    std::int64_t a_inject_rank = -1;
    std::string a_dump_dir;
    CLI::App* audit = app.add_subcommand(
        "audit", "generate seeded instances and audit the distance-at-most-rank bound");
    audit->add_option("--kind", gen_params.kind, "instance family")
        ->required()
        ->check(CLI::IsMember({"graphic", "affine"}));
    audit->add_option("--count", a_count, "number of instances")->capture_default_str();
    audit->add_option("--seed", gen_params.seed, "base seed; instance i uses seed+i")
        ->capture_default_str();
    audit->add_option("--n", gen_params.vertices, "graphic: vertex count")
        ->capture_default_str();
    audit->add_option("--m", gen_params.arcs, "graphic: arc count (0 = 2n-2)");
    audit->add_option("--d", gen_params.dimension, "affine: dimension")
        ->capture_default_str();
    audit->add_option("--points", gen_params.points, "affine: point count (0 = 2(d+1))");
    audit->add_option("--mode", a_mode, "ground mode(s) to audit")
        ->check(CLI::IsMember({"union", "full", "both"}))
        ->capture_default_str();
    audit->add_option("--workers", a_workers, "parallel instance workers")
        ->capture_default_str();
    audit->add_flag("--require-monotone", a_require_monotone,
                    "flag infinite monotone distances as violations");
    audit->add_option("--inject-rank", a_inject_rank,
                      "testing hook: audit against this rank instead of the real one");
    audit->add_option("--dump-dir", a_dump_dir,
                      "counterexample directory (default: $EMBRACE_COUNTEREXAMPLE_DIR or "
                      "./counterexamples)");

    GenParams g_params;
    CLI::App* generate = app.add_subcommand("generate", "emit one random instance file");
    generate->add_option("--kind", g_params.kind, "instance family")
        ->required()
        ->check(CLI::IsMember({"graphic", "affine"}));
    generate->add_option("--seed", g_params.seed, "seed")->capture_default_str();
    generate->add_option("--n", g_params.vertices, "graphic: vertex count")
        ->capture_default_str();
    generate->add_option("--m", g_params.arcs, "graphic: arc count (0 = 2n-2)");
    generate->add_option("--d", g_params.dimension, "affine: dimension")
        ->capture_default_str();
    generate->add_option("--points", g_params.points, "affine: point count (0 = 2(d+1))");

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) return run_validate_axioms(va_file);
    if (distance->parsed()) return run_distance(d_file, d_mode, d_monotone);
    if (theorem2->parsed()) return run_theorem2(t_file);
    if (repro->parsed()) return run_repro(r_which);
    if (audit->parsed()) {
        return run_audit(gen_params, a_count, a_mode, a_workers, a_require_monotone,
                         a_inject_rank, a_dump_dir);
    }
    if (generate->parsed()) return run_generate(g_params);
    return 1;
}
