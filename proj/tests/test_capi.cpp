#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "embrace.h"

namespace {

// RAII over the C handles so test failures cannot leak.
struct InstanceHandle {
    emb_instance* ptr = nullptr;
    ~InstanceHandle() { emb_instance_free(ptr); }
    emb_instance** slot() { return &ptr; }
    const emb_instance* get() const { return ptr; }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { emb_string_free(ptr); }
    char** slot() { return &ptr; }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

std::string data_file(const char* name) {
    return std::string(EMBRACE_TEST_DATA_DIR) + "/" + name;
}

const char* kExample1Text =
    "digraph 5 6\n"
    "0 1\n0 2\n1 3\n2 3\n1 4\n2 4\n"
    "anchor 0 4\n"
    "basis A 0 2 3 4\n"
    "basis B 1 2 3 5\n";

}  // namespace

TEST_CASE("parse, kind, to_text and free round-trip through the boundary") {
    InstanceHandle inst;
    REQUIRE(emb_instance_parse(kExample1Text, inst.slot()) == EMB_OK);
    REQUIRE(inst.get() != nullptr);
    CHECK(std::string(emb_instance_kind(inst.get())) == "graphic");

    StringHandle text;
    REQUIRE(emb_instance_to_text(inst.get(), text.slot()) == EMB_OK);
    CHECK(text.str() == kExample1Text);

    InstanceHandle again;
    REQUIRE(emb_instance_parse(text.ptr, again.slot()) == EMB_OK);
    StringHandle text2;
    REQUIRE(emb_instance_to_text(again.get(), text2.slot()) == EMB_OK);
    CHECK(text2.str() == text.str());
}

TEST_CASE("failures set the status and the thread-local message") {
    InstanceHandle inst;
    CHECK(emb_instance_parse("octopus 1 2\n", inst.slot()) == EMB_ERR_PARSE);
    CHECK(inst.get() == nullptr);
    CHECK(std::strlen(emb_last_error()) > 0);

    CHECK(emb_instance_parse(nullptr, inst.slot()) == EMB_ERR_INVALID_ARGUMENT);
    CHECK(emb_instance_parse(kExample1Text, nullptr) == EMB_ERR_INVALID_ARGUMENT);
    CHECK(emb_instance_read_file("missing/file.txt", inst.slot()) == EMB_ERR_IO);
    CHECK(emb_instance_kind(nullptr) == nullptr);

    StringHandle text;
    CHECK(emb_instance_to_text(nullptr, text.slot()) == EMB_ERR_INVALID_ARGUMENT);

    // Parsing is syntax only; the embracing premise is checked by the
    // analyses that need it.
    const char* bad =
        "digraph 5 6\n0 1\n0 2\n1 3\n2 3\n1 4\n2 4\n"
        "anchor 0 4\nbasis A 0 2 3 4\nbasis B 0 2 3 5\n";
    InstanceHandle parsed;
    REQUIRE(emb_instance_parse(bad, parsed.slot()) == EMB_OK);
    StringHandle report;
    int64_t distance = 0;
    CHECK(emb_distance(parsed.get(), 0, report.slot(), &distance) == EMB_ERR_NOT_EMBRACING);
}

TEST_CASE("reading the shipped files works") {
    for (const char* name : {"example1.txt", "triangles.txt", "explicit_line.txt"}) {
        InstanceHandle inst;
        REQUIRE(emb_instance_read_file(data_file(name).c_str(), inst.slot()) == EMB_OK);
        CHECK(inst.get() != nullptr);
    }
}

TEST_CASE("generation is deterministic per seed across the boundary") {
    InstanceHandle a, b, c;
    REQUIRE(emb_generate_graphic(5, 8, 11, a.slot()) == EMB_OK);
    REQUIRE(emb_generate_graphic(5, 8, 11, b.slot()) == EMB_OK);
    REQUIRE(emb_generate_graphic(5, 8, 12, c.slot()) == EMB_OK);
    StringHandle ta, tb, tc;
    REQUIRE(emb_instance_to_text(a.get(), ta.slot()) == EMB_OK);
    REQUIRE(emb_instance_to_text(b.get(), tb.slot()) == EMB_OK);
    REQUIRE(emb_instance_to_text(c.get(), tc.slot()) == EMB_OK);
    CHECK(ta.str() == tb.str());
    CHECK(ta.str() != tc.str());

    InstanceHandle affine;
    REQUIRE(emb_generate_affine(2, 6, 5, affine.slot()) == EMB_OK);
    CHECK(std::string(emb_instance_kind(affine.get())) == "affine");

    InstanceHandle too_big;
    CHECK(emb_generate_graphic(2, 9, 1, too_big.slot()) == EMB_ERR_GENERATION);
}

TEST_CASE("axiom validation reports a verdict and a readable report") {
    InstanceHandle inst;
    REQUIRE(emb_instance_parse(kExample1Text, inst.slot()) == EMB_OK);
    StringHandle report;
    int passed = 0;
    REQUIRE(emb_validate_axioms(inst.get(), report.slot(), &passed) == EMB_OK);
    CHECK(passed == 1);
    CHECK(report.str().find("all axioms hold") != std::string::npos);

    CHECK(emb_validate_axioms(nullptr, report.slot(), &passed) == EMB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("distances flow through flags") {
    InstanceHandle inst;
    REQUIRE(emb_instance_parse(kExample1Text, inst.slot()) == EMB_OK);

    for (uint32_t flags : {0u, EMB_DISTANCE_FULL_GROUND, EMB_DISTANCE_MONOTONE,
                           EMB_DISTANCE_FULL_GROUND | EMB_DISTANCE_MONOTONE}) {
        StringHandle report;
        int64_t distance = -7;
        REQUIRE(emb_distance(inst.get(), flags, report.slot(), &distance) == EMB_OK);
        CHECK(distance == 3);
        CHECK(report.str().find("start: 0 2 3 4") == 0);
        CHECK(report.str().find("distance: 3") != std::string::npos);
    }

    StringHandle report;
    int64_t distance = 0;
    CHECK(emb_distance(nullptr, 0, report.slot(), &distance) == EMB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("the constructive sequence arrives verified") {
    InstanceHandle inst;
    REQUIRE(emb_instance_parse(kExample1Text, inst.slot()) == EMB_OK);
    StringHandle report;
    int64_t length = -1;
    REQUIRE(emb_exchange_sequence(inst.get(), report.slot(), &length) == EMB_OK);
    CHECK(length == 3);
    std::string text = report.str();
    CHECK(text.find("start: 0 2 3 4\n") == 0);
    CHECK(text.find("- 3 + 1\n") != std::string::npos);
    CHECK(text.find("- 4 + 5\n") != std::string::npos);
    CHECK(text.find("- 0 + 3\n") != std::string::npos);
    CHECK(text.find("length: 3") != std::string::npos);
    CHECK(text.find("verification: valid, monotone") != std::string::npos);

    // Affine instances have no two-phase construction.
    InstanceHandle affine;
    REQUIRE(emb_instance_read_file(data_file("triangles.txt").c_str(), affine.slot()) ==
            EMB_OK);
    CHECK(emb_exchange_sequence(affine.get(), report.slot(), &length) ==
          EMB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("audits aggregate, dump on injection, and count violations") {
    namespace fs = std::filesystem;
    InstanceHandle g, a;
    REQUIRE(emb_generate_graphic(4, 6, 2, g.slot()) == EMB_OK);
    REQUIRE(emb_generate_affine(2, 6, 3, a.slot()) == EMB_OK);
    const emb_instance* batch[2] = {g.get(), a.get()};

    StringHandle report;
    size_t violations = 99;
    REQUIRE(emb_audit(batch, 2, EMB_AUDIT_UNION_MODE | EMB_AUDIT_FULL_MODE, 2, nullptr, -1,
                      report.slot(), &violations) == EMB_OK);
    CHECK(violations == 0);
    CHECK(report.str().find("violations=0") != std::string::npos);
    CHECK(report.str().find("g0") != std::string::npos);
    CHECK(report.str().find("a0") != std::string::npos);

    fs::path dumps = "capi_audit_dumps_tmp";
    fs::remove_all(dumps);
    StringHandle injected;
    violations = 0;
    REQUIRE(emb_audit(batch, 2, EMB_AUDIT_FULL_MODE, 1, dumps.string().c_str(), 0,
                      injected.slot(), &violations) == EMB_OK);
    CHECK(violations == 2);
    CHECK(fs::exists(dumps));
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dumps)) {
        CHECK(entry.path().filename().string().find("counterexample-") == 0);
        ++files;
    }
    CHECK(files == 2);
    fs::remove_all(dumps);

    CHECK(emb_audit(nullptr, 1, 0, 1, nullptr, -1, report.slot(), &violations) ==
          EMB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("both packaged reproductions pass through the C surface") {
    for (const char* name : {"example1", "example2"}) {
        StringHandle report;
        int passed = 0;
        REQUIRE(emb_repro(name, report.slot(), &passed) == EMB_OK);
        CHECK(passed == 1);
        CHECK(report.str().find("verdict: all checks passed") != std::string::npos);
    }
    StringHandle report;
    int passed = 0;
    CHECK(emb_repro("example9", report.slot(), &passed) == EMB_ERR_INVALID_ARGUMENT);
}
