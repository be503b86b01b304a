#include "doctest.h"

#include "repro.hpp"

using namespace embrace;

TEST_CASE("the digraph example reproduction passes every internal check") {
    ReproReport report = repro_example1();
    CHECK(report.ok);
    CHECK(report.text.find("FAIL") == std::string::npos);
    // Load-bearing facts the report must state.
    CHECK(report.text.find("distance") != std::string::npos);
    CHECK(report.text.find("3") != std::string::npos);
    CHECK(report.text.find("verdict: all checks passed") != std::string::npos);
}

TEST_CASE("the circle example reproduction passes every internal check") {
    ReproReport report = repro_example2();
    CHECK(report.ok);
    CHECK(report.text.find("FAIL") == std::string::npos);
    CHECK(report.text.find("verdict: all checks passed") != std::string::npos);
}

TEST_CASE("reproduction output is deterministic") {
    CHECK(repro_example1().text == repro_example1().text);
    CHECK(repro_example2().text == repro_example2().text);
}
