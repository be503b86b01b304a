#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "affine.hpp"

using namespace embrace;

namespace {

// Anchor at the centroid-like interior point of a lopsided triangle:
// 2*p0 + p1 + p2 - 4*p3 = 0.
PointConfiguration weighted_triangle() {
    PointConfiguration config;
    config.dimension = 2;
    config.points = {{Rational(1), Rational(0)},
                     {Rational(-1), Rational(1)},
                     {Rational(-1), Rational(-1)},
                     {Rational(0), Rational(0)}};
    config.anchor_index = 3;
    return config;
}

// Plain Gaussian elimination over exact rationals, used only as an
// independent rank oracle against the fraction-free path.
std::size_t gauss_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::size_t lifted_gauss_rank(const PointConfiguration& config,
                              const std::vector<ElementId>& subset) {
    std::vector<std::vector<Rational>> m(config.dimension + 1,
                                         std::vector<Rational>(subset.size()));
    for (std::size_t j = 0; j < subset.size(); ++j) {
        for (std::size_t i = 0; i < config.dimension; ++i) {
            m[i][j] = config.points[subset[j]][i];
        }
        m[config.dimension][j] = 1;
    }
    return gauss_rank(std::move(m));
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("dependence coefficients are the primitive signed weights") {
    PointConfiguration config = weighted_triangle();
    std::vector<Rational> lambda = affine_dependence(config, BasisSet{0, 1, 2, 3});
    REQUIRE(lambda.size() == 4);
    CHECK(lambda[0] == 2);
    CHECK(lambda[1] == 1);
    CHECK(lambda[2] == 1);
    CHECK(lambda[3] == -4);

    SignedCircuit c = affine_signed_circuit(config, BasisSet{0, 1, 2, 3});
    CHECK(c.positive() == std::vector<ElementId>{0, 1, 2});
    CHECK(c.negative() == std::vector<ElementId>{3});
}

TEST_CASE("independent and non-minimal subsets are not circuits") {
    PointConfiguration config = weighted_triangle();
    config.points.push_back({Rational(3), Rational(3)});
    auto code_of = [&](const BasisSet& subset) {
        try {
            affine_dependence(config, subset);
            return ErrorCode::internal_error;
        } catch (const Error& e) {
            return e.code();
        }
    };
    CHECK(code_of(BasisSet{0, 1, 2}) == ErrorCode::not_a_circuit);   // independent
    CHECK(code_of(BasisSet{0, 1}) == ErrorCode::not_a_circuit);      // independent
    CHECK(code_of(BasisSet{0, 1, 2, 3, 4}) == ErrorCode::not_a_circuit);  // too big
}

TEST_CASE("the strict interior test accepts, rejects, and flags faces") {
    PointConfiguration config = weighted_triangle();
    CHECK(is_zero_embracing(config, BasisSet{0, 1, 2}));

    PointConfiguration outside = config;
    outside.points[3] = {Rational(5), Rational(5)};
    CHECK_FALSE(is_zero_embracing(outside, BasisSet{0, 1, 2}));

    PointConfiguration on_edge;
    on_edge.dimension = 2;
    on_edge.points = {{Rational(0), Rational(0)},
                      {Rational(2), Rational(0)},
                      {Rational(0), Rational(2)},
                      {Rational(1), Rational(0)}};
    on_edge.anchor_index = 3;
    try {
        is_zero_embracing(on_edge, BasisSet{0, 1, 2});
        FAIL_CHECK("anchor on a face went unflagged");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::anchor_on_face);
    }

    // Three collinear points are no simplex at all.
    PointConfiguration degenerate = on_edge;
    degenerate.anchor_index = 2;
    try {
        is_zero_embracing(degenerate, BasisSet{0, 1, 3});
        FAIL_CHECK("degenerate simplex went unflagged");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate_simplex);
    }
}

TEST_CASE("fraction-free rank equals plain rational elimination on random subsets") {
    std::mt19937_64 rng(20240817);
    for (std::size_t trial = 0; trial < 40; ++trial) {
        PointConfiguration config;
        config.dimension = 1 + trial % 3;
        std::size_t count = config.dimension + 2 + trial % 4;
        for (std::size_t i = 0; i < count; ++i) {
            RationalPoint p;
            for (std::size_t k = 0; k < config.dimension; ++k) {
                long long num = static_cast<long long>(rng() % 13) - 6;
                long long den = 1 + static_cast<long long>(rng() % 4);
                p.push_back(Rational(num, den));
            }
            config.points.push_back(std::move(p));
        }
        // All subsets, including deliberately dependent ones.
        for (std::uint32_t mask = 1; mask < (1u << count); ++mask) {
            std::vector<ElementId> subset;
            for (ElementId i = 0; i < count; ++i) {
                if (mask & (1u << i)) subset.push_back(i);
            }
            CHECK(lifted_rank(config, subset) == lifted_gauss_rank(config, subset));
        }
    }
}

TEST_CASE("dependence coefficients are invariant under affine maps and scaling") {
    PointConfiguration config = weighted_triangle();
    std::vector<Rational> base = affine_dependence(config, BasisSet{0, 1, 2, 3});

    PointConfiguration mapped = config;
    for (RationalPoint& p : mapped.points) {
        Rational x = p[0], y = p[1];
        // An invertible affine map: (x, y) -> (3x - y + 1, x + 2y - 5).
        p[0] = Rational(3) * x - y + 1;
        p[1] = x + Rational(2) * y - 5;
    }
    CHECK(affine_dependence(mapped, BasisSet{0, 1, 2, 3}) == base);
    CHECK(is_zero_embracing(mapped, BasisSet{0, 1, 2}));
}

TEST_CASE("the interlocked triangles configuration has its stated geometry") {
    InterlockedTriangles interlocked = interlocked_triangles_configuration();
    const PointConfiguration& config = interlocked.config;
    REQUIRE(config.points.size() == 7);
    CHECK(config.dimension == 2);
    CHECK(config.anchor_index == 6);
    CHECK(interlocked.labels ==
          std::vector<std::string>{"u", "x", "y", "v", "w", "z"});
    CHECK(check_general_position(config).ok);

    AffineOracle oracle(config);
    CHECK(oracle.rank() == 3);
    CHECK(oracle.is_embracing(interlocked.A));
    CHECK(oracle.is_embracing(interlocked.B));

    // Three neighbouring arc points never surround the centre.
    CHECK_FALSE(oracle.is_embracing(BasisSet{0, 1, 2}));

    // Exactly one cross-swap keeps both triangles embracing.
    std::vector<std::pair<ElementId, ElementId>> feasible;
    for (ElementId p : interlocked.A) {
        for (ElementId q : interlocked.B) {
            BasisSet a2 = interlocked.A.with_exchange(p, q);
            BasisSet b2 = interlocked.B.with_exchange(q, p);
            if (oracle.is_embracing(a2) && oracle.is_embracing(b2)) {
                feasible.push_back({p, q});
            }
        }
    }
    REQUIRE(feasible.size() == 1);
    CHECK(feasible[0].first == 3);   // v leaves the first triangle
    CHECK(feasible[0].second == 2);  // y replaces it
}

TEST_CASE("general position holds for the circle but fails with a repeated line") {
    InterlockedTriangles interlocked = interlocked_triangles_configuration();
    PointConfiguration spoiled = interlocked.config;
    // Drag one point onto the line through two others: u, x and the
    // midpoint scaling of their span.
    spoiled.points[2] = {Rational(2) * spoiled.points[0][0] - spoiled.points[1][0],
                         Rational(2) * spoiled.points[0][1] - spoiled.points[1][1]};
    PositionReport report = check_general_position(spoiled);
    CHECK_FALSE(report.ok);
    REQUIRE_FALSE(report.violations.empty());
    CHECK(report.violations[0].kind == PositionViolation::Kind::dependent_subset);

    PointConfiguration on_line = interlocked.config;
    on_line.points[6] = {(on_line.points[0][0] + on_line.points[1][0]) / 2,
                         (on_line.points[0][1] + on_line.points[1][1]) / 2};
    PositionReport anchored = check_general_position(on_line);
    CHECK_FALSE(anchored.ok);
    CHECK(std::ranges::any_of(anchored.violations, [](const PositionViolation& v) {
        return v.kind == PositionViolation::Kind::anchor_on_hyperplane;
    }));
}

TEST_CASE("in the plane every four-point subset of the circle is a circuit") {
    InterlockedTriangles interlocked = interlocked_triangles_configuration();
    std::vector<SignedCircuit> circuits = all_affine_circuits(interlocked.config);
    CHECK(circuits.size() == 70);  // both orientations of C(7,4) supports

    std::set<std::string> seen;
    for (const SignedCircuit& c : circuits) {
        CHECK(c.support_size() == 4);
        seen.insert(c.to_string());
    }
    CHECK(seen.size() == 70);
    for (const SignedCircuit& c : circuits) {
        CHECK(seen.count(c.negated().to_string()) == 1);

        // Re-derive the weights of this support and compare signs.
        std::vector<ElementId> support;
        for (ElementId e : c.positive()) support.push_back(e);
        for (ElementId e : c.negative()) support.push_back(e);
        std::ranges::sort(support);
        std::vector<Rational> lambda =
            affine_dependence(interlocked.config, BasisSet(support));
        SignedCircuit derived = affine_signed_circuit(interlocked.config, BasisSet(support));
        CHECK((derived == c || derived == c.negated()));
        // The circuit's sign pattern must equal the weight signs up to
        // one global flip.
        bool flipped = c.is_negative(support[0]) == (lambda[0] > 0);
        for (std::size_t i = 0; i < support.size(); ++i) {
            REQUIRE(lambda[i] != 0);
            bool expect_positive = (lambda[i] > 0) != flipped;
            CHECK(c.is_positive(support[i]) == expect_positive);
            CHECK(c.is_negative(support[i]) == !expect_positive);
        }
    }
}

TEST_CASE("the affine oracle validates its configuration up front") {
    PointConfiguration config = weighted_triangle();
    CHECK_NOTHROW(AffineOracle{config});

    PointConfiguration bad_anchor = config;
    bad_anchor.anchor_index = 4;
    CHECK_THROWS_AS(AffineOracle{bad_anchor}, Error);

    PointConfiguration duplicate = config;
    duplicate.points[1] = duplicate.points[0];
    CHECK_THROWS_AS(AffineOracle{duplicate}, Error);

    PointConfiguration flat;
    flat.dimension = 2;
    flat.points = {{Rational(0), Rational(0)},
                   {Rational(1), Rational(0)},
                   {Rational(2), Rational(0)},
                   {Rational(3), Rational(0)}};
    flat.anchor_index = 0;
    CHECK_THROWS_AS(AffineOracle{flat}, Error);  // never spans the plane

    PointConfiguration empty;
    empty.dimension = 2;
    empty.anchor_index = 0;
    CHECK_THROWS_AS(AffineOracle{empty}, Error);
}

TEST_CASE("oracle bases are the affinely independent full-size subsets") {
    AffineOracle oracle(weighted_triangle());
    CHECK(oracle.ground_size() == 4);
    CHECK(oracle.rank() == 3);
    CHECK(oracle.anchor_element_id() == 3);
    CHECK(oracle.is_basis(BasisSet{0, 1, 2}));
    CHECK(oracle.is_basis(BasisSet{0, 1, 3}));
    CHECK_FALSE(oracle.is_basis(BasisSet{0, 1}));
    CHECK_FALSE(oracle.is_basis(BasisSet{0, 1, 2, 3}));

    SignedCircuit c = oracle.anchored_fundamental_circuit(BasisSet{0, 1, 2});
    CHECK(c.positive() == std::vector<ElementId>{0, 1, 2});
    CHECK(c.negative() == std::vector<ElementId>{3});
    CHECK_THROWS_AS(oracle.anchored_fundamental_circuit(BasisSet{0, 1, 3}), Error);
}

TEST_CASE("anchored circuits may omit basis points in degenerate position") {
    PointConfiguration on_edge;
    on_edge.dimension = 2;
    on_edge.points = {{Rational(0), Rational(0)},
                      {Rational(2), Rational(0)},
                      {Rational(0), Rational(2)},
                      {Rational(1), Rational(0)}};
    on_edge.anchor_index = 3;
    AffineOracle oracle(on_edge);
    SignedCircuit c = oracle.anchored_fundamental_circuit(BasisSet{0, 1, 2});
    CHECK(c.positive() == std::vector<ElementId>{0, 1});
    CHECK(c.negative() == std::vector<ElementId>{3});
    CHECK_FALSE(c.contains(2));
}

TEST_CASE("point files round-trip and reject malformed input") {
    InterlockedTriangles interlocked = interlocked_triangles_configuration();
    std::string text = write_points(interlocked.config);
    PointConfiguration parsed = parse_points(lines_of(text));
    CHECK(parsed.dimension == interlocked.config.dimension);
    CHECK(parsed.anchor_index == interlocked.config.anchor_index);
    CHECK(parsed.points == interlocked.config.points);
    CHECK(write_points(parsed) == text);

    auto expect_parse_error = [](const std::string& body) {
        try {
            parse_points(lines_of(body));
            FAIL_CHECK("no exception for: " << body);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::parse_error);
        }
    };
    expect_parse_error("points 2 1\n1 2\n");             // missing anchor
    expect_parse_error("points 2 2\n1 2\nanchor 0\n");   // missing point line
    expect_parse_error("points 2 1\n1\nanchor 0\n");     // wrong coordinate count
    expect_parse_error("points 2 1\n1 x\nanchor 0\n");   // bad rational
    expect_parse_error("points 2 1\n1 1/0\nanchor 0\n"); // zero denominator
    expect_parse_error("points 2 1\n1 2\nanchor 1\n");   // anchor out of range
    expect_parse_error("pts 2 1\n1 2\nanchor 0\n");      // bad header
}
