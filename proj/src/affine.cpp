#include "affine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace embrace {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

void check_subset_ids(const PointConfiguration& config, std::span<const ElementId> subset) {
    for (ElementId e : subset) {
        if (e >= config.size()) {
            throw Error(ErrorCode::invalid_argument,
                        "point index " + std::to_string(e) + " out of range");
        }
    }
}

// Lifted columns (p, 1) with denominators cleared per column; clearing
// scales each column by a positive rational, which preserves rank and
// dependence signs.
IntMatrix lifted_integer_matrix(const PointConfiguration& config,
                                std::span<const ElementId> subset) {
    const std::size_t rows = config.dimension + 1;
    IntMatrix m(rows, std::vector<Integer>(subset.size()));
    for (std::size_t j = 0; j < subset.size(); ++j) {
        const RationalPoint& p = config.point(subset[j]);
        Integer scale = 1;
        for (const Rational& c : p) scale = lcm(scale, denominator(c));
        for (std::size_t i = 0; i + 1 < rows; ++i) {
            m[i][j] = numerator(p[i]) * (scale / denominator(p[i]));
        }
        m[rows - 1][j] = scale;
    }
    return m;
}

RatMatrix lifted_rational_matrix(const PointConfiguration& config,
                                 std::span<const ElementId> subset) {
    const std::size_t rows = config.dimension + 1;
    RatMatrix m(rows, std::vector<Rational>(subset.size()));
    for (std::size_t j = 0; j < subset.size(); ++j) {
        const RationalPoint& p = config.point(subset[j]);
        for (std::size_t i = 0; i + 1 < rows; ++i) m[i][j] = p[i];
        m[rows - 1][j] = 1;
    }
    return m;
}

// Fraction-free (Bareiss) elimination; every division below is exact.
std::size_t bareiss_rank(IntMatrix m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

// Gauss-Jordan to reduced row-echelon form; returns the pivot column
// of each pivot row.
std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty() || m[0].empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational pivot = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// One-dimensional nullspace of a rational matrix; throws internal_error
// when the nullity is not exactly one.
std::vector<Rational> nullspace_vector(RatMatrix m) {
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<std::size_t> pivots = rref(m);
    if (pivots.size() + 1 != cols) {
        throw Error(ErrorCode::internal_error, "expected a one-dimensional nullspace");
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col]) ++free_col;

    std::vector<Rational> lambda(cols, Rational(0));
    lambda[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        lambda[pivots[r]] = -m[r][free_col];
    }
    return lambda;
}

// Scale to a primitive integer vector with positive leading entry.
void normalize_primitive(std::vector<Rational>& v) {
    Integer scale = 1;
    for (const Rational& x : v) scale = lcm(scale, denominator(x));
    Integer g = 0;
    std::vector<Integer> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (scale / denominator(v[i]));
        g = gcd(g, ints[i]);
    }
    if (g == 0) return;
    bool flip = false;
    for (const Integer& x : ints) {
        if (x != 0) {
            flip = x < 0;
            break;
        }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = Rational(flip ? -ints[i] : ints[i], g);
    }
}

template <typename Visit>
void for_each_combination(std::size_t m, std::size_t k, Visit&& visit) {
    if (k > m) return;
    std::vector<ElementId> pick(k);
    std::iota(pick.begin(), pick.end(), ElementId(0));
    while (true) {
        visit(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
        if (i == 0) return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

std::size_t lifted_rank(const PointConfiguration& config, std::span<const ElementId> subset) {
    check_subset_ids(config, subset);
    if (subset.empty()) return 0;
    return bareiss_rank(lifted_integer_matrix(config, subset));
}

std::vector<Rational> affine_dependence(const PointConfiguration& config,
                                        const BasisSet& subset) {
    check_subset_ids(config, subset.elements());
    const std::size_t k = subset.size();
    const std::size_t r = lifted_rank(config, subset.elements());
    if (r == k) {
        throw Error(ErrorCode::not_a_circuit, "subset is affinely independent");
    }
    if (r + 1 != k) {
        throw Error(ErrorCode::not_a_circuit, "subset is dependent but not minimally so");
    }
    std::vector<ElementId> reduced;
    reduced.reserve(k - 1);
    for (std::size_t skip = 0; skip < k; ++skip) {
        reduced.clear();
        for (std::size_t j = 0; j < k; ++j) {
            if (j != skip) reduced.push_back(subset.elements()[j]);
        }
        if (lifted_rank(config, reduced) != k - 1) {
            throw Error(ErrorCode::not_a_circuit, "a proper subset is already dependent");
        }
    }

    std::vector<Rational> lambda =
        nullspace_vector(lifted_rational_matrix(config, subset.elements()));
    for (const Rational& x : lambda) {
        if (x == 0) {
            throw Error(ErrorCode::internal_error,
                        "zero coefficient in a minimal dependence");
        }
    }
    normalize_primitive(lambda);
    return lambda;
}

SignedCircuit affine_signed_circuit(const PointConfiguration& config, const BasisSet& subset) {
    std::vector<Rational> lambda = affine_dependence(config, subset);
    bool flip = false;
    for (std::size_t j = 0; j < subset.size(); ++j) {
        if (subset.elements()[j] == config.anchor_index) {
            flip = lambda[j] > 0;
            break;
        }
    }
    std::vector<ElementId> positive, negative;
    for (std::size_t j = 0; j < subset.size(); ++j) {
        const bool pos = flip ? lambda[j] < 0 : lambda[j] > 0;
        (pos ? positive : negative).push_back(subset.elements()[j]);
    }
    SignedCircuit circuit(std::move(positive), std::move(negative));
    return circuit.contains(config.anchor_index) ? circuit : circuit.canonical();
}

bool is_zero_embracing(const PointConfiguration& config, const BasisSet& simplex) {
    check_subset_ids(config, simplex.elements());
    if (simplex.contains(config.anchor_index)) {
        throw Error(ErrorCode::anchor_in_basis, "anchor is a vertex of the simplex");
    }
    const std::size_t k = config.dimension + 1;
    if (simplex.size() != k || lifted_rank(config, simplex.elements()) != k) {
        throw Error(ErrorCode::degenerate_simplex,
                    "simplex is not a full-dimensional affine basis");
    }

    // Solve sum mu_i * (p_i, 1) = (anchor, 1); the solution is unique
    // because the simplex columns form a basis.
    RatMatrix m = lifted_rational_matrix(config, simplex.elements());
    const RationalPoint& anchor = config.point(config.anchor_index);
    for (std::size_t i = 0; i + 1 < m.size(); ++i) m[i].push_back(anchor[i]);
    m.back().push_back(1);

    std::vector<std::size_t> pivots = rref(m);
    if (pivots.size() != k) {
        throw Error(ErrorCode::internal_error, "barycentric system lost rank");
    }
    bool all_positive = true;
    for (std::size_t r = 0; r < k; ++r) {
        const Rational& mu = m[r][k];
        if (mu == 0) {
            throw Error(ErrorCode::anchor_on_face,
                        "anchor lies on a face of the simplex");
        }
        if (mu < 0) all_positive = false;
    }
    return all_positive;
}

std::string PositionReport::to_string() const {
    if (ok) return "general position";
    std::ostringstream os;
    os << violations.size() << " degeneracies:";
    for (const PositionViolation& v : violations) {
        os << (v.kind == PositionViolation::Kind::dependent_subset ? "\n dependent points"
                                                                   : "\n anchor on hyperplane of");
        for (ElementId e : v.elements) os << ' ' << e;
    }
    return os.str();
}

PositionReport check_general_position(const PointConfiguration& config) {
    if (config.size() > 20) {
        throw Error(ErrorCode::invalid_argument,
                    "general-position check supports at most 20 points");
    }
    PositionReport report;
    const std::size_t d = config.dimension;

    for_each_combination(config.size(), d + 1, [&](const std::vector<ElementId>& pick) {
        if (lifted_rank(config, pick) <= d) {
            report.violations.push_back(
                PositionViolation{PositionViolation::Kind::dependent_subset, pick});
        }
    });

    // Hyperplanes through the anchor: d affinely independent non-anchor
    // points whose span also fits the anchor.
    std::vector<ElementId> others;
    for (ElementId e = 0; e < config.size(); ++e) {
        if (e != config.anchor_index) others.push_back(e);
    }
    std::vector<ElementId> subset(d), with_anchor(d + 1);
    for_each_combination(others.size(), d, [&](const std::vector<ElementId>& pick) {
        for (std::size_t i = 0; i < d; ++i) subset[i] = others[pick[i]];
        if (lifted_rank(config, subset) != d) return;  // already a dependency violation
        std::copy(subset.begin(), subset.end(), with_anchor.begin());
        with_anchor.back() = config.anchor_index;
        if (lifted_rank(config, with_anchor) == d) {
            report.violations.push_back(PositionViolation{
                PositionViolation::Kind::anchor_on_hyperplane, subset});
        }
    });

    report.ok = report.violations.empty();
    return report;
}

std::vector<SignedCircuit> all_affine_circuits(const PointConfiguration& config) {
    if (config.size() > 20) {
        throw Error(ErrorCode::invalid_argument,
                    "circuit enumeration supports at most 20 points");
    }
    std::vector<SignedCircuit> out;
    const std::size_t max_support = config.dimension + 2;
    for (std::size_t k = 2; k <= max_support && k <= config.size(); ++k) {
        for_each_combination(config.size(), k, [&](const std::vector<ElementId>& pick) {
            try {
                SignedCircuit c = affine_signed_circuit(config, BasisSet(pick));
                out.push_back(c.negated());
                out.push_back(std::move(c));
            } catch (const Error& err) {
                if (err.code() != ErrorCode::not_a_circuit) throw;
            }
        });
    }
    return out;
}

namespace {

Rational parse_rational_token(const std::string& tok) {
    try {
        const std::size_t slash = tok.find('/');
        if (slash == std::string::npos) {
            return Rational(Integer(tok));
        }
        Integer num(tok.substr(0, slash));
        Integer den(tok.substr(slash + 1));
        if (den == 0) {
            throw Error(ErrorCode::parse_error, "zero denominator in '" + tok + "'");
        }
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorCode::parse_error, "bad rational '" + tok + "'");
    }
}

std::string format_rational(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

}  // namespace

PointConfiguration parse_points(const std::vector<std::string>& lines) {
    PointConfiguration config;
    bool saw_header = false, saw_anchor = false;
    std::size_t declared_count = 0;
    for (const std::string& raw : lines) {
        std::istringstream in(raw);
        std::string head;
        if (!(in >> head) || head[0] == '#') continue;

        if (!saw_header) {
            long long d = -1, count = -1;
            if (head != "points" || !(in >> d >> count) || d < 1 || count < 0) {
                throw Error(ErrorCode::parse_error,
                            "expected header 'points <d> <count>', got: " + raw);
            }
            config.dimension = static_cast<std::size_t>(d);
            declared_count = static_cast<std::size_t>(count);
            config.points.reserve(declared_count);
            saw_header = true;
            continue;
        }
        if (head == "anchor") {
            long long idx = -1;
            if (saw_anchor || !(in >> idx) || idx < 0) {
                throw Error(ErrorCode::parse_error, "bad anchor line: " + raw);
            }
            config.anchor_index = static_cast<ElementId>(idx);
            saw_anchor = true;
            continue;
        }

        RationalPoint p;
        p.reserve(config.dimension);
        p.push_back(parse_rational_token(head));
        std::string tok;
        while (in >> tok) p.push_back(parse_rational_token(tok));
        if (p.size() != config.dimension) {
            throw Error(ErrorCode::parse_error,
                        "point line has " + std::to_string(p.size()) + " coordinates, expected " +
                            std::to_string(config.dimension) + ": " + raw);
        }
        config.points.push_back(std::move(p));
    }
    if (!saw_header) throw Error(ErrorCode::parse_error, "missing 'points <d> <count>' header");
    if (!saw_anchor) throw Error(ErrorCode::parse_error, "missing 'anchor <index>' line");
    if (config.points.size() != declared_count) {
        throw Error(ErrorCode::parse_error,
                    "header declares " + std::to_string(declared_count) + " points, found " +
                        std::to_string(config.points.size()));
    }
    if (config.anchor_index >= config.points.size()) {
        throw Error(ErrorCode::parse_error, "anchor index out of range");
    }
    return config;
}

std::string write_points(const PointConfiguration& config) {
    std::ostringstream os;
    os << "points " << config.dimension << ' ' << config.points.size() << '\n';
    for (const RationalPoint& p : config.points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) os << ' ';
            os << format_rational(p[i]);
        }
        os << '\n';
    }
    os << "anchor " << config.anchor_index << '\n';
    return os.str();
}

namespace {

Rational cross(const RationalPoint& a, const RationalPoint& b) {
    return a[0] * b[1] - a[1] * b[0];
}

[[noreturn]] void construction_failure(const std::string& what) {
    throw Error(ErrorCode::internal_error, "circle configuration invariant failed: " + what);
}

}  // namespace

InterlockedTriangles interlocked_triangles_configuration() {
    // Six points on the unit circle via the rational parametrization
    // t -> ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)), with
    // t = 0, -1/4, -4/7, -15/4, 17/3, 11/4 respectively.
    InterlockedTriangles result;
    PointConfiguration& config = result.config;
    config.dimension = 2;
    config.points = {
        {Rational(1), Rational(0)},                  // u
        {Rational(15, 17), Rational(-8, 17)},        // x
        {Rational(33, 65), Rational(-56, 65)},       // y
        {Rational(-209, 241), Rational(-120, 241)},  // v
        {Rational(-140, 149), Rational(51, 149)},    // w
        {Rational(-105, 137), Rational(88, 137)},    // z
        {Rational(0), Rational(0)},                  // anchor
    };
    config.anchor_index = 6;
    result.A = BasisSet{0, 3, 4};  // u, v, w
    result.B = BasisSet{1, 2, 5};  // x, y, z
    result.labels = {"u", "x", "y", "v", "w", "z"};

    // Everything below revalidates the construction exactly.
    for (ElementId i = 0; i < 6; ++i) {
        Rational norm = config.points[i][0] * config.points[i][0] +
                        config.points[i][1] * config.points[i][1];
        if (norm != 1) construction_failure("point off the unit circle");
    }
    if (!check_general_position(config).ok) construction_failure("degenerate position");
    if (!is_zero_embracing(config, result.A)) construction_failure("first triangle");
    if (!is_zero_embracing(config, result.B)) construction_failure("second triangle");

    // Clockwise order from (1, 0): the five remaining points fall into
    // the lower half plane (clockwise angle below half a turn) then the
    // upper; within a half, a precedes b iff cross(a, b) < 0.
    auto half = [&](ElementId i) { return config.points[i][1] < 0 ? 0 : 1; };
    const ElementId order[5] = {1, 2, 3, 4, 5};
    for (ElementId i : order) {
        if (config.points[i][1] == 0) construction_failure("point on the x-axis");
    }
    for (std::size_t j = 0; j + 1 < 5; ++j) {
        const ElementId a = order[j], b = order[j + 1];
        if (half(a) > half(b)) construction_failure("clockwise half order");
        if (half(a) == half(b) && !(cross(config.points[a], config.points[b]) < 0)) {
            construction_failure("clockwise order within a half");
        }
    }

    // The antipode of w must fall strictly between u and x clockwise.
    RationalPoint anti = {-config.points[4][0], -config.points[4][1]};
    if (!(anti[1] < 0)) construction_failure("antipode of w not below the axis");
    if (!(cross(anti, config.points[1]) < 0)) construction_failure("antipode of w past x");

    return result;
}

AffineOracle::AffineOracle(PointConfiguration config) : config_(std::move(config)) {
    if (config_.dimension < 1) {
        throw Error(ErrorCode::invalid_argument, "dimension must be at least 1");
    }
    if (config_.anchor_index >= config_.size()) {
        throw Error(ErrorCode::invalid_argument, "anchor index out of range");
    }
    for (const RationalPoint& p : config_.points) {
        if (p.size() != config_.dimension) {
            throw Error(ErrorCode::invalid_argument, "point with wrong dimension");
        }
    }
    for (std::size_t i = 0; i < config_.size(); ++i) {
        for (std::size_t j = i + 1; j < config_.size(); ++j) {
            if (config_.points[i] == config_.points[j]) {
                throw Error(ErrorCode::invalid_argument,
                            "points " + std::to_string(i) + " and " + std::to_string(j) +
                                " coincide");
            }
        }
    }
    std::vector<ElementId> all(config_.size());
    std::iota(all.begin(), all.end(), ElementId(0));
    if (lifted_rank(config_, all) != config_.dimension + 1) {
        throw Error(ErrorCode::invalid_argument,
                    "configuration does not affinely span its space");
    }
}

bool AffineOracle::is_basis(const BasisSet& candidate) const {
    if (candidate.size() != config_.dimension + 1) return false;
    for (ElementId e : candidate) {
        if (e >= config_.size()) return false;
    }
    return lifted_rank(config_, candidate.elements()) == config_.dimension + 1;
}

SignedCircuit AffineOracle::anchored_fundamental_circuit(const BasisSet& basis) const {
    if (basis.contains(config_.anchor_index)) {
        throw Error(ErrorCode::anchor_in_basis, "anchor belongs to the basis");
    }
    if (!is_basis(basis)) {
        throw Error(ErrorCode::not_a_basis, "fundamental circuit requires a basis");
    }
    // basis + anchor has nullity exactly one; the support of the lone
    // dependence is the fundamental circuit, and the anchor always
    // participates because the basis alone is independent.
    std::vector<ElementId> ids(basis.begin(), basis.end());
    ids.insert(std::upper_bound(ids.begin(), ids.end(), config_.anchor_index),
               config_.anchor_index);
    std::vector<Rational> lambda = nullspace_vector(lifted_rational_matrix(config_, ids));

    bool flip = false;
    for (std::size_t j = 0; j < ids.size(); ++j) {
        if (ids[j] == config_.anchor_index) {
            if (lambda[j] == 0) {
                throw Error(ErrorCode::internal_error, "anchor missing from its own circuit");
            }
            flip = lambda[j] > 0;
            break;
        }
    }
    std::vector<ElementId> positive, negative;
    for (std::size_t j = 0; j < ids.size(); ++j) {
        if (lambda[j] == 0) continue;
        const bool pos = flip ? lambda[j] < 0 : lambda[j] > 0;
        (pos ? positive : negative).push_back(ids[j]);
    }
    return SignedCircuit(std::move(positive), std::move(negative));
}

bool AffineOracle::is_embracing(const BasisSet& basis) const {
    return is_zero_embracing(config_, basis);
}

}  // namespace embrace
