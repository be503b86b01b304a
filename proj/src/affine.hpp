#pragma once

// Rational point configurations as affine oriented matroids. A point
// set in R^d is lifted to (p, 1); independence, signed circuits and
// the anchor-embracing test (anchor strictly inside the simplex) are
// all decided in exact arithmetic.

#include <span>
#include <string>
#include <vector>

#include "core.hpp"
#include "oracle.hpp"
#include "rationals.hpp"

namespace embrace {

using RationalPoint = std::vector<Rational>;

struct PointConfiguration {
    std::size_t dimension = 0;
    std::vector<RationalPoint> points;
    ElementId anchor_index = 0;

    std::size_t size() const { return points.size(); }
    const RationalPoint& point(ElementId i) const { return points[i]; }
};

// Rank of the (d+1) x k matrix of lifted columns (p, 1), by exact
// fraction-free elimination over integers. Equals k iff the subset is
// affinely independent.
std::size_t lifted_rank(const PointConfiguration& config, std::span<const ElementId> subset);

// Exact dependence coefficients of a minimally dependent subset: a
// primitive integer vector lambda (returned as rationals, aligned with
// the ascending subset order) with sum lambda_i * (p_i, 1) = 0 and the
// first nonzero entry positive. All entries are nonzero by minimality.
// Throws NotACircuit when the subset is independent or not minimal.
std::vector<Rational> affine_dependence(const PointConfiguration& config,
                                        const BasisSet& subset);

// Signed circuit of a minimally dependent subset; oriented so the
// configuration's anchor is negative when it participates, otherwise
// in the canonical orientation.
SignedCircuit affine_signed_circuit(const PointConfiguration& config, const BasisSet& subset);

// True iff every barycentric coordinate of the anchor with respect to
// the simplex is strictly positive. DegenerateSimplex when the simplex
// is not a basis; AnchorOnFace when a coordinate is exactly zero.
bool is_zero_embracing(const PointConfiguration& config, const BasisSet& simplex);

struct PositionViolation {
    enum class Kind { dependent_subset, anchor_on_hyperplane };
    Kind kind = Kind::dependent_subset;
    std::vector<ElementId> elements;
};

struct PositionReport {
    bool ok = true;
    std::vector<PositionViolation> violations;

    std::string to_string() const;
};

// Exhaustive nondegeneracy check: no d+1 points affinely dependent, and
// the anchor avoids every hyperplane spanned by d other points.
PositionReport check_general_position(const PointConfiguration& config);

// Every signed circuit of the configuration (minimal dependent subsets
// of lifted columns), in both orientations. Guarded against point
// counts past 20.
std::vector<SignedCircuit> all_affine_circuits(const PointConfiguration& config);

// Text format: header `points <d> <count>`, one line of d rationals
// (`num/den` or bare integers) per point, then `anchor <index>`.
PointConfiguration parse_points(const std::vector<std::string>& lines);
std::string write_points(const PointConfiguration& config);

// Six points on a common rational circle around the origin anchor,
// ordered clockwise, carrying two interlocked embracing triangles
// A = {0, 3, 4} and B = {1, 2, 5} whose only feasible symmetric
// exchange swaps elements 3 and 2. All stated properties are asserted
// exactly at construction time.
struct InterlockedTriangles {
    PointConfiguration config;
    BasisSet A;
    BasisSet B;
    // Human-readable labels of the six circle points in id order.
    std::vector<std::string> labels;
};

InterlockedTriangles interlocked_triangles_configuration();

class AffineOracle final : public OrientedMatroidOracle {
public:
    explicit AffineOracle(PointConfiguration config);

    std::size_t ground_size() const override { return config_.size(); }
    std::size_t rank() const override { return config_.dimension + 1; }
    ElementId anchor_element_id() const override { return config_.anchor_index; }

    bool is_basis(const BasisSet& candidate) const override;
    SignedCircuit anchored_fundamental_circuit(const BasisSet& basis) const override;
    bool is_embracing(const BasisSet& basis) const override;

    const PointConfiguration& configuration() const { return config_; }

private:
    PointConfiguration config_;
};

}  // namespace embrace
