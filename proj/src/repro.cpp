#include "repro.hpp"

#include <sstream>

#include "affine.hpp"
#include "digraph.hpp"
#include "graphic_exchange.hpp"
#include "search.hpp"
#include "sequence.hpp"

namespace embrace {

namespace {

struct Checker {
    std::ostringstream os;
    bool ok = true;

    void check(bool pass, const std::string& what) {
        os << (pass ? "ok:   " : "FAIL: ") << what << '\n';
        ok = ok && pass;
    }
    void note(const std::string& line) { os << line << '\n'; }

    ReproReport finish() {
        os << (ok ? "verdict: all checks passed" : "verdict: CHECKS FAILED") << '\n';
        return ReproReport{ok, os.str()};
    }
};

template <typename Names>
std::string labeled_set(const BasisSet& set, const Names& names) {
    std::string out = "{";
    for (ElementId e : set) {
        if (out.size() > 1) out += ' ';
        out += names[e];
    }
    return out + "}";
}

template <typename Names>
std::string labeled_steps(const std::vector<ExchangeStep>& steps, const Names& names) {
    std::string out;
    for (const ExchangeStep& s : steps) {
        if (!out.empty()) out += ", ";
        out += "-";
        out += names[s.removed];
        out += " +";
        out += names[s.added];
    }
    return out.empty() ? "(empty)" : out;
}

}  // namespace

ReproReport repro_example1() {
    Checker c;
    // Vertices s=0 u=1 v=2 w=3 t=4; arcs listed tail->head.
    const Digraph d(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}});
    const char* names[6] = {"su", "sv", "uw", "vw", "ut", "vt"};
    const BasisSet A{0, 2, 3, 4};  // su uw vw ut
    const BasisSet B{1, 2, 3, 5};  // sv uw vw vt
    GraphicOracle oracle(d, Anchor::of_vertices(0, 4));

    c.note("digraph: 5 vertices s=0 u=1 v=2 w=3 t=4, arcs su sv uw vw ut vt");
    c.note("A = " + labeled_set(A, names) + "   B = " + labeled_set(B, names));
    c.check(oracle.is_embracing(A), "A is an st-embracing spanning tree");
    c.check(oracle.is_embracing(B), "B is an st-embracing spanning tree");

    const std::size_t unoriented = unoriented_distance(A, B);
    c.check(unoriented == 2, "unoriented distance |A \\ B| = 2");

    // Exhaust all two-step sequences A -> T1 -> B over the full ground set.
    std::size_t candidates = 0, reaching = 0;
    for (ElementId e1 : A) {
        for (ElementId f1 = 0; f1 < d.arc_count(); ++f1) {
            if (A.contains(f1)) continue;
            const BasisSet T1 = A.with_exchange(e1, f1);
            if (!oracle.is_basis(T1) || !oracle.is_embracing(T1)) continue;
            ++candidates;
            if (T1.difference(B).size() != 1) continue;
            const ElementId e2 = T1.difference(B).front();
            const ElementId f2 = BasisSet(B).difference(T1).front();
            if (oracle.is_basis(T1.with_exchange(e2, f2)) && T1.with_exchange(e2, f2) == B) {
                ++reaching;
            }
        }
    }
    c.note("embracing single exchanges from A: " + std::to_string(candidates));
    c.check(reaching == 0, "no two-step embracing sequence reaches B (exhaustive)");

    const DistanceResult dist = embracing_distance(oracle, A, B);
    c.check(dist.status == DistanceResult::Status::finite && dist.distance == 3,
            "embracing exchange distance = 3");
    if (dist.witness) {
        c.note("shortest witness: " + labeled_steps(dist.witness->steps, names));
    }

    const ExchangeSequence known{A, {{3, 1}, {4, 5}, {0, 3}}};  // -vw+sv -ut+vt -su+vw
    c.note("known three-step sequence: " + labeled_steps(known.steps, names));
    const VerificationReport known_check = verify_exchange_sequence(oracle, A, B, known);
    c.check(known_check.valid, "known sequence is a valid embracing sequence");
    c.check(known_check.monotone, "known sequence is monotone");
    {
        std::string sizes;
        for (std::size_t v : known_check.intersection_sizes) {
            sizes += (sizes.empty() ? "" : " ") + std::to_string(v);
        }
        c.note("known sequence |T & B| profile: " + sizes);
    }

    const ExchangeSequence constructed = monotone_exchange_sequence(d, 0, 4, A, B);
    c.note("constructive two-phase sequence: " + labeled_steps(constructed.steps, names));
    const VerificationReport built_check = verify_exchange_sequence(oracle, A, B, constructed);
    c.check(built_check.valid && built_check.monotone,
            "constructive sequence is valid and monotone");
    c.check(constructed.steps.size() <= 4, "constructive length " +
                                               std::to_string(constructed.steps.size()) +
                                               " within the bound n-1 = 4");
    return c.finish();
}

ReproReport repro_example2() {
    Checker c;
    const InterlockedTriangles data = interlocked_triangles_configuration();
    const AffineOracle oracle(data.config);
    const char* names[7] = {"u", "x", "y", "v", "w", "z", "o"};

    c.note("six points on the unit circle around the origin anchor o:");
    for (ElementId i = 0; i < 6; ++i) {
        std::ostringstream line;
        line << "  " << names[i] << " = (" << data.config.points[i][0] << ", "
             << data.config.points[i][1] << ")";
        c.note(line.str());
    }
    c.note("A = " + labeled_set(data.A, names) + "   B = " + labeled_set(data.B, names));
    c.check(is_zero_embracing(data.config, data.A), "triangle A embraces the origin");
    c.check(is_zero_embracing(data.config, data.B), "triangle B embraces the origin");

    // All nine candidate symmetric exchanges between the disjoint triangles.
    auto survey = [&](const BasisSet& S, const BasisSet& T, std::vector<ExchangeStep>& feasible) {
        for (ElementId e : S.difference(T)) {
            for (ElementId f : T.difference(S)) {
                const BasisSet S2 = S.with_exchange(e, f);
                const BasisSet T2 = T.with_exchange(f, e);
                std::string verdict;
                if (!oracle.is_basis(S2) || !oracle.is_basis(T2)) {
                    verdict = "degenerate triangle";
                } else if (!oracle.is_embracing(S2)) {
                    verdict = "first triangle stops embracing";
                } else if (!oracle.is_embracing(T2)) {
                    verdict = "second triangle stops embracing";
                } else {
                    verdict = "FEASIBLE";
                    feasible.push_back(ExchangeStep{e, f});
                }
                c.note(std::string("  swap ") + names[e] + " <-> " + names[f] + ": " + verdict);
            }
        }
    };

    c.note("candidate symmetric exchanges from (A, B):");
    std::vector<ExchangeStep> first;
    survey(data.A, data.B, first);
    c.check(first.size() == 1, "exactly 1 of 9 candidate exchanges is feasible");
    c.check(first.size() == 1 && first[0].removed == 3 && first[0].added == 2,
            "the feasible exchange swaps v and y");

    const BasisSet A2 = data.A.with_exchange(3, 2);
    const BasisSet B2 = data.B.with_exchange(2, 3);
    c.note("after the swap: A' = " + labeled_set(A2, names) + "   B' = " +
           labeled_set(B2, names));
    c.note("candidate symmetric exchanges from (A', B'):");
    std::vector<ExchangeStep> second;
    survey(A2, B2, second);
    c.check(second.size() == 1 && second[0].removed == 2 && second[0].added == 3,
            "the only exchange from (A', B') swaps y and v back");

    const PairReachabilityReport pairs =
        symmetric_exchange_reachability(oracle, data.A, data.B);
    c.note("pair graph nodes, in discovery order:");
    for (const auto& [s, t] : pairs.reachable_pairs) {
        c.note("  (" + labeled_set(s, names) + ", " + labeled_set(t, names) + ")");
    }
    c.check(pairs.reachable_pairs.size() == 2, "the pair graph has exactly two nodes");
    c.check(!pairs.truncated, "the pair search ran to exhaustion");
    c.check(!pairs.target_reached, "(B, A) is unreachable by symmetric exchanges");

    SearchOptions full;
    full.ground_mode = GroundMode::full;
    const DistanceResult plain = embracing_distance(oracle, data.A, data.B);
    const DistanceResult plain_full = embracing_distance(oracle, data.A, data.B, full);
    c.check(plain.status == DistanceResult::Status::finite && plain.distance <= 3,
            "plain embracing distance (union mode) is finite and at most the rank 3");
    c.check(plain_full.status == DistanceResult::Status::finite && plain_full.distance <= 3,
            "plain embracing distance (full mode) is finite and at most the rank 3");
    if (plain.witness) {
        c.note("distance " + std::to_string(plain.distance) + " witness: " +
               labeled_steps(plain.witness->steps, names));
    }
    return c.finish();
}

}  // namespace embrace
