#pragma once

/**
 * @file search.hpp
 * @brief The four-step polygon search.
 *
 * Step 1 enumerates triples (delta1, delta2, delta3) of mirror normals of
 * three consecutive polygon sides, with delta2 a wall of the fundamental
 * triangle. Step 2 solves the twist-coefficient divisibility conditions.
 * Step 3 solves for the exact Weyl vector. Step 4 extends the chain side by
 * side until the polygon closes, the geometry dies out, or a bound is hit.
 *
 * Sign convention: chamber normals point outward, so for valid consecutive
 * sides -(delta_i, delta_j) lies in {0,1,2} and all printed bounds apply to
 * the negated inner products.
 */

#include <optional>
#include <string>
#include <vector>

#include "gcm3/gcm.hpp"
#include "gcm3/lattice.hpp"

namespace gcm3 {

struct ChamberTriple {
    Root delta1, delta2, delta3;
    Int g12, g13, g23;  // negated pairwise inner products, all >= 0
    int wall = 0;       // index of delta2 in {a,b,c}

    SymMat gram() const;  // 3x3 with diagonal 2 and off-diagonal -(g_ij)
};

/**
 * Ordered candidate mirrors adjacent to one end of a wall's chamber side:
 * finitely many mirrors crossing the wall's geodesic at or beyond the
 * anchoring vertex (ordered marching away from the triangle), followed by
 * the infinite pencil of mirrors through the ideal endpoint, an arithmetic
 * progression with the endpoint as step.
 */
struct SideWalk {
    std::vector<Root> crossings;
    IntVec3 pencil_first;
    IntVec3 pencil_step;

    Root pencil(size_t k) const;  // k-th pencil member, k >= 0
    Root at(size_t i) const;      // crossings, then pencil
};

// The two walks anchored at the fundamental triangle's wall (0=a,1=b,2=c).
SideWalk delta1_walk(int wall);
SideWalk delta3_walk(int wall);

// All triples for the given middle wall under the bound
// 0 <= -(delta1,delta3) < cross_bound, in canonical (walk-index) order.
std::vector<ChamberTriple> enumerate_triples(int wall, const Int& cross_bound = 14);

// Independent oracle: filters the square-2 vectors of a coordinate box by
// the side predicates (adjacency bounds, chamber containment, opposite ends
// of the middle mirror, delta1 != +-delta3). Must agree with
// enumerate_triples wherever the box covers the walks.
std::vector<ChamberTriple> enumerate_triples_bruteforce(int wall, const Int& cross_bound = 14,
                                                        long coeff_bound = 40);

// All coprime (lambda1,lambda2,lambda3), lambda_i >= 1, with
// lambda_i | g_ij * lambda_j for every ordered pair, sorted lexicographically.
// Each lambda ranges over the divisors of the lcm of its incident nonzero
// Gram entries; a coefficient with both incident entries zero is unbounded
// and throws UnboundedSearchError unless a cap is given.
std::vector<TwistVector> solve_twists(const Int& g12, const Int& g13, const Int& g23,
                                      std::optional<Int> cap = std::nullopt);

// p-adic form of the same conditions: |nu_p(lambda_i) - nu_p(lambda_j)| <=
// nu_p(g_ij) for every prime p, entries g = 0 imposing no constraint.
// Cross-check only; solve_twists is the primary filter.
bool check_valuations(const std::array<Int, 3>& lam, const std::array<Int, 3>& g);

struct WeylVector {
    RatVec3 coords;
    Rat norm;  // (rho, rho)
};

// Unique rho with (rho, delta_i) = -lambda_i. Throws SingularMatrixError
// when the triple is degenerate.
WeylVector solve_weyl(const ChamberTriple& triple, const TwistVector& lam);

enum class PolygonStatus { Closed, Open, Failed };

enum class FailReason {
    None,
    WeylNormNonNegative,  // (rho,rho) >= 0, rejected before the search
    NoAdmissibleRoot,     // the scan window closed with no valid next side
    CoeffBoundExhausted,  // pencil coordinates exceeded coeff_bound
    LambdaCapExceeded,    // every remaining candidate forces lambda > cap
    ClosureInvalid,       // chain returned to delta1 but global checks failed
};

std::string to_string(PolygonStatus s);
std::string to_string(FailReason r);

struct PolygonCandidate {
    std::vector<Root> deltas;
    std::vector<Int> lambdas;
    WeylVector weyl;
    PolygonStatus status = PolygonStatus::Open;
    FailReason reason = FailReason::None;
    std::string detail;  // human-readable failure detail
    std::optional<RealizationMatrix> realization;  // set when closed
    int wall = 0;        // delta2 wall of the originating triple

    Int max_lambda() const;
};

// Seed from a step-1 triple and a twist vector; solves the Weyl vector and
// marks the candidate Failed(WeylNormNonNegative) when (rho,rho) >= 0.
PolygonCandidate make_seed(const ChamberTriple& triple, const TwistVector& lam);

// Extends the chain with the first admissible next mirror (in position order
// along the current side) until it closes back onto delta1. lambda of each
// new side is forced by the Weyl vector and must be a positive integer
// <= lambda_cap satisfying the divisibility conditions against all chosen
// sides. Terminates Closed / Open (max_sides reached) / Failed(reason).
PolygonCandidate extend_polygon(PolygonCandidate seed, long max_sides = 20,
                                long coeff_bound = 40, const Int& lambda_cap = 12);

struct PipelineConfig {
    Int cross_bound = 14;
    Int lambda_cap = 12;
    long coeff_bound = 40;
    long max_sides = 20;
    int threads = 0;  // 0: use GCM3_THREADS or hardware concurrency
};

struct PipelineStats {
    std::array<long, 3> triples_per_wall{0, 0, 0};
    long triples_total = 0;
    long seeds_total = 0;
    long closed = 0, open = 0, failed = 0;
    long closed_after_dedup = 0;
    Int max_lambda_closed = 0;
    bool all_lambda_le6 = true;
    bool all_lambda_le12 = true;
};

struct PipelineResult {
    std::vector<PolygonCandidate> candidates;  // closed ones deduplicated
    PipelineStats stats;
};

// Full sweep over all three walls; per-candidate failures are recorded, the
// sweep never aborts. Output is deterministic and independent of the worker
// count (results are merged in task order).
PipelineResult run_pipeline(const PipelineConfig& config = {});

// Deduplication key: lexicographically smallest serialization of
// (deltas, lambdas) over all cyclic rotations and the two orientations.
std::string canonical_cycle_key(const std::vector<Root>& deltas, const std::vector<Int>& lambdas);

// --- serialization ----------------------------------------------------------

std::string candidate_to_json(const PolygonCandidate& c);
std::optional<PolygonCandidate> candidate_from_json(const std::string& text);

std::string result_to_json(const PipelineResult& r, const PipelineConfig& config);
std::string candidates_to_csv(const std::vector<PolygonCandidate>& cs);
std::string summary_text(const PipelineResult& r, const PipelineConfig& config);

std::string triples_to_csv(const std::vector<ChamberTriple>& ts);
std::string triples_to_json(const std::vector<ChamberTriple>& ts);
std::string triples_to_text(const std::vector<ChamberTriple>& ts);

// --- fixture diffing --------------------------------------------------------

struct TriplePair {
    IntVec3 delta1, delta3;
    friend bool operator==(const TriplePair&, const TriplePair&) = default;
    friend bool operator<(const TriplePair& a, const TriplePair& b) {
        if (!(a.delta1 == b.delta1)) return a.delta1 < b.delta1;
        return a.delta3 < b.delta3;
    }
};

struct ListFixture {
    long stated_total = 0;
    std::array<std::vector<TriplePair>, 3> lists;  // per wall
};

std::optional<ListFixture> fixture_from_json(const std::string& text);

struct ListDiff {
    std::vector<TriplePair> computed_only;  // enumerated here, absent from the fixture
    std::vector<TriplePair> fixture_only;   // in the fixture, not enumerated
    bool empty() const { return computed_only.empty() && fixture_only.empty(); }
};

ListDiff diff_triples(const std::vector<ChamberTriple>& computed,
                      const std::vector<TriplePair>& fixture);

}  // namespace gcm3
