#include <algorithm>

#include "gcm3/search.hpp"
#include "walk_internal.hpp"

namespace gcm3 {

std::string to_string(PolygonStatus s) {
    switch (s) {
        case PolygonStatus::Closed: return "closed";
        case PolygonStatus::Open: return "open";
        default: return "failed";
    }
}

std::string to_string(FailReason r) {
    switch (r) {
        case FailReason::None: return "";
        case FailReason::WeylNormNonNegative: return "weyl norm nonnegative";
        case FailReason::NoAdmissibleRoot: return "no admissible root";
        case FailReason::CoeffBoundExhausted: return "coefficient bound exhausted";
        case FailReason::LambdaCapExceeded: return "lambda cap exceeded";
        case FailReason::ClosureInvalid: return "closure invalid";
    }
    return "";
}

Int PolygonCandidate::max_lambda() const {
    Int m = 0;
    for (const Int& l : lambdas) m = std::max(m, l);
    return m;
}

PolygonCandidate make_seed(const ChamberTriple& triple, const TwistVector& lam) {
    PolygonCandidate c;
    c.deltas = {triple.delta1, triple.delta2, triple.delta3};
    c.lambdas = lam.values();
    c.weyl = solve_weyl(triple, lam);
    c.wall = triple.wall;
    if (c.weyl.norm >= 0) {
        c.status = PolygonStatus::Failed;
        c.reason = FailReason::WeylNormNonNegative;
        c.detail = "(rho,rho) = " + to_string(c.weyl.norm);
    } else {
        c.status = PolygonStatus::Open;
    }
    return c;
}

namespace {

const GramForm& gform() { return GramForm::triangle(); }

// vertex shared by two adjacent mirrors: a crossing for -(m1,m2) in {0,1},
// the common cusp for -(m1,m2) = 2
IntVec3 adjacency_vertex(const IntVec3& m1, const IntVec3& m2) {
    const GramForm& g = gform();
    Int ip = g.inner(m1, m2);
    if (ip == -2) {
        IntVec3 cusp = (m1 + m2).primitive();
        if (g.inner(cusp, Triangle::get().interior) > 0) cusp = -cusp;
        return cusp;
    }
    return mirror_crossing(m1, m2, g);
}

bool adjacent(const IntVec3& m1, const IntVec3& m2) {
    Int ip = gform().inner(m1, m2);
    return ip <= 0 && ip >= -2;
}

struct Chain {
    std::vector<IntVec3> walls;
    std::vector<Int> lambdas;
    std::vector<IntVec3> verts;  // verts[i] between walls[i] and walls[i+1]
    RatVec3 rho;
};

PolygonCandidate fail(PolygonCandidate c, FailReason r, std::string detail) {
    c.status = PolygonStatus::Failed;
    c.reason = r;
    c.detail = std::move(detail);
    return c;
}

// -(rho, delta) when it is a positive integer
std::optional<Int> forced_lambda(const RatVec3& rho, const IntVec3& delta) {
    Rat v = -gform().inner(rho, delta);
    if (!is_integer(v) || v < 1) return std::nullopt;
    return Int(v.get_num());
}

bool divisibility_ok(const Chain& ch, const IntVec3& delta, const Int& lam, size_t skip) {
    const GramForm& g = gform();
    for (size_t j = 0; j < ch.walls.size(); ++j) {
        if (j == skip) continue;
        Int ip = g.inner(ch.walls[j], delta);
        if (ip > 0) return false;  // chamber normals must face away from each other
        if (!divides(lam, ch.lambdas[j] * ip)) return false;
        if (!divides(ch.lambdas[j], lam * ip)) return false;
    }
    return true;
}

bool point_inside_all(const Chain& ch, const IntVec3& p) {
    for (const auto& w : ch.walls)
        if (gform().inner(p, w) > 0) return false;
    return true;
}

bool verts_inside(const Chain& ch, const IntVec3& delta) {
    for (const auto& v : ch.verts)
        if (gform().inner(v, delta) > 0) return false;
    return true;
}

bool repeats_wall(const Chain& ch, const IntVec3& delta) {
    return std::find(ch.walls.begin(), ch.walls.end(), delta) != ch.walls.end();
}

// The quadruple (walls[0..2], delta) spans a rank-3 lattice, so its Gram
// determinant vanishes identically; checked exactly at every acceptance.
void assert_rank3(const Chain& ch, const IntVec3& delta) {
    const GramForm& g = gform();
    std::array<IntVec3, 4> q{ch.walls[0], ch.walls[1], ch.walls[2], delta};
    SymMat m(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) m.set(i, j, Rat(g.inner(q[i], q[j])));
    if (det(m) != 0) throw Error("extension quadruple has nonzero Gram determinant");
}

PolygonCandidate finish_closed(PolygonCandidate c, const Chain& ch) {
    const GramForm& g = gform();
    const size_t n = ch.walls.size();

    c.deltas.clear();
    for (const auto& w : ch.walls) c.deltas.emplace_back(w, g);
    c.lambdas = ch.lambdas;

    for (size_t j = 0; j < n; ++j)
        if (g.inner(ch.rho, ch.walls[j]) != Rat(-ch.lambdas[j]))
            return fail(std::move(c), FailReason::ClosureInvalid, "weyl back-substitution failed");

    IntMatrix b(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i) {
        b[i][i] = 2;
        for (size_t j = i + 1; j < n; ++j) {
            Int ip = g.inner(ch.walls[i], ch.walls[j]);
            if (ip > 0)
                return fail(std::move(c), FailReason::ClosureInvalid,
                            "positive inner product between sides");
            b[i][j] = b[j][i] = ip;
        }
    }
    try {
        TwistVector tv(ch.lambdas);
        CartanMatrix twisted = twist(SymmetrizedMatrix(b), tv);
        (void)twisted;
        c.realization = emit_realization(c.deltas, tv, g);
    } catch (const Error& e) {
        return fail(std::move(c), FailReason::ClosureInvalid, e.what());
    }
    c.status = PolygonStatus::Closed;
    c.reason = FailReason::None;
    c.detail.clear();
    return c;
}

}  // namespace

PolygonCandidate extend_polygon(PolygonCandidate seed, long max_sides, long coeff_bound,
                                const Int& lambda_cap) {
    if (seed.status == PolygonStatus::Failed) return seed;
    const GramForm& g = gform();

    if (seed.deltas.size() < 3 || seed.deltas.size() != seed.lambdas.size())
        throw PreconditionError("extend_polygon: seed needs >= 3 roots with matching twists");
    if (seed.weyl.norm >= 0)
        return fail(std::move(seed), FailReason::WeylNormNonNegative,
                    "(rho,rho) = " + to_string(seed.weyl.norm));
    for (const Int& l : seed.lambdas)
        if (l > lambda_cap)
            return fail(std::move(seed), FailReason::LambdaCapExceeded,
                        "seed twist " + l.get_str() + " exceeds cap " + to_string(lambda_cap));

    Chain ch;
    ch.rho = seed.weyl.coords;
    for (const Root& r : seed.deltas) ch.walls.push_back(r.coords());
    ch.lambdas = seed.lambdas;
    for (size_t i = 0; i + 1 < ch.walls.size(); ++i) {
        if (!adjacent(ch.walls[i], ch.walls[i + 1]))
            throw PreconditionError("extend_polygon: seed sides are not consecutive");
        ch.verts.push_back(adjacency_vertex(ch.walls[i], ch.walls[i + 1]));
        if (!point_inside_all(ch, ch.verts.back()))
            throw PreconditionError("extend_polygon: seed corner escapes a seed half-space");
    }
    for (size_t i = 0; i < ch.walls.size(); ++i)
        if (g.inner(ch.rho, ch.walls[i]) != Rat(-ch.lambdas[i]))
            throw PreconditionError("extend_polygon: twists inconsistent with the Weyl vector");

    while (static_cast<long>(ch.walls.size()) < max_sides) {
        const IntVec3 dk = ch.walls.back();
        const IntVec3 dprev = ch.walls[ch.walls.size() - 2];
        const IntVec3 first = ch.walls.front();

        auto [end1, end2] = ideal_endpoints(dk, g);
        Int s1 = g.inner(end1, dprev), s2 = g.inner(end2, dprev);
        IntVec3 e_dir, e_anchor;
        if (s1 == 0) {
            e_anchor = end1;
            e_dir = end2;
        } else if (s2 == 0) {
            e_anchor = end2;
            e_dir = end1;
        } else if (s1 < 0 && s2 > 0) {
            e_dir = end1;
            e_anchor = end2;
        } else if (s2 < 0 && s1 > 0) {
            e_dir = end2;
            e_anchor = end1;
        } else {
            throw Error("extend_polygon: previous side does not anchor the current one");
        }

        auto frame = detail::make_frame(dk, e_anchor, e_dir, g);
        Rat threshold = detail::position_ratio(frame, ch.verts.back(), g);

        bool accepted = false;
        bool dead = false;

        auto try_accept = [&](const IntVec3& delta, const IntVec3& vertex) -> bool {
            if (repeats_wall(ch, delta)) return false;
            if (!verts_inside(ch, delta)) return false;
            auto lam = forced_lambda(ch.rho, delta);
            if (!lam || *lam > lambda_cap) return false;
            if (!divisibility_ok(ch, delta, *lam, ch.walls.size())) return false;
            assert_rank3(ch, delta);
            ch.walls.push_back(delta);
            ch.lambdas.push_back(*lam);
            ch.verts.push_back(vertex);
            return true;
        };

        // closure candidate: the walk returned to the first side
        auto try_close = [&](const IntVec3& delta,
                             const IntVec3& vertex) -> std::optional<PolygonCandidate> {
            if (!(delta == first)) return std::nullopt;
            if (!point_inside_all(ch, vertex) || !verts_inside(ch, delta))
                return fail(std::move(seed), FailReason::ClosureInvalid,
                            "closing vertex escapes the chamber");
            Int lam1 = ch.lambdas.front();
            if (!divisibility_ok(ch, delta, lam1, 0))
                return fail(std::move(seed), FailReason::ClosureInvalid,
                            "wrap-around divisibility fails");
            ch.verts.push_back(vertex);
            return finish_closed(std::move(seed), ch);
        };

        for (const auto& cand : detail::crossing_candidates(frame, threshold, false, g)) {
            IntVec3 vertex = adjacency_vertex(dk, cand.delta);
            if (auto closed = try_close(cand.delta, vertex)) return *closed;
            if (!point_inside_all(ch, vertex)) {
                dead = true;  // every farther candidate escapes the same wall
                break;
            }
            if (try_accept(cand.delta, vertex)) {
                accepted = true;
                break;
            }
        }
        if (dead)
            return fail(std::move(seed), FailReason::NoAdmissibleRoot,
                        "scan window closed after " + std::to_string(ch.walls.size()) + " sides");
        if (accepted) continue;

        // pencil through e_dir; all members share the cusp vertex e_dir
        auto pencil = detail::pencil_through(frame, g);
        if (!pencil.valid || !point_inside_all(ch, e_dir))
            return fail(std::move(seed), FailReason::NoAdmissibleRoot,
                        "no crossing admissible and the cusp pencil escapes the chamber");
        for (Int k = pencil.k_min;; ++k) {
            IntVec3 delta = pencil.at(k, dk);
            if (auto closed = try_close(delta, e_dir)) return *closed;
            Int coeff = std::max(std::max(abs(delta.x), abs(delta.y)), abs(delta.z));
            if (coeff > coeff_bound)
                return fail(std::move(seed), FailReason::CoeffBoundExhausted,
                            "pencil coefficients exceeded " + std::to_string(coeff_bound));
            Rat lam_val = -g.inner(ch.rho, delta);
            if (lam_val > lambda_cap)
                return fail(std::move(seed), FailReason::LambdaCapExceeded,
                            "forced twist exceeds " + to_string(lambda_cap) +
                                " for every remaining candidate");
            if (try_accept(delta, e_dir)) {
                accepted = true;
                break;
            }
        }
        if (!accepted)
            return fail(std::move(seed), FailReason::NoAdmissibleRoot, "pencil exhausted");
    }

    seed.status = PolygonStatus::Open;
    seed.deltas.clear();
    for (const auto& w : ch.walls) seed.deltas.emplace_back(w, g);
    seed.lambdas = ch.lambdas;
    seed.detail = "stopped at max sides " + std::to_string(max_sides);
    return seed;
}

}  // namespace gcm3
