#include <algorithm>

#include "gcm3/search.hpp"
#include "walk_internal.hpp"

namespace gcm3 {

SymMat ChamberTriple::gram() const {
    SymMat m(3);
    m.set(0, 0, Rat(2));
    m.set(1, 1, Rat(2));
    m.set(2, 2, Rat(2));
    m.set(0, 1, Rat(-g12));
    m.set(0, 2, Rat(-g13));
    m.set(1, 2, Rat(-g23));
    return m;
}

Root SideWalk::pencil(size_t k) const { return Root(pencil_first + Int(k) * pencil_step); }

Root SideWalk::at(size_t i) const {
    if (i < crossings.size()) return crossings[i];
    return pencil(i - crossings.size());
}

namespace {

SideWalk build_walk(int wall, int end_index) {
    const GramForm& g = GramForm::triangle();
    const Triangle& tri = Triangle::get();
    const Triangle::WallEnd& this_end = tri.ends[wall][end_index];
    const Triangle::WallEnd& other_end = tri.ends[wall][1 - end_index];

    auto frame = detail::make_frame(tri.walls[wall].coords(), other_end.endpoint,
                                    this_end.endpoint, g);

    SideWalk w;
    if (!this_end.vertex_ideal) {
        Rat threshold = detail::position_ratio(frame, this_end.vertex, g);
        for (const auto& c : detail::crossing_candidates(frame, threshold, true, g))
            w.crossings.emplace_back(c.delta, g);
    }
    auto pencil = detail::pencil_through(frame, g);
    if (!pencil.valid) throw PreconditionError("SideWalk: empty pencil");
    w.pencil_first = pencil.at(pencil.k_min, frame.wall);
    w.pencil_step = pencil.step;
    return w;
}

}  // namespace

SideWalk delta1_walk(int wall) {
    if (wall < 0 || wall > 2) throw PreconditionError("wall index must be 0, 1 or 2");
    return build_walk(wall, 0);
}

SideWalk delta3_walk(int wall) {
    if (wall < 0 || wall > 2) throw PreconditionError("wall index must be 0, 1 or 2");
    return build_walk(wall, 1);
}

namespace {

ChamberTriple make_triple(const Root& d1, int wall, const Root& d3, const Int& g12,
                          const Int& g13, const Int& g23) {
    ChamberTriple t{d1, Triangle::get().walls[wall], d3, g12, g13, g23, wall};
    return t;
}

}  // namespace

std::vector<ChamberTriple> enumerate_triples(int wall, const Int& cross_bound) {
    if (wall < 0 || wall > 2) throw PreconditionError("wall index must be 0, 1 or 2");
    const GramForm& g = GramForm::triangle();
    const IntVec3 e = Triangle::get().walls[wall].coords();

    SideWalk w1 = delta1_walk(wall);
    SideWalk w3 = delta3_walk(wall);

    // Smallest cross value -(d1, d3) over the whole third walk. The pencil is
    // monotone in its index, so the minimum sits among the crossings and the
    // first pencil member.
    auto min_cross = [&](const IntVec3& d1) {
        std::optional<Int> best;
        for (const Root& r : w3.crossings) {
            Int c = -g.inner(d1, r.coords());
            if (!best || c < *best) best = c;
        }
        Int c = -g.inner(d1, w3.pencil_first);
        if (!best || c < *best) best = c;
        return *best;
    };

    std::vector<ChamberTriple> out;
    auto emit_pairs = [&](const Root& d1) {
        Int g12 = -g.inner(d1.coords(), e);
        // crossings: finitely many, no early exit
        for (const Root& d3 : w3.crossings) {
            Int cross = -g.inner(d1.coords(), d3.coords());
            if (cross < 0 || cross >= cross_bound) continue;
            out.push_back(make_triple(d1, wall, d3, g12, cross, -g.inner(e, d3.coords())));
        }
        // pencil: cross grows strictly with the index
        Int step = -g.inner(d1.coords(), w3.pencil_step);
        for (Int k = 0;; ++k) {
            IntVec3 d3 = w3.pencil_first + k * w3.pencil_step;
            Int cross = -g.inner(d1.coords(), d3);
            if (cross >= cross_bound) break;
            if (cross >= 0)
                out.push_back(
                    make_triple(d1, wall, Root(d3), g12, cross, -g.inner(e, d3)));
            if (step <= 0) break;  // non-increasing pencil cannot re-enter the bound
        }
    };

    for (const Root& d1 : w1.crossings) {
        if (min_cross(d1.coords()) >= cross_bound) continue;
        emit_pairs(d1);
    }
    for (Int k = 0;; ++k) {
        IntVec3 d1 = w1.pencil_first + k * w1.pencil_step;
        if (min_cross(d1) >= cross_bound) break;
        emit_pairs(Root(d1));
    }
    return out;
}

std::vector<ChamberTriple> enumerate_triples_bruteforce(int wall, const Int& cross_bound,
                                                        long coeff_bound) {
    if (wall < 0 || wall > 2) throw PreconditionError("wall index must be 0, 1 or 2");
    const GramForm& g = GramForm::triangle();
    const Triangle& tri = Triangle::get();
    const IntVec3 e = tri.walls[wall].coords();
    const IntVec3& end1 = tri.ends[wall][0].endpoint;
    const IntVec3& end3 = tri.ends[wall][1].endpoint;

    auto chamber_side = [&](const IntVec3& v) {
        for (const auto& p : tri.verts)
            if (g.inner(p, v) > 0) return false;
        return true;
    };

    std::vector<Root> roots = generate_roots(coeff_bound, g);
    std::vector<Root> side1, side3;
    for (const Root& r : roots) {
        const IntVec3& v = r.coords();
        Int adj = -g.inner(v, e);
        if (adj < 0 || adj > 2) continue;
        if (v == e || v == -e) continue;
        if (!chamber_side(v)) continue;
        Int p1 = g.inner(end1, v), p3 = g.inner(end3, v);
        // delta1 mirrors split the geodesic with the first end on their
        // nonnegative side, delta3 mirrors the other way around
        if (p1 >= 0 && p3 <= 0) side1.push_back(r);
        if (p3 >= 0 && p1 <= 0) side3.push_back(r);
    }

    std::vector<ChamberTriple> out;
    for (const Root& d1 : side1)
        for (const Root& d3 : side3) {
            if (d1 == d3 || d1.coords() == -d3.coords()) continue;
            Int cross = -g.inner(d1.coords(), d3.coords());
            if (cross < 0 || cross >= cross_bound) continue;
            out.push_back(make_triple(d1, wall, d3, -g.inner(d1.coords(), e), cross,
                                      -g.inner(e, d3.coords())));
        }
    std::sort(out.begin(), out.end(), [](const ChamberTriple& a, const ChamberTriple& b) {
        if (!(a.delta1 == b.delta1)) return a.delta1 < b.delta1;
        return a.delta3 < b.delta3;
    });
    return out;
}

}  // namespace gcm3
