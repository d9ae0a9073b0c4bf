#include "walk_internal.hpp"

#include <algorithm>

namespace gcm3::detail {

EndFrame make_frame(const IntVec3& wall, const IntVec3& e_anchor, const IntVec3& e_dir,
                    const GramForm& g) {
    EndFrame f{wall, e_anchor, e_dir, g.inner(e_anchor, e_dir)};
    if (f.n >= 0) throw PreconditionError("EndFrame: endpoints must pair negatively");
    return f;
}

Rat position_ratio(const EndFrame& f, const IntVec3& point, const GramForm& g) {
    Int num = g.inner(point, f.e_anchor);
    Int den = g.inner(point, f.e_dir);
    if (den == 0) throw PreconditionError("position_ratio: point at e_dir");
    return make_rat(num, den);
}

std::vector<Crossing> crossing_candidates(const EndFrame& f, const std::optional<Rat>& threshold,
                                          bool inclusive, const GramForm& g) {
    const Triangle& tri = Triangle::get();
    std::vector<Crossing> out;

    for (int t = 0; t <= 1; ++t) {
        // (delta, e_anchor)(delta, e_dir) = K = N (1 - t^2/4)
        Int k4 = f.n * (4 - t * t);  // 4K
        if (!divides(4, k4)) continue;
        Int K = k4 / 4;
        for (const Int& d : positive_divisors(K)) {
            for (int sign = 0; sign < 2; ++sign) {
                Int A = sign ? -d : d;  // (delta, e_anchor)
                Int B = K / A;          // (delta, e_dir)
                // delta = (B/N) e_anchor + (A/N) e_dir - (t/2) wall
                IntVec3 w = (2 * B) * f.e_anchor + (2 * A) * f.e_dir - (t * f.n) * f.wall;
                Int den = 2 * f.n;
                if (!divides(den, w.x) || !divides(den, w.y) || !divides(den, w.z)) continue;
                IntVec3 delta{w.x / den, w.y / den, w.z / den};

                Rat ratio = make_rat(-A, B);
                if (ratio <= 0) continue;  // not a crossing of the open geodesic
                if (threshold) {
                    if (inclusive ? ratio < *threshold : ratio <= *threshold) continue;
                }
                bool inside = true;
                for (const auto& v : tri.verts)
                    if (g.inner(v, delta) > 0) {
                        inside = false;
                        break;
                    }
                if (!inside) continue;
                out.push_back(Crossing{delta, ratio});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Crossing& a, const Crossing& b) { return a.ratio < b.ratio; });
    return out;
}

Pencil pencil_through(const EndFrame& f, const GramForm& g) {
    const Triangle& tri = Triangle::get();
    Pencil p;
    p.step = f.e_dir;
    Int k_min = 1;
    for (const auto& v : tri.verts) {
        Int slope = g.inner(v, f.e_dir);
        Int offset = g.inner(v, f.wall);
        if (slope > 0) throw Error("pencil_through: endpoint not in the forward cone");
        if (slope == 0) {
            if (offset < 0) return p;  // this vertex escapes every pencil member
            continue;
        }
        // need k * slope <= offset with slope < 0, so k >= offset / slope
        k_min = std::max(k_min, ceil_div(offset, slope));
    }
    p.k_min = k_min;
    p.valid = true;
    return p;
}

}  // namespace gcm3::detail
