#pragma once

// Internal machinery shared by the step-1 walks and the step-4 polygon
// extension: enumeration of mirrors adjacent to one end of a mirror's
// chamber side.
//
// For a mirror e with ideal endpoints (e_anchor, e_dir), a root delta with
// t = -(delta, e) in {0,1,2} decomposes as
//     delta = x * e_anchor + y * e_dir - (t/2) * e
// with (delta, e_anchor) (delta, e_dir) = N (1 - t^2/4), N = (e_anchor,e_dir).
// For t in {0,1} that product is a fixed negative integer, so the crossing
// mirrors come from its divisor pairs; for t = 2 the mirrors through e_dir
// form the arithmetic pencil k * e_dir - e, k >= 1.

#include <optional>
#include <vector>

#include "gcm3/lattice.hpp"

namespace gcm3::detail {

struct EndFrame {
    IntVec3 wall;      // mirror normal of the side being walked along
    IntVec3 e_anchor;  // ideal end behind the walk
    IntVec3 e_dir;     // ideal end the walk marches toward
    Int n;             // (e_anchor, e_dir), negative
};

EndFrame make_frame(const IntVec3& wall, const IntVec3& e_anchor, const IntVec3& e_dir,
                    const GramForm& g = GramForm::triangle());

// Position of a point X on the wall's geodesic, increasing toward e_dir:
// (X, e_anchor) / (X, e_dir). Zero at e_anchor.
Rat position_ratio(const EndFrame& f, const IntVec3& point, const GramForm& g = GramForm::triangle());

struct Crossing {
    IntVec3 delta;
    Rat ratio;  // position of the crossing point
};

// All mirrors crossing the geodesic with -(delta, wall) in {0,1} whose
// crossing lies beyond `threshold` (>= when inclusive, > otherwise; no
// threshold means every crossing qualifies), and whose half-space contains
// the fundamental triangle. Sorted by ratio, marching toward e_dir.
std::vector<Crossing> crossing_candidates(const EndFrame& f, const std::optional<Rat>& threshold,
                                          bool inclusive,
                                          const GramForm& g = GramForm::triangle());

struct Pencil {
    bool valid = false;  // false when no pencil member can contain the triangle
    IntVec3 step;        // = e_dir
    Int k_min = 1;       // first k with k*e_dir - wall containing the triangle
    IntVec3 at(const Int& k, const IntVec3& wall) const { return k * step - wall; }
};

// The pencil of mirrors through e_dir parallel to nothing in particular:
// delta(k) = k * e_dir - wall.
Pencil pencil_through(const EndFrame& f, const GramForm& g = GramForm::triangle());

}  // namespace gcm3::detail
