#pragma once

/**
 * @file lattice.hpp
 * @brief The rank-3 hyperbolic lattice of the (pi/2, pi/3, 0) triangle group.
 *
 * The bilinear form on the basis {a, b, c} is fixed to
 *
 *     [  2   0  -1 ]
 *     [  0   2  -2 ]
 *     [ -1  -2   2 ]
 *
 * of signature (2,1). The basis vectors are unit-square-2 mirror normals of
 * the triangle chamber: a _|_ b, a and c meet at pi/3, b and c are parallel
 * (meet at infinity). Anything that touches the fundamental triangle itself
 * (vertices, mirror endpoints, side data) lives here; the search pipeline
 * builds on top of it.
 */

#include <array>
#include <utility>
#include <vector>

#include "gcm3/errors.hpp"
#include "gcm3/symmat.hpp"
#include "gcm3/vec.hpp"

namespace gcm3 {

class GramForm {
  public:
    // The (2,3,infinity) triangle lattice form.
    static const GramForm& triangle();

    explicit GramForm(std::array<std::array<long, 3>, 3> entries);

    Int entry(int i, int j) const { return e_[i][j]; }

    Int inner(const IntVec3& u, const IntVec3& v) const;
    Rat inner(const RatVec3& u, const RatVec3& v) const;
    Rat inner(const RatVec3& u, const IntVec3& v) const;
    Rat inner(const IntVec3& u, const RatVec3& v) const;

    SymMat as_symmat() const;

  private:
    std::array<std::array<Int, 3>, 3> e_;
};

// Primitive vector of positive square whose reflection preserves the lattice.
class Root {
  public:
    explicit Root(IntVec3 coords, const GramForm& g = GramForm::triangle());

    const IntVec3& coords() const { return v_; }

    friend bool operator==(const Root& a, const Root& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
    friend bool operator<(const Root& a, const Root& b) { return a.v_ < b.v_; }

  private:
    IntVec3 v_;
};

// General root test: primitive, (v,v) > 0, and (v,v) | 2(v,e) for each basis
// vector e. In this even lattice every root has square exactly 2.
bool is_root(const IntVec3& v, const GramForm& g = GramForm::triangle());

// s_mirror(x) = x - 2 (x,mirror)/(mirror,mirror) * mirror.
// Throws NonPositiveMirrorError when (mirror,mirror) <= 0, and
// PreconditionError if the image of an integer vector is not integral
// (cannot happen when the mirror is a Root).
IntVec3 reflect(const IntVec3& mirror, const IntVec3& x,
                const GramForm& g = GramForm::triangle());
RatVec3 reflect(const IntVec3& mirror, const RatVec3& x,
                const GramForm& g = GramForm::triangle());
inline IntVec3 reflect(const Root& mirror, const IntVec3& x,
                       const GramForm& g = GramForm::triangle()) {
    return reflect(mirror.coords(), x, g);
}

// All square-2 primitive vectors with |x|,|y|,|z| <= coeff_bound, sorted
// lexicographically. Closed under negation.
std::vector<Root> generate_roots(long coeff_bound, const GramForm& g = GramForm::triangle());

// Interior point of the cone, up to positive scaling.
struct RayPoint {
    RatVec3 coords;
    explicit RayPoint(RatVec3 v, const GramForm& g = GramForm::triangle());
    explicit RayPoint(const IntVec3& v, const GramForm& g = GramForm::triangle())
        : RayPoint(RatVec3(v), g) {}
};

// arccosh( -S(x,y) / sqrt(S(x,x) S(y,y)) ). The quotient is computed exactly;
// floating point enters only in the final arccosh. Scale-invariant in each
// argument. Throws OppositeConesError when (x,y) > 0.
double hyperbolic_distance(const RayPoint& x, const RayPoint& y,
                           const GramForm& g = GramForm::triangle());

// The two primitive integer isotropic vectors of mirror^perp, i.e. the ideal
// endpoints of the mirror's geodesic, both oriented into the forward
// half-cone. For this lattice the isotropic directions of any root's
// orthogonal complement are rational, so the result is exact.
std::pair<IntVec3, IntVec3> ideal_endpoints(const IntVec3& mirror,
                                            const GramForm& g = GramForm::triangle());

// Intersection ray of two mirrors, primitive and oriented into the forward
// half-cone; requires the crossing to be inside the cone ((X,X) < 0) or on
// its boundary.
IntVec3 mirror_crossing(const IntVec3& m1, const IntVec3& m2,
                        const GramForm& g = GramForm::triangle());

// Fundamental triangle of the (2,3,infinity) group: walls, vertices and
// per-wall side data used by the step-1 walks.
struct Triangle {
    std::array<Root, 3> walls;      // a, b, c
    std::array<IntVec3, 3> verts;   // vert[k] = crossing of the two walls != k
                                    // (verts[0]=b^c at infinity, verts[1]=a^c, verts[2]=a^b)
    IntVec3 interior;               // a timelike point strictly inside the chamber

    struct WallEnd {
        IntVec3 endpoint;   // ideal endpoint of the wall's geodesic
        IntVec3 vertex;     // triangle vertex nearest this end (may equal endpoint)
        bool vertex_ideal;  // true when the triangle side reaches the endpoint
    };
    // ends[wall][0] is the end the first-mirror walk leaves from, ends[wall][1]
    // the end the third-mirror walk leaves from.
    std::array<std::array<WallEnd, 2>, 3> ends;

    static const Triangle& get();
};

// Wall index (0=a,1=b,2=c) from a symbolic name; -1 if not one of a,b,c.
int wall_index(const std::string& name);

}  // namespace gcm3
