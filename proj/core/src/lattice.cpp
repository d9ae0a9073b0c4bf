#include "gcm3/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace gcm3 {

namespace {

const std::array<std::array<long, 3>, 3> kTriangleEntries = {{{2, 0, -1}, {0, 2, -2}, {-1, -2, 2}}};

}  // namespace

GramForm::GramForm(std::array<std::array<long, 3>, 3> entries) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e_[i][j] = entries[i][j];
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (e_[i][j] != e_[j][i]) throw PreconditionError("GramForm: not symmetric");
}

const GramForm& GramForm::triangle() {
    static const GramForm g(kTriangleEntries);
    return g;
}

Int GramForm::inner(const IntVec3& u, const IntVec3& v) const {
    Int s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += u[i] * e_[i][j] * v[j];
    return s;
}

Rat GramForm::inner(const RatVec3& u, const RatVec3& v) const {
    Rat s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += u[i] * Rat(e_[i][j]) * v[j];
    return s;
}

Rat GramForm::inner(const RatVec3& u, const IntVec3& v) const { return inner(u, RatVec3(v)); }
Rat GramForm::inner(const IntVec3& u, const RatVec3& v) const { return inner(RatVec3(u), v); }

SymMat GramForm::as_symmat() const {
    SymMat m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) m.set(i, j, Rat(e_[i][j]));
    return m;
}

bool is_root(const IntVec3& v, const GramForm& g) {
    if (v.is_zero() || !v.is_primitive()) return false;
    Int sq = g.inner(v, v);
    if (sq <= 0) return false;
    static const IntVec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const auto& e : basis)
        if (!divides(sq, 2 * g.inner(v, e))) return false;
    return true;
}

Root::Root(IntVec3 coords, const GramForm& g) : v_(std::move(coords)) {
    if (g.inner(v_, v_) != 2)
        throw PreconditionError("Root: square must be 2, got " +
                                to_string(g.inner(v_, v_)) + " for " + to_abc_string(v_));
    if (!v_.is_primitive()) throw PreconditionError("Root: coordinates not coprime");
    if (!is_root(v_, g)) throw PreconditionError("Root: crystallographic condition fails");
}

IntVec3 reflect(const IntVec3& mirror, const IntVec3& x, const GramForm& g) {
    Int msq = g.inner(mirror, mirror);
    if (msq <= 0) throw NonPositiveMirrorError();
    Int num = 2 * g.inner(x, mirror);
    if (!divides(msq, num))
        throw PreconditionError("reflect: image of " + to_abc_string(x) +
                                " in " + to_abc_string(mirror) + " is not integral");
    Int t = num / msq;
    return x - t * mirror;
}

RatVec3 reflect(const IntVec3& mirror, const RatVec3& x, const GramForm& g) {
    Int msq = g.inner(mirror, mirror);
    if (msq <= 0) throw NonPositiveMirrorError();
    Rat t = (2 * g.inner(x, mirror)) / Rat(msq);
    return x - t * RatVec3(mirror);
}

std::vector<Root> generate_roots(long coeff_bound, const GramForm& g) {
    if (coeff_bound < 1) throw PreconditionError("generate_roots: bound must be >= 1");
    std::vector<Root> out;
    IntVec3 v;
    for (long x = -coeff_bound; x <= coeff_bound; ++x)
        for (long y = -coeff_bound; y <= coeff_bound; ++y)
            for (long z = -coeff_bound; z <= coeff_bound; ++z) {
                v = IntVec3(x, y, z);
                if (g.inner(v, v) != 2) continue;
                if (!v.is_primitive()) continue;
                if (!is_root(v, g)) continue;
                out.emplace_back(v, g);
            }
    std::sort(out.begin(), out.end());
    return out;
}

RayPoint::RayPoint(RatVec3 v, const GramForm& g) : coords(std::move(v)) {
    if (g.inner(coords, coords) >= 0) throw NotTimelikeError();
}

double hyperbolic_distance(const RayPoint& x, const RayPoint& y, const GramForm& g) {
    Rat sxx = g.inner(x.coords, x.coords);
    Rat syy = g.inner(y.coords, y.coords);
    Rat sxy = g.inner(x.coords, y.coords);
    if (sxy > 0) throw OppositeConesError();
    // cosh^2 of the distance, exactly rational
    Rat c2 = (sxy * sxy) / (sxx * syy);
    if (c2 < 1) throw PreconditionError("hyperbolic_distance: cosh^2 < 1");
    double c = std::sqrt(c2.get_d());
    if (c < 1.0) c = 1.0;  // guard against rounding just below 1
    return std::acosh(c);
}

namespace {

// Unimodular column reduction of the 1x3 integer row l, returning two
// integer vectors spanning its kernel.
std::array<IntVec3, 2> integer_kernel(std::array<Int, 3> l) {
    std::array<IntVec3, 3> cols = {IntVec3{1, 0, 0}, IntVec3{0, 1, 0}, IntVec3{0, 0, 1}};
    int pivot = -1;
    for (int j = 0; j < 3 && pivot < 0; ++j)
        if (l[j] != 0) pivot = j;
    if (pivot < 0) throw PreconditionError("integer_kernel: zero row");
    std::swap(l[0], l[pivot]);
    std::swap(cols[0], cols[pivot]);
    for (int j = 1; j < 3; ++j) {
        if (l[j] == 0) continue;
        Int x, y, gg;
        mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), l[0].get_mpz_t(),
                   l[j].get_mpz_t());
        Int u = l[0] / gg, w = l[j] / gg;
        IntVec3 c0 = x * cols[0] + y * cols[j];
        IntVec3 cj = u * cols[j] - w * cols[0];
        cols[0] = c0;
        cols[j] = cj;
        l[j] = 0;
        l[0] = gg;
    }
    return {cols[1], cols[2]};
}

// Exact integer square root when n is a perfect square.
std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::pair<IntVec3, IntVec3> isotropic_directions(const IntVec3& mirror, const GramForm& g) {
    std::array<Int, 3> row;
    for (int i = 0; i < 3; ++i) {
        static const IntVec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        row[i] = g.inner(basis[i], mirror);
    }
    auto [f1, f2] = integer_kernel(row);
    Int A = g.inner(f1, f1), B = g.inner(f1, f2), C = g.inner(f2, f2);
    IntVec3 d1, d2;
    if (A == 0) {
        d1 = f1;
        // second root of t (2Bs + Ct) = 0
        d2 = (-C) * f1 + (2 * B) * f2;
    } else {
        auto r = exact_sqrt(B * B - A * C);
        if (!r)
            throw PreconditionError(
                "ideal_endpoints: isotropic directions of the complement are irrational");
        d1 = (-B + *r) * f1 + A * f2;
        d2 = (-B - *r) * f1 + A * f2;
    }
    d1 = d1.primitive();
    d2 = d2.primitive();
    if (d1.is_zero() || d2.is_zero() || d1 == d2 || d1 == -d2)
        throw PreconditionError("ideal_endpoints: degenerate complement");
    return {d1, d2};
}

}  // namespace

std::pair<IntVec3, IntVec3> ideal_endpoints(const IntVec3& mirror, const GramForm& g) {
    if (g.inner(mirror, mirror) <= 0)
        throw PreconditionError("ideal_endpoints: mirror must have positive square");
    auto [d1, d2] = isotropic_directions(mirror, g);
    const IntVec3& w = Triangle::get().interior;
    if (g.inner(d1, w) > 0) d1 = -d1;
    if (g.inner(d2, w) > 0) d2 = -d2;
    if (d2 < d1) std::swap(d1, d2);
    return {d1, d2};
}

IntVec3 mirror_crossing(const IntVec3& m1, const IntVec3& m2, const GramForm& g) {
    std::array<Int, 3> r1, r2;
    static const IntVec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i) {
        r1[i] = g.inner(basis[i], m1);
        r2[i] = g.inner(basis[i], m2);
    }
    IntVec3 x{r1[1] * r2[2] - r1[2] * r2[1], r1[2] * r2[0] - r1[0] * r2[2],
              r1[0] * r2[1] - r1[1] * r2[0]};
    if (x.is_zero()) throw PreconditionError("mirror_crossing: mirrors are proportional");
    x = x.primitive();
    if (g.inner(x, x) > 0)
        throw PreconditionError("mirror_crossing: mirrors do not meet inside the cone");
    const IntVec3& w = Triangle::get().interior;
    if (g.inner(x, w) > 0) x = -x;
    return x;
}

namespace {

Triangle build_triangle() {
    const GramForm& g = GramForm::triangle();
    Triangle t{
        {Root({1, 0, 0}, g), Root({0, 1, 0}, g), Root({0, 0, 1}, g)},
        {},
        {0, 0, 0},
        {},
    };

    // vertex k = crossing of the two walls other than k, on the chamber side
    // of the third wall
    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        std::array<Int, 3> ri, rj;
        static const IntVec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        for (int m = 0; m < 3; ++m) {
            ri[m] = g.inner(basis[m], t.walls[i].coords());
            rj[m] = g.inner(basis[m], t.walls[j].coords());
        }
        IntVec3 x{ri[1] * rj[2] - ri[2] * rj[1], ri[2] * rj[0] - ri[0] * rj[2],
                  ri[0] * rj[1] - ri[1] * rj[0]};
        x = x.primitive();
        Int side = g.inner(x, t.walls[k].coords());
        if (side > 0) x = -x;
        t.verts[k] = x;
    }
    t.interior = t.verts[0] + t.verts[1] + t.verts[2];

    for (int k = 0; k < 3; ++k) {
        auto [e1, e2] = isotropic_directions(t.walls[k].coords(), g);
        if (g.inner(e1, t.interior) > 0) e1 = -e1;
        if (g.inner(e2, t.interior) > 0) e2 = -e2;

        int f1 = (k == 0) ? 1 : 0;          // lowest-indexed other wall
        int f2 = (k == 2) ? 1 : 2;          // highest-indexed other wall
        IntVec3 v1 = t.verts[3 - k - f1];   // vertex shared with wall f1
        IntVec3 v2 = t.verts[3 - k - f2];

        // Ratio along the geodesic measured toward e2; the vertex with the
        // larger ratio sits nearer e2.
        auto ratio = [&](const IntVec3& v) {
            return make_rat(g.inner(v, e1), g.inner(v, e2));
        };
        auto end_of = [&](const IntVec3& v, const IntVec3& other) {
            if (g.inner(v, v) == 0) return v;  // side reaches the endpoint
            if (g.inner(other, other) == 0) return other == e1 ? e2 : e1;
            return ratio(v) > ratio(other) ? e2 : e1;
        };
        IntVec3 end1 = end_of(v1, v2);
        IntVec3 end2 = end_of(v2, v1);
        if (end1 == end2) throw PreconditionError("Triangle: ends coincide");

        // index 1: the walk that leaves from the lowest-indexed wall's vertex
        t.ends[k][1] = Triangle::WallEnd{end1, v1, g.inner(v1, v1) == 0};
        t.ends[k][0] = Triangle::WallEnd{end2, v2, g.inner(v2, v2) == 0};
    }
    return t;
}

}  // namespace

const Triangle& Triangle::get() {
    static const Triangle t = build_triangle();
    return t;
}

int wall_index(const std::string& name) {
    if (name == "a") return 0;
    if (name == "b") return 1;
    if (name == "c") return 2;
    return -1;
}

}  // namespace gcm3
