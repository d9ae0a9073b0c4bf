#include <cmath>
#include <sstream>

#include "gcm3/render.hpp"

namespace gcm3 {

namespace {

struct KleinMap {
    // columns of the diagonalizing basis and the diagonal values; index 0
    // carries the negative square
    std::vector<std::vector<Rat>> basis;
    std::vector<Rat> diag;

    // Rational coordinates of v in the diagonalizing basis.
    std::array<Rat, 3> coords(const RatVec3& v) const {
        // solve basis * u = v by Gaussian elimination
        std::array<std::array<Rat, 4>, 3> a;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) a[i][j] = basis[i][j];
            a[i][3] = v[i];
        }
        for (int k = 0; k < 3; ++k) {
            int p = -1;
            for (int i = k; i < 3; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) throw PreconditionError("render: singular basis");
            std::swap(a[p], a[k]);
            for (int i = k + 1; i < 3; ++i) {
                if (a[i][k] == 0) continue;
                Rat f = a[i][k] / a[k][k];
                for (int j = k; j < 4; ++j) a[i][j] -= f * a[k][j];
            }
        }
        std::array<Rat, 3> u;
        for (int i = 2; i >= 0; --i) {
            Rat s = a[i][3];
            for (int j = i + 1; j < 3; ++j) s -= a[i][j] * u[j];
            u[i] = s / a[i][i];
        }
        return u;
    }

    // Klein disk point of a forward ray (timelike or isotropic).
    std::array<double, 2> disk(const RatVec3& v) const {
        auto u = coords(v);
        double u0 = u[0].get_d(), u1 = u[1].get_d(), u2 = u[2].get_d();
        Rat r1 = diag[1] / -diag[0], r2 = diag[2] / -diag[0];
        double s1 = std::sqrt(r1.get_d());
        double s2 = std::sqrt(r2.get_d());
        if (u0 == 0.0) throw PreconditionError("render: ray at infinity of the model");
        return {u1 * s1 / u0, u2 * s2 / u0};
    }
};

KleinMap make_map(const GramForm& g) {
    std::vector<std::vector<Rat>> basis;
    std::vector<Rat> diag;
    Signature s = signature_with_basis(g.as_symmat(), &basis, &diag);
    if (s.neg != 1 || s.zero != 0)
        throw PreconditionError("render: form is not hyperbolic");
    // move the negative square to index 0
    int neg = 0;
    for (int i = 0; i < 3; ++i)
        if (diag[i] < 0) neg = i;
    if (neg != 0) {
        std::swap(diag[neg], diag[0]);
        for (int r = 0; r < 3; ++r) std::swap(basis[r][neg], basis[r][0]);
    }
    // orient the timelike basis vector into the forward cone
    RatVec3 f0{basis[0][0], basis[1][0], basis[2][0]};
    if (g.inner(f0, RatVec3(Triangle::get().interior)) > 0)
        for (int r = 0; r < 3; ++r) basis[r][0] = -basis[r][0];
    return KleinMap{std::move(basis), std::move(diag)};
}

std::array<double, 2> to_screen(const std::array<double, 2>& p) {
    // unit disk -> 500x500 viewport with a small margin
    return {250.0 + 230.0 * p[0], 250.0 - 230.0 * p[1]};
}

}  // namespace

std::string render_klein_svg(const PolygonCandidate& c) {
    if (c.deltas.size() < 3)
        throw PreconditionError("render: candidate needs at least 3 roots");
    const GramForm& g = GramForm::triangle();
    KleinMap map = make_map(g);

    const size_t n = c.deltas.size();
    std::ostringstream svg;
    svg.setf(std::ios::fixed);
    svg.precision(3);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n"
        << "  <rect width=\"500\" height=\"500\" fill=\"white\"/>\n"
        << "  <circle cx=\"250\" cy=\"250\" r=\"230\" fill=\"none\" stroke=\"black\" "
           "stroke-width=\"1\"/>\n";

    // chamber: vertices between consecutive mirrors, cyclically
    bool closed = c.status == PolygonStatus::Closed;
    std::vector<std::array<double, 2>> poly;
    size_t corners = closed ? n : n - 1;
    for (size_t i = 0; i < corners; ++i) {
        const IntVec3& m1 = c.deltas[i].coords();
        const IntVec3& m2 = c.deltas[(i + 1) % n].coords();
        Int ip = g.inner(m1, m2);
        if (ip > 0 || ip < -2)
            throw PreconditionError("render: consecutive mirrors are not adjacent");
        IntVec3 v;
        if (ip == -2) {
            v = (m1 + m2).primitive();
            if (g.inner(v, Triangle::get().interior) > 0) v = -v;
        } else {
            v = mirror_crossing(m1, m2, g);
        }
        poly.push_back(to_screen(map.disk(RatVec3(v))));
    }
    if (closed && !poly.empty()) {
        svg << "  <polygon points=\"";
        for (const auto& p : poly) svg << p[0] << "," << p[1] << " ";
        svg << "\" fill=\"#cfe2f3\" stroke=\"none\" opacity=\"0.8\"/>\n";
    }

    // mirrors as chords between their ideal endpoints
    for (size_t i = 0; i < n; ++i) {
        auto [e1, e2] = ideal_endpoints(c.deltas[i].coords(), g);
        auto p1 = to_screen(map.disk(RatVec3(e1)));
        auto p2 = to_screen(map.disk(RatVec3(e2)));
        svg << "  <line x1=\"" << p1[0] << "\" y1=\"" << p1[1] << "\" x2=\"" << p2[0]
            << "\" y2=\"" << p2[1] << "\" stroke=\"#333333\" stroke-width=\"1.2\"/>\n";
        auto mid = to_screen({(map.disk(RatVec3(e1))[0] + map.disk(RatVec3(e2))[0]) / 2,
                              (map.disk(RatVec3(e1))[1] + map.disk(RatVec3(e2))[1]) / 2});
        svg << "  <text x=\"" << mid[0] << "\" y=\"" << mid[1]
            << "\" font-size=\"11\" fill=\"#aa3333\">" << to_abc_string(c.deltas[i].coords())
            << "</text>\n";
    }

    // Weyl point, with its distance to each finite vertex as a tooltip
    if (g.inner(c.weyl.coords, c.weyl.coords) < 0) {
        auto p = to_screen(map.disk(c.weyl.coords));
        RayPoint rho(c.weyl.coords, g);
        svg << "  <circle cx=\"" << p[0] << "\" cy=\"" << p[1]
            << "\" r=\"3\" fill=\"#aa3333\"><title>rho";
        for (size_t i = 0; i < poly.size(); ++i) {
            const IntVec3& m1 = c.deltas[i].coords();
            const IntVec3& m2 = c.deltas[(i + 1) % n].coords();
            Int ip = g.inner(m1, m2);
            IntVec3 v = (ip == -2) ? (m1 + m2).primitive() : mirror_crossing(m1, m2, g);
            if (g.inner(v, Triangle::get().interior) > 0) v = -v;
            if (g.inner(v, v) < 0)
                svg << "; d(rho,A" << (i + 2)
                    << ")=" << hyperbolic_distance(rho, RayPoint(v, g), g);
        }
        svg << "</title></circle>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace gcm3
