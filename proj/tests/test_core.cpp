#include <random>

#include "doctest.h"
#include "gcm3/lattice.hpp"
#include "gcm3/symmat.hpp"

using namespace gcm3;

namespace {

std::mt19937 rng(20240517);

Rat random_rat(int num_range = 9, int den_range = 9) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return make_rat(num(rng), den(rng));
}

SymMat random_symmat(int n) {
    SymMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, random_rat());
    return m;
}

// determinant by permutation expansion, for matrices up to 4x4
Rat det_oracle(const SymMat& m) {
    const int n = m.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    Rat total(0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rat term(inversions % 2 ? -1 : 1);
        for (int i = 0; i < n; ++i) term *= m.at(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// random unimodular integer matrix as a product of elementary operations
std::vector<std::vector<Int>> random_unimodular(int n, int steps = 8) {
    std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    std::uniform_int_distribution<int> idx(0, n - 1), coeff(-2, 2);
    for (int s = 0; s < steps; ++s) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        Int c = coeff(rng);
        for (int r = 0; r < n; ++r) u[r][i] += c * u[r][j];
    }
    return u;
}

}  // namespace

TEST_CASE("rationals stay reduced through arithmetic") {
    for (int trial = 0; trial < 200; ++trial) {
        Rat p = random_rat(), r = random_rat();
        Rat round_trip = (p + r) - r;
        CHECK(round_trip == p);
        CHECK(gcd(Int(round_trip.get_num()), Int(round_trip.get_den())) == 1);
        CHECK(round_trip.get_den() > 0);
    }
    CHECK(make_rat(2, -4) == make_rat(-1, 2));
    CHECK(to_string(make_rat(-3, 6)) == "-1/2");
    CHECK(*parse_rat("9/2") == make_rat(9, 2));
    CHECK(*parse_rat("-23/2") == make_rat(-23, 2));
    CHECK(!parse_rat("1/0").has_value());
}

TEST_CASE("solve_linear3 on a diagonal system") {
    SymMat m = SymMat::from_int_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    RatVec3 v = solve_linear3(m, {Rat(-1), Rat(-1), Rat(-1)});
    CHECK(v == RatVec3(make_rat(-1, 2), make_rat(-1, 2), make_rat(-1, 2)));
}

TEST_CASE("solve_linear3 on the Gram matrix of (c,a,b)") {
    // pairwise products under the triangle form
    SymMat m = SymMat::from_int_rows({{2, -1, -2}, {-1, 2, 0}, {-2, 0, 2}});
    RatVec3 y = solve_linear3(m, {Rat(-1), Rat(-1), Rat(-1)});
    // back-substitution is exact
    for (int i = 0; i < 3; ++i) {
        Rat s = m.at(i, 0) * y.x + m.at(i, 1) * y.y + m.at(i, 2) * y.z;
        CHECK(s == Rat(-1));
    }
    // re-expand through the roots (c, a, b): coefficients times coordinates
    RatVec3 rho = y.x * RatVec3(IntVec3{0, 0, 1}) + y.y * RatVec3(IntVec3{1, 0, 0}) +
                  y.z * RatVec3(IntVec3{0, 1, 0});
    CHECK(rho == RatVec3(Rat(2), make_rat(9, 2), Rat(5)));
}

TEST_CASE("solve_linear3 rejects singular systems") {
    SymMat m = SymMat::from_int_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    CHECK_THROWS_AS(solve_linear3(m, {Rat(1), Rat(1), Rat(1)}), SingularMatrixError);
}

TEST_CASE("solve_linear3 inverts random nonsingular systems exactly") {
    int solved = 0;
    while (solved < 100) {
        SymMat m = random_symmat(3);
        if (det(m) == 0) continue;
        std::array<Rat, 3> rhs{random_rat(), random_rat(), random_rat()};
        RatVec3 v = solve_linear3(m, rhs);
        for (int i = 0; i < 3; ++i)
            CHECK(m.at(i, 0) * v.x + m.at(i, 1) * v.y + m.at(i, 2) * v.z == rhs[i]);
        ++solved;
    }
}

TEST_CASE("signature of diagonal and triangle matrices") {
    CHECK(signature(SymMat::from_int_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, -2}})) ==
          Signature{2, 1, 0});
    CHECK(signature(SymMat::from_int_rows({{2, 0, -1}, {0, 2, -2}, {-1, -2, 2}})) ==
          Signature{2, 1, 0});
    CHECK(signature(SymMat::from_int_rows({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}})) ==
          Signature{1, 1, 1});
}

TEST_CASE("signature survives zero diagonals via the completion step") {
    // all-zero diagonal, hyperbolic plane
    CHECK(signature(SymMat::from_int_rows({{0, 1}, {1, 0}})) == Signature{1, 1, 0});
    CHECK(signature(SymMat::from_int_rows({{0, 0, 1}, {0, 2, 0}, {1, 0, 0}})) ==
          Signature{2, 1, 0});
}

TEST_CASE("signature is invariant under unimodular congruence") {
    for (int trial = 0; trial < 50; ++trial) {
        SymMat m = random_symmat(3);
        auto u = random_unimodular(3);
        SymMat c(3);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                Rat s(0);
                for (int p = 0; p < 3; ++p)
                    for (int q = 0; q < 3; ++q) s += Rat(u[p][i]) * m.at(p, q) * Rat(u[q][j]);
                c.set(i, j, s);
            }
        CHECK(signature(m) == signature(c));
    }
}

TEST_CASE("det matches the permutation-expansion oracle up to 4x4") {
    CHECK(det(SymMat::from_int_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == Rat(1));
    CHECK(det(SymMat::from_int_rows({{2, 0, -1}, {0, 2, -2}, {-1, -2, 2}})) == Rat(-2));
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 30; ++trial) {
            SymMat m = random_symmat(n);
            CHECK(det(m) == det_oracle(m));
        }
}

TEST_CASE("4x4 Gram matrices of rank-3 lattice vectors are singular") {
    const GramForm& g = GramForm::triangle();
    std::uniform_int_distribution<long> coord(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        std::array<IntVec3, 4> vs;
        for (auto& v : vs) v = IntVec3(coord(rng), coord(rng), coord(rng));
        SymMat m(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) m.set(i, j, Rat(g.inner(vs[i], vs[j])));
        CHECK(det(m) == Rat(0));
    }
}
