#include <algorithm>

#include "gcm3/search.hpp"

namespace gcm3 {

namespace {

// Divisibility conditions lambda_i | g_ij * lambda_j for all ordered pairs.
bool admissible(const std::array<Int, 3>& lam, const std::array<std::array<Int, 3>, 3>& g) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            if (!divides(lam[i], g[i][j] * lam[j])) return false;
        }
    return true;
}

}  // namespace

std::vector<TwistVector> solve_twists(const Int& g12, const Int& g13, const Int& g23,
                                      std::optional<Int> cap) {
    if (g12 < 0 || g13 < 0 || g23 < 0)
        throw PreconditionError("solve_twists: Gram values must be nonnegative");
    std::array<std::array<Int, 3>, 3> g{};
    g[0][1] = g[1][0] = g12;
    g[0][2] = g[2][0] = g13;
    g[1][2] = g[2][1] = g23;

    Int nonzero_product = 1;
    if (g12 != 0) nonzero_product *= g12;
    if (g13 != 0) nonzero_product *= g13;
    if (g23 != 0) nonzero_product *= g23;

    // Search box per coefficient: divisors of the lcm of its incident
    // entries when both are nonzero; with one incident zero the remaining
    // constraints only bound it through the third coefficient, and the
    // product of all nonzero entries is a valuation-safe bound. With both
    // incident entries zero the coefficient is unconstrained.
    std::array<std::vector<Int>, 3> box;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        const Int &gij = g[i][j], &gik = g[i][k];
        if (gij == 0 && gik == 0) {
            if (!cap) throw UnboundedSearchError(i);
            for (Int v = 1; v <= *cap; ++v) box[i].push_back(v);
        } else if (gij == 0 || gik == 0) {
            box[i] = positive_divisors(nonzero_product);
        } else {
            box[i] = positive_divisors(lcm(gij, gik));
        }
    }

    std::vector<TwistVector> out;
    for (const Int& x : box[0])
        for (const Int& y : box[1])
            for (const Int& z : box[2]) {
                if (gcd(gcd(x, y), z) != 1) continue;
                if (!admissible({x, y, z}, g)) continue;
                out.emplace_back(std::vector<Int>{x, y, z});
            }
    std::sort(out.begin(), out.end());
    return out;
}

bool check_valuations(const std::array<Int, 3>& lam, const std::array<Int, 3>& g) {
    // g = (g12, g13, g23); a zero entry imposes no constraint
    for (const Int& l : lam)
        if (l < 1) throw PreconditionError("check_valuations: coefficients must be >= 1");

    static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int p = 0; p < 3; ++p) {
        if (g[p] == 0) continue;
        const Int &li = lam[pairs[p][0]], &lj = lam[pairs[p][1]];
        Int relevant = li * lj * g[p];
        for (const Int& prime : prime_factors(relevant)) {
            int vi = valuation(li, prime);
            int vj = valuation(lj, prime);
            int vg = valuation(g[p], prime);
            if (std::abs(vi - vj) > vg) return false;
        }
    }
    return true;
}

}  // namespace gcm3
