#include "gcm3/search.hpp"

namespace gcm3 {

WeylVector solve_weyl(const ChamberTriple& triple, const TwistVector& lam) {
    if (lam.size() != 3) throw LengthMismatchError();
    const GramForm& g = GramForm::triangle();

    // Solve in the basis of the triple itself: the Gram system
    // sum_j y_j (delta_j, delta_i) = -lambda_i, then expand.
    std::array<Rat, 3> rhs{Rat(-lam.at(0)), Rat(-lam.at(1)), Rat(-lam.at(2))};
    RatVec3 y = solve_linear3(triple.gram(), rhs);

    RatVec3 rho = y.x * RatVec3(triple.delta1.coords()) + y.y * RatVec3(triple.delta2.coords()) +
                  y.z * RatVec3(triple.delta3.coords());

    WeylVector w{rho, g.inner(rho, rho)};
    // exact back-substitution guard
    const Root* ds[3] = {&triple.delta1, &triple.delta2, &triple.delta3};
    for (int i = 0; i < 3; ++i)
        if (g.inner(rho, ds[i]->coords()) != Rat(-lam.at(i)))
            throw Error("solve_weyl: back-substitution failed");
    return w;
}

}  // namespace gcm3
