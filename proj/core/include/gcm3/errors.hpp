#pragma once

#include <stdexcept>
#include <string>

namespace gcm3 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrixError : Error {
    SingularMatrixError() : Error("singular matrix") {}
};

struct NonPositiveMirrorError : Error {
    NonPositiveMirrorError() : Error("reflection mirror must have positive square") {}
};

struct NotTimelikeError : Error {
    NotTimelikeError() : Error("point is not inside the cone (square >= 0)") {}
};

struct OppositeConesError : Error {
    OppositeConesError() : Error("points lie in opposite half-cones") {}
};

struct NotSymmetrizableError : Error {
    NotSymmetrizableError() : Error("matrix is not symmetrizable") {}
};

struct DivisibilityViolationError : Error {
    int i, j;
    DivisibilityViolationError(int i_, int j_)
        : Error("twist divisibility fails on pair (" + std::to_string(i_ + 1) + "," +
                std::to_string(j_ + 1) + ")"),
          i(i_),
          j(j_) {}
};

struct LengthMismatchError : Error {
    LengthMismatchError() : Error("root list and twist vector lengths differ") {}
};

struct UnboundedSearchError : Error {
    int index;  // which twist coefficient is unconstrained (0-based)
    explicit UnboundedSearchError(int index_)
        : Error("twist coefficient " + std::to_string(index_ + 1) +
                " is unconstrained (both incident Gram entries are zero); pass a cap"),
          index(index_) {}
};

struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace gcm3
