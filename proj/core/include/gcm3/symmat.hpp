#pragma once

/**
 * @file symmat.hpp
 * @brief Small symmetric rational matrices with exact linear algebra.
 *
 * Determinants use fraction-free elimination; the signature is computed by
 * congruence diagonalization over the rationals, so "exactly one negative
 * square" is a certified statement, never a floating-point estimate.
 */

#include <array>
#include <vector>

#include "gcm3/errors.hpp"
#include "gcm3/numeric.hpp"
#include "gcm3/vec.hpp"

namespace gcm3 {

class SymMat {
  public:
    explicit SymMat(int n) : n_(n), e_(static_cast<size_t>(n) * n, Rat(0)) {}

    // Row-major entries; the lower triangle is mirrored from the upper one.
    static SymMat from_rows(const std::vector<std::vector<Rat>>& rows);
    static SymMat from_int_rows(const std::vector<std::vector<long>>& rows);

    int size() const { return n_; }

    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, const Rat& v) {
        e_[static_cast<size_t>(i) * n_ + j] = v;
        e_[static_cast<size_t>(j) * n_ + i] = v;
    }

    friend bool operator==(const SymMat& a, const SymMat& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

  private:
    int n_;
    std::vector<Rat> e_;
};

struct Signature {
    int pos = 0, neg = 0, zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// Counts of positive/negative/zero squares in a rational diagonalization.
Signature signature(const SymMat& m);

// As above, but also returns a basis (columns of P, with P^T m P diagonal)
// and the diagonal entries. Used by the Klein-disk renderer.
Signature signature_with_basis(const SymMat& m, std::vector<std::vector<Rat>>* basis,
                               std::vector<Rat>* diagonal);

Rat det(const SymMat& m);

// Unique solution of m * v = rhs for nonsingular symmetric 3x3 m.
// Throws SingularMatrixError when det(m) = 0.
RatVec3 solve_linear3(const SymMat& m, const std::array<Rat, 3>& rhs);

}  // namespace gcm3
