#pragma once

/**
 * @file gcm.hpp
 * @brief Generalized Cartan matrix algebra: axioms, symmetrization,
 *        hyperbolic-type certification, twisting, and G(A) realization
 *        matrices for cyclic root polygons.
 */

#include <optional>
#include <string>
#include <vector>

#include "gcm3/lattice.hpp"
#include "gcm3/numeric.hpp"
#include "gcm3/symmat.hpp"

namespace gcm3 {

enum class GcmDefect {
    None,
    NotSquare,
    BadDiagonal,          // some a_ii != 2
    PositiveOffDiagonal,  // some a_ij > 0, i != j
    AsymmetricZero,       // a_ij = 0 but a_ji != 0
};

struct GcmCheck {
    GcmDefect defect = GcmDefect::None;
    int i = -1, j = -1;  // offending entry when defect != None
    bool indecomposable = false;
    // When decomposable: the index set of one block of a splitting I = I1 u I2.
    std::vector<int> partition;

    bool ok() const { return defect == GcmDefect::None; }
};

using IntMatrix = std::vector<std::vector<Int>>;

// Checks the three axioms and reports indecomposability (connectivity of the
// off-diagonal support graph). Diagnoses rather than throws.
GcmCheck check_gcm(const IntMatrix& m);

class CartanMatrix {
  public:
    // Throws PreconditionError (with the defect message) if the axioms fail.
    explicit CartanMatrix(IntMatrix m);

    int size() const { return n_; }
    const Int& at(int i, int j) const { return m_[i][j]; }
    const IntMatrix& rows() const { return m_; }
    bool indecomposable() const { return indecomposable_; }

    friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
        return a.m_ == b.m_;
    }

  private:
    int n_;
    IntMatrix m_;
    bool indecomposable_;
};

// Symmetric integer matrix with even positive diagonal, nonpositive
// off-diagonal entries, and b_ii | 2 b_ij.
class SymmetrizedMatrix {
  public:
    explicit SymmetrizedMatrix(IntMatrix m);

    int size() const { return n_; }
    const Int& at(int i, int j) const { return m_[i][j]; }
    const IntMatrix& rows() const { return m_; }
    SymMat as_symmat() const;

    friend bool operator==(const SymmetrizedMatrix& a, const SymmetrizedMatrix& b) {
        return a.m_ == b.m_;
    }

  private:
    int n_;
    IntMatrix m_;
};

struct Symmetrization {
    std::vector<Rat> d;   // A = diag(d) * B
    SymmetrizedMatrix b;  // canonical: smallest integral B with even diagonal
};

// Throws NotSymmetrizableError when no consistent positive diagonal exists
// (inconsistent cycle in the support graph); PreconditionError when the
// input is decomposable.
Symmetrization symmetrize(const CartanMatrix& a);

// True iff the signature has exactly one negative square and no zero square.
bool is_hyperbolic(const SymmetrizedMatrix& b);

// Coprime positive twist coefficients.
class TwistVector {
  public:
    explicit TwistVector(std::vector<Int> lambdas);

    int size() const { return static_cast<int>(l_.size()); }
    const Int& at(int i) const { return l_[i]; }
    const std::vector<Int>& values() const { return l_; }

    friend bool operator==(const TwistVector& a, const TwistVector& b) { return a.l_ == b.l_; }
    friend bool operator<(const TwistVector& a, const TwistVector& b) { return a.l_ < b.l_; }

  private:
    std::vector<Int> l_;
};

// Twisted Cartan matrix: entry(i,j) = 2 lambda_j b_ij / (lambda_i b_ii).
// Throws DivisibilityViolationError naming the first failing pair.
CartanMatrix twist(const SymmetrizedMatrix& b, const TwistVector& lam);

// G(A) layout: first row the twist coefficients, row 1+i the negated cyclic
// Gram diagonal -(delta_j, delta_{j+i}), 1 <= i <= floor(n/2).
struct RealizationMatrix {
    int n = 0;
    std::vector<Int> lambdas;
    std::vector<std::vector<Int>> gram_rows;

    friend bool operator==(const RealizationMatrix&, const RealizationMatrix&) = default;
};

// Throws LengthMismatchError when sizes differ; PreconditionError when n < 3
// or some consecutive pair has positive inner product.
RealizationMatrix emit_realization(const std::vector<Root>& deltas, const TwistVector& lam,
                                   const GramForm& g = GramForm::triangle());

// JSON object {"n":..., "lambdas":[...], "gram_rows":[[...]]}.
std::string to_json(const RealizationMatrix& r);
std::optional<RealizationMatrix> realization_from_json(const std::string& text);

// Column-aligned plain text, one parenthesized row per line.
std::string to_text(const RealizationMatrix& r);

}  // namespace gcm3
