#include "gcm3/symmat.hpp"

#include <utility>

namespace gcm3 {

SymMat SymMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    int n = static_cast<int>(rows.size());
    SymMat m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw PreconditionError("SymMat: ragged rows");
        for (int j = i; j < n; ++j) {
            if (rows[j][i] != rows[i][j]) throw PreconditionError("SymMat: not symmetric");
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

SymMat SymMat::from_int_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rat>> r(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (long v : rows[i]) r[i].emplace_back(v);
    return from_rows(r);
}

namespace {

// Symmetric congruence reduction. Mutates m to diagonal form; if basis is
// non-null it accumulates the column operations so that P^T m P = diag.
Signature congruence_diagonalize(std::vector<std::vector<Rat>>& m,
                                 std::vector<std::vector<Rat>>* p) {
    const int n = static_cast<int>(m.size());

    auto swap_kl = [&](int k, int l) {
        std::swap(m[k], m[l]);
        for (int i = 0; i < n; ++i) std::swap(m[i][k], m[i][l]);
        if (p)
            for (int i = 0; i < n; ++i) std::swap((*p)[i][k], (*p)[i][l]);
    };
    // column k += column l (and the symmetric row operation)
    auto add_col = [&](int k, int l) {
        for (int i = 0; i < n; ++i) m[i][k] += m[i][l];
        for (int j = 0; j < n; ++j) m[k][j] += m[l][j];
        if (p)
            for (int i = 0; i < n; ++i) (*p)[i][k] += (*p)[i][l];
    };
    // column i -= f * column k (and the symmetric row operation)
    auto eliminate = [&](int i, int k, const Rat& f) {
        for (int r = 0; r < n; ++r) m[r][i] -= f * m[r][k];
        for (int c = 0; c < n; ++c) m[i][c] -= f * m[k][c];
        if (p)
            for (int r = 0; r < n; ++r) (*p)[r][i] -= f * (*p)[r][k];
    };

    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            int diag = -1;
            for (int l = k + 1; l < n; ++l)
                if (m[l][l] != 0) {
                    diag = l;
                    break;
                }
            if (diag >= 0) {
                swap_kl(k, diag);
            } else {
                // all remaining diagonal entries vanish; complete a square
                // from an off-diagonal entry if one exists
                int off = -1;
                for (int l = k + 1; l < n; ++l)
                    if (m[k][l] != 0) {
                        off = l;
                        break;
                    }
                if (off >= 0) add_col(k, off);  // new m[k][k] = 2 m[k][off]
            }
        }
        if (m[k][k] == 0) continue;  // row is entirely zero within the block
        Rat pivot = m[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            eliminate(i, k, m[i][k] / pivot);
        }
    }

    Signature sig;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] > 0)
            ++sig.pos;
        else if (m[k][k] < 0)
            ++sig.neg;
        else
            ++sig.zero;
    }
    return sig;
}

std::vector<std::vector<Rat>> to_dense(const SymMat& m) {
    const int n = m.size();
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = m.at(i, j);
    return d;
}

}  // namespace

Signature signature(const SymMat& m) {
    auto d = to_dense(m);
    return congruence_diagonalize(d, nullptr);
}

Signature signature_with_basis(const SymMat& m, std::vector<std::vector<Rat>>* basis,
                               std::vector<Rat>* diagonal) {
    const int n = m.size();
    auto d = to_dense(m);
    std::vector<std::vector<Rat>> p(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) p[i][i] = 1;
    Signature sig = congruence_diagonalize(d, &p);
    if (basis) *basis = p;
    if (diagonal) {
        diagonal->clear();
        for (int k = 0; k < n; ++k) diagonal->push_back(d[k][k]);
    }
    return sig;
}

Rat det(const SymMat& m) {
    const int n = m.size();
    auto a = to_dense(m);
    Rat result(1);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            result = -result;
        }
        result *= a[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return result;
}

RatVec3 solve_linear3(const SymMat& m, const std::array<Rat, 3>& rhs) {
    if (m.size() != 3) throw PreconditionError("solve_linear3: matrix must be 3x3");
    std::array<std::array<Rat, 4>, 3> a;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) a[i][j] = m.at(i, j);
        a[i][3] = rhs[i];
    }
    for (int k = 0; k < 3; ++k) {
        int pivot = -1;
        for (int i = k; i < 3; ++i)
            if (a[i][k] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw SingularMatrixError();
        std::swap(a[pivot], a[k]);
        for (int i = k + 1; i < 3; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (int j = k; j < 4; ++j) a[i][j] -= f * a[k][j];
        }
    }
    RatVec3 v;
    for (int i = 2; i >= 0; --i) {
        Rat s = a[i][3];
        for (int j = i + 1; j < 3; ++j) s -= a[i][j] * (j == 0 ? v.x : (j == 1 ? v.y : v.z));
        Rat value = s / a[i][i];
        (i == 0 ? v.x : (i == 1 ? v.y : v.z)) = value;
    }
    return v;
}

}  // namespace gcm3
