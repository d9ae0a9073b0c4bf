#include "gcm3/gcm.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace gcm3 {

namespace {

bool square(const IntMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) return false;
    return !m.empty();
}

}  // namespace

GcmCheck check_gcm(const IntMatrix& m) {
    GcmCheck r;
    if (!square(m)) {
        r.defect = GcmDefect::NotSquare;
        return r;
    }
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        if (m[i][i] != 2) {
            r.defect = GcmDefect::BadDiagonal;
            r.i = r.j = i;
            return r;
        }
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0) {
                r.defect = GcmDefect::PositiveOffDiagonal;
                r.i = i;
                r.j = j;
                return r;
            }
            if (m[i][j] == 0 && m[j][i] != 0) {
                r.defect = GcmDefect::AsymmetricZero;
                r.i = i;
                r.j = j;
                return r;
            }
        }
    }
    // connectivity of the off-diagonal support graph
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j)
            if (!seen[j] && m[v][j] != 0) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    r.indecomposable = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    if (!r.indecomposable)
        for (int j = 0; j < n; ++j)
            if (seen[j]) r.partition.push_back(j);
    return r;
}

namespace {

std::string defect_message(const GcmCheck& c) {
    switch (c.defect) {
        case GcmDefect::NotSquare: return "matrix is not square";
        case GcmDefect::BadDiagonal:
            return "diagonal entry " + std::to_string(c.i + 1) + " is not 2";
        case GcmDefect::PositiveOffDiagonal:
            return "positive off-diagonal entry (" + std::to_string(c.i + 1) + "," +
                   std::to_string(c.j + 1) + ")";
        case GcmDefect::AsymmetricZero:
            return "zero pattern not symmetric at (" + std::to_string(c.i + 1) + "," +
                   std::to_string(c.j + 1) + ")";
        default: return "";
    }
}

}  // namespace

CartanMatrix::CartanMatrix(IntMatrix m) : m_(std::move(m)) {
    GcmCheck c = check_gcm(m_);
    if (!c.ok()) throw PreconditionError("CartanMatrix: " + defect_message(c));
    n_ = static_cast<int>(m_.size());
    indecomposable_ = c.indecomposable;
}

SymmetrizedMatrix::SymmetrizedMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!square(m_)) throw PreconditionError("SymmetrizedMatrix: not square");
    n_ = static_cast<int>(m_.size());
    for (int i = 0; i < n_; ++i) {
        if (m_[i][i] <= 0 || !divides(2, m_[i][i]))
            throw PreconditionError("SymmetrizedMatrix: diagonal must be even and positive");
        for (int j = 0; j < n_; ++j) {
            if (m_[i][j] != m_[j][i]) throw PreconditionError("SymmetrizedMatrix: not symmetric");
            if (i != j && m_[i][j] > 0)
                throw PreconditionError("SymmetrizedMatrix: positive off-diagonal entry");
            if (i != j && !divides(m_[i][i], 2 * m_[i][j]))
                throw PreconditionError("SymmetrizedMatrix: b_ii does not divide 2 b_ij");
        }
    }
}

SymMat SymmetrizedMatrix::as_symmat() const {
    SymMat s(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) s.set(i, j, Rat(m_[i][j]));
    return s;
}

Symmetrization symmetrize(const CartanMatrix& a) {
    if (!a.indecomposable()) throw PreconditionError("symmetrize: matrix is decomposable");
    const int n = a.size();

    // propagate eps ratios over the support graph; eps_j / eps_i = a_ji / a_ij
    std::vector<Rat> eps(n, Rat(0));
    eps[0] = 1;
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (i == j || a.at(i, j) == 0) continue;
            Rat want = eps[i] * make_rat(a.at(j, i), a.at(i, j));
            if (eps[j] == 0) {
                eps[j] = want;
                stack.push_back(j);
            } else if (eps[j] != want) {
                throw NotSymmetrizableError();
            }
        }
    }

    // b_ij = a_ij / eps_i, made integral with even diagonal by one global scale
    std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = Rat(a.at(i, j)) / eps[i];
    Int num_gcd = 0, den_lcm = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (b[i][j] == 0) continue;
            num_gcd = gcd(num_gcd, Int(b[i][j].get_num()));
            den_lcm = lcm(den_lcm, Int(b[i][j].get_den()));
        }
    Rat scale = make_rat(den_lcm, num_gcd);
    bool odd_diagonal = false;
    for (int i = 0; i < n; ++i) {
        Rat scaled = b[i][i] * scale;
        if (!divides(2, Int(scaled.get_num()))) odd_diagonal = true;
    }
    if (odd_diagonal) scale *= 2;

    IntMatrix bi(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = b[i][j] * scale;
            bi[i][j] = Int(v.get_num());
        }
    std::vector<Rat> d(n);
    for (int i = 0; i < n; ++i) d[i] = eps[i] / scale;
    return Symmetrization{std::move(d), SymmetrizedMatrix(std::move(bi))};
}

bool is_hyperbolic(const SymmetrizedMatrix& b) {
    Signature s = signature(b.as_symmat());
    return s.neg == 1 && s.zero == 0;
}

TwistVector::TwistVector(std::vector<Int> lambdas) : l_(std::move(lambdas)) {
    if (l_.empty()) throw PreconditionError("TwistVector: empty");
    Int g = 0;
    for (const Int& v : l_) {
        if (v < 1) throw PreconditionError("TwistVector: coefficients must be >= 1");
        g = gcd(g, v);
    }
    if (g != 1) throw PreconditionError("TwistVector: coefficients must be coprime");
}

CartanMatrix twist(const SymmetrizedMatrix& b, const TwistVector& lam) {
    const int n = b.size();
    if (lam.size() != n) throw LengthMismatchError();
    IntMatrix t(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int num = 2 * lam.at(j) * b.at(i, j);
            Int den = lam.at(i) * b.at(i, i);
            if (!divides(den, num)) throw DivisibilityViolationError(i, j);
            t[i][j] = num / den;
        }
    return CartanMatrix(std::move(t));
}

RealizationMatrix emit_realization(const std::vector<Root>& deltas, const TwistVector& lam,
                                   const GramForm& g) {
    const int n = static_cast<int>(deltas.size());
    if (lam.size() != n) throw LengthMismatchError();
    if (n < 3) throw PreconditionError("emit_realization: need at least 3 sides");
    for (int j = 0; j < n; ++j) {
        Int ip = g.inner(deltas[j].coords(), deltas[(j + 1) % n].coords());
        if (ip > 0)
            throw PreconditionError("emit_realization: consecutive roots " + std::to_string(j + 1) +
                                    "," + std::to_string((j + 1) % n + 1) +
                                    " have positive inner product");
    }
    RealizationMatrix r;
    r.n = n;
    r.lambdas = lam.values();
    for (int i = 1; i <= n / 2; ++i) {
        std::vector<Int> row(n);
        for (int j = 0; j < n; ++j)
            row[j] = -g.inner(deltas[j].coords(), deltas[(j + i) % n].coords());
        r.gram_rows.push_back(std::move(row));
    }
    return r;
}

std::string to_json(const RealizationMatrix& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["lambdas"] = nlohmann::ordered_json::array();
    for (const Int& l : r.lambdas) j["lambdas"].push_back(l.get_si());
    j["gram_rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.gram_rows) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (const Int& v : row) jr.push_back(v.get_si());
        j["gram_rows"].push_back(jr);
    }
    return j.dump();
}

std::optional<RealizationMatrix> realization_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("n") || !j.contains("lambdas") || !j.contains("gram_rows"))
        return std::nullopt;
    RealizationMatrix r;
    r.n = j["n"].get<int>();
    for (const auto& v : j["lambdas"]) r.lambdas.emplace_back(v.get<long>());
    for (const auto& row : j["gram_rows"]) {
        std::vector<Int> ir;
        for (const auto& v : row) ir.emplace_back(v.get<long>());
        r.gram_rows.push_back(std::move(ir));
    }
    return r;
}

std::string to_text(const RealizationMatrix& r) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> first;
    for (const Int& l : r.lambdas) first.push_back(l.get_str());
    rows.push_back(first);
    for (const auto& row : r.gram_rows) {
        std::vector<std::string> sr;
        for (const Int& v : row) sr.push_back(v.get_str());
        rows.push_back(sr);
    }
    size_t width = 1;
    for (const auto& row : rows)
        for (const auto& s : row) width = std::max(width, s.size());
    std::ostringstream out;
    for (const auto& row : rows) {
        out << "(";
        for (const auto& s : row) out << " " << std::string(width - s.size(), ' ') << s;
        out << " )\n";
    }
    return out.str();
}

}  // namespace gcm3
