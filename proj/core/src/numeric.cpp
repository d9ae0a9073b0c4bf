#include "gcm3/numeric.hpp"

#include <algorithm>
#include <vector>

namespace gcm3 {

std::vector<Int> positive_divisors(const Int& n) {
    if (n == 0) throw std::domain_error("divisors of zero");
    Int m = abs(n);
    std::vector<Int> out;
    Int d = 1;
    for (; d * d <= m; ++d) {
        if (divides(d, m)) {
            out.push_back(d);
            if (d * d != m) out.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> prime_factors(const Int& n) {
    if (n == 0) throw std::domain_error("prime factors of zero");
    Int m = abs(n);
    std::vector<Int> out;
    for (Int p = 2; p * p <= m; ++p) {
        if (divides(p, m)) {
            out.push_back(p);
            while (divides(p, m)) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

}  // namespace gcm3
