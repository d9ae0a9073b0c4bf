#include "gcm3/vec.hpp"

#include <cctype>
#include <sstream>

namespace gcm3 {

namespace {

constexpr const char* kBasisNames[3] = {"a", "b", "c"};

void append_term(std::string& out, const std::string& coeff_str, bool coeff_is_one,
                 bool coeff_is_neg, const char* name) {
    if (out.empty()) {
        if (coeff_is_neg) out += "-";
    } else {
        out += coeff_is_neg ? "-" : "+";
    }
    if (!coeff_is_one) out += coeff_str;
    out += name;
}

}  // namespace

std::string to_abc_string(const IntVec3& v) {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        const Int& c = v[i];
        if (c == 0) continue;
        Int a = abs(c);
        append_term(out, a.get_str(), a == 1, c < 0, kBasisNames[i]);
    }
    return out.empty() ? "0" : out;
}

std::string to_abc_string(const RatVec3& v) {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        const Rat& c = v[i];
        if (c == 0) continue;
        Rat a = abs(c);
        append_term(out, to_string(a), a == 1, c < 0, kBasisNames[i]);
    }
    return out.empty() ? "0" : out;
}

std::optional<IntVec3> parse_abc(const std::string& input) {
    std::string s;
    for (char ch : input)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) return std::nullopt;

    if (s.find(',') != std::string::npos) {
        // coordinate triple "x,y,z"
        std::istringstream in(s);
        std::string tok;
        IntVec3 v;
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(in, tok, ',')) return std::nullopt;
            try {
                v[i] = Int(tok);
            } catch (const std::invalid_argument&) {
                return std::nullopt;
            }
        }
        if (std::getline(in, tok, ',')) return std::nullopt;
        return v;
    }

    if (s == "0") return IntVec3{0, 0, 0};

    IntVec3 v{0, 0, 0};
    size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            return std::nullopt;  // terms must be joined by +/-
        }
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        if (i >= s.size()) return std::nullopt;
        int basis;
        switch (s[i]) {
            case 'a': basis = 0; break;
            case 'b': basis = 1; break;
            case 'c': basis = 2; break;
            default: return std::nullopt;
        }
        ++i;
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        v[basis] += sign * coeff;
        any = true;
    }
    if (!any) return std::nullopt;
    return v;
}

}  // namespace gcm3
