#include "jetbrackets/rational.hpp"

#include "jetbrackets/error.hpp"

#include <cctype>

namespace jb {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    auto valid = [](const std::string& part) {
        std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (start >= part.size()) return false;
        for (std::size_t k = start; k < part.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(part[k]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid(num) || !valid(den)) throw ParseError("malformed rational literal '" + s + "'");
    Integer n(num, 10);
    Integer d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

}  // namespace jb
