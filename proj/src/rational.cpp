#include "polydyn/rational.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

namespace polydyn {

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw ParameterError("empty rational literal");
    std::string s = text;
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s = s.substr(1);
    }
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (num.empty() || den.empty())
        throw ParameterError("malformed rational literal '" + text + "'");
    for (char c : num)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParameterError("malformed rational literal '" + text + "'");
    for (char c : den)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParameterError("malformed rational literal '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw ParameterError("rational with zero denominator: '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return Rational(q);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(unsigned k) const {
    Rational base = *this;
    Rational acc = 1;
    while (k > 0) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

std::string double_str(double x) {
    if (x == 0.0) x = 0.0;  // collapse -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string complex_str(const Complex& z) {
    std::string re = double_str(z.real());
    double im = z.imag();
    if (im < 0) return re + "-" + double_str(-im) + "i";
    return re + "+" + double_str(im) + "i";
}

}  // namespace polydyn
