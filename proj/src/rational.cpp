#include "kstab/rational.hpp"

#include <cctype>

namespace kstab {

std::string to_string(const Rational& x) {
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("malformed rational: '" + s + "'");
    };
    auto parse_int = [&](const std::string& part) -> Int {
        if (part.empty())
            throw bad();
        std::size_t i = 0;
        if (part[0] == '+' || part[0] == '-')
            i = 1;
        if (i == part.size())
            throw bad();
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw bad();
        // strip a leading '+': the integer constructor accepts only '-'
        return Int(part[0] == '+' ? part.substr(1) : part);
    };

    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(s));
    const Int num = parse_int(s.substr(0, slash));
    const Int den = parse_int(s.substr(slash + 1));
    if (den == 0)
        throw bad();
    return Rational(num, den);
}

std::string decimal_string(const Rational& x, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    Rational scaled = x * scale;
    Int num = boost::multiprecision::numerator(scaled);
    Int den = boost::multiprecision::denominator(scaled);
    const bool neg = num < 0;
    if (neg)
        num = -num;
    // round half away from zero
    Int q = (2 * num + den) / (2 * den);
    std::string d = q.str();
    if (static_cast<int>(d.size()) <= digits)
        d = std::string(digits + 1 - d.size(), '0') + d;
    std::string out;
    if (neg && q != 0)
        out += '-';
    out += d.substr(0, d.size() - digits);
    if (digits > 0) {
        out += '.';
        out += d.substr(d.size() - digits);
    }
    return out;
}

}  // namespace kstab
