#include "kstab/interval.hpp"

namespace kstab {

IntervalReal sqrt_interval(const Rational& x, const Rational& width) {
    if (x < 0)
        throw std::domain_error("sqrt_interval: negative input");
    if (width <= 0)
        throw std::invalid_argument("sqrt_interval: width must be positive");
    if (x == 0)
        return {0, 0};

    // exact when numerator and denominator are both perfect squares
    {
        const Int num = boost::multiprecision::numerator(x);
        const Int den = boost::multiprecision::denominator(x);
        const Int sn = boost::multiprecision::sqrt(num);
        const Int sd = boost::multiprecision::sqrt(den);
        if (sn * sn == num && sd * sd == den) {
            Rational r(sn, sd);
            return {r, r};
        }
    }

    Rational lo = 0;
    Rational hi = x < 1 ? Rational(1) : x;  // sqrt(x) <= max(1, x)
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        if (mid * mid <= x)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

}  // namespace kstab
