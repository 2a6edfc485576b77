#pragma once

#include "kstab/rational.hpp"

namespace kstab {

// Closed interval with rational endpoints. The few irrational quantities in
// this library (masses, the triangle amplification constant) are represented
// as refinable intervals; every comparison is either resolved at the current
// width or reported as undecided.
struct IntervalReal {
    Rational lo;
    Rational hi;

    IntervalReal(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi)
            throw std::invalid_argument("interval: lo > hi");
    }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }

    IntervalReal operator+(const IntervalReal& o) const {
        return {lo + o.lo, hi + o.hi};
    }
    IntervalReal operator*(const Rational& c) const {
        return c >= 0 ? IntervalReal{lo * c, hi * c} : IntervalReal{hi * c, lo * c};
    }
};

enum class IntervalOrder { Less, Greater, Undecided };

inline IntervalOrder compare(const IntervalReal& a, const IntervalReal& b) {
    if (a.hi < b.lo)
        return IntervalOrder::Less;
    if (a.lo > b.hi)
        return IntervalOrder::Greater;
    return IntervalOrder::Undecided;
}

// Interval of width <= `width` containing sqrt(x). Exact on perfect squares.
// Throws std::domain_error for x < 0 and std::invalid_argument for width <= 0.
IntervalReal sqrt_interval(const Rational& x, const Rational& width);

}  // namespace kstab
