#include "kstab/support.hpp"

#include "kstab/walls.hpp"

#include <algorithm>

namespace kstab {

namespace {

// cross of (a - o) and (b - o) in (x, y) = (im, re) coordinates
Rational cross(const Charge& o, const Charge& a, const Charge& b) {
    return (a.im - o.im) * (b.re - o.re) - (a.re - o.re) * (b.im - o.im);
}

}  // namespace

Polygon hn_polygon(const std::vector<Charge>& sub_charges, const Charge& total) {
    const Charge zero{0, 0};
    for (const auto& z : sub_charges)
        if (z.im < 0)
            throw std::invalid_argument("hn_polygon: charge with negative imaginary part");
    if (total.im < 0)
        throw std::invalid_argument("hn_polygon: total with negative imaginary part");

    if (total.im == 0)
        return {{zero, total}};

    // Points right of the endpoints at the extreme heights cannot contribute
    // to the left boundary between 0 and total.
    std::vector<Charge> pts{zero, total};
    for (const auto& z : sub_charges) {
        if (z.im < 0 || z.im > total.im)
            continue;
        if (z.im == 0 && z.re > 0)
            continue;
        if (z.im == total.im && z.re >= total.re && !(z == total))
            continue;
        pts.push_back(z);
    }

    std::sort(pts.begin(), pts.end(), [](const Charge& a, const Charge& b) {
        if (a.im != b.im)
            return a.im < b.im;
        return a.re < b.re;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // lower hull in (im, re): convex from below, i.e. strictly decreasing mu
    std::vector<Charge> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }

    // Endpoints: a charge with im = 0, re < 0 starts the boundary with a
    // horizontal (slope +infinity) edge out of 0; symmetrically at the top.
    if (!(hull.front() == zero)) {
        if (hull.front().im != 0)
            throw std::logic_error("hn_polygon: hull does not reach height 0");
        hull.insert(hull.begin(), zero);
    }
    if (!(hull.back() == total)) {
        if (hull.back().im != total.im)
            throw std::logic_error("hn_polygon: hull does not reach the total");
        hull.push_back(total);
    }
    return {hull};
}

void check_polygon(const Polygon& poly) {
    const auto& v = poly.vertices;
    if (v.size() < 2)
        throw std::invalid_argument("polygon: needs at least two vertices");
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
        // consecutive edges a, b must turn right in slope: cross(a, b) < 0
        const Charge a{v[i + 1].re - v[i].re, v[i + 1].im - v[i].im};
        const Charge b{v[i + 2].re - v[i + 1].re, v[i + 2].im - v[i + 1].im};
        if (a.re * b.im - a.im * b.re >= 0)
            throw std::invalid_argument("polygon: edge slopes not strictly decreasing");
    }
}

IntervalReal mass(const Polygon& poly, const Rational& width) {
    check_polygon(poly);
    if (width <= 0)
        throw std::invalid_argument("mass: width must be positive");
    const auto& v = poly.vertices;
    const Rational per_edge = width / Rational(static_cast<long>(v.size() - 1));
    IntervalReal acc{0, 0};
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const Rational dre = v[i + 1].re - v[i].re;
        const Rational dim = v[i + 1].im - v[i].im;
        acc = acc + sqrt_interval(dre * dre + dim * dim, per_edge);
    }
    return acc;
}

bool support_check(const QForm3& q, const Rational& t, const Rational& beta) {
    return q.eval(kernel_vector(t, beta)) < 0;
}

bool support_check_rank2(bool charge_injective) {
    // Ker Z = 0: any quadratic form is negative definite on the zero space.
    return charge_injective;
}

IntervalReal triangle_amplification(const Rational& cos_phi, const Rational& width) {
    if (cos_phi <= -1 || cos_phi >= 1)
        throw std::domain_error("triangle_amplification: cos_phi out of range");
    return sqrt_interval(2 / (1 + cos_phi), width);
}

bool restriction_inequality(const Rational& delta,
                            const std::vector<HNFactorSlope>& factors) {
    if (factors.empty())
        throw std::invalid_argument("restriction_inequality: empty factor list");
    Rational lhs = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].rank <= 0)
            throw std::invalid_argument("restriction_inequality: ranks must be positive");
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            const Rational dmu = factors[i].mu - factors[j].mu;
            lhs += factors[i].rank * factors[j].rank * dmu * dmu;
        }
    }
    return lhs <= delta;
}

}  // namespace kstab
