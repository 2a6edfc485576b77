#include "kstab/cubic4.hpp"

namespace kstab {

CharVec clifford_class(int j) {
    const Rational c1 = 2 * j - 5;
    return {Ambient::CliffordTwisted, 1, 4, c1, c1 * c1 / 8};
}

ObjectDescriptor clifford_object(int j, int shift) {
    ObjectDescriptor obj = make_delta_zero(clifford_class(j), shift,
                                           "B_" + std::to_string(j));
    obj.clifford_j = j;
    return obj;
}

Rational chi_p2_diag(const CharVec& v) {
    if (v.ambient != Ambient::CliffordUntwisted)
        throw std::invalid_argument("chi_p2_diag: expects untwisted Clifford class");
    return Rational(-7, 64) * v.e0 * v.e0 - Rational(1, 4) * v.e1 * v.e1 +
           Rational(1, 2) * v.e0 * v.e2;
}

bool rank_admissible(const Rational& e0) {
    return is_integer(e0 / 4);
}

bool bogomolov_predicate(const CharVec& v) {
    if (v.e0 == 0)
        return true;  // torsion modules carry no rank divisibility constraint
    return rank_admissible(v.e0) && delta_B0(v) >= 0;
}

Charge z_alpha(const CharVec& v, const Rational& t) {
    if (t <= 0)
        throw std::invalid_argument("z_alpha: t must be positive");
    const CharVec w = twist_beta(v, -1);
    return {w.e1, -(t / 2) * w.e0 + w.e2};
}

CharVec lambda_character(int i) {
    switch (i) {
    case 1:
        return {Ambient::CliffordTwisted, 1, 4, -1, Rational(-15, 8)};
    case 2:
        return {Ambient::CliffordTwisted, 1, -8, 8, Rational(-18, 8)};
    }
    throw std::invalid_argument("lambda_character: index must be 1 or 2");
}

namespace {

std::string slope_str(const Slope& s) {
    return s.infinite ? "inf" : to_string(s.value);
}

}  // namespace

VerificationReport verify_cubic4(const Rational& t, const Rational& beta) {
    if (t <= 0)
        throw std::invalid_argument("verify_cubic4: t must be positive");
    VerificationReport rep;
    if (beta != -1)
        rep.note("beta != -1: construction is only verified along beta = -1");
    const StabParams p{t, beta};

    // (a) heart membership with Delta = 0 certificates
    const HeartSpec heart = HeartSpec::tilted(beta);
    struct Entry {
        int j;
        int shift;
    };
    const Entry plus[] = {{1, 0}, {2, 0}, {3, 0}};
    const Entry minus[] = {{-2, 1}, {-1, 1}, {0, 1}};
    for (const auto& e : {plus[0], plus[1], plus[2], minus[0], minus[1], minus[2]}) {
        const ObjectDescriptor obj = clifford_object(e.j, e.shift);
        const bool member = heart_member(obj, heart).yes();
        const bool delta0 = delta_B0(obj.v) == 0;
        rep.add("heart: " + obj.name + (e.shift ? "[1]" : ""), member && delta0,
                "Delta_B0 = " + to_string(delta_B0(obj.v)) +
                    ", mu_H = " + to_string(obj.v.e1 / obj.v.e0));
    }

    // (b) strict six-term slope chain around 0
    std::vector<std::pair<std::string, Slope>> chain;
    for (const auto& e : minus)
        chain.emplace_back("mu(B_" + std::to_string(e.j) + "[1])",
                           tilt_slope(clifford_class(e.j), 1, p));
    chain.emplace_back("0", Slope::finite(0));
    for (const auto& e : plus)
        chain.emplace_back("mu(B_" + std::to_string(e.j) + ")",
                           tilt_slope(clifford_class(e.j), 0, p));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const bool ok = chain[i].second < chain[i + 1].second;
        rep.add("chain: " + chain[i].first + " < " + chain[i + 1].first, ok,
                slope_str(chain[i].second) + " vs " + slope_str(chain[i + 1].second));
    }

    // (c) Serre rule maps B_1, B_2, B_3 to shifts of B_-2, B_-1, B_0
    for (const auto& e : plus) {
        const ObjectDescriptor img =
            serre_image(clifford_object(e.j), Geometry::clifford_p3());
        const bool ok = img.clifford_j && *img.clifford_j == e.j - 3 &&
                        img.shift == 3 && img.v == clifford_class(e.j - 3);
        rep.add("serre: S(B_" + std::to_string(e.j) + ") = B_" +
                    std::to_string(e.j - 3) + "[3]",
                ok, "image shift " + std::to_string(img.shift));
    }

    // (d) second-tilt heart at mu0 = 0
    const HeartSpec second = HeartSpec::double_tilt(t, beta, 0);
    for (const auto& e : plus)
        rep.add("second tilt: B_" + std::to_string(e.j),
                heart_member(clifford_object(e.j, 0), second).yes(), "shift 0");
    for (const auto& e : minus)
        rep.add("second tilt: B_" + std::to_string(e.j) + "[2]",
                heart_member(clifford_object(e.j, 2), second).yes(), "shift 2");

    // (e) charge nonvanishing on the exceptional triple
    for (const auto& e : plus) {
        const Charge z = z_tilt(clifford_class(e.j), p);
        rep.add("Z(B_" + std::to_string(e.j) + ") != 0", !z.is_zero(),
                "(" + to_string(z.re) + ", " + to_string(z.im) + ")");
    }
    return rep;
}

}  // namespace kstab
