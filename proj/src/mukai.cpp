#include "kstab/mukai.hpp"

#include <algorithm>
#include <stdexcept>

namespace kstab {

namespace {

void check_dim(const IntVec& x, const LatticeSpec& l, const char* who) {
    if (x.size() != l.rank())
        throw std::invalid_argument(std::string(who) + ": vector/lattice rank mismatch");
}

// Leading principal minors via fraction-free (Bareiss) elimination.
std::vector<Int> leading_minors(const IntMat& m) {
    const std::size_t n = m.size();
    IntMat a = m;
    std::vector<Int> minors;
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        minors.push_back(a[k][k]);
        if (a[k][k] == 0)  // minor vanishes; Bareiss pivots break down past here
            break;
        prev = a[k][k];
    }
    return minors;
}

// Odometer over {-bound..bound}^rank in lex order. Returns false when done.
bool next_vector(IntVec& x, long bound) {
    for (std::size_t i = x.size(); i-- > 0;) {
        if (x[i] < bound) {
            ++x[i];
            for (std::size_t j = i + 1; j < x.size(); ++j)
                x[j] = -bound;
            return true;
        }
    }
    return false;
}

bool is_zero(const IntVec& x) {
    return std::all_of(x.begin(), x.end(), [](const Int& c) { return c == 0; });
}

}  // namespace

LatticeSpec make_lattice(IntMat gram, std::optional<IntVec> lambda1,
                         std::optional<IntVec> lambda2) {
    const std::size_t n = gram.size();
    if (n == 0)
        throw std::invalid_argument("make_lattice: empty Gram matrix");
    for (const auto& row : gram)
        if (row.size() != n)
            throw std::invalid_argument("make_lattice: Gram matrix not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i][i] % 2 != 0)
            throw std::invalid_argument("make_lattice: lattice is not even");
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument("make_lattice: Gram matrix not symmetric");
    }
    if (lambda1.has_value() != lambda2.has_value())
        throw std::invalid_argument("make_lattice: need both lambda classes or neither");
    LatticeSpec l{std::move(gram), std::move(lambda1), std::move(lambda2)};
    if (l.lambda1) {
        check_dim(*l.lambda1, l, "make_lattice");
        check_dim(*l.lambda2, l, "make_lattice");
        if (pairing(*l.lambda1, *l.lambda1, l) != 2 ||
            pairing(*l.lambda2, *l.lambda2, l) != 2 ||
            pairing(*l.lambda1, *l.lambda2, l) != -1)
            throw std::invalid_argument("make_lattice: lambda block is not A2");
    }
    return l;
}

const LatticeSpec& lattice_a2() {
    static const LatticeSpec l =
        make_lattice({{2, -1}, {-1, 2}}, IntVec{1, 0}, IntVec{0, 1});
    return l;
}

const LatticeSpec& lattice_u() {
    static const LatticeSpec l = make_lattice({{0, 1}, {1, 0}});
    return l;
}

const LatticeSpec& lattice_mukai24() {
    static const LatticeSpec l = [] {
        IntMat g(24, IntVec(24, 0));
        // four hyperbolic planes
        for (int k = 0; k < 4; ++k)
            g[2 * k][2 * k + 1] = g[2 * k + 1][2 * k] = 1;
        // two copies of E8(-1): chain 1-...-7, node 8 attached to node 5
        for (int copy = 0; copy < 2; ++copy) {
            const int base = 8 + 8 * copy;
            for (int i = 0; i < 8; ++i)
                g[base + i][base + i] = -2;
            for (int i = 0; i < 6; ++i)
                g[base + i][base + i + 1] = g[base + i + 1][base + i] = 1;
            g[base + 4][base + 7] = g[base + 7][base + 4] = 1;
        }
        // A2 block inside U1 + U2: lambda1 = e1 + f1, lambda2 = -e1 + e2 + f2
        IntVec l1(24, 0), l2(24, 0);
        l1[0] = l1[1] = 1;
        l2[0] = -1;
        l2[2] = l2[3] = 1;
        return make_lattice(std::move(g), std::move(l1), std::move(l2));
    }();
    return l;
}

Int pairing(const IntVec& x, const IntVec& y, const LatticeSpec& l) {
    check_dim(x, l, "pairing");
    check_dim(y, l, "pairing");
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            s += x[i] * l.gram[i][j] * y[j];
    return s;
}

Int euler(const IntVec& x, const IntVec& y, const LatticeSpec& l) {
    return -pairing(x, y, l);
}

bool is_positive_definite(const LatticeSpec& l) {
    const auto minors = leading_minors(l.gram);
    if (minors.size() != l.rank())
        return false;
    return std::all_of(minors.begin(), minors.end(),
                       [](const Int& m) { return m > 0; });
}

MinusTwoSearch minus_two_search(const LatticeSpec& l, long bound,
                                long max_candidates) {
    if (bound < 0)
        throw std::invalid_argument("minus_two_search: bound must be >= 0");
    MinusTwoSearch out;
    if (is_positive_definite(l)) {
        // x.x > 0 for every nonzero x, so the (-2)-set is exactly empty.
        out.complete = true;
        return out;
    }
    Int count = 1;
    for (std::size_t i = 0; i < l.rank(); ++i)
        count *= 2 * Int(bound) + 1;
    if (count > max_candidates)
        throw std::runtime_error("minus_two_search: candidate cap exceeded");
    IntVec x(l.rank(), -Int(bound));
    do {
        if (!is_zero(x) && pairing(x, x, l) == -2)
            out.vectors.push_back(x);
    } while (next_vector(x, bound));
    return out;
}

namespace {

Rational pairing_q(const std::vector<Rational>& x, const std::vector<Rational>& y,
                   const LatticeSpec& l) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            s += x[i] * Rational(l.gram[i][j]) * y[j];
    return s;
}

}  // namespace

bool in_P(const ComplexEta& eta, const LatticeSpec& l) {
    if (eta.re.size() != l.rank() || eta.im.size() != l.rank())
        throw std::invalid_argument("in_P: vector/lattice rank mismatch");
    const Rational a = pairing_q(eta.re, eta.re, l);
    const Rational b = pairing_q(eta.re, eta.im, l);
    const Rational c = pairing_q(eta.im, eta.im, l);
    return a > 0 && a * c - b * b > 0;
}

P0Verdict in_P0(const ComplexEta& eta, const LatticeSpec& l, long bound) {
    if (!in_P(eta, l))
        return P0Verdict::No;
    const MinusTwoSearch search = minus_two_search(l, bound);
    for (const IntVec& d : search.vectors) {
        std::vector<Rational> dq(d.begin(), d.end());
        if (pairing_q(dq, eta.re, l) == 0 && pairing_q(dq, eta.im, l) == 0)
            return P0Verdict::No;
    }
    return search.complete ? P0Verdict::Yes : P0Verdict::YesUpToBound;
}

ComplexEta eta_from_charge(const Charge& z1, const Charge& z2) {
    // coordinates in the A2 basis: c = A2^{-1} z, A2^{-1} = (1/3) [[2,1],[1,2]]
    auto solve = [](const Rational& a, const Rational& b) {
        return std::vector<Rational>{(2 * a + b) / 3, (a + 2 * b) / 3};
    };
    return {solve(z1.re, z2.re), solve(z1.im, z2.im)};
}

std::array<std::array<Int, 2>, 2> degree_shift_matrix() {
    return {{{Int(0), Int(-1)}, {Int(1), Int(-1)}}};
}

IntVec numerical_mutation(MutationSide side, const IntVec& e, const IntVec& g,
                          const IntMat& euler_form) {
    const std::size_t n = euler_form.size();
    if (e.size() != n || g.size() != n)
        throw std::invalid_argument("numerical_mutation: dimension mismatch");
    auto chi = [&](const IntVec& x, const IntVec& y) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s += x[i] * euler_form[i][j] * y[j];
        return s;
    };
    if (chi(e, e) != 1)
        throw std::invalid_argument("numerical_mutation: chi(e, e) must be 1");
    const Int c = side == MutationSide::Left ? chi(e, g) : chi(g, e);
    IntVec out = g;
    for (std::size_t i = 0; i < n; ++i)
        out[i] -= c * e[i];
    return out;
}

Int stable_ext1(const IntVec& v, const LatticeSpec& l) {
    check_dim(v, l, "stable_ext1");
    if (is_zero(v))
        throw std::invalid_argument("stable_ext1: zero class");
    const Int sq = pairing(v, v, l);
    if (sq < -2)
        throw std::invalid_argument("stable_ext1: v.v < -2 has no stable object");
    return sq + 2;
}

DecompositionReport decomposition_obstruction(const IntVec& v,
                                              const LatticeSpec& l, long bound) {
    check_dim(v, l, "decomposition_obstruction");
    if (pairing(v, v, l) != 2)
        throw std::invalid_argument("decomposition_obstruction: requires v.v = 2");
    DecompositionReport rep;
    rep.symbolic_identity =
        "(a-b).(a-b) = 2 a.a + 2 b.b - (a+b).(a+b) = 0 + 0 - 2 = -2";
    Int count = 1;
    for (std::size_t i = 0; i < l.rank(); ++i)
        count *= 2 * Int(bound) + 1;
    if (count > 1000000)
        throw std::runtime_error("decomposition_obstruction: candidate cap exceeded");
    rep.all_certified = true;
    IntVec a(l.rank(), -Int(bound));
    do {
        if (is_zero(a) || pairing(a, a, l) != 0)
            continue;
        IntVec b(l.rank());
        for (std::size_t i = 0; i < l.rank(); ++i)
            b[i] = v[i] - a[i];
        if (is_zero(b) || pairing(b, b, l) != 0)
            continue;
        if (b < a)  // keep one orientation of each unordered pair
            continue;
        IntVec d(l.rank());
        for (std::size_t i = 0; i < l.rank(); ++i)
            d[i] = a[i] - b[i];
        if (pairing(d, d, l) != -2)
            rep.all_certified = false;
        rep.splittings.emplace_back(a, b);
    } while (next_vector(a, bound));
    return rep;
}

DistinguishedClasses distinguished_classes(const LatticeSpec& l) {
    if (!l.lambda1)
        throw std::invalid_argument("distinguished_classes: lattice has no lambda block");
    const IntVec& l1 = *l.lambda1;
    const IntVec& l2 = *l.lambda2;
    IntVec plucker(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i)
        plucker[i] = l1[i] + 2 * l2[i];
    return {l1, l2, l1, plucker};
}

}  // namespace kstab
