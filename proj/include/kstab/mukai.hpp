#pragma once

#include "kstab/rational.hpp"
#include "kstab/stab.hpp"

#include <optional>
#include <vector>

namespace kstab {

using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;

// Integer lattice with an even symmetric Gram matrix, optionally carrying the
// two distinguished classes generating an A2 block.
struct LatticeSpec {
    IntMat gram;
    std::optional<IntVec> lambda1, lambda2;

    std::size_t rank() const { return gram.size(); }
};

// Validates symmetry, evenness and (when present) that the lambda block is
// exactly A2. Throws std::invalid_argument.
LatticeSpec make_lattice(IntMat gram, std::optional<IntVec> lambda1 = {},
                         std::optional<IntVec> lambda2 = {});

// Built-in lattices.
const LatticeSpec& lattice_a2();        // [[2,-1],[-1,2]], lambdas = basis
const LatticeSpec& lattice_u();         // hyperbolic plane [[0,1],[1,0]]
const LatticeSpec& lattice_mukai24();   // U^4 + E8(-1)^2, consistency tests only

Int pairing(const IntVec& x, const IntVec& y, const LatticeSpec& l);
Int euler(const IntVec& x, const IntVec& y, const LatticeSpec& l);  // = -pairing

bool is_positive_definite(const LatticeSpec& l);

// All vectors of self-pairing -2 with |coordinates| <= bound. When the form
// is positive definite the result is exactly empty and carries a completeness
// certificate; otherwise the search is bound-truncated.
struct MinusTwoSearch {
    std::vector<IntVec> vectors;
    bool complete = false;
};
MinusTwoSearch minus_two_search(const LatticeSpec& l, long bound,
                                long max_candidates = 1000000);

// Complexified lattice vector: real and imaginary rational coordinate parts.
struct ComplexEta {
    std::vector<Rational> re, im;
};

// Real and imaginary parts span a positive-definite two-plane.
bool in_P(const ComplexEta& eta, const LatticeSpec& l);

enum class P0Verdict { Yes, No, YesUpToBound };

// in_P and additionally (delta, eta) != 0 as a complex number for every
// (-2)-class delta found within the bound; downgraded to YesUpToBound when
// the search has no completeness certificate.
P0Verdict in_P0(const ComplexEta& eta, const LatticeSpec& l, long bound);

// Solves (eta, lambda_i) = z_i over the A2 block, separately on real and
// imaginary parts.
ComplexEta eta_from_charge(const Charge& z1, const Charge& z2);

// Order-3 isometry of A2: lambda1 -> lambda2 -> -lambda1-lambda2.
std::array<std::array<Int, 2>, 2> degree_shift_matrix();

enum class MutationSide { Left, Right };

// Class-level mutation over an abstract (not necessarily symmetric) Euler
// form: left  g - chi(e,g) e,  right  g - chi(g,e) e. Requires chi(e,e) = 1.
IntVec numerical_mutation(MutationSide side, const IntVec& e, const IntVec& g,
                          const IntMat& euler_form);

// Ext^1 dimension of a stable object of class v: v.v + 2. Throws for v = 0 or
// v.v < -2.
Int stable_ext1(const IntVec& v, const LatticeSpec& l);

// For v with v.v = 2: enumerates splittings v = a + b into isotropic classes
// within the bound; each satisfies (a-b).(a-b) = -2, which also holds
// symbolically: (a-b)^2 = 2a^2 + 2b^2 - (a+b)^2 = -2.
struct DecompositionReport {
    std::vector<std::pair<IntVec, IntVec>> splittings;
    bool all_certified = false;
    std::string symbolic_identity;
};
DecompositionReport decomposition_obstruction(const IntVec& v,
                                              const LatticeSpec& l, long bound);

// lambda1, lambda2, the class of the Fano-of-lines kernel bundle (= lambda1)
// and the Pluecker divisor class lambda1 + 2 lambda2.
struct DistinguishedClasses {
    IntVec lambda1, lambda2, fano_lines, plucker;
};
DistinguishedClasses distinguished_classes(const LatticeSpec& l);

}  // namespace kstab
