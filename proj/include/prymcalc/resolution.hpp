// Hilbert polynomials and section counts of graded free resolutions of
// ideal sheaves over projective space, surface invariants read off from a
// degree-2 Hilbert polynomial, and the adjunction numbers of a hyperplane
// section.
//
// Two deliberately separate regimes:
//   * the Hilbert polynomial extends binomials polynomially (an Euler
//     characteristic, valid for every t);
//   * literal section counts truncate binomials to zero at negative twist
//     and are guarded by the vanishing conditions that make the truncated
//     alternating sum compute an actual h^0.
#pragma once

#include "prymcalc/polynomial.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace prymcalc {

struct GradedFreeResolution {
    struct Term {
        int index = 0;              // homological index, contiguous from 0
        std::vector<int> twists;    // one entry per direct summand
    };
    int ambient_dim = 0;  // n of the ambient projective n-space
    std::vector<Term> terms;

    void validate() const;
};

// The length-2 Pfaffian resolution on projective 5-space:
// twists (-3)^7 at index 0, (-4)^7 at index 1, (-7) at index 2.
const GradedFreeResolution& pfaffian_resolution();

// Looks up "pfaffian_14_6"; unknown names raise.
const GradedFreeResolution& builtin_resolution(std::string_view name);

struct SurfaceInvariants {
    long long degree = 0;
    long long chi_O = 0;
    long long p_g = 0;
    long long q = 0;
    std::optional<long long> K_squared;  // set under the canonical-embedding flag
    RationalPolynomial hilbert_poly;
};

// Euler characteristic of the quotient: ambient Hilbert polynomial minus
// the alternating sum of binomial polynomials over the resolution terms.
RationalPolynomial hilbert_polynomial_of_quotient(const GradedFreeResolution& res);

// h^0 of the resolved ideal sheaf twisted by t, via the truncated
// alternating sum.  Errors when any term of homological index >= 1 has
// sections at this twist (the truncation is then not known to be exact).
Integer ideal_section_count(const GradedFreeResolution& res, long long twist);

// h^0 of the quotient at twist t: sections of the ambient line bundle
// minus ideal_section_count.  Additionally guards h^1(ideal) = 0, which
// on projective n-space can only fail through a term at homological index
// n-1 with t + twist <= -n-1.
Integer quotient_section_count(const GradedFreeResolution& res, long long twist);

// Reads chi(O) = P(0), degree = 2 * leading coefficient, p_g = sections at
// twist 1, q = p_g - (chi - 1) off a degree-2 quotient polynomial; K^2
// equals the degree exactly when the embedding is canonical.
SurfaceInvariants surface_invariants(const GradedFreeResolution& res, bool canonical_embedding = true);

struct AdjoinedCurve {
    long long genus = 0;
    long long degree = 0;
};

// Hyperplane section of a canonically embedded surface: 2g - 2 = 2*K^2,
// and the section is embedded with degree K^2.
AdjoinedCurve adjunction_curve(long long k_squared);

}  // namespace prymcalc
