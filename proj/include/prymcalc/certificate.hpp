// Bigness certificates: the exact positive combination of two effective
// divisor classes that matches the boundary coefficients of the canonical
// class, leaving a positive multiple of lambda.
#pragma once

#include "prymcalc/picard.hpp"

#include <string>
#include <utility>

namespace prymcalc {

struct BignessCertificate {
    Rational beta;
    Rational gamma;
    Rational epsilon;          // lambda coefficient of beta*d1 + gamma*d2
    Rational residual_lambda;  // 13 - epsilon
    int genus = 0;
    PrymDivisorClass d1, d2;
    bool verdict = false;
    std::string reason;  // empty when the verdict is true
};

// Solves beta*d1 + gamma*d2 = epsilon*lambda + t1*(d0p + d0pp) + t2*d0ram
// exactly.  When both inputs have equal d0p/d0pp coefficients this is the
// 2x2 system on (d0p, d0ram); asymmetric inputs go through the full
// three-equation system, which either has an exact solution or the
// certificate reports infeasibility (never a least-squares fit).
// Proportional boundary parts make every subsystem singular and raise.
BignessCertificate solve_combination(const PrymDivisorClass& d1, const PrymDivisorClass& d2,
                                     std::pair<Rational, Rational> target_boundary = {Rational(-2),
                                                                                      Rational(-3)});

// Runs solve_combination against the canonical class's boundary targets
// (-2, -3).  Requires g <= 23 (beyond that the higher boundary
// coefficients would need their own checks) and inputs supported on
// lambda, d0p, d0pp, d0ram only.
BignessCertificate verify_general_type(int g, const PrymDivisorClass& d1, const PrymDivisorClass& d2);

// Re-checks a certificate from its stored fields alone, without solving:
// positivity of beta and gamma, epsilon < 13, the genus bound, residual
// consistency, and (when the inputs are carried) the exact reconstruction
// of the boundary targets.  Returns the recomputed verdict.
bool recheck_certificate(const BignessCertificate& cert, std::string* why = nullptr);

// The two published effective divisor classes on the genus-15 space.
PrymDivisorClass divisor_15_2();        // 5808 lambda - 924 (d0p + d0pp) - 990 d0ram
PrymDivisorClass divisor_15_virtual();  // numeric part of the degeneracy-locus class

}  // namespace prymcalc
