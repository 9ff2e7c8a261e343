// Formal divisor-class vectors on the moduli space of curves and on the
// moduli space of Prym curves, together with the pullback/pushforward
// calculus of the degree-(2^{2g}-1) forgetful covering, the canonical
// class, boundary fiber censuses and slope-inequality reports.
//
// Basis conventions:
//   on the curve side:  lambda and delta_i for 0 <= i <= floor(g/2);
//   on the Prym side:   lambda, the three components d0p, d0pp (Wirtinger),
//                       d0ram over delta_0, and higher boundary keys
//                       "j" (= delta_j, 1 <= j <= g-1) and "i:g-i".
// Keys are symbolic, never positional, so a genus change cannot silently
// misalign a vector.
#pragma once

#include "prymcalc/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prymcalc {

struct ModuliDivisorClass {
    int genus = 2;
    Rational lambda;
    std::map<int, Rational> delta;  // i -> coefficient of delta_i, zero entries omitted

    void normalize();
    void validate() const;

    friend ModuliDivisorClass operator+(const ModuliDivisorClass& a, const ModuliDivisorClass& b);
    friend ModuliDivisorClass operator*(const Rational& s, const ModuliDivisorClass& c);
    friend bool operator==(const ModuliDivisorClass& a, const ModuliDivisorClass& b);
};

// Canonical key strings for the boundary components over delta_i, i >= 1.
std::string boundary_key_plain(int j);
std::string boundary_key_mixed(int i, int j);

struct PrymDivisorClass {
    int genus = 2;
    Rational lambda;
    Rational d0p;    // eta pulls back nontrivially to the normalization
    Rational d0pp;   // Wirtinger component
    Rational d0ram;  // exceptional/ramification component
    std::map<std::string, Rational> boundary;  // higher keys, zero entries omitted

    void normalize();
    void validate() const;
    bool boundary_is_zero() const { return boundary.empty(); }

    friend PrymDivisorClass operator+(const PrymDivisorClass& a, const PrymDivisorClass& b);
    friend PrymDivisorClass operator-(const PrymDivisorClass& a, const PrymDivisorClass& b);
    friend PrymDivisorClass operator*(const Rational& s, const PrymDivisorClass& c);
    friend bool operator==(const PrymDivisorClass& a, const PrymDivisorClass& b);
};

struct FiberCensus {
    int genus = 2;
    Integer count_d0p;
    Integer count_d0pp;
    Integer count_d0ram;
};

// lambda -> lambda, delta_0 -> d0p + d0pp + 2*d0ram, and for i >= 1
// delta_i -> the sum of the distinct components over Delta_i.
PrymDivisorClass pullback_forgetful(const ModuliDivisorClass& c);

// d0p -> 2(2^{2g-2}-1) delta_0, d0pp -> delta_0, d0ram -> 2^{2g-2} delta_0,
// lambda -> (2^{2g}-1) lambda.  Higher boundary keys have no published
// multiplicities and are rejected.
ModuliDivisorClass pushforward_forgetful(const PrymDivisorClass& c);

// 13 lambda - 2(d0p + d0pp) - 3 d0ram - 2 * (every higher key) with the
// i = 1 family deepened to -3.  Requires g >= 4.
PrymDivisorClass prym_canonical_class(int g);

// Fiber of the forgetful covering over a generic one-nodal curve:
// (2(2^{2g-2}-1), 1, 2^{2g-2}).  Weighted by the simple ramification along
// the third component the counts sum to the covering degree 2^{2g}-1.
FiberCensus boundary_fiber_census(int g);

enum class SlopeVerdict { Pass, Fail, NotApplicable };

struct SlopeCheck {
    std::string coefficient;        // which boundary coefficient is tested
    std::optional<Rational> ratio;  // a / b when b > 0
    Rational bound;
    SlopeVerdict verdict = SlopeVerdict::NotApplicable;
};

struct SlopeReport {
    int genus = 2;
    std::vector<SlopeCheck> checks;
    bool all_pass = false;  // over the applicable checks
};

// Tests a*lambda - sum b_i * (boundary) against the bounds 13/2 (d0p, d0pp)
// and 13/3 (d0ram); nonpositive b is reported not-applicable.  For g <= 23
// only those four coefficients decide, so higher keys are only examined
// beyond that genus (bound 13/3 for the 1, g-1 and 1:g-1 keys, 13/2 else).
SlopeReport slope_report(const PrymDivisorClass& d);

}  // namespace prymcalc
