// Degree-truncated algebra of tautological classes on the universal curve
// over the linear-series space, and the fiber-integration rules that turn
// them into divisor classes on the base.
//
// Fiber generators (degree 1): cL = c1 of the series bundle, cP = c1 of
// the 2-torsion bundle, cOm = c1 of the relative dualizing sheaf; plus the
// degree-2 class c2 of the relative cotangent complex.  Everything of
// total degree > 2 is truncated to zero.
//
// Base generators: lambda; a = push(cL^2); b = push(cL*cOm); c = c1 of the
// pushforward of the series bundle (opaque, never expanded); d = c1 of the
// first derived pushforward of the twisted bundle (opaque); and the three
// boundary classes d0p, d0pp, d0ram.
#pragma once

#include "prymcalc/rational.hpp"

#include <array>
#include <cstddef>
#include <string>

namespace prymcalc {

enum FiberMonomial : std::size_t {
    FM_One = 0,
    FM_L,
    FM_P,
    FM_Om,
    FM_LL,
    FM_LP,
    FM_LOm,
    FM_PP,
    FM_POm,
    FM_OmOm,
    FM_C2,
    FM_Count
};

int fiber_monomial_degree(FiberMonomial m);
std::string fiber_monomial_name(FiberMonomial m);

class FiberClassExpr {
public:
    FiberClassExpr() = default;

    static FiberClassExpr unit();
    static FiberClassExpr cL();
    static FiberClassExpr cP();
    static FiberClassExpr cOmega();
    static FiberClassExpr c2Cotangent();

    const Rational& coeff(FiberMonomial m) const { return t_[m]; }
    Rational& coeff(FiberMonomial m) { return t_[m]; }

    bool is_homogeneous(int degree) const;

    friend FiberClassExpr operator+(const FiberClassExpr& a, const FiberClassExpr& b);
    friend FiberClassExpr operator-(const FiberClassExpr& a, const FiberClassExpr& b);
    friend FiberClassExpr operator*(const Rational& s, const FiberClassExpr& a);
    // Distributive graded product, truncating above degree 2.
    friend FiberClassExpr operator*(const FiberClassExpr& a, const FiberClassExpr& b);
    friend bool operator==(const FiberClassExpr& a, const FiberClassExpr& b);

    std::string to_string() const;

private:
    std::array<Rational, FM_Count> t_{};
};

enum BaseGen : std::size_t {
    BG_Lambda = 0,
    BG_A,     // pushforward of cL^2
    BG_B,     // pushforward of cL*cOm
    BG_C,     // c1 of the series pushforward bundle (opaque)
    BG_D,     // c1 of R^1 of the twisted pushforward (opaque)
    BG_D0p,
    BG_D0pp,
    BG_D0ram,
    BG_Count
};

std::string base_gen_name(BaseGen g);

class BaseClassExpr {
public:
    BaseClassExpr() = default;
    static BaseClassExpr generator(BaseGen g);

    const Rational& coeff(BaseGen g) const { return c_[g]; }
    Rational& coeff(BaseGen g) { return c_[g]; }

    friend BaseClassExpr operator+(const BaseClassExpr& a, const BaseClassExpr& b);
    friend BaseClassExpr operator-(const BaseClassExpr& a, const BaseClassExpr& b);
    friend BaseClassExpr operator*(const Rational& s, const BaseClassExpr& a);
    friend bool operator==(const BaseClassExpr& a, const BaseClassExpr& b);

    std::string to_string() const;

private:
    std::array<Rational, BG_Count> c_{};
};

// ch of a line bundle with first Chern class c1, truncated: 1 + c1 + c1^2/2.
// The input must be homogeneous of degree 1.
FiberClassExpr chern_character_line(const FiberClassExpr& c1);

// 1 - cOm/2 + (cOm^2 + c2)/12.
FiberClassExpr todd_factor();

// Degree-1 part of the fiber integration.  Rule table:
//   cL^2 -> a,  cL*cOm -> b,  cP^2 -> -d0ram/2,  cP*cOm -> 0,  cL*cP -> 0,
//   (cOm^2 + c2)/12 -> lambda as a joint rule (unbalanced cOm^2 vs c2
//   coefficients have no published image and are rejected);
// anything of degree <= 1 integrates to degree <= 0 and contributes nothing.
BaseClassExpr fiber_pushforward(const FiberClassExpr& x);

enum class BundleKind { SquaredSeries, TwistedSeries, PlainSeries, Trivial };

// First Chern class of the pushforward bundle on the linear-series space.
// SquaredSeries and Trivial go through the full character-times-Todd
// pipeline (their R^1 vanishes); TwistedSeries adds the R^1 correction +d;
// PlainSeries is the opaque generator c.
BaseClassExpr c1_pushforward_bundle(BundleKind kind);

}  // namespace prymcalc
