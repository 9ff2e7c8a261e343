// Assembly of the first degeneracy class of the multiplication morphism
// between equal-rank bundles on the genus-15 linear-series space, its
// pushforward to the Prym moduli space through the published substitution
// table, and the resulting virtual divisor class in expanded and factored
// form.
#pragma once

#include "prymcalc/fiber_algebra.hpp"
#include "prymcalc/picard.hpp"

#include <map>
#include <string_view>

namespace prymcalc {

struct SeriesPushforwardTable {
    int genus = 15;
    Integer degree;  // degree N of the series covering
    std::map<BaseGen, PrymDivisorClass> rows;  // the opaque R^1 generator has no row

    // The (g, r, d) = (15, 4, 16) table, N = 6006.
    static const SeriesPushforwardTable& standard_15_4_16();
};

struct VirtualDivisorClass {
    PrymDivisorClass numeric_part;
    Rational d_multiple;  // coefficient of the symbolic pushforward of the R^1 class
};

struct FactoredClass {
    Rational scale;
    Rational lambda, d0p, d0pp, d0ram;

    PrymDivisorClass expand(int genus) const;
};

// (rank + 1) * c1, the first Chern class of the symmetric square.
BaseClassExpr sym2_c1(const BaseClassExpr& c1, long long rank);

// c1(squared bundle) - c1(Sym^2 plain) - c1(Sym^2 twisted)
//   = -2*lambda + a/2 + b/2 - 6c + (3/4) d0ram - 3d.
// Guarded by the rank balance 15 + 3 = 18 of the three bundles.
BaseClassExpr porteous_degeneracy_class();

// Linear substitution of every generator by its table row; the opaque R^1
// coefficient is carried along unexpanded.
VirtualDivisorClass pushforward_series(const BaseClassExpr& x, const SeriesPushforwardTable& table);

// The full pipeline at (15, 4, 16), cross-checked against the factored
// constants; any mismatch is a hard failure.
VirtualDivisorClass virtual_divisor_class();

// 31020 * (3127/470 lambda - (d0p + d0pp) - 3487/1880 d0ram).
FactoredClass virtual_divisor_factored();

// Subtracts order * N * d0pp (the correction lives upstairs on the
// degree-N cover and is pushed forward); with downstairs = true the
// subtraction is order * d0pp instead.  Only the Wirtinger component
// ("d0pp") degenerates.
VirtualDivisorClass degeneration_correction(const VirtualDivisorClass& v, std::string_view component,
                                            long long order, const SeriesPushforwardTable& table,
                                            bool downstairs = false);

}  // namespace prymcalc
