// Brill-Noether combinatorics: the expected-dimension number rho, the
// exact count of linear series when rho = 0, Serre duality on series
// parameters, Riemann-Roch bookkeeping, the Petri dimension chain of a
// pencil, and the section jump along the Wirtinger boundary.
#pragma once

#include "prymcalc/rational.hpp"

#include <utility>
#include <vector>

namespace prymcalc {

struct BNParams {
    long long g = 2;  // genus
    long long r = 0;  // projective dimension of the series
    long long d = 0;  // degree

    void validate() const;
};

// rho = g - (r+1)(g - d + r).
long long rho(const BNParams& p);

// Exact count of g^r_d series when rho = 0:
//   g! * (1! 2! ... r!) / ((g-d+r)! (g-d+r+1)! ... (g-d+2r)!).
// Evaluated in big integers with an explicit divisibility assertion.
Integer series_count(const BNParams& p);

// (g, r, d) -> (g, g-d+r-1, 2g-2-d); the dual of a series of the canonical
// bundle is the trivial series.  Rejects parameters leaving the valid range.
BNParams serre_dual(const BNParams& p);

// h^0 = d - g + 1 + h^1, with h^1 supplied by the caller.
long long riemann_roch_h0(long long g, long long d, long long h1);

// Left side: dim Sym^2 of an (r+1)-dimensional space plus dim Sym^2 of an
// h0_twist-dimensional one.  Right side: 2d - g + 1 sections of the square
// (vanishing R^1).  Requires rho = 0.
std::pair<long long, long long> mult_map_dimension_balance(long long g, long long r, long long d,
                                                           long long h0_twist);

struct DimChainReport {
    long long k = 3;
    long long r = 1;
    long long genus = 0;                // (k-1)(r+1)
    std::vector<long long> chain;       // value at j, for j = 0..r+1
    std::vector<bool> surjective;       // balance verdict at j, for j = 0..r
};

// The section dimensions (k-1)(r+1-j) of the twists omega - j*A of a
// pencil A of degree k, plus the dimension-count certificate that the
// multiplication against H^0(A) is surjective at every step j <= r:
// 2*(k-1)(r+1-j) - (k-1)(r-j) must equal (k-1)(r+2-j).
DimChainReport petri_chain(long long k, long long r);

struct WirtingerJump {
    long long boundary_h0 = 0;  // sections of the twisted series on a Wirtinger curve
    long long generic_h0 = 2;
    long long jump = 0;         // signed; meaningful only when positive
    bool has_jump = false;
};

// On the Wirtinger boundary the twisted series has h^0(normalization) - 1
// = r sections against the generic 2; for r = 4 that is a jump by two.
WirtingerJump wirtinger_jump(long long r);

}  // namespace prymcalc
