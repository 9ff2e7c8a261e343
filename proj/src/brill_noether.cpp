#include "prymcalc/brill_noether.hpp"

#include <stdexcept>
#include <string>

namespace prymcalc {

void BNParams::validate() const {
    if (g < 2 || r < 0 || d < 0)
        throw std::invalid_argument("invalid series parameters (g, r, d) = (" + std::to_string(g) + ", " +
                                    std::to_string(r) + ", " + std::to_string(d) + ")");
}

long long rho(const BNParams& p) {
    p.validate();
    return p.g - (p.r + 1) * (p.g - p.d + p.r);
}

Integer series_count(const BNParams& p) {
    if (rho(p) != 0)
        throw std::domain_error("count formula requires rho = 0");
    const long long base = p.g - p.d + p.r;  // positive whenever rho = 0
    Integer num = factorial(p.g);
    for (long long i = 1; i <= p.r; ++i)
        num *= factorial(i);
    Integer den(1);
    for (long long i = 0; i <= p.r; ++i)
        den *= factorial(base + i);
    return div_exact(num, den);
}

BNParams serre_dual(const BNParams& p) {
    p.validate();
    BNParams q{p.g, p.g - p.d + p.r - 1, 2 * p.g - 2 - p.d};
    if (q.r < 0)
        throw std::domain_error("Serre dual has negative projective dimension");
    q.validate();
    return q;
}

long long riemann_roch_h0(long long g, long long d, long long h1) {
    if (h1 < 0)
        throw std::invalid_argument("negative h^1");
    long long h0 = d - g + 1 + h1;
    if (h0 < 0)
        throw std::domain_error("inconsistent Riemann-Roch input: negative h^0");
    return h0;
}

std::pair<long long, long long> mult_map_dimension_balance(long long g, long long r, long long d,
                                                           long long h0_twist) {
    if (rho(BNParams{g, r, d}) != 0)
        throw std::domain_error("dimension balance requires rho = 0");
    if (h0_twist < 0)
        throw std::invalid_argument("negative section count");
    long long lhs = (r + 1) * (r + 2) / 2 + h0_twist * (h0_twist + 1) / 2;
    long long rhs = 2 * d - g + 1;
    return {lhs, rhs};
}

DimChainReport petri_chain(long long k, long long r) {
    if (k < 3)
        throw std::invalid_argument("pencil degree k must be at least 3");
    if (r < 1)
        throw std::invalid_argument("r must be at least 1");
    DimChainReport rep;
    rep.k = k;
    rep.r = r;
    rep.genus = (k - 1) * (r + 1);
    for (long long j = 0; j <= r + 1; ++j)
        rep.chain.push_back((k - 1) * (r + 1 - j));
    for (long long j = 0; j <= r; ++j) {
        long long middle = 2 * rep.chain[static_cast<std::size_t>(j)];
        long long kernel = rep.chain[static_cast<std::size_t>(j + 1)];
        long long target = (k - 1) * (r + 2 - j);  // value one step up the chain
        rep.surjective.push_back(middle - kernel == target);
    }
    return rep;
}

WirtingerJump wirtinger_jump(long long r) {
    if (r < 1)
        throw std::invalid_argument("r must be at least 1");
    WirtingerJump w;
    w.boundary_h0 = r;  // h^0 on the normalization is r+1; one gluing condition
    w.generic_h0 = 2;
    w.jump = w.boundary_h0 - w.generic_h0;
    w.has_jump = w.jump > 0;
    return w;
}

}  // namespace prymcalc
