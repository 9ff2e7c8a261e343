#include "prymcalc/fiber_algebra.hpp"

#include <stdexcept>

namespace prymcalc {

int fiber_monomial_degree(FiberMonomial m) {
    switch (m) {
        case FM_One: return 0;
        case FM_L:
        case FM_P:
        case FM_Om: return 1;
        default: return 2;
    }
}

std::string fiber_monomial_name(FiberMonomial m) {
    switch (m) {
        case FM_One: return "1";
        case FM_L: return "cL";
        case FM_P: return "cP";
        case FM_Om: return "cOm";
        case FM_LL: return "cL^2";
        case FM_LP: return "cL*cP";
        case FM_LOm: return "cL*cOm";
        case FM_PP: return "cP^2";
        case FM_POm: return "cP*cOm";
        case FM_OmOm: return "cOm^2";
        case FM_C2: return "c2";
        default: return "?";
    }
}

FiberClassExpr FiberClassExpr::unit() {
    FiberClassExpr e;
    e.t_[FM_One] = Rational(1);
    return e;
}
FiberClassExpr FiberClassExpr::cL() {
    FiberClassExpr e;
    e.t_[FM_L] = Rational(1);
    return e;
}
FiberClassExpr FiberClassExpr::cP() {
    FiberClassExpr e;
    e.t_[FM_P] = Rational(1);
    return e;
}
FiberClassExpr FiberClassExpr::cOmega() {
    FiberClassExpr e;
    e.t_[FM_Om] = Rational(1);
    return e;
}
FiberClassExpr FiberClassExpr::c2Cotangent() {
    FiberClassExpr e;
    e.t_[FM_C2] = Rational(1);
    return e;
}

bool FiberClassExpr::is_homogeneous(int degree) const {
    for (std::size_t m = 0; m < FM_Count; ++m)
        if (!t_[m].is_zero() && fiber_monomial_degree(static_cast<FiberMonomial>(m)) != degree)
            return false;
    return true;
}

FiberClassExpr operator+(const FiberClassExpr& a, const FiberClassExpr& b) {
    FiberClassExpr r = a;
    for (std::size_t m = 0; m < FM_Count; ++m)
        r.t_[m] += b.t_[m];
    return r;
}

FiberClassExpr operator-(const FiberClassExpr& a, const FiberClassExpr& b) {
    FiberClassExpr r = a;
    for (std::size_t m = 0; m < FM_Count; ++m)
        r.t_[m] -= b.t_[m];
    return r;
}

FiberClassExpr operator*(const Rational& s, const FiberClassExpr& a) {
    FiberClassExpr r = a;
    for (std::size_t m = 0; m < FM_Count; ++m)
        r.t_[m] = s * r.t_[m];
    return r;
}

// Product of two degree-1 generators; c2 is not a product of generators.
static FiberMonomial pair_monomial(FiberMonomial a, FiberMonomial b) {
    if (a > b)
        std::swap(a, b);
    if (a == FM_L && b == FM_L) return FM_LL;
    if (a == FM_L && b == FM_P) return FM_LP;
    if (a == FM_L && b == FM_Om) return FM_LOm;
    if (a == FM_P && b == FM_P) return FM_PP;
    if (a == FM_P && b == FM_Om) return FM_POm;
    return FM_OmOm;
}

FiberClassExpr operator*(const FiberClassExpr& a, const FiberClassExpr& b) {
    FiberClassExpr r;
    for (std::size_t i = 0; i < FM_Count; ++i) {
        if (a.t_[i].is_zero())
            continue;
        const auto mi = static_cast<FiberMonomial>(i);
        const int di = fiber_monomial_degree(mi);
        for (std::size_t j = 0; j < FM_Count; ++j) {
            if (b.t_[j].is_zero())
                continue;
            const auto mj = static_cast<FiberMonomial>(j);
            const int dj = fiber_monomial_degree(mj);
            if (di + dj > 2)
                continue;  // truncation
            Rational c = a.t_[i] * b.t_[j];
            if (mi == FM_One)
                r.t_[mj] += c;
            else if (mj == FM_One)
                r.t_[mi] += c;
            else
                r.t_[pair_monomial(mi, mj)] += c;
        }
    }
    return r;
}

bool operator==(const FiberClassExpr& a, const FiberClassExpr& b) { return a.t_ == b.t_; }

static std::string append_term(std::string out, const Rational& c, const std::string& name) {
    if (c.is_zero())
        return out;
    Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty())
        out += c.sign() < 0 ? "-" : "";
    else
        out += c.sign() < 0 ? " - " : " + ";
    if (name == "1")
        out += mag.to_string();
    else if (mag == Rational(1))
        out += name;
    else
        out += mag.to_string() + "*" + name;
    return out;
}

std::string FiberClassExpr::to_string() const {
    std::string out;
    for (std::size_t m = 0; m < FM_Count; ++m)
        out = append_term(std::move(out), t_[m], fiber_monomial_name(static_cast<FiberMonomial>(m)));
    return out.empty() ? "0" : out;
}

std::string base_gen_name(BaseGen g) {
    switch (g) {
        case BG_Lambda: return "lambda";
        case BG_A: return "a";
        case BG_B: return "b";
        case BG_C: return "c";
        case BG_D: return "d";
        case BG_D0p: return "d0p";
        case BG_D0pp: return "d0pp";
        case BG_D0ram: return "d0ram";
        default: return "?";
    }
}

BaseClassExpr BaseClassExpr::generator(BaseGen g) {
    BaseClassExpr e;
    e.c_[g] = Rational(1);
    return e;
}

BaseClassExpr operator+(const BaseClassExpr& a, const BaseClassExpr& b) {
    BaseClassExpr r = a;
    for (std::size_t g = 0; g < BG_Count; ++g)
        r.c_[g] += b.c_[g];
    return r;
}

BaseClassExpr operator-(const BaseClassExpr& a, const BaseClassExpr& b) {
    BaseClassExpr r = a;
    for (std::size_t g = 0; g < BG_Count; ++g)
        r.c_[g] -= b.c_[g];
    return r;
}

BaseClassExpr operator*(const Rational& s, const BaseClassExpr& a) {
    BaseClassExpr r = a;
    for (std::size_t g = 0; g < BG_Count; ++g)
        r.c_[g] = s * r.c_[g];
    return r;
}

bool operator==(const BaseClassExpr& a, const BaseClassExpr& b) { return a.c_ == b.c_; }

std::string BaseClassExpr::to_string() const {
    std::string out;
    for (std::size_t g = 0; g < BG_Count; ++g)
        out = append_term(std::move(out), c_[g], base_gen_name(static_cast<BaseGen>(g)));
    return out.empty() ? "0" : out;
}

FiberClassExpr chern_character_line(const FiberClassExpr& c1) {
    if (!c1.is_homogeneous(1))
        throw std::invalid_argument("chern_character_line needs a homogeneous degree-1 class");
    return FiberClassExpr::unit() + c1 + Rational(1, 2) * (c1 * c1);
}

FiberClassExpr todd_factor() {
    FiberClassExpr om = FiberClassExpr::cOmega();
    return FiberClassExpr::unit() - Rational(1, 2) * om +
           Rational(1, 12) * (om * om + FiberClassExpr::c2Cotangent());
}

BaseClassExpr fiber_pushforward(const FiberClassExpr& x) {
    // cOm^2 and c2 have no individual published images; only their Todd
    // combination integrates (to 12*lambda per unit of cOm^2 + c2).
    if (x.coeff(FM_OmOm) != x.coeff(FM_C2))
        throw std::domain_error("unpushable monomial: cOm^2 and c2 only integrate jointly");
    BaseClassExpr r;
    r.coeff(BG_Lambda) = Rational(12) * x.coeff(FM_OmOm);
    r.coeff(BG_A) = x.coeff(FM_LL);
    r.coeff(BG_B) = x.coeff(FM_LOm);
    r.coeff(BG_D0ram) = Rational(-1, 2) * x.coeff(FM_PP);
    // cL*cP and cP*cOm integrate to zero; degree <= 1 terms drop out.
    return r;
}

BaseClassExpr c1_pushforward_bundle(BundleKind kind) {
    switch (kind) {
        case BundleKind::SquaredSeries:
            return fiber_pushforward(chern_character_line(Rational(2) * FiberClassExpr::cL()) * todd_factor());
        case BundleKind::TwistedSeries:
            return fiber_pushforward(chern_character_line(FiberClassExpr::cL() + FiberClassExpr::cP()) *
                                     todd_factor()) +
                   BaseClassExpr::generator(BG_D);
        case BundleKind::PlainSeries:
            return BaseClassExpr::generator(BG_C);
        case BundleKind::Trivial:
            return fiber_pushforward(chern_character_line(FiberClassExpr()) * todd_factor());
    }
    throw std::logic_error("unreachable bundle kind");
}

}  // namespace prymcalc
