#include "prymcalc/picard.hpp"

#include <set>
#include <stdexcept>

namespace prymcalc {

void ModuliDivisorClass::normalize() {
    for (auto it = delta.begin(); it != delta.end();)
        it = it->second.is_zero() ? delta.erase(it) : std::next(it);
}

void ModuliDivisorClass::validate() const {
    if (genus < 2)
        throw std::invalid_argument("genus must be at least 2");
    for (const auto& [i, c] : delta)
        if (i < 0 || i > genus / 2)
            throw std::invalid_argument("delta index " + std::to_string(i) + " out of range for genus " +
                                        std::to_string(genus));
}

ModuliDivisorClass operator+(const ModuliDivisorClass& a, const ModuliDivisorClass& b) {
    if (a.genus != b.genus)
        throw std::invalid_argument("genus mismatch");
    ModuliDivisorClass r = a;
    r.lambda += b.lambda;
    for (const auto& [i, c] : b.delta)
        r.delta[i] += c;
    r.normalize();
    return r;
}

ModuliDivisorClass operator*(const Rational& s, const ModuliDivisorClass& c) {
    ModuliDivisorClass r = c;
    r.lambda = s * r.lambda;
    for (auto& [i, v] : r.delta)
        v = s * v;
    r.normalize();
    return r;
}

bool operator==(const ModuliDivisorClass& a, const ModuliDivisorClass& b) {
    ModuliDivisorClass x = a, y = b;
    x.normalize();
    y.normalize();
    return x.genus == y.genus && x.lambda == y.lambda && x.delta == y.delta;
}

std::string boundary_key_plain(int j) { return std::to_string(j); }

std::string boundary_key_mixed(int i, int j) {
    if (i > j)
        std::swap(i, j);
    return std::to_string(i) + ":" + std::to_string(j);
}

void PrymDivisorClass::normalize() {
    for (auto it = boundary.begin(); it != boundary.end();)
        it = it->second.is_zero() ? boundary.erase(it) : std::next(it);
}

void PrymDivisorClass::validate() const {
    if (genus < 2)
        throw std::invalid_argument("genus must be at least 2");
    for (const auto& [key, c] : boundary) {
        auto colon = key.find(':');
        if (colon == std::string::npos) {
            int j = std::stoi(key);
            if (j < 1 || j > genus - 1 || key != boundary_key_plain(j))
                throw std::invalid_argument("bad boundary key \"" + key + "\" for genus " + std::to_string(genus));
        } else {
            int i = std::stoi(key.substr(0, colon));
            int j = std::stoi(key.substr(colon + 1));
            if (i < 1 || i > j || i + j != genus || key != boundary_key_mixed(i, j))
                throw std::invalid_argument("bad boundary key \"" + key + "\" for genus " + std::to_string(genus));
        }
    }
}

PrymDivisorClass operator+(const PrymDivisorClass& a, const PrymDivisorClass& b) {
    if (a.genus != b.genus)
        throw std::invalid_argument("genus mismatch");
    PrymDivisorClass r = a;
    r.lambda += b.lambda;
    r.d0p += b.d0p;
    r.d0pp += b.d0pp;
    r.d0ram += b.d0ram;
    for (const auto& [k, c] : b.boundary)
        r.boundary[k] += c;
    r.normalize();
    return r;
}

PrymDivisorClass operator-(const PrymDivisorClass& a, const PrymDivisorClass& b) {
    return a + Rational(-1) * b;
}

PrymDivisorClass operator*(const Rational& s, const PrymDivisorClass& c) {
    PrymDivisorClass r = c;
    r.lambda = s * r.lambda;
    r.d0p = s * r.d0p;
    r.d0pp = s * r.d0pp;
    r.d0ram = s * r.d0ram;
    for (auto& [k, v] : r.boundary)
        v = s * v;
    r.normalize();
    return r;
}

bool operator==(const PrymDivisorClass& a, const PrymDivisorClass& b) {
    PrymDivisorClass x = a, y = b;
    x.normalize();
    y.normalize();
    return x.genus == y.genus && x.lambda == y.lambda && x.d0p == y.d0p && x.d0pp == y.d0pp &&
           x.d0ram == y.d0ram && x.boundary == y.boundary;
}

// The components over Delta_i, i >= 1, as a set: when i = g-i the two
// one-side-nontrivial families coincide, so the set collapses.
static std::set<std::string> component_keys(int genus, int i) {
    return {boundary_key_plain(i), boundary_key_plain(genus - i), boundary_key_mixed(i, genus - i)};
}

PrymDivisorClass pullback_forgetful(const ModuliDivisorClass& c) {
    c.validate();
    PrymDivisorClass r;
    r.genus = c.genus;
    r.lambda = c.lambda;
    for (const auto& [i, coeff] : c.delta) {
        if (i == 0) {
            r.d0p += coeff;
            r.d0pp += coeff;
            r.d0ram += Rational(2) * coeff;
        } else {
            for (const auto& key : component_keys(c.genus, i))
                r.boundary[key] += coeff;
        }
    }
    r.normalize();
    return r;
}

ModuliDivisorClass pushforward_forgetful(const PrymDivisorClass& c) {
    c.validate();
    if (!c.boundary_is_zero())
        throw std::domain_error(
            "unsupported pushforward: no published multiplicities for higher boundary components");
    const long long g = c.genus;
    ModuliDivisorClass r;
    r.genus = c.genus;
    r.lambda = Rational(pow2(2 * g) - Integer(1)) * c.lambda;
    Rational d0 = Rational(Integer(2) * (pow2(2 * g - 2) - Integer(1))) * c.d0p + c.d0pp +
                  Rational(pow2(2 * g - 2)) * c.d0ram;
    if (!d0.is_zero())
        r.delta[0] = d0;
    return r;
}

PrymDivisorClass prym_canonical_class(int g) {
    if (g < 4)
        throw std::invalid_argument("canonical class requires genus at least 4");
    PrymDivisorClass k;
    k.genus = g;
    k.lambda = Rational(13);
    k.d0p = Rational(-2);
    k.d0pp = Rational(-2);
    k.d0ram = Rational(-3);
    for (int i = 1; i <= g / 2; ++i) {
        Rational coeff = (i == 1) ? Rational(-3) : Rational(-2);
        for (const auto& key : component_keys(g, i))
            k.boundary[key] = coeff;
    }
    return k;
}

FiberCensus boundary_fiber_census(int g) {
    if (g < 2)
        throw std::invalid_argument("census requires genus at least 2");
    FiberCensus c;
    c.genus = g;
    c.count_d0p = Integer(2) * (pow2(2LL * g - 2) - Integer(1));
    c.count_d0pp = Integer(1);
    c.count_d0ram = pow2(2LL * g - 2);
    return c;
}

static SlopeCheck make_check(const std::string& name, const Rational& a, const Rational& stored_coeff,
                             const Rational& bound) {
    SlopeCheck chk;
    chk.coefficient = name;
    chk.bound = bound;
    Rational b = -stored_coeff;
    if (b.sign() <= 0) {
        chk.verdict = SlopeVerdict::NotApplicable;
        return chk;
    }
    chk.ratio = a / b;
    chk.verdict = (*chk.ratio < bound) ? SlopeVerdict::Pass : SlopeVerdict::Fail;
    return chk;
}

SlopeReport slope_report(const PrymDivisorClass& d) {
    d.validate();
    SlopeReport rep;
    rep.genus = d.genus;
    const Rational a = d.lambda;
    const Rational half(13, 2), third(13, 3);
    rep.checks.push_back(make_check("d0p", a, d.d0p, half));
    rep.checks.push_back(make_check("d0pp", a, d.d0pp, half));
    rep.checks.push_back(make_check("d0ram", a, d.d0ram, third));
    if (d.genus > 23) {
        const std::set<std::string> tight = {boundary_key_plain(1), boundary_key_plain(d.genus - 1),
                                             boundary_key_mixed(1, d.genus - 1)};
        for (const auto& [key, coeff] : d.boundary)
            rep.checks.push_back(make_check(key, a, coeff, tight.count(key) ? third : half));
    }
    rep.all_pass = true;
    for (const auto& chk : rep.checks)
        if (chk.verdict == SlopeVerdict::Fail)
            rep.all_pass = false;
    return rep;
}

}  // namespace prymcalc
