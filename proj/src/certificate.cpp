#include "prymcalc/certificate.hpp"

#include "prymcalc/porteous.hpp"

#include <array>
#include <stdexcept>

namespace prymcalc {

BignessCertificate solve_combination(const PrymDivisorClass& d1, const PrymDivisorClass& d2,
                                     std::pair<Rational, Rational> target_boundary) {
    if (d1.genus != d2.genus)
        throw std::invalid_argument("genus mismatch between divisor classes");

    BignessCertificate cert;
    cert.genus = d1.genus;
    cert.d1 = d1;
    cert.d2 = d2;

    const auto& [t1, t2] = target_boundary;
    // Rows: (coefficient in d1, coefficient in d2, required value).
    const std::array<std::array<Rational, 3>, 3> rows = {{
        {d1.d0p, d2.d0p, t1},
        {d1.d0pp, d2.d0pp, t1},
        {d1.d0ram, d2.d0ram, t2},
    }};

    std::size_t pi = 0, pj = 0;
    Rational det;
    for (std::size_t i = 0; i < 3 && det.is_zero(); ++i)
        for (std::size_t j = i + 1; j < 3 && det.is_zero(); ++j) {
            det = rows[i][0] * rows[j][1] - rows[j][0] * rows[i][1];
            pi = i;
            pj = j;
        }
    if (det.is_zero())
        throw std::domain_error("degenerate divisor pair: proportional boundary parts");

    cert.beta = (rows[pi][2] * rows[pj][1] - rows[pj][2] * rows[pi][1]) / det;
    cert.gamma = (rows[pi][0] * rows[pj][2] - rows[pj][0] * rows[pi][2]) / det;

    bool consistent = true;
    for (const auto& row : rows)
        if (cert.beta * row[0] + cert.gamma * row[1] != row[2])
            consistent = false;

    cert.epsilon = cert.beta * d1.lambda + cert.gamma * d2.lambda;
    cert.residual_lambda = Rational(13) - cert.epsilon;

    if (!consistent)
        cert.reason = "boundary system infeasible: no exact (beta, gamma) matches all three coefficients";
    else if (cert.beta.sign() <= 0)
        cert.reason = "beta is not positive";
    else if (cert.gamma.sign() <= 0)
        cert.reason = "gamma is not positive";
    else if (!(cert.epsilon < Rational(13)))
        cert.reason = "epsilon is not below 13";
    else if (cert.genus > 23)
        cert.reason = "genus above 23: higher boundary coefficients unchecked";
    cert.verdict = cert.reason.empty();
    return cert;
}

BignessCertificate verify_general_type(int g, const PrymDivisorClass& d1, const PrymDivisorClass& d2) {
    if (g > 23)
        throw std::domain_error("genus above 23: higher boundary coefficients must be checked");
    if (d1.genus != g || d2.genus != g)
        throw std::invalid_argument("divisor classes are not at the requested genus");
    PrymDivisorClass a = d1, b = d2;
    a.normalize();
    b.normalize();
    if (!a.boundary_is_zero() || !b.boundary_is_zero())
        throw std::invalid_argument("inputs must be supported on lambda, d0p, d0pp, d0ram only");
    return solve_combination(d1, d2, {Rational(-2), Rational(-3)});
}

bool recheck_certificate(const BignessCertificate& cert, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    if (cert.beta.sign() <= 0)
        return fail("beta is not positive");
    if (cert.gamma.sign() <= 0)
        return fail("gamma is not positive");
    if (!(cert.epsilon < Rational(13)))
        return fail("epsilon is not below 13");
    if (cert.genus > 23)
        return fail("genus above 23");
    if (cert.residual_lambda != Rational(13) - cert.epsilon)
        return fail("residual_lambda does not equal 13 - epsilon");
    // With the inputs present, replay the linear identities.
    PrymDivisorClass zero;
    zero.genus = cert.genus;
    if (!(cert.d1 == zero && cert.d2 == zero)) {
        const Rational combo_d0p = cert.beta * cert.d1.d0p + cert.gamma * cert.d2.d0p;
        const Rational combo_d0pp = cert.beta * cert.d1.d0pp + cert.gamma * cert.d2.d0pp;
        const Rational combo_ram = cert.beta * cert.d1.d0ram + cert.gamma * cert.d2.d0ram;
        const Rational combo_lambda = cert.beta * cert.d1.lambda + cert.gamma * cert.d2.lambda;
        if (combo_d0p != Rational(-2) || combo_d0pp != Rational(-2) || combo_ram != Rational(-3))
            return fail("stored inputs do not reconstruct the boundary targets");
        if (combo_lambda != cert.epsilon)
            return fail("stored inputs do not reconstruct epsilon");
    }
    if (why)
        why->clear();
    return true;
}

PrymDivisorClass divisor_15_2() {
    PrymDivisorClass d;
    d.genus = 15;
    d.lambda = Rational(5808);
    d.d0p = Rational(-924);
    d.d0pp = Rational(-924);
    d.d0ram = Rational(-990);
    return d;
}

PrymDivisorClass divisor_15_virtual() { return virtual_divisor_class().numeric_part; }

}  // namespace prymcalc
