#include "prymcalc/resolution.hpp"

#include <stdexcept>
#include <string>

namespace prymcalc {

void GradedFreeResolution::validate() const {
    if (ambient_dim < 1)
        throw std::invalid_argument("ambient projective space must have dimension >= 1");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].index != static_cast<int>(i))
            throw std::invalid_argument("homological indices must be contiguous from 0");
        if (terms[i].twists.empty())
            throw std::invalid_argument("resolution term without summands");
    }
}

const GradedFreeResolution& pfaffian_resolution() {
    static const GradedFreeResolution res = [] {
        GradedFreeResolution r;
        r.ambient_dim = 5;
        r.terms = {{0, std::vector<int>(7, -3)}, {1, std::vector<int>(7, -4)}, {2, {-7}}};
        return r;
    }();
    return res;
}

const GradedFreeResolution& builtin_resolution(std::string_view name) {
    if (name == "pfaffian_14_6")
        return pfaffian_resolution();
    throw std::invalid_argument("unknown builtin resolution: " + std::string(name));
}

RationalPolynomial hilbert_polynomial_of_quotient(const GradedFreeResolution& res) {
    res.validate();
    const int n = res.ambient_dim;
    RationalPolynomial p = binomial_polynomial(n, n);  // chi of the ambient space
    for (const auto& term : res.terms) {
        const Rational sign = (term.index % 2 == 0) ? Rational(-1) : Rational(1);
        for (int twist : term.twists)
            p = p + sign * binomial_polynomial(twist + n, n);
    }
    return p;
}

// h^0 of O(m) on projective n-space.
static Integer line_sections(long long m, int n) {
    return m >= 0 ? binomial(Integer(m + n), n) : Integer(0);
}

Integer ideal_section_count(const GradedFreeResolution& res, long long twist) {
    res.validate();
    const int n = res.ambient_dim;
    Integer total(0);
    for (const auto& term : res.terms) {
        for (int tw : term.twists) {
            Integer h0 = line_sections(twist + tw, n);
            if (term.index >= 1 && !h0.is_zero())
                throw std::domain_error("section-count guard: resolution term at index " +
                                        std::to_string(term.index) + " has sections at twist " +
                                        std::to_string(twist));
            total += (term.index % 2 == 0) ? h0 : -h0;
        }
    }
    return total;
}

Integer quotient_section_count(const GradedFreeResolution& res, long long twist) {
    const int n = res.ambient_dim;
    Integer ideal = ideal_section_count(res, twist);
    for (const auto& term : res.terms)
        if (term.index == n - 1)
            for (int tw : term.twists)
                if (twist + tw <= -(n + 1))
                    throw std::domain_error("section-count guard: h^1 of the ideal not derivably zero at twist " +
                                            std::to_string(twist));
    return line_sections(twist, n) - ideal;
}

SurfaceInvariants surface_invariants(const GradedFreeResolution& res, bool canonical_embedding) {
    SurfaceInvariants s;
    s.hilbert_poly = hilbert_polynomial_of_quotient(res);
    if (s.hilbert_poly.degree() != 2)
        throw std::domain_error("quotient is not a surface: Hilbert polynomial has degree " +
                                std::to_string(s.hilbert_poly.degree()));
    Rational chi = s.hilbert_poly.coeff(0);
    Rational deg = Rational(2) * s.hilbert_poly.leading_coeff();
    if (!chi.is_integer() || !deg.is_integer())
        throw std::domain_error("non-integral surface invariants");
    s.chi_O = chi.numerator().to_int64();
    s.degree = deg.numerator().to_int64();
    s.p_g = quotient_section_count(res, 1).to_int64();
    s.q = s.p_g - (s.chi_O - 1);
    if (canonical_embedding)
        s.K_squared = s.degree;
    return s;
}

AdjoinedCurve adjunction_curve(long long k_squared) {
    if (k_squared < 0)
        throw std::invalid_argument("negative self-intersection");
    return {k_squared + 1, k_squared};
}

}  // namespace prymcalc
