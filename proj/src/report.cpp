// The expected-value constants live here, in one table, so any drift is
// auditable in a single place.  Every entry recomputes its value through
// the public API and compares the rendered strings exactly.
#include "prymcalc/report.hpp"

#include "prymcalc/brill_noether.hpp"
#include "prymcalc/certificate.hpp"
#include "prymcalc/fiber_algebra.hpp"
#include "prymcalc/picard.hpp"
#include "prymcalc/porteous.hpp"
#include "prymcalc/resolution.hpp"

#include <functional>
#include <sstream>

namespace prymcalc {

namespace {

std::string render(const PrymDivisorClass& c) {
    std::ostringstream os;
    os << c.lambda.to_string() << "*lambda";
    auto term = [&os](const Rational& v, const std::string& name) {
        if (v.is_zero())
            return;
        os << (v.sign() < 0 ? " - " : " + ");
        Rational mag = v.sign() < 0 ? -v : v;
        if (mag == Rational(1))
            os << name;
        else
            os << mag.to_string() << "*" << name;
    };
    term(c.d0p, "d0p");
    term(c.d0pp, "d0pp");
    term(c.d0ram, "d0ram");
    for (const auto& [k, v] : c.boundary)
        term(v, "delta[" + k + "]");
    return os.str();
}

std::string render(const ModuliDivisorClass& c) {
    std::ostringstream os;
    os << c.lambda.to_string() << "*lambda";
    for (const auto& [i, v] : c.delta) {
        os << (v.sign() < 0 ? " - " : " + ");
        Rational mag = v.sign() < 0 ? -v : v;
        if (mag == Rational(1))
            os << "delta" << i;
        else
            os << mag.to_string() << "*delta" << i;
    }
    return os.str();
}

ModuliDivisorClass moduli_delta0(int g) {
    ModuliDivisorClass c;
    c.genus = g;
    c.delta[0] = Rational(1);
    return c;
}

ModuliDivisorClass moduli_lambda(int g) {
    ModuliDivisorClass c;
    c.genus = g;
    c.lambda = Rational(1);
    return c;
}

std::string slope_ratio(const PrymDivisorClass& d, const std::string& coeff) {
    for (const auto& chk : slope_report(d).checks)
        if (chk.coefficient == coeff && chk.ratio)
            return chk.ratio->to_string() + (chk.verdict == SlopeVerdict::Pass ? " pass" : " fail");
    return "not applicable";
}

}  // namespace

PaperReport run_paper_report() {
    PaperReport rep;
    auto add = [&rep](const std::string& name, const std::string& note, const std::string& expected,
                      const std::function<std::string()>& compute) {
        ReportEntry e;
        e.name = name;
        e.note = note;
        e.expected = expected;
        try {
            e.computed = compute();
        } catch (const std::exception& ex) {
            e.computed = std::string("error: ") + ex.what();
        }
        e.match = (e.computed == e.expected);
        rep.entries.push_back(std::move(e));
    };

    // --- forgetful covering and boundary calculus -------------------------
    add("pullback.delta0", "pullback of the irreducible boundary class, genus 15",
        "0*lambda + d0p + d0pp + 2*d0ram", [] { return render(pullback_forgetful(moduli_delta0(15))); });
    add("pullback.lambda", "pullback of the Hodge class", "1*lambda",
        [] { return render(pullback_forgetful(moduli_lambda(15))); });
    add("pushforward.d0pp", "pushforward of the Wirtinger component, genus 15", "0*lambda + delta0", [] {
        PrymDivisorClass c;
        c.genus = 15;
        c.d0pp = Rational(1);
        return render(pushforward_forgetful(c));
    });
    add("pushforward.d0ram", "pushforward of the ramification component, genus 15",
        "0*lambda + 268435456*delta0", [] {
            PrymDivisorClass c;
            c.genus = 15;
            c.d0ram = Rational(1);
            return render(pushforward_forgetful(c));
        });
    add("canonical.lambda", "lambda coefficient of the canonical class", "13",
        [] { return prym_canonical_class(15).lambda.to_string(); });
    add("canonical.d0ram", "ramification coefficient of the canonical class", "-3",
        [] { return prym_canonical_class(15).d0ram.to_string(); });
    add("canonical.delta1", "coefficient of the first higher boundary key", "-3",
        [] { return prym_canonical_class(15).boundary.at(boundary_key_plain(1)).to_string(); });
    add("canonical.delta2", "coefficient of the second higher boundary key", "-2",
        [] { return prym_canonical_class(15).boundary.at(boundary_key_plain(2)).to_string(); });
    add("census.wirtinger", "Wirtinger count over a one-nodal curve is always 1", "1",
        [] { return boundary_fiber_census(15).count_d0pp.to_string(); });
    add("census.g2", "fiber census at genus 2", "6,1,4", [] {
        FiberCensus c = boundary_fiber_census(2);
        return c.count_d0p.to_string() + "," + c.count_d0pp.to_string() + "," + c.count_d0ram.to_string();
    });
    add("census.degree15", "ramification-weighted census sums to the covering degree, genus 15",
        "1073741823", [] {
            FiberCensus c = boundary_fiber_census(15);
            return (c.count_d0p + c.count_d0pp + Integer(2) * c.count_d0ram).to_string();
        });

    // --- linear-series numerology ------------------------------------------
    add("rho.15_4_16", "expected dimension of the genus-15 series", "0",
        [] { return std::to_string(rho(BNParams{15, 4, 16})); });
    add("rho.15_5_16", "one more section forces negative rho", "-9",
        [] { return std::to_string(rho(BNParams{15, 5, 16})); });
    add("rho.15_4_15", "one less degree forces negative rho", "-5",
        [] { return std::to_string(rho(BNParams{15, 4, 15})); });
    add("count.15_4_16", "number of series on the general genus-15 curve", "6006",
        [] { return series_count(BNParams{15, 4, 16}).to_string(); });
    add("count.classical", "classical sanity counts at (2,1,2), (4,1,3), (6,2,6)", "1,2,5", [] {
        return series_count(BNParams{2, 1, 2}).to_string() + "," + series_count(BNParams{4, 1, 3}).to_string() +
               "," + series_count(BNParams{6, 2, 6}).to_string();
    });
    add("serre_dual.15_4_16", "dual series parameters", "(15, 2, 12)", [] {
        BNParams q = serre_dual(BNParams{15, 4, 16});
        return "(" + std::to_string(q.g) + ", " + std::to_string(q.r) + ", " + std::to_string(q.d) + ")";
    });
    add("rr.sections_of_square", "sections of the squared series bundle", "18",
        [] { return std::to_string(riemann_roch_h0(15, 32, 0)); });
    add("balance.generic", "multiplication-map dimension balance, generic twist", "(18, 18)", [] {
        auto [l, r] = mult_map_dimension_balance(15, 4, 16, 2);
        return "(" + std::to_string(l) + ", " + std::to_string(r) + ")";
    });
    add("balance.wirtinger", "dimension balance with the jumped twist", "(25, 18)", [] {
        auto [l, r] = mult_map_dimension_balance(15, 4, 16, 4);
        return "(" + std::to_string(l) + ", " + std::to_string(r) + ")";
    });
    add("jump.wirtinger", "section jump along the Wirtinger boundary at r = 4", "(4, 2, 2)", [] {
        WirtingerJump w = wirtinger_jump(4);
        return "(" + std::to_string(w.boundary_h0) + ", " + std::to_string(w.generic_h0) + ", " +
               std::to_string(w.jump) + ")";
    });

    // --- fiber algebra and pushforward bundles -----------------------------
    add("ch.squared_series", "Chern character of the squared series bundle", "1 + 2*cL + 2*cL^2",
        [] { return chern_character_line(Rational(2) * FiberClassExpr::cL()).to_string(); });
    add("todd.cOm", "linear Todd coefficient", "-1/2",
        [] { return todd_factor().coeff(FM_Om).to_string(); });
    add("todd.c2", "c2 Todd coefficient", "1/12", [] { return todd_factor().coeff(FM_C2).to_string(); });
    add("push.todd_combination", "fiber integral of the quadratic Todd term", "lambda", [] {
        FiberClassExpr om = FiberClassExpr::cOmega();
        return fiber_pushforward(Rational(1, 12) * (om * om + FiberClassExpr::c2Cotangent())).to_string();
    });
    add("push.cP_squared", "fiber integral of the torsion class squared", "-1/2*d0ram", [] {
        FiberClassExpr p = FiberClassExpr::cP();
        return fiber_pushforward(p * p).to_string();
    });
    add("c1.squared_series", "first Chern class of the squared pushforward", "lambda + 2*a - b",
        [] { return c1_pushforward_bundle(BundleKind::SquaredSeries).to_string(); });
    add("c1.twisted_series", "first Chern class of the twisted pushforward",
        "lambda + 1/2*a - 1/2*b + d - 1/4*d0ram",
        [] { return c1_pushforward_bundle(BundleKind::TwistedSeries).to_string(); });
    add("c1.trivial", "first Chern class of the trivial pushforward", "lambda",
        [] { return c1_pushforward_bundle(BundleKind::Trivial).to_string(); });

    // --- degeneracy class and its pushforward -------------------------------
    add("sym2.rank5", "symmetric square of the rank-5 bundle", "6*c",
        [] { return sym2_c1(BaseClassExpr::generator(BG_C), 5).to_string(); });
    add("z1.class", "degeneracy class before pushforward",
        "-2*lambda + 1/2*a + 1/2*b - 6*c - 3*d + 3/4*d0ram",
        [] { return porteous_degeneracy_class().to_string(); });
    add("sigma.row_a", "pushforward row of the a generator",
        "-146784*lambda + 20856*d0p + 20856*d0pp + 41712*d0ram",
        [] { return render(SeriesPushforwardTable::standard_15_4_16().rows.at(BG_A)); });
    add("sigma.row_lambda", "pushforward of the pulled-back Hodge class", "6006*lambda", [] {
        return render(SeriesPushforwardTable::standard_15_4_16().rows.at(BG_Lambda));
    });
    add("virtual.expanded", "virtual divisor class, expanded",
        "206382*lambda - 31020*d0p - 31020*d0pp - 115071/2*d0ram",
        [] { return render(virtual_divisor_class().numeric_part); });
    add("virtual.factored", "virtual divisor class, factored", "31020 * (3127/470, -1, -1, -3487/1880)", [] {
        FactoredClass f = virtual_divisor_factored();
        return f.scale.to_string() + " * (" + f.lambda.to_string() + ", " + f.d0p.to_string() + ", " +
               f.d0pp.to_string() + ", " + f.d0ram.to_string() + ")";
    });
    add("virtual.d_term", "coefficient of the symbolic R^1 pushforward", "-3",
        [] { return virtual_divisor_class().d_multiple.to_string(); });
    add("virtual.corrected_d0pp", "Wirtinger coefficient after the order-3 correction", "-49038", [] {
        VirtualDivisorClass v = degeneration_correction(virtual_divisor_class(), "d0pp", 3,
                                                        SeriesPushforwardTable::standard_15_4_16());
        return v.numeric_part.d0pp.to_string();
    });

    // --- slope checks -------------------------------------------------------
    add("slope.d15_2.d0p", "first divisor against the 13/2 bound", "44/7 pass",
        [] { return slope_ratio(divisor_15_2(), "d0p"); });
    add("slope.d15_2.d0ram", "first divisor against the 13/3 bound", "88/15 fail",
        [] { return slope_ratio(divisor_15_2(), "d0ram"); });
    add("slope.d15.d0p", "second divisor against the 13/2 bound", "3127/470 fail",
        [] { return slope_ratio(divisor_15_virtual(), "d0p"); });
    add("slope.d15.d0ram", "second divisor against the 13/3 bound", "12508/3487 pass",
        [] { return slope_ratio(divisor_15_virtual(), "d0ram"); });

    // --- surface example ------------------------------------------------------
    add("surface.hilbert", "Hilbert polynomial of the Pfaffian surface", "7*t^2 - 7*t + 7",
        [] { return hilbert_polynomial_of_quotient(pfaffian_resolution()).to_string(); });
    add("surface.invariants", "(degree, chi, p_g, q, K^2)", "(14, 7, 6, 0, 14)", [] {
        SurfaceInvariants s = surface_invariants(pfaffian_resolution());
        return "(" + std::to_string(s.degree) + ", " + std::to_string(s.chi_O) + ", " + std::to_string(s.p_g) +
               ", " + std::to_string(s.q) + ", " + std::to_string(*s.K_squared) + ")";
    });
    add("surface.no_quadric", "the surface lies on no quadric", "0",
        [] { return ideal_section_count(pfaffian_resolution(), 2).to_string(); });
    add("surface.ideal_twist1", "no linear forms vanish on the surface", "0",
        [] { return ideal_section_count(pfaffian_resolution(), 1).to_string(); });
    add("surface.bicanonical", "sections of the bicanonical bundle", "21",
        [] { return quotient_section_count(pfaffian_resolution(), 2).to_string(); });
    add("surface.canonical_sections", "sections of the canonical bundle", "6",
        [] { return quotient_section_count(pfaffian_resolution(), 1).to_string(); });
    add("adjunction.curve", "hyperplane-section curve (genus, degree)", "(15, 14)", [] {
        AdjoinedCurve c = adjunction_curve(14);
        return "(" + std::to_string(c.genus) + ", " + std::to_string(c.degree) + ")";
    });
    add("adjunction.two_g_minus_2", "2g - 2 of the hyperplane section", "28",
        [] { return std::to_string(2 * adjunction_curve(14).genus - 2); });

    // --- the certificate -----------------------------------------------------
    add("certificate.beta", "coefficient of the first divisor", "667/680394",
        [] { return verify_general_type(15, divisor_15_2(), divisor_15_virtual()).beta.to_string(); });
    add("certificate.gamma", "coefficient of the second divisor", "4/113399",
        [] { return verify_general_type(15, divisor_15_2(), divisor_15_virtual()).gamma.to_string(); });
    add("certificate.epsilon", "lambda coefficient of the combination", "10288/793",
        [] { return verify_general_type(15, divisor_15_2(), divisor_15_virtual()).epsilon.to_string(); });
    add("certificate.residual", "13 - epsilon", "21/793", [] {
        return verify_general_type(15, divisor_15_2(), divisor_15_virtual()).residual_lambda.to_string();
    });
    add("certificate.verdict", "the canonical class is big", "true", [] {
        return verify_general_type(15, divisor_15_2(), divisor_15_virtual()).verdict ? "true" : "false";
    });

    rep.overall = true;
    for (const auto& e : rep.entries)
        if (!e.match)
            rep.overall = false;
    return rep;
}

}  // namespace prymcalc
