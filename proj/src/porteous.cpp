#include "prymcalc/porteous.hpp"

#include "prymcalc/brill_noether.hpp"

#include <stdexcept>

namespace prymcalc {

static PrymDivisorClass named_class(int genus, Rational lambda, Rational d0p, Rational d0pp, Rational d0ram) {
    PrymDivisorClass c;
    c.genus = genus;
    c.lambda = std::move(lambda);
    c.d0p = std::move(d0p);
    c.d0pp = std::move(d0pp);
    c.d0ram = std::move(d0ram);
    return c;
}

const SeriesPushforwardTable& SeriesPushforwardTable::standard_15_4_16() {
    static const SeriesPushforwardTable table = [] {
        SeriesPushforwardTable t;
        t.genus = 15;
        t.degree = series_count(BNParams{15, 4, 16});  // 6006
        const Rational n(t.degree);
        t.rows[BG_Lambda] = named_class(15, n, 0, 0, 0);
        t.rows[BG_D0p] = named_class(15, 0, n, 0, 0);
        t.rows[BG_D0pp] = named_class(15, 0, 0, n, 0);
        t.rows[BG_D0ram] = named_class(15, 0, 0, 0, n);
        t.rows[BG_A] = named_class(15, -146784, 20856, 20856, 41712);
        t.rows[BG_B] = named_class(15, 4224, 264, 264, 528);
        t.rows[BG_C] = named_class(15, -48279, 6930, 6930, 13860);
        return t;
    }();
    return table;
}

PrymDivisorClass FactoredClass::expand(int genus) const {
    return named_class(genus, scale * lambda, scale * d0p, scale * d0pp, scale * d0ram);
}

BaseClassExpr sym2_c1(const BaseClassExpr& c1, long long rank) {
    if (rank < 0)
        throw std::invalid_argument("negative rank");
    return Rational(rank + 1) * c1;
}

BaseClassExpr porteous_degeneracy_class() {
    auto [lhs, rhs] = mult_map_dimension_balance(15, 4, 16, 2);
    if (lhs != rhs)
        throw std::logic_error("Porteous requires equal ranks");
    return c1_pushforward_bundle(BundleKind::SquaredSeries) -
           sym2_c1(c1_pushforward_bundle(BundleKind::PlainSeries), 5) -
           sym2_c1(c1_pushforward_bundle(BundleKind::TwistedSeries), 2);
}

VirtualDivisorClass pushforward_series(const BaseClassExpr& x, const SeriesPushforwardTable& table) {
    VirtualDivisorClass out;
    out.numeric_part.genus = table.genus;
    out.d_multiple = x.coeff(BG_D);
    for (std::size_t g = 0; g < BG_Count; ++g) {
        const auto gen = static_cast<BaseGen>(g);
        if (gen == BG_D || x.coeff(gen).is_zero())
            continue;
        auto row = table.rows.find(gen);
        if (row == table.rows.end())
            throw std::domain_error("generator missing from pushforward table: " + base_gen_name(gen));
        out.numeric_part = out.numeric_part + x.coeff(gen) * row->second;
    }
    return out;
}

VirtualDivisorClass virtual_divisor_class() {
    VirtualDivisorClass v =
        pushforward_series(porteous_degeneracy_class(), SeriesPushforwardTable::standard_15_4_16());
    const FactoredClass f = virtual_divisor_factored();
    if (!(v.numeric_part == f.expand(15)) || v.d_multiple != Rational(-3))
        throw std::runtime_error("virtual class pipeline disagrees with its factored form");
    return v;
}

FactoredClass virtual_divisor_factored() {
    FactoredClass f;
    f.scale = Rational(31020);
    f.lambda = Rational(3127, 470);
    f.d0p = Rational(-1);
    f.d0pp = Rational(-1);
    f.d0ram = Rational(-3487, 1880);
    return f;
}

VirtualDivisorClass degeneration_correction(const VirtualDivisorClass& v, std::string_view component,
                                            long long order, const SeriesPushforwardTable& table,
                                            bool downstairs) {
    if (component != "d0pp")
        throw std::invalid_argument("unknown degeneration component: " + std::string(component));
    if (order < 0)
        throw std::invalid_argument("negative degeneration order");
    VirtualDivisorClass out = v;
    Rational step = downstairs ? Rational(order) : Rational(order) * Rational(table.degree);
    out.numeric_part.d0pp -= step;
    return out;
}

}  // namespace prymcalc
