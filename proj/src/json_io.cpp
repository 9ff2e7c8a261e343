#include "prymcalc/json_io.hpp"

#include <stdexcept>

namespace prymcalc {

static Json rat(const Rational& r) { return r.to_string(); }

static Rational rat_from(const Json& j, const char* field) {
    if (!j.contains(field))
        return Rational(0);
    return Rational::parse(j.at(field).get<std::string>());
}

Json to_json(const PrymDivisorClass& c) {
    Json j;
    j["genus"] = c.genus;
    j["lambda"] = rat(c.lambda);
    j["d0p"] = rat(c.d0p);
    j["d0pp"] = rat(c.d0pp);
    j["d0ram"] = rat(c.d0ram);
    Json b = Json::object();
    for (const auto& [key, coeff] : c.boundary)
        if (!coeff.is_zero())
            b[key] = rat(coeff);
    if (!b.empty())
        j["boundary"] = b;
    return j;
}

PrymDivisorClass prym_class_from_json(const Json& j) {
    PrymDivisorClass c;
    c.genus = j.at("genus").get<int>();
    c.lambda = rat_from(j, "lambda");
    c.d0p = rat_from(j, "d0p");
    c.d0pp = rat_from(j, "d0pp");
    c.d0ram = rat_from(j, "d0ram");
    if (j.contains("boundary"))
        for (const auto& [key, v] : j.at("boundary").items())
            c.boundary[key] = Rational::parse(v.get<std::string>());
    c.normalize();
    c.validate();
    return c;
}

Json to_json(const FiberCensus& c) {
    Json j;
    j["genus"] = c.genus;
    j["d0p"] = c.count_d0p.to_string();
    j["d0pp"] = c.count_d0pp.to_string();
    j["d0ram"] = c.count_d0ram.to_string();
    return j;
}

Json to_json(const DimChainReport& r) {
    Json j;
    j["k"] = r.k;
    j["r"] = r.r;
    j["genus"] = r.genus;
    Json chain = Json::array();
    for (std::size_t i = 0; i < r.chain.size(); ++i)
        chain.push_back(Json::array({static_cast<long long>(i), r.chain[i]}));
    j["chain"] = chain;
    j["surjective"] = r.surjective;
    return j;
}

Json to_json(const SlopeReport& r) {
    Json j;
    j["genus"] = r.genus;
    Json checks = Json::array();
    for (const auto& chk : r.checks) {
        Json c;
        c["coefficient"] = chk.coefficient;
        c["bound"] = rat(chk.bound);
        if (chk.ratio)
            c["ratio"] = rat(*chk.ratio);
        c["verdict"] = chk.verdict == SlopeVerdict::Pass     ? "pass"
                       : chk.verdict == SlopeVerdict::Fail   ? "fail"
                                                             : "not applicable";
        checks.push_back(c);
    }
    j["checks"] = checks;
    j["all_pass"] = r.all_pass;
    return j;
}

Json to_json(const SurfaceInvariants& s) {
    Json j;
    j["polynomial"] = s.hilbert_poly.to_string();
    j["degree"] = s.degree;
    j["chi"] = s.chi_O;
    j["p_g"] = s.p_g;
    j["q"] = s.q;
    if (s.K_squared)
        j["K2"] = *s.K_squared;
    return j;
}

Json to_json(const GradedFreeResolution& r) {
    Json j;
    j["ambient"] = r.ambient_dim;
    Json terms = Json::array();
    for (const auto& t : r.terms) {
        Json jt;
        jt["index"] = t.index;
        jt["twists"] = t.twists;
        terms.push_back(jt);
    }
    j["terms"] = terms;
    return j;
}

GradedFreeResolution resolution_from_json(const Json& j) {
    GradedFreeResolution r;
    r.ambient_dim = j.at("ambient").get<int>();
    for (const auto& jt : j.at("terms")) {
        GradedFreeResolution::Term t;
        t.index = jt.at("index").get<int>();
        t.twists = jt.at("twists").get<std::vector<int>>();
        r.terms.push_back(std::move(t));
    }
    r.validate();
    return r;
}

Json to_json(const BignessCertificate& c) {
    Json j;
    j["beta"] = rat(c.beta);
    j["gamma"] = rat(c.gamma);
    j["epsilon"] = rat(c.epsilon);
    j["residual_lambda"] = rat(c.residual_lambda);
    j["genus"] = c.genus;
    j["verdict"] = c.verdict;
    if (!c.reason.empty())
        j["reason"] = c.reason;
    Json inputs;
    inputs["d1"] = to_json(c.d1);
    inputs["d2"] = to_json(c.d2);
    j["inputs"] = inputs;
    return j;
}

BignessCertificate certificate_from_json(const Json& j) {
    BignessCertificate c;
    c.beta = rat_from(j, "beta");
    c.gamma = rat_from(j, "gamma");
    c.epsilon = rat_from(j, "epsilon");
    c.residual_lambda = rat_from(j, "residual_lambda");
    c.genus = j.at("genus").get<int>();
    c.verdict = j.at("verdict").get<bool>();
    if (j.contains("reason"))
        c.reason = j.at("reason").get<std::string>();
    c.d1.genus = c.genus;
    c.d2.genus = c.genus;
    if (j.contains("inputs")) {
        c.d1 = prym_class_from_json(j.at("inputs").at("d1"));
        c.d2 = prym_class_from_json(j.at("inputs").at("d2"));
    }
    return c;
}

Json virtual_class_to_json(const VirtualDivisorClass& v, const FactoredClass& f) {
    Json j;
    j["expanded"] = to_json(v.numeric_part);
    Json fact;
    fact["scale"] = rat(f.scale);
    fact["lambda"] = rat(f.lambda);
    fact["d0p"] = rat(f.d0p);
    fact["d0pp"] = rat(f.d0pp);
    fact["d0ram"] = rat(f.d0ram);
    j["factored"] = fact;
    j["d_term"] = rat(v.d_multiple);
    return j;
}

}  // namespace prymcalc
