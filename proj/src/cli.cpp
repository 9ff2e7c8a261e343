#include "prymcalc/cli.hpp"

#include "prymcalc/brill_noether.hpp"
#include "prymcalc/certificate.hpp"
#include "prymcalc/json_io.hpp"
#include "prymcalc/picard.hpp"
#include "prymcalc/porteous.hpp"
#include "prymcalc/report.hpp"
#include "prymcalc/resolution.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

namespace prymcalc {

namespace {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

PrymDivisorClass load_class(const std::string& spec) {
    if (spec == "builtin:d15_2")
        return divisor_15_2();
    if (spec == "builtin:d15")
        return divisor_15_virtual();
    return prym_class_from_json(load_json_file(spec));
}

GradedFreeResolution load_resolution(const std::string& spec) {
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0)
        return builtin_resolution(spec.substr(prefix.size()));
    return resolution_from_json(load_json_file(spec));
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string verdict_str(SlopeVerdict v) {
    switch (v) {
        case SlopeVerdict::Pass: return "pass";
        case SlopeVerdict::Fail: return "fail";
        default: return "not applicable";
    }
}

void print_slope(std::ostream& out, const SlopeReport& rep, bool json) {
    if (json) {
        print_json(out, to_json(rep));
        return;
    }
    for (const auto& chk : rep.checks) {
        out << chk.coefficient << ": ";
        if (chk.ratio)
            out << chk.ratio->to_string() << " vs " << chk.bound.to_string() << " -> "
                << verdict_str(chk.verdict) << "\n";
        else
            out << verdict_str(chk.verdict) << "\n";
    }
    out << (rep.all_pass ? "all bounds satisfied" : "some bound violated") << "\n";
}

void print_certificate(std::ostream& out, const BignessCertificate& cert, bool json) {
    if (json) {
        print_json(out, to_json(cert));
        return;
    }
    out << "beta = " << cert.beta.to_string() << "\n";
    out << "gamma = " << cert.gamma.to_string() << "\n";
    out << "epsilon = " << cert.epsilon.to_string() << "\n";
    out << "residual_lambda = " << cert.residual_lambda.to_string() << "\n";
    out << "verdict: " << (cert.verdict ? "true" : "false") << "\n";
    if (!cert.reason.empty())
        out << "reason: " << cert.reason << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact divisor-class calculator for the genus-15 Prym moduli space"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit machine-readable JSON");

    long long g = 0, r = 0, d = 0, k = 0, k2 = 0;
    int census_g = 0, canonical_g = 0;
    long long correct_order = 0;
    bool downstairs = false;
    std::string hilbert_spec, d1_spec, d2_spec, verify_path, slope_spec, cert_out;

    auto* rho_cmd = app.add_subcommand("rho", "expected dimension of the space of series");
    rho_cmd->add_option("g", g)->required();
    rho_cmd->add_option("r", r)->required();
    rho_cmd->add_option("d", d)->required();

    auto* count_cmd = app.add_subcommand("count", "exact number of series when rho = 0");
    count_cmd->add_option("g", g)->required();
    count_cmd->add_option("r", r)->required();
    count_cmd->add_option("d", d)->required();

    auto* dual_cmd = app.add_subcommand("dual", "Serre-dual series parameters");
    dual_cmd->add_option("g", g)->required();
    dual_cmd->add_option("r", r)->required();
    dual_cmd->add_option("d", d)->required();

    auto* chain_cmd = app.add_subcommand("chain", "Petri dimension chain of a degree-k pencil");
    chain_cmd->add_option("k", k)->required();
    chain_cmd->add_option("r", r)->required();

    auto* census_cmd = app.add_subcommand("census", "boundary fiber census of the forgetful covering");
    census_cmd->add_option("g", census_g)->required();

    auto* canonical_cmd = app.add_subcommand("canonical", "canonical class of the Prym moduli space");
    canonical_cmd->add_option("g", canonical_g)->required();

    auto* d15_cmd = app.add_subcommand("class-d15", "virtual class of the genus-15 degeneracy divisor");
    d15_cmd->add_option("--correct-d0pp-order", correct_order,
                        "subtract this order along the Wirtinger component");
    d15_cmd->add_flag("--downstairs", downstairs, "apply the correction after pushforward");

    auto* hilbert_cmd =
        app.add_subcommand("hilbert", "Hilbert polynomial and invariants of a resolved surface");
    hilbert_cmd->add_option("resolution", hilbert_spec, "resolution JSON file or builtin:<name>")->required();

    auto* adj_cmd = app.add_subcommand("adjunction", "hyperplane-section curve of a canonical surface");
    adj_cmd->add_option("K2", k2)->required();

    auto* slope_cmd = app.add_subcommand("slope", "slope-inequality report for a divisor class");
    slope_cmd->add_option("class", slope_spec, "class JSON file, builtin:d15_2 or builtin:d15")->required();

    auto* cert_cmd = app.add_subcommand("certificate", "bigness certificate from two effective classes");
    cert_cmd->add_option("--d1", d1_spec, "first class (default builtin:d15_2)");
    cert_cmd->add_option("--d2", d2_spec, "second class (default builtin:d15)");
    cert_cmd->add_option("--verify", verify_path, "re-check a stored certificate instead of solving");
    cert_cmd->add_option("--out", cert_out, "also write the certificate JSON to this file");

    auto* report_cmd = app.add_subcommand("paper-report", "recompute all headline values and diff them");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (*rho_cmd) {
            out << rho(BNParams{g, r, d}) << "\n";
        } else if (*count_cmd) {
            out << series_count(BNParams{g, r, d}).to_string() << "\n";
        } else if (*dual_cmd) {
            BNParams q = serre_dual(BNParams{g, r, d});
            if (json)
                print_json(out, Json{{"g", q.g}, {"r", q.r}, {"d", q.d}});
            else
                out << q.g << " " << q.r << " " << q.d << "\n";
        } else if (*chain_cmd) {
            DimChainReport rep = petri_chain(k, r);
            if (json) {
                print_json(out, to_json(rep));
            } else {
                out << "genus " << rep.genus << "\n";
                for (std::size_t j = 0; j < rep.chain.size(); ++j)
                    out << "j=" << j << ": " << rep.chain[j]
                        << (j < rep.surjective.size()
                                ? (rep.surjective[j] ? "  (surjective step)" : "  (unbalanced step)")
                                : "")
                        << "\n";
            }
        } else if (*census_cmd) {
            FiberCensus c = boundary_fiber_census(census_g);
            if (json)
                print_json(out, to_json(c));
            else
                out << "d0p " << c.count_d0p.to_string() << "\nd0pp " << c.count_d0pp.to_string()
                    << "\nd0ram " << c.count_d0ram.to_string() << "\n";
        } else if (*canonical_cmd) {
            print_json(out, to_json(prym_canonical_class(canonical_g)));
        } else if (*d15_cmd) {
            VirtualDivisorClass v = virtual_divisor_class();
            if (correct_order > 0)
                v = degeneration_correction(v, "d0pp", correct_order,
                                            SeriesPushforwardTable::standard_15_4_16(), downstairs);
            print_json(out, virtual_class_to_json(v, virtual_divisor_factored()));
        } else if (*hilbert_cmd) {
            GradedFreeResolution res = load_resolution(hilbert_spec);
            SurfaceInvariants s = surface_invariants(res);
            Json j = to_json(s);
            j["ideal_sections_twist2"] = ideal_section_count(res, 2).to_string();
            j["surface_sections_twist2"] = quotient_section_count(res, 2).to_string();
            if (json) {
                print_json(out, j);
            } else {
                out << "polynomial " << s.hilbert_poly.to_string() << "\n";
                out << "degree " << s.degree << "\nchi " << s.chi_O << "\np_g " << s.p_g << "\nq " << s.q
                    << "\n";
                if (s.K_squared)
                    out << "K2 " << *s.K_squared << "\n";
                out << "h0_ideal(2) " << j["ideal_sections_twist2"].get<std::string>() << "\n";
                out << "h0_surface(2) " << j["surface_sections_twist2"].get<std::string>() << "\n";
            }
        } else if (*adj_cmd) {
            AdjoinedCurve c = adjunction_curve(k2);
            if (json)
                print_json(out, Json{{"K2", k2}, {"genus", c.genus}, {"degree", c.degree}});
            else
                out << "genus " << c.genus << "\ndegree " << c.degree << "\n";
        } else if (*slope_cmd) {
            print_slope(out, slope_report(load_class(slope_spec)), json);
        } else if (*cert_cmd) {
            if (!verify_path.empty()) {
                BignessCertificate cert = certificate_from_json(load_json_file(verify_path));
                std::string why;
                bool ok = recheck_certificate(cert, &why);
                bool reproduced = (ok == cert.verdict);
                if (json) {
                    Json j{{"stored_verdict", cert.verdict}, {"recheck", ok}, {"reproduced", reproduced}};
                    if (!why.empty())
                        j["reason"] = why;
                    print_json(out, j);
                } else {
                    out << "stored verdict: " << (cert.verdict ? "true" : "false") << ", recheck: "
                        << (ok ? "true" : "false") << (why.empty() ? "" : " (" + why + ")") << "\n";
                }
                return reproduced ? 0 : 1;
            }
            PrymDivisorClass d1 = load_class(d1_spec.empty() ? "builtin:d15_2" : d1_spec);
            PrymDivisorClass d2 = load_class(d2_spec.empty() ? "builtin:d15" : d2_spec);
            BignessCertificate cert = verify_general_type(d1.genus, d1, d2);
            if (!cert_out.empty()) {
                std::ofstream f(cert_out);
                if (!f)
                    throw std::runtime_error("cannot write " + cert_out);
                f << to_json(cert).dump(2) << "\n";
            }
            print_certificate(out, cert, json);
        } else if (*report_cmd) {
            PaperReport rep = run_paper_report();
            if (json) {
                Json j;
                Json entries = Json::array();
                for (const auto& e : rep.entries)
                    entries.push_back(Json{{"name", e.name},
                                           {"computed", e.computed},
                                           {"expected", e.expected},
                                           {"match", e.match},
                                           {"note", e.note}});
                j["entries"] = entries;
                j["overall"] = rep.overall;
                print_json(out, j);
            } else {
                for (const auto& e : rep.entries)
                    out << (e.match ? "ok   " : "FAIL ") << std::left << std::setw(28) << e.name
                        << " computed " << e.computed
                        << (e.match ? "" : "  expected " + e.expected) << "\n";
                out << (rep.overall ? "all values match" : "MISMATCH") << "\n";
            }
            return rep.overall ? 0 : 2;
        }
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace prymcalc
