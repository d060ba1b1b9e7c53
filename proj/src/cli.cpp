#include "oforge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oforge/invariantize.hpp"
#include "oforge/textio.hpp"
#include "oforge/verify.hpp"

namespace oforge {

namespace {

int dim_cap_from_env() {
    const char* cap = std::getenv("OMEGA_FORGE_CAP");
    if (!cap) return 200;
    try {
        return std::stoi(cap);
    } catch (...) {
        return 200;
    }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text << "\n";
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << text << "\n";
    }
}

nlohmann::ordered_json constants_json(const CayleyConstants& cc) {
    nlohmann::ordered_json j;
    j["n"] = cc.n;
    auto alphas = nlohmann::ordered_json::array();
    for (const auto& [s, a] : cc.alphas) alphas.push_back({s, a.str()});
    j["alphas"] = alphas;
    auto cs = nlohmann::ordered_json::array();
    for (const auto& [s, c] : cc.cs) cs.push_back({s, c.str()});
    j["cs"] = cs;
    return j;
}

int cmd_omega(int n, const std::string& apply_text, int power, int constants_smax,
              const std::string& format, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    OmegaOperator op = OmegaOperator::classical(n);
    std::ostringstream res;
    if (!apply_text.empty()) {
        Polynomial f = parse_polynomial(apply_text, op.amb);
        Polynomial g = omega_power(op, f, power);
        res << to_text(g);
        if (constants_smax > 0) res << "\n";
    }
    if (constants_smax > 0) {
        CayleyConstants cc = cayley_constants(op, constants_smax);
        if (format == "json") {
            res << constants_json(cc).dump(2);
        } else {
            res << "n = " << cc.n << "\n";
            for (const auto& [s, a] : cc.alphas)
                res << "alpha_" << s << " = " << a.str() << "  c_" << s << " = "
                    << cc.cs.at(s).str() << "\n";
        }
    }
    if (res.str().empty()) {
        err << "omega: nothing to do (use --apply and/or --constants)\n";
        return 1;
    }
    emit(res.str(), out_path, out);
    return 0;
}

int cmd_invariants(int form_degree, int bound, const std::string& format,
                   const std::string& out_path, std::ostream& out, std::ostream& err) {
    InvariantReport rep;
    try {
        rep = binary_form_invariants(form_degree, bound, dim_cap_from_env());
    } catch (const std::runtime_error& e) {
        std::string what = e.what();
        if (what.find("exceeds cap") != std::string::npos) {
            err << "invariants: refused: " << what
                << " (raise OMEGA_FORGE_CAP to override)\n";
            return 1;
        }
        throw;
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["form_degree"] = form_degree;
        j["module"] = nlohmann::json::parse(module_descriptor_json(
            dual_action_module(binary_forms_module(form_degree))));
        j["degree_bound"] = rep.degree_bound;
        auto degrees = nlohmann::ordered_json::array();
        for (const auto& d : rep.degrees) {
            nlohmann::ordered_json dj;
            dj["degree"] = d.degree;
            if (d.target_weight) dj["target_weight"] = *d.target_weight;
            else dj["target_weight"] = nullptr;
            dj["process_dim"] = d.sweep_dim;
            dj["oracle_dim"] = d.oracle_dim;
            dj["generated_dim"] = d.generated_dim;
            dj["agreement"] = d.agreement;
            dj["new_generators"] = d.new_generators;
            degrees.push_back(dj);
        }
        j["degrees"] = degrees;
        auto gens = nlohmann::ordered_json::array();
        for (const auto& [deg, text] : rep.generators) gens.push_back({deg, text});
        j["generators"] = gens;
        j["all_agree"] = rep.all_agree;
        emit(j.dump(2), out_path, out);
    } else {
        std::ostringstream os;
        os << "binary form degree " << form_degree << ", bound " << rep.degree_bound << "\n";
        for (const auto& d : rep.degrees) {
            os << "degree " << d.degree << ": ";
            if (!d.target_weight) {
                os << "no integral weight, no invariants\n";
                continue;
            }
            os << "weight det^" << *d.target_weight << ", process dim " << d.sweep_dim
               << ", oracle dim " << d.oracle_dim << (d.agreement ? "" : "  [DISAGREE]");
            for (const auto& g : d.new_generators) os << "\n  new generator: " << g;
            os << "\n";
        }
        os << (rep.all_agree ? "oracle agreement everywhere" : "ORACLE DISAGREEMENT");
        emit(os.str(), out_path, out);
    }
    return rep.all_agree ? 0 : 2;
}

int cmd_weights(int n, long long box_hi, const std::string& family, const std::string& format,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
    (void)err;
    RationalCone cone = matrix_monoid_cone(n);
    Box box{-box_hi, box_hi};
    auto weights = polynomial_dominant_weights(cone, n, box);
    auto sat = saturation_check(weights, n, box);
    auto idl = ideal_check(weights, n, box);

    nlohmann::ordered_json j;
    j["n"] = n;
    j["box"] = box_hi;
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : cone.generators) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& x : g) row.push_back(x.str());
        gens.push_back(row);
    }
    j["monoid_cone_generators"] = gens;
    auto ws = nlohmann::ordered_json::array();
    for (const auto& w : weights) ws.push_back(w.c);
    j["polynomial_dominant_weights"] = ws;
    j["saturation_ok"] = sat.ok;
    j["ideal_ok"] = idl.ok;
    auto viol = nlohmann::ordered_json::array();
    for (const auto& [a, b] : sat.violations) viol.push_back({a.c, b.c});
    j["saturation_violations"] = viol;
    viol = nlohmann::ordered_json::array();
    for (const auto& [a, b] : idl.violations) viol.push_back({a.c, b.c});
    j["ideal_violations"] = viol;

    if (family == "det") {
        auto fam = omega_coefficient_family(det_weight(n), weights, cone);
        auto entries = nlohmann::ordered_json::array();
        for (const auto& [mu, free] : fam.entries)
            entries.push_back({mu.c, free ? "free" : "forced-zero"});
        j["coefficient_family"] = entries;
        j["proper_in_truncation"] = fam.proper_in_truncation;
    }

    if (format == "json") {
        emit(j.dump(2), out_path, out);
    } else {
        std::ostringstream os;
        os << "polynomial dominant weights of M_" << n << " in box " << box_hi << ":\n";
        for (const auto& w : weights) os << "  " << w.str() << "\n";
        os << "saturation: " << (sat.ok ? "ok" : "violated") << "\n";
        os << "ideal: " << (idl.ok ? "ok" : "violated");
        if (family == "det") {
            os << "\ncoefficient family for det:";
            auto fam = omega_coefficient_family(det_weight(n), weights, cone);
            for (const auto& [mu, free] : fam.entries)
                os << "\n  " << mu.str() << " " << (free ? "free" : "forced-zero");
        }
        emit(os.str(), out_path, out);
    }
    return (sat.ok && idl.ok) ? 0 : 2;
}

int cmd_verify(const VerifyConfig& cfg, const std::string& out_path, std::ostream& out) {
    auto results = run_verify_suite(cfg);
    std::ostringstream os;
    bool all = true;
    for (const auto& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        all = all && r.pass;
    }
    os << (all ? "all properties pass" : "PROPERTY FAILURE");
    emit(os.str(), out_path, out);
    return all ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Cayley process toolkit for M_n"};
    app.require_subcommand(1);

    int n = 2;
    std::string apply_text, format = "text", out_path, family, fault;
    int power = 1, constants_smax = 0;
    int form_degree = 2, bound = 4;
    long long box_hi = 3;
    VerifyConfig vcfg;

    auto* omega = app.add_subcommand("omega", "apply the process / tabulate its constants");
    omega->add_option("--n", n, "matrix size")->check(CLI::Range(2, 4));
    omega->add_option("--apply", apply_text, "polynomial in x11..xNN");
    omega->add_option("--power", power, "apply the process this many times")->check(CLI::Range(0, 64));
    omega->add_option("--constants", constants_smax, "tabulate alpha_s, c_s for s <= this");
    omega->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    omega->add_option("--out", out_path, "write output to a file");

    auto* inv = app.add_subcommand("invariants", "degree-truncated generator search for binary forms");
    inv->add_option("--form-degree", form_degree, "degree of the binary form")->required();
    inv->add_option("--bound", bound, "search invariants up to this degree")->required();
    inv->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    inv->add_option("--out", out_path, "write the report to a file");

    auto* wts = app.add_subcommand("weights", "polynomial dominant weights and cone reports");
    wts->add_option("--n", n, "matrix size")->check(CLI::Range(2, 4));
    wts->add_option("--box", box_hi, "coordinate box bound")->required();
    wts->add_option("--family", family, "coefficient family for this character (det)");
    wts->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    wts->add_option("--out", out_path, "write the report to a file");

    auto* ver = app.add_subcommand("verify", "run the seeded property suites");
    ver->add_option("--n", vcfg.n, "matrix size")->check(CLI::Range(2, 3));
    ver->add_option("--seed", vcfg.seed, "seed for the randomized sweeps");
    ver->add_option("--max-degree", vcfg.max_degree, "degree cap for random polynomials");
    ver->add_option("--samples", vcfg.first_rule_samples, "first-rule sample count");
    ver->add_option("--max-form-degree", vcfg.max_form_degree, "module battery size");
    ver->add_option("--max-sym-power", vcfg.max_sym_power, "symmetric powers in the battery");
    ver->add_option("--inject-fault", vcfg.inject_fault, "negative control (first-rule)")
        ->check(CLI::IsMember({"first-rule"}));
    ver->add_option("--out", out_path, "write the summary to a file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(omega))
            return cmd_omega(n, apply_text, power, constants_smax, format, out_path, out, err);
        if (app.got_subcommand(inv))
            return cmd_invariants(form_degree, bound, format, out_path, out, err);
        if (app.got_subcommand(wts))
            return cmd_weights(n, box_hi, family, format, out_path, out, err);
        if (app.got_subcommand(ver)) {
            // the module battery defaults are heavier than a quick check needs
            if (vcfg.n == 3 && vcfg.max_degree > 3) vcfg.max_degree = 3;
            if (vcfg.n == 3) vcfg.first_rule_samples = std::min(vcfg.first_rule_samples, 20);
            return cmd_verify(vcfg, out_path, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "identity failure: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 1;
}

}  // namespace oforge
