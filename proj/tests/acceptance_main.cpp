// Acceptance harness: one pass/fail line per criterion, nonzero exit on any
// failure. All comparisons are exact; the only tolerances are wall-clock
// budgets on the two long-running criteria.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "oforge/invariantize.hpp"
#include "oforge/textio.hpp"
#include "oforge/verify.hpp"

using namespace oforge;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << label
              << " -- " << detail << "\n";
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criterion 1: the defining identities on seeded random inputs ----
void criterion1() {
    auto t0 = Clock::now();
    VerifyConfig c2;
    c2.n = 2;
    c2.seed = 7;
    c2.max_degree = 4;
    c2.first_rule_samples = 50;
    PropertyResult r2 = check_first_rule(c2);

    VerifyConfig c3;
    c3.n = 3;
    c3.seed = 7;
    c3.max_degree = 3;
    c3.first_rule_samples = 20;
    PropertyResult r3 = check_first_rule(c3);

    double secs = seconds_since(t0);
    bool pass = r2.pass && r3.pass && secs < 120.0;
    std::ostringstream os;
    os << "n=2: " << r2.detail << "; n=3: " << r3.detail << "; " << secs << "s (budget 120s)";
    report(1, "first rule, symbolic translate", pass, os.str());
}

// ---- criterion 2: Cayley constants ----
void criterion2() {
    bool pass = true;
    std::ostringstream os;
    for (int n : {2, 3}) {
        OmegaOperator op = OmegaOperator::classical(n);
        const int s_max = n == 2 ? 6 : 3;
        CayleyConstants cc = cayley_constants(op, s_max);  // verifies each eigen-identity
        Rational prod(1);
        for (int s = 1; s <= s_max; ++s) {
            pass = pass && !cc.alphas.at(s).is_zero();
            prod *= cc.alphas.at(s);
            pass = pass && cc.cs.at(s) == prod;
        }
        if (n == 2) {
            Polynomial it2 = omega_power(op, op.lambda * op.lambda, 2);
            pass = pass && it2.is_constant() && it2.constant_term() == Rational(12);
            pass = pass && cc.alphas.at(2) * cc.alphas.at(1) == Rational(12);
            os << "c_2 = 12 via iterated process and via alpha product; ";
        }
        os << "n=" << n << " alphas:";
        for (int s = 1; s <= s_max; ++s) os << " " << cc.alphas.at(s).str();
        os << "; ";
    }
    report(2, "Cayley constants, exact eigen-identities", pass, os.str());
}

// ---- criterion 3: second rule across the module battery ----
void criterion3() {
    VerifyConfig cfg;
    cfg.n = 2;
    cfg.seed = 7;
    cfg.max_form_degree = 4;
    cfg.max_sym_power = 3;
    PropertyResult r = check_second_rule(cfg);
    report(3, "second rule on all constructed modules", r.pass, r.detail);
}

// ---- criterion 4: integral and Reynolds ----
void criterion4() {
    VerifyConfig cfg;
    cfg.n = 2;
    cfg.seed = 7;
    cfg.max_degree = 4;
    cfg.integral_samples = 30;
    cfg.max_form_degree = 4;
    cfg.max_sym_power = 3;
    PropertyResult ri = check_integral(cfg);
    PropertyResult rr = check_reynolds(cfg);
    report(4, "two-sided integral and Reynolds operator", ri.pass && rr.pass,
           "integral: " + ri.detail + "; reynolds: " + rr.detail);
}

// ---- criterion 5: classical invariants reproduced ----
bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [m, ca] = *a.terms().begin();
    Rational cb = b.coefficient(m);
    if (cb.is_zero()) return false;
    return scale(cb, a) == scale(ca, b);
}

void criterion5() {
    auto t0 = Clock::now();
    bool pass = true;
    std::ostringstream os;

    InvariantReport quad = binary_form_invariants(2, 4);
    pass = pass && quad.all_agree && quad.generators.size() == 1 && quad.generators[0].first == 2;
    if (quad.generators.size() == 1) {
        AmbientPtr coeff = make_ambient({VariableSet::form_coeffs(3)});
        Polynomial g = parse_polynomial(quad.generators[0].second, coeff);
        Polynomial disc = parse_polynomial("b^2 - 4*a*c", coeff);
        pass = pass && proportional(g, disc);
        os << "quadratic: one generator '" << quad.generators[0].second
           << "' ~ b^2 - 4*a*c; ";
    } else {
        os << "quadratic: generator count " << quad.generators.size() << "; ";
    }

    InvariantReport quartic = binary_form_invariants(4, 3);
    pass = pass && quartic.all_agree && quartic.generators.size() == 2;
    int dim2 = -1, dim3 = -1, new2 = 0, new3 = 0;
    for (const auto& d : quartic.degrees) {
        if (d.degree == 2) dim2 = d.oracle_dim, new2 = int(d.new_generators.size());
        if (d.degree == 3) dim3 = d.oracle_dim, new3 = int(d.new_generators.size());
        pass = pass && d.agreement;
    }
    pass = pass && dim2 == 1 && dim3 == 1 && new2 == 1 && new3 == 1;
    os << "quartic: dims at degrees 2,3 = " << dim2 << "," << dim3
       << " with one new generator each; ";

    double secs = seconds_since(t0);
    pass = pass && secs < 300.0;
    os << secs << "s (budget 300s)";
    report(5, "classical invariants via the process pipeline", pass, os.str());
}

// ---- criterion 6: weight-side consistency ----
void criterion6() {
    VerifyConfig cfg;
    cfg.n = 2;
    cfg.seed = 7;
    PropertyResult r = check_weight_bridge(cfg);
    report(6, "weight lattice, saturation/ideal, annihilation bridge", r.pass, r.detail);
}

// ---- criterion 7: comodule integrity and twist additivity ----
void criterion7() {
    VerifyConfig cfg;
    cfg.n = 2;
    cfg.seed = 7;
    cfg.max_form_degree = 4;
    cfg.max_sym_power = 3;
    PropertyResult r = check_comodule_integrity(cfg);
    report(7, "comodule laws and twist-exponent additivity", r.pass, r.detail);
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << " (" << seconds_since(t0) << "s total)\n";
    return failures == 0 ? 0 : 1;
}
