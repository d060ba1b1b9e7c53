#ifndef OFORGE_VERIFY_HPP
#define OFORGE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "oforge/invariantize.hpp"

namespace oforge {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyConfig {
    int n = 2;
    std::uint64_t seed = 7;
    int max_degree = 4;            // degree cap for random polynomials
    int first_rule_samples = 50;
    int integral_samples = 30;
    int max_form_degree = 4;       // binary-form modules up to this degree
    int max_sym_power = 3;         // symmetric powers up to this exponent
    std::string inject_fault;      // "", or "first-rule"
};

/// Deterministic property run; one result per suite. Suites that only make
/// sense on M_2 (module-level checks) are skipped for other n.
std::vector<PropertyResult> run_verify_suite(const VerifyConfig& cfg);

// Individual suites (shared with the acceptance harness).
PropertyResult check_first_rule(const VerifyConfig& cfg);
PropertyResult check_cayley_constants(const VerifyConfig& cfg);
PropertyResult check_second_rule(const VerifyConfig& cfg);
PropertyResult check_integral(const VerifyConfig& cfg);
PropertyResult check_reynolds(const VerifyConfig& cfg);
PropertyResult check_comodule_integrity(const VerifyConfig& cfg);
PropertyResult check_weight_bridge(const VerifyConfig& cfg);

/// The standard battery of small modules on M_2: trivial, k_det, binary
/// forms and duals up to max_form_degree, symmetric powers of the
/// coefficient modules up to max_sym_power (capped by dim_cap).
std::vector<PolynomialComodule> standard_modules(int max_form_degree, int max_sym_power,
                                                 int dim_cap = 200);

}  // namespace oforge

#endif
