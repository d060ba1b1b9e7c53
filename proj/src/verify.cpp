#include "oforge/verify.hpp"

#include <sstream>

#include "oforge/rng.hpp"
#include "oforge/textio.hpp"

namespace oforge {

static std::string clip(const std::string& s, size_t limit = 120) {
    return s.size() <= limit ? s : s.substr(0, limit) + "...";
}

PropertyResult check_first_rule(const VerifyConfig& cfg) {
    PropertyResult res{"first-rule", true, ""};
    OmegaOperator op = OmegaOperator::classical(cfg.n);
    Rng rng(cfg.seed);
    const bool fault = cfg.inject_fault == "first-rule";
    int checked = 0;
    for (int t = 0; t < cfg.first_rule_samples; ++t) {
        Polynomial f = random_polynomial(rng, op.amb, cfg.max_degree, 4);
        Polynomial fY = right_translate(f);
        AmbientPtr yx = fY.ambient();
        Polynomial detY = determinant(yx, 0);
        if (fault) detY += Polynomial::constant(yx, Rational(1));
        Polynomial of = omega_apply(op, f);
        Polynomial residual = omega_apply(op, fY) - detY * right_translate(of);
        if (residual.is_zero()) {
            Polynomial fL = left_translate(f);
            residual = omega_apply(op, fL) - detY * left_translate(of);
        }
        if (residual.is_zero())
            residual = omega_power(op, fY, 2) -
                       detY * detY * right_translate(omega_apply(op, of));
        ++checked;
        if (!residual.is_zero()) {
            res.pass = false;
            res.detail = "sample " + std::to_string(t) + ": residual " + clip(to_text(residual));
            return res;
        }
    }
    res.detail = std::to_string(checked) + " samples, zero residual";
    return res;
}

PropertyResult check_cayley_constants(const VerifyConfig& cfg) {
    PropertyResult res{"cayley-constants", true, ""};
    OmegaOperator op = OmegaOperator::classical(cfg.n);
    const int s_max = cfg.n == 2 ? 6 : 3;
    CayleyConstants cc = cayley_constants(op, s_max);
    Rational prod(1);
    for (int s = 1; s <= s_max; ++s) {
        const Rational& a = cc.alphas.at(s);
        if (a.is_zero()) {
            res.pass = false;
            res.detail = "alpha_" + std::to_string(s) + " = 0";
            return res;
        }
        prod *= a;
        if (cc.cs.at(s) != prod) {
            res.pass = false;
            res.detail = "c_" + std::to_string(s) + " != product of alphas";
            return res;
        }
    }
    // power identity on det powers
    for (int s = 1; s <= s_max; ++s) {
        Polynomial ds = pow(op.lambda, s);
        Polynomial iter = ds;
        for (int r = 1; r <= s; ++r) {
            iter = omega_apply(op, iter);
            Polynomial lhs = iter * pow(op.lambda, r);
            Polynomial rhs = scale(cc.alphas_rs.at({r, s}), ds);
            if (lhs != rhs) {
                res.pass = false;
                res.detail = "Omega^" + std::to_string(r) + "(det^" + std::to_string(s) +
                             ") det^" + std::to_string(r) + " != alpha_{r,s} det^s";
                return res;
            }
        }
    }
    // two independent routes to c_2
    Polynomial twice = omega_power(op, op.lambda * op.lambda, 2);
    if (!twice.is_constant() || twice.constant_term() != cc.cs.at(2)) {
        res.pass = false;
        res.detail = "iterated Omega^2(det^2) disagrees with alpha_2 alpha_1";
        return res;
    }
    std::ostringstream os;
    os << "alphas:";
    for (int s = 1; s <= s_max; ++s) os << " " << cc.alphas.at(s).str();
    res.detail = os.str();
    return res;
}

std::vector<PolynomialComodule> standard_modules(int max_form_degree, int max_sym_power,
                                                 int dim_cap) {
    std::vector<PolynomialComodule> mods;
    mods.push_back(trivial_module(2));
    mods.push_back(character_module(2, 1));
    std::vector<PolynomialComodule> bases;
    for (int d = 1; d <= max_form_degree; ++d) {
        bases.push_back(binary_forms_module(d));
        bases.push_back(dual_action_module(bases.back()));
    }
    for (const auto& b : bases) mods.push_back(b);
    for (int e = 2; e <= max_sym_power; ++e)
        for (const auto& b : bases) {
            auto basis = sym_power_basis(b.dim, e);
            if (int(basis.size()) > dim_cap) continue;
            mods.push_back(symmetric_power(b, e, dim_cap));
        }
    return mods;
}

// (r, s) pairs whose output weight matches what the module can support.
static std::vector<std::pair<int, int>> rs_pairs_for(const PolynomialComodule& V) {
    std::vector<std::pair<int, int>> pairs{{1, 1}};
    auto deg = entry_degree(V);
    if (deg && *deg % 2 == 0 && *deg / 2 >= 1) {
        int w = *deg / 2;
        pairs.emplace_back(w, 0);
        pairs.emplace_back(w + 1, 1);
    }
    return pairs;
}

PropertyResult check_second_rule(const VerifyConfig& cfg) {
    PropertyResult res{"second-rule", true, ""};
    if (cfg.n != 2) {
        res.detail = "skipped (module battery lives on M_2)";
        return res;
    }
    OmegaOperator op = OmegaOperator::classical(2);
    Rng rng(cfg.seed + 1);
    int identities = 0, memberships = 0;
    for (const auto& V : standard_modules(cfg.max_form_degree, cfg.max_sym_power)) {
        for (auto [r, s] : rs_pairs_for(V)) {
            if (!second_rule_morphism(V, op, r, s)) {
                res.pass = false;
                res.detail = V.name + ": I_{" + std::to_string(r) + "," + std::to_string(s) +
                             "} is not a module morphism";
                return res;
            }
            RatMat N = I_rs_matrix(V, op, r, s);
            RatMat oracle = (r - s >= 0) ? semi_invariant_oracle(V, r - s) : RatMat{};
            RowReducer span(V.dim);
            for (const auto& row : oracle) span.add_row(row);
            for (int t = 0; t < 3; ++t) {
                RatVec v = random_vector(rng, V.dim);
                if (!second_rule_part2(V, op, v, r, s)) {
                    res.pass = false;
                    res.detail = V.name + ": part-2 identity fails at (r,s)=(" +
                                 std::to_string(r) + "," + std::to_string(s) + ")";
                    return res;
                }
                ++identities;
                RatVec u = mat_vec(N, v);
                if (!span.in_span(u)) {
                    res.pass = false;
                    res.detail = V.name + ": I output escapes the oracle space";
                    return res;
                }
                ++memberships;
            }
        }
    }
    res.detail = std::to_string(identities) + " identities, " + std::to_string(memberships) +
                 " oracle memberships";
    return res;
}

PropertyResult check_integral(const VerifyConfig& cfg) {
    PropertyResult res{"integral", true, ""};
    OmegaOperator op = OmegaOperator::classical(cfg.n);
    if (integral_J(op, Polynomial::constant(op.amb, Rational(1))) != Rational(1)) {
        res.pass = false;
        res.detail = "J(1) != 1";
        return res;
    }
    Rng rng(cfg.seed + 2);
    const int deg = cfg.n == 2 ? cfg.max_degree : std::min(cfg.max_degree, 3);
    for (int t = 0; t < cfg.integral_samples; ++t) {
        Polynomial f = random_polynomial(rng, op.amb, deg, 4);
        if (!integral_two_sided(op, f)) {
            res.pass = false;
            res.detail = "two-sided identity fails for f = " + clip(to_text(f));
            return res;
        }
        if (t < 5 && !integral_translation_invariant(op, f)) {
            res.pass = false;
            res.detail = "J(f.Y) != J(f) for f = " + clip(to_text(f));
            return res;
        }
    }
    res.detail = std::to_string(cfg.integral_samples) + " samples, both Sweedler identities exact";
    return res;
}

// The 2x2 module [[1, det-1],[0, det]]: invariant line plus a character
// quotient, handy for fixed-point and naturality checks.
static PolynomialComodule mixed_module() {
    AmbientPtr amb = matrix_ambient(2);
    Polynomial det = determinant(amb, 0);
    Polynomial one = Polynomial::constant(amb, Rational(1));
    return make_comodule(2, {"p", "q"}, {{one, det - one}, {Polynomial(amb), det}}, "mixed");
}

PropertyResult check_reynolds(const VerifyConfig& cfg) {
    PropertyResult res{"reynolds", true, ""};
    if (cfg.n != 2) {
        res.detail = "skipped (module battery lives on M_2)";
        return res;
    }
    OmegaOperator op = OmegaOperator::classical(2);
    Rng rng(cfg.seed + 3);
    int modules = 0;
    for (const auto& V : standard_modules(std::min(cfg.max_form_degree, 2), 2)) {
        RatMat R = reynolds_matrix(V, op);
        if (mat_mul(R, R) != R) {
            res.pass = false;
            res.detail = V.name + ": R^2 != R";
            return res;
        }
        RatMat inv = semi_invariant_oracle(V, 0);
        RowReducer invspan(V.dim);
        for (const auto& row : inv) invspan.add_row(row);
        for (const auto& v : inv) {
            if (mat_vec(R, v) != v) {
                res.pass = false;
                res.detail = V.name + ": R does not fix an oracle invariant";
                return res;
            }
        }
        for (int t = 0; t < 3; ++t) {
            RatVec u = mat_vec(R, random_vector(rng, V.dim));
            if (!is_zero_vec(u) && !invspan.in_span(u)) {
                res.pass = false;
                res.detail = V.name + ": image of R escapes the invariant space";
                return res;
            }
        }
        ++modules;
    }

    // naturality squares R_W F = F R_V for module morphisms F
    PolynomialComodule mixed = mixed_module();
    PolynomialComodule triv = trivial_module(2);
    PolynomialComodule kdet = character_module(2, 1);
    RatMat incl = {{Rational(1)}, {Rational(0)}};          // trivial -> mixed, 1 |-> p
    RatMat proj = {{Rational(0), Rational(1)}};            // mixed -> k_det, q |-> 1
    PolynomialComodule s2cf2 = symmetric_power(dual_action_module(binary_forms_module(2)), 2);
    PolynomialComodule kdet2 = character_module(2, 2);
    RatMat disc(size_t(s2cf2.dim), RatVec(1, Rational(0)));
    {
        RatMat line = semi_invariant_oracle(s2cf2, 2);
        if (line.size() != 1) {
            res.pass = false;
            res.detail = "discriminant line has unexpected dimension";
            return res;
        }
        for (int i = 0; i < s2cf2.dim; ++i) disc[size_t(i)][0] = line[0][size_t(i)];
    }
    struct Square {
        const PolynomialComodule *V, *W;
        RatMat F;
        const char* name;
    };
    std::vector<Square> squares = {{&triv, &mixed, incl, "trivial->mixed"},
                                   {&mixed, &kdet, proj, "mixed->k_det"},
                                   {&kdet2, &s2cf2, disc, "k_det2->S2(dual forms2)"}};
    for (const auto& sq : squares) {
        if (!is_module_morphism(*sq.V, *sq.W, sq.F)) {
            res.pass = false;
            res.detail = std::string(sq.name) + ": not a module morphism";
            return res;
        }
        RatMat lhs = mat_mul(reynolds_matrix(*sq.W, op), sq.F);
        RatMat rhs = mat_mul(sq.F, reynolds_matrix(*sq.V, op));
        if (lhs != rhs) {
            res.pass = false;
            res.detail = std::string(sq.name) + ": naturality square does not commute";
            return res;
        }
    }
    res.detail = std::to_string(modules) + " modules, 3 naturality squares";
    return res;
}

PropertyResult check_comodule_integrity(const VerifyConfig& cfg) {
    PropertyResult res{"comodule-integrity", true, ""};
    if (cfg.n != 2) {
        res.detail = "skipped (module battery lives on M_2)";
        return res;
    }
    int full = 0, sampled = 0;
    for (const auto& V : standard_modules(cfg.max_form_degree, cfg.max_sym_power)) {
        ComoduleCheck chk = verify_comodule(V);
        if (!chk.ok()) {
            res.pass = false;
            res.detail = V.name + ": comodule law failure";
            return res;
        }
        (chk.mode == "full" ? full : sampled) += 1;
    }
    // twist additivity n_{V (x) W} = n_V + n_W
    PolynomialComodule f1 = binary_forms_module(1);
    PolynomialComodule f2 = binary_forms_module(2);
    std::vector<std::pair<RationalRep, RationalRep>> pairs = {
        {contragredient_rational(f1), contragredient_rational(f1)},
        {contragredient_rational(f1), contragredient_rational(f2)},
        {as_rational(f1), contragredient_rational(f2)},
        {twist_rational(as_rational(f1), -1), as_rational(f2)},
        {contragredient_rational(f2), as_rational(*twist(f1, 1).poly)},
    };
    for (const auto& [A, B] : pairs) {
        int expect = minimal_twist_exponent(A) + minimal_twist_exponent(B);
        int got = minimal_twist_exponent(tensor_rational(A, B));
        if (expect != got) {
            res.pass = false;
            res.detail = "twist additivity fails: " + A.name + " (x) " + B.name + ": " +
                         std::to_string(got) + " != " + std::to_string(expect);
            return res;
        }
    }
    res.detail = std::to_string(full) + " modules checked symbolically, " +
                 std::to_string(sampled) + " at sampled exact points; 5 tensor pairs additive";
    return res;
}

PropertyResult check_weight_bridge(const VerifyConfig& cfg) {
    PropertyResult res{"weight-bridge", true, ""};
    const int n = cfg.n;
    OmegaOperator op = OmegaOperator::classical(n);
    RationalCone cone = matrix_monoid_cone(n);
    Box box{-4, 4};
    auto weights = polynomial_dominant_weights(cone, n, box);
    for (const auto& w : weights) {
        if (!(w.is_dominant() && w.is_nonnegative())) {
            res.pass = false;
            res.detail = "unexpected polynomial dominant weight " + w.str();
            return res;
        }
    }
    // conversely every dominant nonnegative vector in the box is present
    long long expected = 0;
    {
        std::function<void(std::vector<long long>&, int)> count = [&](std::vector<long long>& cur,
                                                                      int pos) {
            if (pos == n) {
                ++expected;
                return;
            }
            long long hi = pos == 0 ? box.hi : cur[size_t(pos - 1)];
            for (long long v = 0; v <= hi; ++v) {
                cur[size_t(pos)] = v;
                count(cur, pos + 1);
            }
        };
        std::vector<long long> cur(size_t(n), 0);
        count(cur, 0);
    }
    if (static_cast<long long>(weights.size()) != expected) {
        res.pass = false;
        res.detail = "polynomial dominant weight count mismatch";
        return res;
    }
    auto sat = saturation_check(weights, n, box);
    auto idl = ideal_check(weights, n, box);
    if (!sat.ok || !idl.ok) {
        res.pass = false;
        res.detail = "saturation/ideal violations reported";
        return res;
    }

    if (n == 2) {
        // r = 0 side: the process annihilates every pure minor power
        for (int r1 = 1; r1 <= 4; ++r1) {
            SemiInvariantWitness w = make_minor_witness(op, {r1}, 0);
            auto out = omega_on_semiinvariant(op, w, cone);
            if (!out.is_zero || out.weight_was_polynomial) {
                res.pass = false;
                res.detail = "minor power f_1^" + std::to_string(r1) + " not annihilated";
                return res;
            }
        }
        // free side: classical coefficients are nonzero on a sample grid
        auto fam = omega_coefficient_family(det_weight(2), weights, cone);
        int free_checked = 0;
        for (int r1 = 0; r1 <= 2; ++r1)
            for (int r = 1; r <= 2; ++r) {
                Weight mu = fundamental_weight(2, 1) * r1 + det_weight(2) * r;
                if (!fam.is_free(mu)) {
                    res.pass = false;
                    res.detail = "weight " + mu.str() + " wrongly forced to zero";
                    return res;
                }
                if (a_omega_classical(op, {r1}, r).is_zero()) {
                    res.pass = false;
                    res.detail = "classical coefficient vanishes at " + mu.str();
                    return res;
                }
                ++free_checked;
            }
        res.detail = std::to_string(weights.size()) + " weights, saturation+ideal clean, " +
                     std::to_string(free_checked) + " free coefficients nonzero";
    } else {
        res.detail = std::to_string(weights.size()) + " weights, saturation+ideal clean";
    }
    return res;
}

std::vector<PropertyResult> run_verify_suite(const VerifyConfig& cfg) {
    std::vector<PropertyResult> out;
    out.push_back(check_first_rule(cfg));
    out.push_back(check_cayley_constants(cfg));
    if (cfg.n == 2) {
        out.push_back(check_second_rule(cfg));
        out.push_back(check_integral(cfg));
        out.push_back(check_reynolds(cfg));
        out.push_back(check_comodule_integrity(cfg));
    } else {
        out.push_back(check_integral(cfg));
    }
    out.push_back(check_weight_bridge(cfg));
    return out;
}

}  // namespace oforge
