#include "oforge/invariantize.hpp"

#include <map>
#include <stdexcept>

#include "oforge/textio.hpp"

namespace oforge {

static void check_module_op(const PolynomialComodule& V, const OmegaOperator& op, const char* what) {
    if (V.n != op.n || !same_ambient(V.xamb, op.amb))
        throw std::invalid_argument(std::string(what) + ": module and operator disagree on M_n");
}

RatMat I_rs_matrix(const PolynomialComodule& V, const OmegaOperator& op, int r, int s) {
    check_module_op(V, op, "I_rs_matrix");
    if (r < 1 || s < 0) throw std::invalid_argument("I_rs_matrix: need r >= 1, s >= 0");
    Polynomial ds = pow(op.lambda, s);
    RatMat N(size_t(V.dim), RatVec(size_t(V.dim), Rational(0)));
    for (int j = 0; j < V.dim; ++j)
        for (int i = 0; i < V.dim; ++i) {
            const Polynomial& entry = V.C[size_t(j)][size_t(i)];
            if (entry.is_zero()) continue;
            N[size_t(j)][size_t(i)] = evaluate_at_zero(omega_power(op, ds * entry, r));
        }
    return N;
}

RatVec I_rs(const PolynomialComodule& V, const OmegaOperator& op, const RatVec& v, int r, int s) {
    return mat_vec(I_rs_matrix(V, op, r, s), v);
}

bool second_rule_part2(const PolynomialComodule& V, const OmegaOperator& op, const RatVec& v,
                       int r, int s) {
    check_module_op(V, op, "second_rule_part2");
    RatVec u = I_rs(V, op, v, r, s);
    Polynomial ds = pow(op.lambda, s);
    Polynomial dr = pow(op.lambda, r);
    for (int j = 0; j < V.dim; ++j) {
        Polynomial lhs(V.xamb);
        for (int i = 0; i < V.dim; ++i)
            if (!u[size_t(i)].is_zero()) lhs += scale(u[size_t(i)], V.C[size_t(j)][size_t(i)]);
        if (ds * lhs != scale(u[size_t(j)], dr)) return false;
    }
    return true;
}

bool second_rule_morphism(const PolynomialComodule& V, const OmegaOperator& op, int r, int s) {
    // I commutes with the twisted coaction iff it commutes with C(x).
    RatMat N = I_rs_matrix(V, op, r, s);
    for (int j = 0; j < V.dim; ++j)
        for (int i = 0; i < V.dim; ++i) {
            Polynomial lhs(V.xamb), rhs(V.xamb);
            for (int k = 0; k < V.dim; ++k) {
                if (!N[size_t(k)][size_t(i)].is_zero())
                    lhs += scale(N[size_t(k)][size_t(i)], V.C[size_t(j)][size_t(k)]);
                if (!N[size_t(j)][size_t(k)].is_zero())
                    rhs += scale(N[size_t(j)][size_t(k)], V.C[size_t(k)][size_t(i)]);
            }
            if (lhs != rhs) return false;
        }
    return true;
}

static Rational alpha_1(const OmegaOperator& op) {
    Polynomial w = omega_apply(op, op.lambda);
    if (!w.is_constant())
        throw std::runtime_error("integral: Omega(det) is not a constant");
    Rational a = w.constant_term();
    if (a.is_zero()) throw std::runtime_error("integral: process is not proper (alpha_1 = 0)");
    return a;
}

Rational integral_J(const OmegaOperator& op, const Polynomial& f) {
    if (!same_ambient(f.ambient(), op.amb))
        throw std::invalid_argument("integral_J: f must live in the operator's k[M_n]");
    return evaluate_at_zero(omega_apply(op, f * op.lambda)) / alpha_1(op);
}

bool integral_two_sided(const OmegaOperator& op, const Polynomial& f) {
    Rational jf = integral_J(op, f);
    Polynomial delta = comultiply(f);
    const int half = delta.ambient()->arity() / 2;
    Polynomial left(op.amb), right(op.amb);
    for (const auto& [m, c] : delta.terms()) {
        std::vector<int> e1(static_cast<size_t>(half)), e2(static_cast<size_t>(half));
        for (int i = 0; i < half; ++i) {
            e1[size_t(i)] = m[i];
            e2[size_t(i)] = m[half + i];
        }
        Polynomial f1 = Polynomial::monomial(op.amb, Monomial(std::move(e1)), Rational(1));
        Polynomial f2 = Polynomial::monomial(op.amb, Monomial(std::move(e2)), Rational(1));
        // sum f_1 J(f_2) and sum J(f_1) f_2
        left += scale(c * integral_J(op, f2), f1);
        right += scale(c * integral_J(op, f1), f2);
    }
    Polynomial expect = Polynomial::constant(op.amb, jf);
    return left == expect && right == expect;
}

bool integral_translation_invariant(const OmegaOperator& op, const Polynomial& f) {
    Rational jf = integral_J(op, f);
    Polynomial fY = right_translate(f);
    AmbientPtr yx = fY.ambient();
    Polynomial detx = transport(op.lambda, yx);
    Polynomial h = omega_apply(op, fY * detx);
    // evaluate the x block at zero, keeping the symbolic translate
    int xset = yx->find_set(VarKind::Matrix, op.tag);
    int xoff = yx->set_offset(xset);
    Polynomial h0(yx);
    for (const auto& [m, c] : h.terms()) {
        bool xfree = true;
        for (int k = 0; k < op.n * op.n; ++k)
            if (m[xoff + k] > 0) xfree = false;
        if (xfree) h0.add_term(m, c);
    }
    return h0 == Polynomial::constant(yx, jf * alpha_1(op));
}

RatMat reynolds_matrix(const PolynomialComodule& V, const OmegaOperator& op) {
    Rational a1 = alpha_1(op);
    RatMat N = I_rs_matrix(V, op, 1, 1);
    for (auto& row : N)
        for (auto& x : row) x /= a1;
    return N;
}

RatVec reynolds(const PolynomialComodule& V, const OmegaOperator& op, const RatVec& v) {
    return mat_vec(reynolds_matrix(V, op), v);
}

AmbientPtr coefficient_ambient(const PolynomialComodule& cf) {
    bool letters = true;
    for (int i = 0; i < cf.dim; ++i)
        if (cf.labels[size_t(i)] != std::string(1, char('a' + i))) letters = false;
    if (letters && cf.dim <= 26) return make_ambient({VariableSet::form_coeffs(cf.dim)});
    return make_ambient({VariableSet::aux("coeff", cf.labels)});
}

RatVec coefficient_vector(const PolynomialComodule& cf, const Polynomial& p, int e) {
    auto basis = sym_power_basis(cf.dim, e);
    std::map<std::vector<int>, int> index;
    for (size_t b = 0; b < basis.size(); ++b) index[basis[b]] = int(b);
    RatVec v(basis.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != e)
            throw std::invalid_argument("coefficient_vector: polynomial not homogeneous of degree " +
                                        std::to_string(e));
        auto it = index.find(m.exponents());
        if (it == index.end()) throw std::invalid_argument("coefficient_vector: arity mismatch");
        v[size_t(it->second)] = c;
    }
    return v;
}

Polynomial coefficient_polynomial(const PolynomialComodule& cf, const RatVec& v, int e,
                                  const AmbientPtr& coeff_amb) {
    auto basis = sym_power_basis(cf.dim, e);
    if (v.size() != basis.size())
        throw std::invalid_argument("coefficient_polynomial: dimension mismatch");
    Polynomial p(coeff_amb);
    for (size_t b = 0; b < basis.size(); ++b)
        if (!v[b].is_zero()) p.add_term(Monomial(std::vector<int>(basis[b])), v[b]);
    return p;
}

InvariantReport hilbert_generators(const PolynomialComodule& cf,
                                   const std::function<std::optional<int>(int)>& weight_per_degree,
                                   int degree_bound, const OmegaOperator& op, int dim_cap) {
    check_module_op(cf, op, "hilbert_generators");
    InvariantReport report;
    report.module_name = cf.name;
    report.degree_bound = degree_bound;
    AmbientPtr coeff_amb = coefficient_ambient(cf);
    std::vector<std::pair<int, Polynomial>> gens;  // (degree, polynomial)

    for (int e = 1; e <= degree_bound; ++e) {
        DegreeReport dr;
        dr.degree = e;
        dr.target_weight = weight_per_degree(e);
        if (!dr.target_weight) {
            report.degrees.push_back(std::move(dr));
            continue;
        }
        const int w = *dr.target_weight;
        if (w < 1) throw std::invalid_argument("hilbert_generators: target weight must be >= 1");

        PolynomialComodule W = (e == 1) ? cf : symmetric_power(cf, e, dim_cap);

        // properness of the constant we implicitly divide by
        CayleyConstants cc = cayley_constants(op, w);
        if (cc.cs.at(w).is_zero())
            throw std::runtime_error("hilbert_generators: process not proper at s = " +
                                     std::to_string(w));

        RatMat N = I_rs_matrix(W, op, w, 0);
        RowReducer sweep(W.dim);
        for (int i = 0; i < W.dim; ++i) {
            RatVec col(static_cast<size_t>(W.dim));
            for (int j = 0; j < W.dim; ++j) col[size_t(j)] = N[size_t(j)][size_t(i)];
            sweep.add_row(std::move(col));
        }
        dr.sweep_dim = sweep.rank();

        RatMat oracle = semi_invariant_oracle(W, w);
        dr.oracle_dim = int(oracle.size());

        dr.agreement = (dr.sweep_dim == dr.oracle_dim);
        for (const auto& v : oracle)
            if (!sweep.in_span(v)) dr.agreement = false;

        // span of degree-e products of earlier generators
        RowReducer generated(W.dim);
        std::function<void(size_t, int, const Polynomial&)> spanProducts =
            [&](size_t idx, int remaining, const Polynomial& sofar) {
                if (remaining == 0) {
                    generated.add_row(coefficient_vector(cf, sofar, e));
                    return;
                }
                for (size_t g = idx; g < gens.size(); ++g)
                    if (gens[g].first <= remaining)
                        spanProducts(g, remaining - gens[g].first, sofar * gens[g].second);
            };
        spanProducts(0, e, Polynomial::constant(coeff_amb, Rational(1)));
        dr.generated_dim = generated.rank();

        for (const auto& v : oracle) {
            if (generated.add_row(v)) {
                Polynomial p = coefficient_polynomial(cf, v, e, coeff_amb);
                dr.new_generators.push_back(to_text(p));
                gens.emplace_back(e, std::move(p));
            }
        }

        report.all_agree = report.all_agree && dr.agreement;
        report.degrees.push_back(std::move(dr));
    }

    for (const auto& [deg, p] : gens) report.generators.emplace_back(deg, to_text(p));
    return report;
}

LiftedProblem semisimple_lift(int form_degree) {
    LiftedProblem p;
    p.form_degree = form_degree;
    p.cf = dual_action_module(binary_forms_module(form_degree));
    auto deg = entry_degree(p.cf);
    if (!deg) throw std::runtime_error("semisimple_lift: coefficient module is not homogeneous");
    p.central_exponent = *deg;
    return p;
}

std::optional<int> lifted_weight(const LiftedProblem& p, int degree) {
    long long prod = (long long)p.central_exponent * degree;
    if (prod % 2 != 0) return std::nullopt;
    return int(prod / 2);
}

InvariantReport binary_form_invariants(int form_degree, int degree_bound, int dim_cap) {
    LiftedProblem p = semisimple_lift(form_degree);
    OmegaOperator op = OmegaOperator::classical(2);
    return hilbert_generators(
        p.cf, [&p](int e) { return lifted_weight(p, e); }, degree_bound, op, dim_cap);
}

}  // namespace oforge
