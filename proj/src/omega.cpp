#include "oforge/omega.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oforge {

OmegaOperator OmegaOperator::classical(int n, const std::string& tag) {
    if (n < 2) throw std::invalid_argument("OmegaOperator: n must be >= 2");
    AmbientPtr amb = matrix_ambient(n, tag);
    Polynomial det = determinant(amb, 0);
    return OmegaOperator{n, tag, amb, std::move(det)};
}

static int find_matrix_block(const OmegaOperator& op, const Polynomial& f, const char* what) {
    int which = f.ambient()->find_set(VarKind::Matrix, op.tag);
    if (which < 0 || f.ambient()->sets()[size_t(which)].n != op.n)
        throw std::invalid_argument(std::string(what) + ": ambient has no " + op.tag +
                                    "-matrix block of size " + std::to_string(op.n));
    return which;
}

Polynomial omega_apply(const OmegaOperator& op, const Polynomial& f) {
    int which = find_matrix_block(op, f, "omega_apply");
    const int n = op.n;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial total(f.ambient());
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[size_t(i)] > perm[size_t(j)]) ++inv;
        Polynomial g = f;
        for (int i = 0; i < n && !g.is_zero(); ++i)
            g = partial_derivative(g, f.ambient()->matrix_var(which, i + 1, perm[size_t(i)] + 1));
        if (inv % 2 == 0) total += g;
        else total -= g;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Polynomial omega_power(const OmegaOperator& op, const Polynomial& f, int r) {
    if (r < 0) throw std::invalid_argument("omega_power: r must be >= 0");
    Polynomial g = f;
    for (int i = 0; i < r; ++i) g = omega_apply(op, g);
    return g;
}

CayleyConstants cayley_constants(const OmegaOperator& op, int s_max) {
    if (s_max < 1) throw std::invalid_argument("cayley_constants: s_max must be >= 1");
    CayleyConstants out;
    out.n = op.n;
    Polynomial det_pow = Polynomial::constant(op.amb, Rational(1));
    Rational c(1);
    for (int s = 1; s <= s_max; ++s) {
        det_pow = det_pow * op.lambda;
        Polynomial q = omega_apply(op, det_pow);
        Rational alpha = evaluate_at_identity(q);
        Polynomial expected = scale(alpha, pow(op.lambda, s - 1));
        if (q != expected)
            throw std::runtime_error("cayley_constants: Omega(det^" + std::to_string(s) +
                                     ") is not a scalar multiple of det^" + std::to_string(s - 1));
        out.alphas[s] = alpha;
        c *= alpha;
        out.cs[s] = c;
        Polynomial iter = det_pow;
        for (int r = 1; r <= s; ++r) {
            iter = omega_apply(op, iter);
            out.alphas_rs[{r, s}] = evaluate_at_identity(iter);
        }
    }
    return out;
}

// Shared translate machinery: x_ij -> entry (i,j) of YX or XY.
static Polynomial translate(const Polynomial& f, const std::string& ytag, bool y_on_left) {
    const auto& sets = f.ambient()->sets();
    if (sets.size() != 1 || sets[0].kind != VarKind::Matrix)
        throw std::invalid_argument("translate: requires a single matrix-coordinate ambient");
    const int n = sets[0].n;
    AmbientPtr target = make_ambient({VariableSet::matrix(n, ytag), sets[0]});
    std::vector<Polynomial> images;
    images.reserve(size_t(n) * size_t(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Polynomial e(target);
            for (int k = 1; k <= n; ++k) {
                if (y_on_left)
                    e += Polynomial::variable(target, target->matrix_var(0, i, k)) *
                         Polynomial::variable(target, target->matrix_var(1, k, j));
                else
                    e += Polynomial::variable(target, target->matrix_var(1, i, k)) *
                         Polynomial::variable(target, target->matrix_var(0, k, j));
            }
            images.push_back(e);
        }
    return substitute(f, images);
}

Polynomial right_translate(const Polynomial& f, const std::string& ytag) {
    return translate(f, ytag, true);
}

Polynomial left_translate(const Polynomial& f, const std::string& ytag) {
    return translate(f, ytag, false);
}

FirstRuleReport first_rule_check(const OmegaOperator& op, const Polynomial& f) {
    find_matrix_block(op, f, "first_rule_check");
    FirstRuleReport rep{false, Polynomial(op.amb), Polynomial(op.amb), Polynomial(op.amb)};

    Polynomial fR = right_translate(f);
    AmbientPtr yx = fR.ambient();
    Polynomial detY = determinant(yx, 0);

    Polynomial of = omega_apply(op, f);
    rep.residual_right = omega_apply(op, fR) - detY * right_translate(of);

    Polynomial fL = left_translate(f);
    rep.residual_left = omega_apply(op, fL) - detY * left_translate(of);

    Polynomial of2 = omega_apply(op, of);
    rep.residual_power = omega_power(op, fR, 2) - detY * detY * right_translate(of2);

    rep.ok = rep.residual_right.is_zero() && rep.residual_left.is_zero() &&
             rep.residual_power.is_zero();
    return rep;
}

Polynomial lower_right_minor(const OmegaOperator& op, int i) {
    if (i < 1 || i > op.n) throw std::invalid_argument("lower_right_minor: bad size");
    const int n = op.n;
    std::vector<int> perm(static_cast<size_t>(i));
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial minor(op.amb);
    do {
        int inv = 0;
        for (int a = 0; a < i; ++a)
            for (int b = a + 1; b < i; ++b)
                if (perm[size_t(a)] > perm[size_t(b)]) ++inv;
        std::vector<int> e(size_t(op.amb->arity()), 0);
        for (int a = 0; a < i; ++a)
            e[size_t(op.amb->matrix_var(0, n - i + 1 + a, n - i + 1 + perm[size_t(a)]))] += 1;
        minor.add_term(Monomial(std::move(e)), Rational(inv % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return minor;
}

bool verify_semiinvariant(const OmegaOperator& op, const Polynomial& f, const Weight& mu) {
    find_matrix_block(op, f, "verify_semiinvariant");
    if (mu.n() != op.n) throw std::invalid_argument("verify_semiinvariant: weight length mismatch");
    const int n = op.n;
    for (long long v : mu.c)
        if (v < 0) throw std::invalid_argument("verify_semiinvariant: weight must be polynomial");

    std::vector<std::string> tnames, unames, snames, lnames;
    for (int i = 1; i <= n; ++i) tnames.push_back("t" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            unames.push_back("u" + std::to_string(i) + std::to_string(j));
    for (int i = 1; i <= n; ++i) snames.push_back("s" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) lnames.push_back("l" + std::to_string(i) + std::to_string(j));

    AmbientPtr amb = make_ambient({VariableSet::aux("t", tnames), VariableSet::aux("u", unames),
                                   VariableSet::aux("s", snames), VariableSet::aux("l", lnames),
                                   VariableSet::matrix(n, op.tag)});

    auto var = [&](const std::string& nm) { return Polynomial::variable(amb, nm); };
    auto zero = Polynomial::zero(amb);

    std::vector<std::vector<Polynomial>> U(size_t(n), std::vector<Polynomial>(size_t(n), zero));
    std::vector<std::vector<Polynomial>> L(size_t(n), std::vector<Polynomial>(size_t(n), zero));
    std::vector<std::vector<Polynomial>> X(size_t(n), std::vector<Polynomial>(size_t(n), zero));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) {
                U[size_t(i - 1)][size_t(j - 1)] = var("t" + std::to_string(i));
                L[size_t(i - 1)][size_t(j - 1)] = var("s" + std::to_string(i));
            } else if (i < j) {
                U[size_t(i - 1)][size_t(j - 1)] = var("u" + std::to_string(i) + std::to_string(j));
            } else {
                L[size_t(i - 1)][size_t(j - 1)] = var("l" + std::to_string(i) + std::to_string(j));
            }
            X[size_t(i - 1)][size_t(j - 1)] =
                var(op.tag + std::to_string(i) + std::to_string(j));
        }

    auto matmul = [&](const auto& A, const auto& B) {
        std::vector<std::vector<Polynomial>> R(size_t(n), std::vector<Polynomial>(size_t(n), zero));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    R[size_t(i)][size_t(j)] += A[size_t(i)][size_t(k)] * B[size_t(k)][size_t(j)];
        return R;
    };
    auto UXL = matmul(matmul(U, X), L);

    std::vector<Polynomial> images;
    images.reserve(size_t(n) * size_t(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) images.push_back(UXL[size_t(i)][size_t(j)]);
    Polynomial lhs = substitute(f, images);

    // Lattice coordinate k reads diagonal entry n+1-k.
    Polynomial monomial = Polynomial::constant(amb, Rational(1));
    for (int k = 1; k <= n; ++k) {
        long long e = mu.c[size_t(n - k)];
        monomial = monomial * pow(var("t" + std::to_string(k)), int(e)) *
                   pow(var("s" + std::to_string(k)), int(e));
    }
    Polynomial rhs = monomial * transport(f, amb);
    return lhs == rhs;
}

SemiInvariantWitness make_minor_witness(const OmegaOperator& op, const std::vector<int>& minor_exps,
                                        int det_exp) {
    if (int(minor_exps.size()) != op.n - 1)
        throw std::invalid_argument("make_minor_witness: need n-1 minor exponents");
    if (det_exp < 0) throw std::invalid_argument("make_minor_witness: det exponent must be >= 0");
    SemiInvariantWitness w;
    Polynomial f = Polynomial::constant(op.amb, Rational(1));
    Weight mu(std::vector<long long>(size_t(op.n), 0));
    for (int i = 1; i < op.n; ++i) {
        int e = minor_exps[size_t(i - 1)];
        if (e < 0) throw std::invalid_argument("make_minor_witness: negative exponent");
        if (e > 0) {
            f = f * pow(lower_right_minor(op, i), e);
            mu = mu + fundamental_weight(op.n, i) * e;
        }
    }
    f = f * pow(op.lambda, det_exp);
    mu = mu + det_weight(op.n) * det_exp;
    w.f = std::move(f);
    w.mu = mu;
    w.left_diag.assign(mu.c.rbegin(), mu.c.rend());
    w.right_diag = w.left_diag;
    w.verified = verify_semiinvariant(op, w.f, w.mu);
    return w;
}

OmegaWitnessResult omega_on_semiinvariant(const OmegaOperator& op, const SemiInvariantWitness& w,
                                          const RationalCone& monoid_cone) {
    if (!w.verified) throw std::invalid_argument("omega_on_semiinvariant: witness not verified");
    OmegaWitnessResult res;
    Weight shifted = w.mu - det_weight(op.n);
    res.weight_was_polynomial = shifted.is_dominant() && in_dual(monoid_cone, shifted);
    Polynomial g = omega_apply(op, w.f);
    if (g.is_zero()) {
        res.is_zero = true;
        return res;
    }
    if (!res.weight_was_polynomial || !verify_semiinvariant(op, g, shifted))
        throw std::runtime_error(
            "omega_on_semiinvariant: nonzero image fails the eigenvector identity");
    res.image.f = std::move(g);
    res.image.mu = shifted;
    res.image.left_diag.assign(shifted.c.rbegin(), shifted.c.rend());
    res.image.right_diag = res.image.left_diag;
    res.image.verified = true;
    return res;
}

Rational a_omega_classical(const OmegaOperator& op, const std::vector<int>& minor_exps,
                           int det_exp) {
    if (det_exp < 1) throw std::invalid_argument("a_omega_classical: det exponent must be >= 1");
    SemiInvariantWitness w = make_minor_witness(op, minor_exps, det_exp);
    if (!w.verified) throw std::runtime_error("a_omega_classical: constructed f is not an eigenvector");
    Polynomial g = omega_apply(op, w.f);
    Polynomial expected = Polynomial::constant(op.amb, Rational(1));
    for (int i = 1; i < op.n; ++i)
        if (minor_exps[size_t(i - 1)] > 0)
            expected = expected * pow(lower_right_minor(op, i), minor_exps[size_t(i - 1)]);
    expected = expected * pow(op.lambda, det_exp - 1);
    Rational a = evaluate_at_identity(g);
    if (g != scale(a, expected))
        throw std::runtime_error("a_omega_classical: image is not a scalar multiple of f/det");
    return a;
}

}  // namespace oforge
