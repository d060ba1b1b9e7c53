#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oforge/omega.hpp"
#include "oforge/rng.hpp"
#include "oforge/textio.hpp"
#include "oracles.hpp"

using namespace oforge;

namespace {
const OmegaOperator& op2() {
    static OmegaOperator op = OmegaOperator::classical(2);
    return op;
}
const OmegaOperator& op3() {
    static OmegaOperator op = OmegaOperator::classical(3);
    return op;
}
Polynomial P2(const std::string& t) { return parse_polynomial(t, op2().amb); }
}  // namespace

TEST_CASE("process on determinant powers") {
    CHECK(omega_apply(op2(), op2().lambda) == P2("2"));
    CHECK(omega_apply(op2(), P2("1")).is_zero());
    CHECK(omega_apply(op2(), P2("x11")).is_zero());
    CHECK(omega_apply(op2(), op2().lambda * op2().lambda) == scale(Rational(6), op2().lambda));
    CHECK(omega_apply(op3(), op3().lambda) ==
          Polynomial::constant(op3().amb, Rational(6)));
}

TEST_CASE("process matches the independent oracle") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        Polynomial f = random_polynomial(rng, op2().amb, 4, 5);
        CHECK(omega_apply(op2(), f) == test::oracle_omega(op2(), f));
    }
    for (int t = 0; t < 5; ++t) {
        Polynomial f = random_polynomial(rng, op3().amb, 3, 4);
        CHECK(omega_apply(op3(), f) == test::oracle_omega(op3(), f));
    }
}

TEST_CASE("iterated process") {
    Polynomial det2sq = op2().lambda * op2().lambda;
    CHECK(omega_power(op2(), det2sq, 2) == P2("12"));
    CHECK(omega_power(op2(), P2("x11"), 1).is_zero());
    CHECK(omega_power(op2(), det2sq, 0) == det2sq);
}

TEST_CASE("Cayley constants, n = 2") {
    CayleyConstants cc = cayley_constants(op2(), 6);
    std::vector<long long> expected_alpha{2, 6, 12, 20, 30, 42};
    std::vector<long long> expected_c{2, 12, 144, 2880, 86400, 3628800};
    for (int s = 1; s <= 6; ++s) {
        CHECK(cc.alphas.at(s) == Rational(expected_alpha[size_t(s - 1)]));
        CHECK(cc.cs.at(s) == Rational(expected_c[size_t(s - 1)]));
        CHECK(!cc.alphas.at(s).is_zero());
    }
    CHECK(cc.alphas_rs.at({1, 1}) == Rational(2));
    CHECK(cc.alphas_rs.at({2, 3}) == Rational(72));
    CHECK(cc.alphas_rs.at({2, 4}) == Rational(240));
    CHECK(cc.alphas_rs.at({4, 4}) == Rational(2880));
    // c_2 two ways: product of alphas and the iterated process itself
    CHECK(cc.cs.at(2) == cc.alphas.at(2) * cc.alphas.at(1));
    CHECK(omega_power(op2(), op2().lambda * op2().lambda, 2) == P2("12"));
}

TEST_CASE("Cayley constants, n = 3") {
    CayleyConstants cc = cayley_constants(op3(), 3);
    CHECK(cc.alphas.at(1) == Rational(6));
    CHECK(cc.alphas.at(2) == Rational(24));
    CHECK(cc.alphas.at(3) == Rational(60));
    CHECK(cc.cs.at(3) == Rational(6 * 24 * 60));
}

TEST_CASE("power identity on det powers") {
    for (int n : {2, 3}) {
        const OmegaOperator& op = n == 2 ? op2() : op3();
        const int s_max = n == 2 ? 4 : 3;
        CayleyConstants cc = cayley_constants(op, s_max);
        for (int s = 1; s <= s_max; ++s) {
            Polynomial ds = pow(op.lambda, s);
            Polynomial iter = ds;
            for (int r = 1; r <= s; ++r) {
                iter = omega_apply(op, iter);
                CHECK(iter * pow(op.lambda, r) == scale(cc.alphas_rs.at({r, s}), ds));
            }
        }
    }
}

TEST_CASE("translations") {
    Polynomial fY = right_translate(P2("x11"));
    AmbientPtr yx = fY.ambient();
    CHECK(fY == parse_polynomial("y11*x11 + y12*x21", yx));

    Polynomial detY = determinant(yx, 0);
    CHECK(right_translate(op2().lambda) == detY * transport(op2().lambda, yx));
    CHECK(left_translate(op2().lambda) == detY * transport(op2().lambda, yx));

    // the unit acts trivially: evaluate the translate at Y = Id
    Rng rng(13);
    for (int t = 0; t < 5; ++t) {
        Polynomial f = random_polynomial(rng, op2().amb, 4, 4);
        Polynomial fy = right_translate(f);
        std::vector<Polynomial> images;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                images.push_back(Polynomial::constant(op2().amb, Rational(i == j ? 1 : 0)));
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                images.push_back(Polynomial::variable(op2().amb, op2().amb->matrix_var(0, i, j)));
        CHECK(substitute(fy, images) == f);
    }
}

TEST_CASE("first rule") {
    CHECK(first_rule_check(op2(), P2("x11*x22")).ok);
    CHECK(first_rule_check(op2(), P2("1")).ok);
    CHECK(first_rule_check(op2(), op2().lambda).ok);
    Rng rng(17);
    for (int t = 0; t < 10; ++t)
        CHECK(first_rule_check(op2(), random_polynomial(rng, op2().amb, 4, 4)).ok);
    for (int t = 0; t < 3; ++t)
        CHECK(first_rule_check(op3(), random_polynomial(rng, op3().amb, 3, 3)).ok);
}

TEST_CASE("minor eigenvectors and their weights") {
    CHECK(lower_right_minor(op2(), 1) == P2("x22"));
    CHECK(lower_right_minor(op2(), 2) == op2().lambda);

    SemiInvariantWitness w = make_minor_witness(op2(), {1}, 1);
    CHECK(w.verified);
    CHECK(w.mu == Weight({2, 1}));
    CHECK(w.left_diag == std::vector<long long>{1, 2});

    SemiInvariantWitness w3 = make_minor_witness(op3(), {1, 1}, 1);
    CHECK(w3.verified);
    CHECK(w3.mu == Weight({3, 2, 1}));

    CHECK(verify_semiinvariant(op2(), op2().lambda, det_weight(2)));
    CHECK(!verify_semiinvariant(op2(), P2("x11 + x22"), Weight({1, 0})));
}

TEST_CASE("process on semi-invariants") {
    RationalCone cone = matrix_monoid_cone(2);

    SemiInvariantWitness f1 = make_minor_witness(op2(), {1}, 0);
    auto r1 = omega_on_semiinvariant(op2(), f1, cone);
    CHECK(r1.is_zero);
    CHECK(!r1.weight_was_polynomial);

    SemiInvariantWitness d = make_minor_witness(op2(), {0}, 1);
    auto r2 = omega_on_semiinvariant(op2(), d, cone);
    CHECK(!r2.is_zero);
    CHECK(r2.image.mu == Weight({0, 0}));
    CHECK(r2.image.f == P2("2"));

    SemiInvariantWitness xd = make_minor_witness(op2(), {1}, 1);
    auto r3 = omega_on_semiinvariant(op2(), xd, cone);
    CHECK(!r3.is_zero);
    CHECK(r3.image.mu == Weight({1, 0}));
    CHECK(r3.image.f == P2("3*x22"));
}

TEST_CASE("classical coefficients") {
    CHECK(a_omega_classical(op2(), {0}, 1) == Rational(2));
    CHECK(a_omega_classical(op2(), {1}, 1) == Rational(3));
    CHECK(a_omega_classical(op2(), {0}, 2) == Rational(6));
    CHECK(a_omega_classical(op2(), {2}, 1) == Rational(4));
    CHECK(a_omega_classical(op2(), {1}, 2) == Rational(8));
    CHECK(a_omega_classical(op2(), {3}, 3) == Rational(21));

    CHECK(a_omega_classical(op3(), {0, 0}, 1) == Rational(6));
    CHECK(a_omega_classical(op3(), {1, 0}, 1) == Rational(8));
    CHECK(a_omega_classical(op3(), {0, 1}, 1) == Rational(12));
    CHECK(a_omega_classical(op3(), {1, 1}, 1) == Rational(15));

    CHECK_THROWS_AS(a_omega_classical(op2(), {1}, 0), std::invalid_argument);
}

TEST_CASE("degree drop by n on homogeneous inputs") {
    Rng rng(19);
    for (int t = 0; t < 20; ++t) {
        // random homogeneous polynomial of degree 2..5
        int deg = 2 + int(rng.below(4));
        Polynomial f(op2().amb);
        for (int k = 0; k < 4; ++k) {
            std::vector<int> e(4, 0);
            for (int d = 0; d < deg; ++d) ++e[rng.below(4)];
            f.add_term(Monomial(std::move(e)), Rational(rng.int_in(1, 5)));
        }
        Polynomial g = omega_apply(op2(), f);
        if (!g.is_zero()) CHECK(g.homogeneous_degree() == deg - 2);
    }
}
