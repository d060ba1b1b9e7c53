#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oforge/polynomial.hpp"
#include "oforge/rng.hpp"
#include "oforge/textio.hpp"
#include "oracles.hpp"

using namespace oforge;

namespace {

AmbientPtr amb2() {
    static AmbientPtr a = matrix_ambient(2);
    return a;
}

Polynomial P(const std::string& text) { return parse_polynomial(text, amb2()); }

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(-2, -6) == Rational(1, 3));
    CHECK(Rational(2, -6) == Rational(-1, 3));
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(0, 5).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational::from_string("7/21") == Rational(1, 3));
    CHECK(Rational::from_string("-4") == Rational(-4));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2), -2) == Rational(1, 4));
}

TEST_CASE("ring arithmetic examples") {
    Polynomial det = determinant(amb2(), 0);
    CHECK(to_text(det) == "x11*x22 - x12*x21");

    CHECK((P("x11") + P("-1*x11")).is_zero());
    CHECK(det * P("1") == det);
    CHECK(det * det == P("x11^2*x22^2 - 2*x11*x12*x21*x22 + x12^2*x21^2"));
    CHECK(scale(Rational(1, 2), P("2*x11")) == P("x11"));
    CHECK_THROWS_AS(P("x11") + Polynomial::constant(matrix_ambient(3), Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    Polynomial det = determinant(amb2(), 0);
    CHECK(partial_derivative(det, "x11") == P("x22"));
    CHECK(partial_derivative(P("x11*x22"), "x12").is_zero());
    Polynomial d2 = partial_derivative(partial_derivative(det * det, "x11"), "x22");
    CHECK(d2 == P("2*x11*x22") + scale(Rational(2), det));
    CHECK(d2 == P("4*x11*x22 - 2*x12*x21"));
    CHECK_THROWS_AS(partial_derivative(det, "y11"), std::invalid_argument);
}

TEST_CASE("derivative matches the shift oracle on random polynomials") {
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        Polynomial p = random_polynomial(rng, amb2(), 5, 6);
        int var = int(rng.below(4));
        CHECK(partial_derivative(p, var) == test::oracle_derivative(p, var));
    }
}

TEST_CASE("substitution") {
    Polynomial det = determinant(amb2(), 0);
    std::vector<Polynomial> id_images, zero_images;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            id_images.push_back(Polynomial::constant(amb2(), Rational(i == j ? 1 : 0)));
            zero_images.push_back(Polynomial::zero(amb2()));
        }
    CHECK(substitute(det, id_images) == P("1"));
    CHECK(substitute(det, zero_images).is_zero());
    CHECK(evaluate_at_identity(det) == Rational(1));
    CHECK(evaluate_at_zero(det) == Rational(0));
    CHECK(evaluate_at_zero(P("3") + P("x11")) == Rational(3));
}

TEST_CASE("comultiplication realizes products") {
    Polynomial det = determinant(amb2(), 0);
    Polynomial dx11 = comultiply(P("x11"));
    AmbientPtr yz = dx11.ambient();
    CHECK(dx11 == parse_polynomial("y11*z11 + y12*z21", yz));

    Polynomial ddet = comultiply(det);
    Polynomial detY = determinant(yz, 0), detZ = determinant(yz, 1);
    CHECK(ddet == detY * detZ);

    CHECK(comultiply(P("1")) == Polynomial::constant(yz, Rational(1)));
}

TEST_CASE("coassociativity on random polynomials") {
    Rng rng(23);
    AmbientPtr abc = make_ambient({VariableSet::matrix(2, "a"), VariableSet::matrix(2, "b"),
                                   VariableSet::matrix(2, "c")});
    auto pair_image = [&](int set1, int set2) {
        std::vector<Polynomial> im;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                Polynomial e(abc);
                for (int k = 1; k <= 2; ++k)
                    e += Polynomial::variable(abc, abc->matrix_var(set1, i, k)) *
                         Polynomial::variable(abc, abc->matrix_var(set2, k, j));
                im.push_back(e);
            }
        return im;
    };
    auto ab = pair_image(0, 1), bc = pair_image(1, 2);
    for (int t = 0; t < 10; ++t) {
        Polynomial f = random_polynomial(rng, amb2(), 4, 4);
        Polynomial d = comultiply(f);  // in [y | z]
        std::vector<Polynomial> left = ab, right;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                left.push_back(Polynomial::variable(abc, abc->matrix_var(2, i, j)));
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                right.push_back(Polynomial::variable(abc, abc->matrix_var(0, i, j)));
        right.insert(right.end(), bc.begin(), bc.end());
        CHECK(substitute(d, left) == substitute(d, right));
    }
}

TEST_CASE("counit law through either tensorand") {
    Rng rng(29);
    std::vector<Polynomial> id_consts, xvars;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            id_consts.push_back(Polynomial::constant(amb2(), Rational(i == j ? 1 : 0)));
            xvars.push_back(Polynomial::variable(amb2(), amb2()->matrix_var(0, i, j)));
        }
    for (int t = 0; t < 10; ++t) {
        Polynomial f = random_polynomial(rng, amb2(), 4, 4);
        Polynomial d = comultiply(f);
        std::vector<Polynomial> lr = id_consts;
        lr.insert(lr.end(), xvars.begin(), xvars.end());
        CHECK(substitute(d, lr) == f);
        std::vector<Polynomial> rl = xvars;
        rl.insert(rl.end(), id_consts.begin(), id_consts.end());
        CHECK(substitute(d, rl) == f);
    }
}

TEST_CASE("zero evaluation is an algebra morphism") {
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        Polynomial f = random_polynomial(rng, amb2(), 3, 4);
        Polynomial g = random_polynomial(rng, amb2(), 3, 4);
        CHECK(evaluate_at_zero(f * g) == evaluate_at_zero(f) * evaluate_at_zero(g));
    }
}

TEST_CASE("convolution") {
    Polynomial det = determinant(amb2(), 0);
    PolyEndo id = [](const Polynomial& p) { return p; };
    PolyEndo u_nu = [](const Polynomial& p) {
        return Polynomial::constant(p.ambient(), evaluate_at_zero(p));
    };
    PolyEndo u_eps = [](const Polynomial& p) {
        return Polynomial::constant(p.ambient(), evaluate_at_identity(p));
    };

    CHECK(convolve(u_nu, id, det).is_zero());
    CHECK(convolve(id, id, P("x11")) == P("x11^2 + x12*x21"));
    CHECK(convolve(u_eps, id, P("x12")) == P("x12"));

    Rng rng(37);
    for (int t = 0; t < 10; ++t) {
        Polynomial f = random_polynomial(rng, amb2(), 4, 4);
        CHECK(convolve(u_nu, id, f) == Polynomial::constant(amb2(), evaluate_at_zero(f)));
        CHECK(convolve(id, u_eps, f) == f);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(41);
    for (int t = 0; t < 15; ++t) {
        Polynomial p = random_polynomial(rng, amb2(), 3, 4);
        Polynomial q = random_polynomial(rng, amb2(), 3, 4);
        Polynomial r = random_polynomial(rng, amb2(), 3, 4);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + (-p)).is_zero());
    }
}

TEST_CASE("text format round trip") {
    CHECK(to_text(Polynomial::zero(amb2())) == "0");
    CHECK(to_text(P("x11 - x11")) == "0");
    CHECK(to_text(P("-3/2*x11^2*x22 + x12")) == "-3/2*x11^2*x22 + x12");
    CHECK(to_text(P("5")) == "5");
    CHECK(P("x11*x22-x12*x21") == determinant(amb2(), 0));

    Rng rng(43);
    for (int t = 0; t < 25; ++t) {
        Polynomial p = random_polynomial(rng, amb2(), 5, 8);
        CHECK(parse_polynomial(to_text(p), amb2()) == p);
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x11 + "), ParseError);
    CHECK_THROWS_AS(P("x11 * * x22"), ParseError);
    try {
        P("x11 + q7");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
        CHECK(std::string(e.what()).find("q7") != std::string::npos);
    }
}

TEST_CASE("homogeneous degree bookkeeping") {
    Polynomial det = determinant(amb2(), 0);
    CHECK(det.homogeneous_degree() == 2);
    CHECK((det * det).homogeneous_degree() == 4);
    CHECK(!(P("x11 + 1").homogeneous_degree().has_value()));
    CHECK(Polynomial::zero(amb2()).total_degree() == -1);
}

TEST_CASE("exact division") {
    Polynomial det = determinant(amb2(), 0);
    Polynomial p = det * det * P("x11 + 3*x22");
    auto q = try_divide(p, det);
    REQUIRE(q.has_value());
    CHECK(*q == det * P("x11 + 3*x22"));
    CHECK(!try_divide(P("x11"), det).has_value());
    CHECK(!try_divide(det + P("1"), det).has_value());
}
