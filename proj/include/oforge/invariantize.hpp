#ifndef OFORGE_INVARIANTIZE_HPP
#define OFORGE_INVARIANTIZE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oforge/omega.hpp"
#include "oforge/reps.hpp"

namespace oforge {

/// The matrix of I_{r,s}: v -> sum v_0 Omega^r(det^s v_1)(0), i.e.
/// N[j][i] = nu(Omega^r(det^s C[j][i])).
RatMat I_rs_matrix(const PolynomialComodule& V, const OmegaOperator& op, int r, int s);

RatVec I_rs(const PolynomialComodule& V, const OmegaOperator& op, const RatVec& v, int r, int s);

/// Exact identity det^s (C(x) u) = det^r u for u = I_{r,s}(v), checked
/// componentwise as polynomials.
bool second_rule_part2(const PolynomialComodule& V, const OmegaOperator& op, const RatVec& v,
                       int r, int s);

/// I_{r,s} is a morphism for the det^s-twisted structures: the image of a
/// twisted-action column under I equals I applied entrywise, symbolically.
bool second_rule_morphism(const PolynomialComodule& V, const OmegaOperator& op, int r, int s);

/// J(f) = Omega(f det)(0) / alpha_1; a two-sided normalized integral.
Rational integral_J(const OmegaOperator& op, const Polynomial& f);

/// Both Sweedler identities sum f_1 J(f_2) = J(f) 1 = sum J(f_1) f_2, as
/// exact polynomial identities.
bool integral_two_sided(const OmegaOperator& op, const Polynomial& f);

/// J(f . Y) = J(f) as an identity in the symbolic translate Y.
bool integral_translation_invariant(const OmegaOperator& op, const Polynomial& f);

/// The Reynolds operator (1/alpha_1) I_{1,1} as a rational matrix.
RatMat reynolds_matrix(const PolynomialComodule& V, const OmegaOperator& op);

RatVec reynolds(const PolynomialComodule& V, const OmegaOperator& op, const RatVec& v);

struct DegreeReport {
    int degree = 0;
    std::optional<int> target_weight;        // absent: no integral weight, no invariants
    int sweep_dim = 0;                       // dim of the I_{r,s}-produced space
    int oracle_dim = 0;
    int generated_dim = 0;                   // span of products of earlier generators
    bool agreement = true;
    std::vector<std::string> new_generators; // text form, coefficient variables
};

struct InvariantReport {
    std::string module_name;
    int degree_bound = 0;
    std::vector<DegreeReport> degrees;
    std::vector<std::pair<int, std::string>> generators;  // (degree, text)
    bool all_agree = true;
};

/// Degree-by-degree generator search for the semi-invariants of the target
/// weights inside S(cf): per degree, sweep I_{r,s} over the monomial basis,
/// cross-check the span against the linear oracle, and keep an oracle-basis
/// complement of the span of products of earlier generators. Properness of
/// the needed Cayley constant is verified before any normalization.
InvariantReport hilbert_generators(const PolynomialComodule& cf,
                                   const std::function<std::optional<int>(int)>& weight_per_degree,
                                   int degree_bound, const OmegaOperator& op, int dim_cap = 200);

/// A binary-form invariant problem lifted from the special linear group to
/// the full monoid: coefficient functions with their central character.
struct LiftedProblem {
    int form_degree = 0;
    PolynomialComodule cf;     // dual coefficient module (polynomial)
    int central_exponent = 0;  // homogeneous entry degree of cf
};

LiftedProblem semisimple_lift(int form_degree);

/// det-weight of degree-e invariants: central_exponent * e / 2, or absent
/// when that is not an integer (no invariants in that degree).
std::optional<int> lifted_weight(const LiftedProblem& p, int degree);

/// Convenience wrapper running hilbert_generators on a lifted problem.
InvariantReport binary_form_invariants(int form_degree, int degree_bound, int dim_cap = 200);

/// Coordinates of a coefficient-variable polynomial in the degree-e
/// monomial basis of S^e(cf); the polynomial must be homogeneous of
/// degree e.
RatVec coefficient_vector(const PolynomialComodule& cf, const Polynomial& p, int e);

/// Inverse of coefficient_vector.
Polynomial coefficient_polynomial(const PolynomialComodule& cf, const RatVec& v, int e,
                                  const AmbientPtr& coeff_amb);

/// The ambient ring of coefficient variables for cf (labels as variables).
AmbientPtr coefficient_ambient(const PolynomialComodule& cf);

}  // namespace oforge

#endif
