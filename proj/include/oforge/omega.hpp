#ifndef OFORGE_OMEGA_HPP
#define OFORGE_OMEGA_HPP

#include <map>
#include <string>
#include <vector>

#include "oforge/polynomial.hpp"
#include "oforge/weightlattice.hpp"

namespace oforge {

/// The classical process on k[M_n]: the order-n differential operator
/// sum_{sigma} sg(sigma) d^n/dx_{1 sigma(1)} ... dx_{n sigma(n)}, attached
/// to the character lambda = det.
///
/// Weight bookkeeping convention: lattice coordinate k corresponds to
/// diagonal entry n+1-k, so the lower-right i x i minor carries the
/// standard dominant fundamental weight (1,...,1,0,...,0).
struct OmegaOperator {
    int n = 0;
    std::string tag = "x";
    AmbientPtr amb;     // k[x11..xnn]
    Polynomial lambda;  // the n x n symbolic determinant

    static OmegaOperator classical(int n, const std::string& tag = "x");
};

/// Applies the process once. f may live in a larger ambient (extra symbolic
/// blocks are treated as constants); it must contain the operator's matrix
/// block.
Polynomial omega_apply(const OmegaOperator& op, const Polynomial& f);

/// r-fold application; r = 0 is the identity.
Polynomial omega_power(const OmegaOperator& op, const Polynomial& f, int r);

struct CayleyConstants {
    int n = 0;
    std::map<int, Rational> alphas;                    // s -> alpha_s
    std::map<std::pair<int, int>, Rational> alphas_rs; // (r,s) -> alpha_{r,s}, r <= s
    std::map<int, Rational> cs;                        // s -> alpha_s ... alpha_1
};

/// Computes alpha_s, alpha_{r,s} and c_s for s <= s_max, checking the
/// eigen-identity on det^s exactly before recording each constant. Throws
/// if some det^s is not mapped to a scalar multiple of det^{s-1}.
CayleyConstants cayley_constants(const OmegaOperator& op, int s_max);

/// (f.Y)(X) = f(YX), as an exact polynomial in the [Y | X] ambient.
Polynomial right_translate(const Polynomial& f, const std::string& ytag = "y");
/// (Y.f)(X) = f(XY).
Polynomial left_translate(const Polynomial& f, const std::string& ytag = "y");

struct FirstRuleReport {
    bool ok = false;
    Polynomial residual_right;  // Omega(f.Y) - det(Y) (Omega f).Y
    Polynomial residual_left;   // Omega(Y.f) - det(Y) Y.(Omega f)
    Polynomial residual_power;  // Omega^2(f.Y) - det(Y)^2 (Omega^2 f).Y
};

/// Checks the defining identities with a fully symbolic translate, plus the
/// r = 2 power variant.
FirstRuleReport first_rule_check(const OmegaOperator& op, const Polynomial& f);

struct SemiInvariantWitness {
    Polynomial f;
    Weight mu;                          // lattice coordinates (reversed diagonal order)
    std::vector<long long> left_diag;   // eigen-exponents of the upper factor's diagonal
    std::vector<long long> right_diag;  // eigen-exponents of the lower factor's diagonal
    bool verified = false;
};

/// Exact eigenvector identity f(U X L) = mu(diag U) mu(diag L) f(X) with
/// fully symbolic triangular factors (diagonal and strict entries all
/// independent variables).
bool verify_semiinvariant(const OmegaOperator& op, const Polynomial& f, const Weight& mu);

/// Lower-right i x i minor of the coordinate matrix.
Polynomial lower_right_minor(const OmegaOperator& op, int i);

/// f = f_1^{r_1} ... f_{n-1}^{r_{n-1}} det^r with its weight, verified at
/// construction.
SemiInvariantWitness make_minor_witness(const OmegaOperator& op, const std::vector<int>& minor_exps,
                                        int det_exp);

struct OmegaWitnessResult {
    bool is_zero = false;
    bool weight_was_polynomial = false;  // mu - lambda polynomial dominant?
    SemiInvariantWitness image;          // valid when !is_zero
};

/// Applies the process to a verified witness: the image is zero or a
/// witness of weight mu - lambda; a nonzero image failing the eigenvector
/// identity throws (implementation-bug signal).
OmegaWitnessResult omega_on_semiinvariant(const OmegaOperator& op, const SemiInvariantWitness& w,
                                          const RationalCone& monoid_cone);

/// The scalar a with Omega(f) = a * f / det for the minor eigenvector
/// f = f_1^{r_1} ... det^r, det_exp >= 1; verified as an exact identity.
Rational a_omega_classical(const OmegaOperator& op, const std::vector<int>& minor_exps, int det_exp);

}  // namespace oforge

#endif
