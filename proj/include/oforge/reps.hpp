#ifndef OFORGE_REPS_HPP
#define OFORGE_REPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "oforge/linalg.hpp"
#include "oforge/polynomial.hpp"
#include "oforge/weightlattice.hpp"

namespace oforge {

/// det^power as a character of M_n. Polynomial iff power >= 0; negative
/// powers are characters of the unit group only.
struct Character {
    int n = 0;
    int power = 0;

    bool is_polynomial() const { return power >= 0; }
    Weight weight() const { return det_weight(n) * power; }
    /// Value at a matrix point; negative powers require det != 0.
    Rational operator()(const RatMat& point) const;
};

/// A finite-dimensional polynomial module of M_n, given by its coefficient
/// matrix C(x): column j of C holds the coordinates of the action on the
/// j-th basis vector, so C(AB) = C(A) C(B) and C(Id) = Id.
struct PolynomialComodule {
    int n = 0;
    AmbientPtr xamb;  // k[x11..xnn]
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<Polynomial>> C;  // C[row][col]
    int twist = 0;                           // accumulated det power
    std::string name;
};

enum class VerifyMode { Full, Sampled, Auto };

struct ComoduleCheck {
    bool multiplicative = false;
    bool counital = false;
    bool zero_idempotent = false;
    std::string mode;  // "full" or "sampled"
    bool ok() const { return multiplicative && counital && zero_idempotent; }
};

/// Checks C(XY) = C(X)C(Y) (fully symbolically, or exactly at seeded random
/// integer matrix pairs when the symbolic check would be too large and mode
/// is Auto), C(Id) = Id, and C(0)^2 = C(0).
ComoduleCheck verify_comodule(const PolynomialComodule& V, VerifyMode mode = VerifyMode::Auto,
                              int samples = 5, unsigned long long seed = 20260810);

/// Builds a module from raw data; throws unless the comodule laws verify.
PolynomialComodule make_comodule(int n, std::vector<std::string> labels,
                                 std::vector<std::vector<Polynomial>> entries, std::string name,
                                 int twist = 0, VerifyMode mode = VerifyMode::Auto);

PolynomialComodule trivial_module(int n);
/// k_{det^k}: the one-dimensional module with matrix [det^k], k >= 0.
PolynomialComodule character_module(int n, int detpow);

/// Binary forms of degree d under (m.F)(u,v) = F((u,v) m); basis
/// u^d, u^{d-1} v, ..., v^d. Entries are homogeneous of degree d.
PolynomialComodule binary_forms_module(int d);

/// The module of linear coefficient functions: transposition is an
/// antiautomorphism of M_n, so C*(x) = C(x^T)^T is again a left polynomial
/// module. Labels become the form-coefficient letters a, b, c, ...
PolynomialComodule dual_action_module(const PolynomialComodule& V);

/// Exponent vectors of total degree e over dim symbols, in descending
/// lexicographic order (the basis enumeration used by symmetric_power).
std::vector<std::vector<int>> sym_power_basis(int dim, int e);

/// e-th symmetric power on the monomial basis. Refuses dimensions above
/// dim_cap.
PolynomialComodule symmetric_power(const PolynomialComodule& V, int e, int dim_cap = 200);

PolynomialComodule tensor_product(const PolynomialComodule& A, const PolynomialComodule& B);

/// A module of the unit group only: entries are num / det^den_pow.
struct RationalRep {
    int n = 0;
    AmbientPtr xamb;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<Polynomial>> num;
    int den_pow = 0;
    std::string name;
};

RationalRep as_rational(const PolynomialComodule& V);
RationalRep twist_rational(const RationalRep& R, int k);
RationalRep tensor_rational(const RationalRep& A, const RationalRep& B);

/// The group contragredient (C(x)^{-1})^T = cofactor(C)(x) / det(C)(x),
/// with det C(x) required to be an exact power of det(x).
RationalRep contragredient_rational(const PolynomialComodule& V);

/// Result of twisting by det^k: polynomial whenever the entries allow it
/// (k >= 0, or every entry divisible by det^{-k}), rational otherwise.
struct TwistResult {
    std::optional<PolynomialComodule> poly;
    std::optional<RationalRep> rational;
};
TwistResult twist(const PolynomialComodule& V, int k);

/// Least n_V with det^{n_V} C polynomial (may be negative).
int minimal_twist_exponent(const RationalRep& R);

/// Exact rational basis of {v : C(x) v = det(x)^k v}, solved monomial by
/// monomial with fraction-free elimination and re-verified symbolically.
/// This is the module-level ground truth the process machinery is checked
/// against.
RatMat semi_invariant_oracle(const PolynomialComodule& V, int detpow);

/// F (dim_W x dim_V) intertwines: C_W(x) F = F C_V(x) identically.
bool is_module_morphism(const PolynomialComodule& V, const PolynomialComodule& W, const RatMat& F);

/// Common homogeneous degree of the nonzero entries of C, if any.
std::optional<int> entry_degree(const PolynomialComodule& V);

std::string module_descriptor_json(const PolynomialComodule& V);
PolynomialComodule module_from_descriptor_json(const std::string& text);

}  // namespace oforge

#endif
