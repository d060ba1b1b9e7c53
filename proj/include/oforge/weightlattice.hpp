#ifndef OFORGE_WEIGHTLATTICE_HPP
#define OFORGE_WEIGHTLATTICE_HPP

#include <string>
#include <utility>
#include <vector>

#include "oforge/linalg.hpp"

namespace oforge {

/// Integer T-weight of GL_n in standard coordinates (Z^n). Dominance is the
/// usual lambda_1 >= ... >= lambda_n chamber.
struct Weight {
    std::vector<long long> c;

    Weight() = default;
    explicit Weight(std::vector<long long> coords) : c(std::move(coords)) {}
    int n() const { return int(c.size()); }

    bool is_dominant() const;
    long long sum() const;
    bool is_nonnegative() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator*(long long k) const;
    bool operator==(const Weight& o) const { return c == o.c; }
    bool operator<(const Weight& o) const { return c < o.c; }

    std::string str() const;
};

Weight fundamental_weight(int n, int i);  // (1,...,1,0,...,0), i leading ones
Weight simple_root(int n, int i);         // e_i - e_{i+1}, 1-based i
Weight det_weight(int n);                 // (1,...,1)

/// lambda <= mu in dominance order: mu - lambda is a nonnegative integer
/// combination of simple roots (equal sums, partial sums >= 0).
bool dominance_leq(const Weight& lambda, const Weight& mu);

/// Finitely generated rational polyhedral cone, given by generators.
struct RationalCone {
    std::vector<RatVec> generators;
    int dim = 0;

    static RationalCone from_weights(const std::vector<Weight>& ws, int dim);
};

/// v in cone(generators)? Exact Fourier-Motzkin feasibility.
bool cone_member(const RationalCone& c, const RatVec& v);
bool cone_member(const RationalCone& c, const Weight& w);

/// <g, v> >= 0 for every generator g of c, i.e. v in the dual cone.
bool in_dual(const RationalCone& c, const RatVec& v);
bool in_dual(const RationalCone& c, const Weight& w);

/// Generator description of the dual cone, by incremental double
/// description over the exact rationals.
RationalCone dual_cone(const RationalCone& c);

/// Contains no line.
bool is_strictly_convex(const RationalCone& c);

/// The classification cone of the full matrix monoid M_n: simple coroots
/// plus e_n. Its dual meets the dominant chamber in the polynomial dominant
/// weights {l_1 >= ... >= l_n >= 0}.
RationalCone matrix_monoid_cone(int n);

struct Box {
    long long lo = 0, hi = 0;
};

/// All dominant weights inside the coordinate box that lie in the dual of
/// the monoid cone.
std::vector<Weight> polynomial_dominant_weights(const RationalCone& monoid_cone, int n, Box box);

struct ViolationReport {
    bool ok = true;
    std::vector<std::pair<Weight, Weight>> violations;  // (witness, culprit)
};

/// Saturation within the box: n*lambda in S (n <= max_multiple) forces
/// lambda in S, for dominant lambda.
ViolationReport saturation_check(const std::vector<Weight>& S, int n, Box box, int max_multiple = 4);

/// Ideal property within the box: mu in S and lambda dominant with
/// lambda <= mu force lambda in S.
ViolationReport ideal_check(const std::vector<Weight>& S, int n, Box box);

/// The coefficient family of a process for the character lambda: one entry
/// per polynomial dominant weight mu, free unless mu - lambda fails the
/// polynomial-dominance test (then the coefficient is forced to vanish).
struct OmegaCoefficientFamily {
    Weight lambda;
    std::vector<std::pair<Weight, bool>> entries;  // (mu, free?)
    bool proper_in_truncation = true;              // all det-power entries free

    bool is_free(const Weight& mu) const;
};

OmegaCoefficientFamily omega_coefficient_family(const Weight& lambda,
                                                const std::vector<Weight>& poly_weights,
                                                const RationalCone& monoid_cone);

/// Monoid cone built from a central character: generators (lambda - rho)
/// and the simple coroots, in the orthogonal (semisimple | center)
/// splitting of Q^n. Verifies rho = sum of semisimple fundamental-weight
/// parts = half the sum of positive roots as an exact vector identity, and
/// certifies strict convexity of the cone enlarged by the simple roots.
struct MonoidConeResult {
    RationalCone cone;
    RationalCone enlarged;
    bool identity_ok = false;
    bool strictly_convex = false;
    std::string message;
};

MonoidConeResult monoid_cone_from_character(int n, const Weight& lambda);

}  // namespace oforge

#endif
