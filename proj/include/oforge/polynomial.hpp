#ifndef OFORGE_POLYNOMIAL_HPP
#define OFORGE_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "oforge/rational.hpp"
#include "oforge/variables.hpp"

namespace oforge {

/// Exponent vector over an ambient's variables. Total degree is cached for
/// the graded ordering.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial unit(int arity);
    static Monomial var(int arity, int idx, int power = 1);

    int arity() const { return int(e_.size()); }
    int operator[](int i) const { return e_[size_t(i)]; }
    int degree() const { return deg_; }
    bool is_unit() const { return deg_ == 0; }
    const std::vector<int>& exponents() const { return e_; }

    Monomial times(const Monomial& o) const;
    /// Copy with exponent of variable i replaced.
    Monomial with_exponent(int i, int v) const;
    /// Componentwise quotient, or nullopt if any exponent would go negative.
    std::optional<Monomial> divide_by(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

private:
    std::vector<int> e_;
    int deg_ = 0;
};

/// Graded-lexicographic, descending: leading term first. Used for canonical
/// printing and term iteration only.
struct MonomialDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.exponents() > b.exponents();
    }
};

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed ambient. No zero terms are ever stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialDesc>;

    /// Zero polynomial of the empty ring; a placeholder for struct members.
    Polynomial() : amb_(empty_ambient()) {}
    explicit Polynomial(AmbientPtr amb) : amb_(std::move(amb)) {}

    static const AmbientPtr& empty_ambient();
    static Polynomial zero(AmbientPtr amb) { return Polynomial(std::move(amb)); }
    static Polynomial constant(AmbientPtr amb, const Rational& c);
    static Polynomial variable(AmbientPtr amb, int index);
    static Polynomial variable(AmbientPtr amb, const std::string& name);
    static Polynomial monomial(AmbientPtr amb, const Monomial& m, const Rational& c);

    const AmbientPtr& ambient() const { return amb_; }
    int arity() const { return amb_->arity(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
    /// Common degree of all terms, or nullopt when inhomogeneous / zero.
    std::optional<int> homogeneous_degree() const;
    /// Degree in a single variable.
    int degree_in(int var) const;

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    AmbientPtr amb_;
    TermMap terms_;
};

Polynomial scale(const Rational& c, const Polynomial& p);
Polynomial pow(const Polynomial& p, int e);

/// Formal partial derivative with respect to variable index `var`.
Polynomial partial_derivative(const Polynomial& p, int var);
Polynomial partial_derivative(const Polynomial& p, const std::string& var);

/// Substitutes images[i] for variable i. Every variable must be mapped and
/// all images must share one target ambient.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);

/// Re-expresses p in `target`, matching variables by name (pure renaming /
/// embedding; every variable actually occurring in p must exist in target).
Polynomial transport(const Polynomial& p, const AmbientPtr& target);

/// Evaluates all variables at rational values.
Rational evaluate(const Polynomial& p, const std::vector<Rational>& point);

/// The symbolic n x n determinant of the matrix set `which` of amb.
Polynomial determinant(const AmbientPtr& amb, int which_set);

/// Comultiplication of f in a single matrix-coordinate ring k[M_n]:
/// Delta(f)(Y,Z) = f(YZ), realized in the two-block ambient [Y | Z].
Polynomial comultiply(const Polynomial& f, const std::string& ytag = "y",
                      const std::string& ztag = "z");

/// Counit: evaluation at the identity matrix. Requires a single matrix-set
/// ambient.
Rational evaluate_at_identity(const Polynomial& f);
/// Evaluation at the zero matrix, i.e. the constant term.
Rational evaluate_at_zero(const Polynomial& f);

using PolyEndo = std::function<Polynomial(const Polynomial&)>;

/// Convolution (T * S)(f) = sum T(f_1) S(f_2), with Delta(f) = f(YZ) split
/// term by term. T and S must be linear on the degree-bounded subspace that
/// f generates; that is the caller's contract.
Polynomial convolve(const PolyEndo& T, const PolyEndo& S, const Polynomial& f);

/// Exact division attempt: returns q with p == q*d, or nullopt.
std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& d);

}  // namespace oforge

#endif
