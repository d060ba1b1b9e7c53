#include "oforge/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oforge {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int v : e_) {
        if (v < 0) throw std::invalid_argument("Monomial: negative exponent");
        deg_ += v;
    }
}

Monomial Monomial::unit(int arity) { return Monomial(std::vector<int>(size_t(arity), 0)); }

Monomial Monomial::var(int arity, int idx, int power) {
    std::vector<int> e(size_t(arity), 0);
    e.at(size_t(idx)) = power;
    return Monomial(std::move(e));
}

Monomial Monomial::times(const Monomial& o) const {
    if (arity() != o.arity()) throw std::invalid_argument("Monomial::times: arity mismatch");
    std::vector<int> e(e_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::with_exponent(int i, int v) const {
    std::vector<int> e(e_);
    e.at(size_t(i)) = v;
    return Monomial(std::move(e));
}

std::optional<Monomial> Monomial::divide_by(const Monomial& o) const {
    if (arity() != o.arity()) throw std::invalid_argument("Monomial::divide_by: arity mismatch");
    std::vector<int> e(e_);
    for (size_t i = 0; i < e.size(); ++i) {
        e[i] -= o.e_[i];
        if (e[i] < 0) return std::nullopt;
    }
    return Monomial(std::move(e));
}

static void check_ambient(const Polynomial& a, const Polynomial& b, const char* op) {
    if (!same_ambient(a.ambient(), b.ambient()))
        throw std::invalid_argument(std::string(op) + ": ambient mismatch");
}

const AmbientPtr& Polynomial::empty_ambient() {
    static const AmbientPtr amb = std::make_shared<const Ambient>();
    return amb;
}

Polynomial Polynomial::constant(AmbientPtr amb, const Rational& c) {
    Polynomial p(amb);
    p.add_term(Monomial::unit(amb->arity()), c);
    return p;
}

Polynomial Polynomial::variable(AmbientPtr amb, int index) {
    Polynomial p(amb);
    p.add_term(Monomial::var(amb->arity(), index), Rational(1));
    return p;
}

Polynomial Polynomial::variable(AmbientPtr amb, const std::string& name) {
    int idx = amb->index_of(name);
    if (idx < 0) throw std::invalid_argument("Polynomial::variable: unknown variable '" + name + "'");
    return variable(amb, idx);
}

Polynomial Polynomial::monomial(AmbientPtr amb, const Monomial& m, const Rational& c) {
    if (m.arity() != amb->arity())
        throw std::invalid_argument("Polynomial::monomial: arity mismatch");
    Polynomial p(amb);
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
    return coefficient(Monomial::unit(arity()));
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.arity() != arity()) throw std::invalid_argument("add_term: arity mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_ambient(*this, o, "add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_ambient(*this, o, "sub");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_ambient(a, b, "mul");
    Polynomial r(a.ambient());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.ambient());
    for (const auto& [m, c] : a.terms()) r.add_term(m, -c);
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ambient(a.ambient(), b.ambient())) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (!(ia->first == ib->first) || ia->second != ib->second) return false;
    return true;
}

Polynomial scale(const Rational& c, const Polynomial& p) {
    Polynomial r(p.ambient());
    if (c.is_zero()) return r;
    for (const auto& [m, k] : p.terms()) r.add_term(m, c * k);
    return r;
}

Polynomial pow(const Polynomial& p, int e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    Polynomial acc = Polynomial::constant(p.ambient(), Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

Polynomial partial_derivative(const Polynomial& p, int var) {
    if (var < 0 || var >= p.arity())
        throw std::invalid_argument("partial_derivative: unknown variable");
    Polynomial r(p.ambient());
    for (const auto& [m, c] : p.terms()) {
        int e = m[var];
        if (e == 0) continue;
        r.add_term(m.with_exponent(var, e - 1), c * Rational(e));
    }
    return r;
}

Polynomial partial_derivative(const Polynomial& p, const std::string& var) {
    int idx = p.ambient()->index_of(var);
    if (idx < 0) throw std::invalid_argument("partial_derivative: unknown variable '" + var + "'");
    return partial_derivative(p, idx);
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (int(images.size()) != p.arity())
        throw std::invalid_argument("substitute: every ambient variable must be mapped");
    if (images.empty()) return p;
    const AmbientPtr& target = images.front().ambient();
    for (const auto& im : images)
        if (!same_ambient(im.ambient(), target))
            throw std::invalid_argument("substitute: images must share one ambient");

    // Lazy power cache per variable.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](int var, int e) -> const Polynomial& {
        auto& cache = powers[size_t(var)];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
        while (int(cache.size()) <= e) cache.push_back(cache.back() * images[size_t(var)]);
        return cache[size_t(e)];
    };

    Polynomial r(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (int v = 0; v < p.arity(); ++v)
            if (m[v] > 0) term = term * power_of(v, m[v]);
        r += term;
    }
    return r;
}

Polynomial transport(const Polynomial& p, const AmbientPtr& target) {
    std::vector<int> where(size_t(p.arity()), -1);
    Polynomial r(target);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> e(size_t(target->arity()), 0);
        for (int v = 0; v < p.arity(); ++v) {
            if (m[v] == 0) continue;
            if (where[size_t(v)] < 0) {
                where[size_t(v)] = target->index_of(p.ambient()->name(v));
                if (where[size_t(v)] < 0)
                    throw std::invalid_argument("transport: variable '" + p.ambient()->name(v) +
                                                "' absent from target ambient");
            }
            e[size_t(where[size_t(v)])] += m[v];
        }
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
    if (int(point.size()) != p.arity()) throw std::invalid_argument("evaluate: arity mismatch");
    Rational total(0);
    for (const auto& [m, c] : p.terms()) {
        Rational v = c;
        for (int i = 0; i < p.arity(); ++i)
            if (m[i] > 0) v *= pow(point[size_t(i)], m[i]);
        total += v;
    }
    return total;
}

Polynomial determinant(const AmbientPtr& amb, int which_set) {
    const auto& s = amb->sets().at(size_t(which_set));
    if (s.kind != VarKind::Matrix) throw std::invalid_argument("determinant: not a matrix set");
    const int n = s.n;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial det(amb);
    int sign = 1;
    // Iterate permutations in lexicographic order, tracking parity.
    do {
        std::vector<int> e(size_t(amb->arity()), 0);
        for (int i = 0; i < n; ++i) e[size_t(amb->matrix_var(which_set, i + 1, perm[size_t(i)] + 1))] += 1;
        // parity of perm
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[size_t(i)] > perm[size_t(j)]) ++inv;
        sign = (inv % 2 == 0) ? 1 : -1;
        det.add_term(Monomial(std::move(e)), Rational(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

static int single_matrix_set(const Polynomial& f, const char* op) {
    const auto& sets = f.ambient()->sets();
    if (sets.size() != 1 || sets[0].kind != VarKind::Matrix)
        throw std::invalid_argument(std::string(op) + ": requires a single matrix-coordinate ambient");
    return 0;
}

Polynomial comultiply(const Polynomial& f, const std::string& ytag, const std::string& ztag) {
    int which = single_matrix_set(f, "comultiply");
    const int n = f.ambient()->sets()[size_t(which)].n;
    AmbientPtr target = make_ambient({VariableSet::matrix(n, ytag), VariableSet::matrix(n, ztag)});
    std::vector<Polynomial> images;
    images.reserve(size_t(n) * size_t(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Polynomial e(target);
            for (int k = 1; k <= n; ++k)
                e += Polynomial::variable(target, target->matrix_var(0, i, k)) *
                     Polynomial::variable(target, target->matrix_var(1, k, j));
            images.push_back(e);
        }
    return substitute(f, images);
}

Rational evaluate_at_identity(const Polynomial& f) {
    int which = single_matrix_set(f, "evaluate_at_identity");
    const auto& s = f.ambient()->sets()[size_t(which)];
    Rational total(0);
    for (const auto& [m, c] : f.terms()) {
        bool diag_only = true;
        for (int i = 1; i <= s.n && diag_only; ++i)
            for (int j = 1; j <= s.n; ++j)
                if (i != j && m[f.ambient()->matrix_var(which, i, j)] > 0) {
                    diag_only = false;
                    break;
                }
        if (diag_only) total += c;
    }
    return total;
}

Rational evaluate_at_zero(const Polynomial& f) { return f.constant_term(); }

Polynomial convolve(const PolyEndo& T, const PolyEndo& S, const Polynomial& f) {
    int which = single_matrix_set(f, "convolve");
    const int n = f.ambient()->sets()[size_t(which)].n;
    const AmbientPtr& x = f.ambient();
    Polynomial delta = comultiply(f);
    const int yz_arity = delta.ambient()->arity();
    const int half = yz_arity / 2;
    Polynomial r(x);
    (void)n;
    for (const auto& [m, c] : delta.terms()) {
        std::vector<int> ey(size_t(half), 0), ez(size_t(half), 0);
        for (int v = 0; v < half; ++v) {
            ey[size_t(v)] = m[v];
            ez[size_t(v)] = m[half + v];
        }
        Polynomial f1 = Polynomial::monomial(x, Monomial(std::move(ey)), c);
        Polynomial f2 = Polynomial::monomial(x, Monomial(std::move(ez)), Rational(1));
        r += T(f1) * S(f2);
    }
    return r;
}

std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& d) {
    check_ambient(p, d, "try_divide");
    if (d.is_zero()) throw std::invalid_argument("try_divide: zero divisor");
    Polynomial rem = p;
    Polynomial q(p.ambient());
    const auto& dlead = *d.terms().begin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().begin();
        auto mq = rlead.first.divide_by(dlead.first);
        if (!mq) return std::nullopt;
        Rational cq = rlead.second / dlead.second;
        Polynomial t = Polynomial::monomial(p.ambient(), *mq, cq);
        q += t;
        rem -= t * d;
    }
    return q;
}

}  // namespace oforge
