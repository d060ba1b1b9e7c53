#include "oforge/weightlattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oforge {

bool Weight::is_dominant() const {
    for (size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] < c[i + 1]) return false;
    return true;
}

long long Weight::sum() const {
    long long s = 0;
    for (long long v : c) s += v;
    return s;
}

bool Weight::is_nonnegative() const {
    for (long long v : c)
        if (v < 0) return false;
    return true;
}

Weight Weight::operator+(const Weight& o) const {
    if (n() != o.n()) throw std::invalid_argument("Weight: length mismatch");
    Weight r(c);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    if (n() != o.n()) throw std::invalid_argument("Weight: length mismatch");
    Weight r(c);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

Weight Weight::operator*(long long k) const {
    Weight r(c);
    for (auto& v : r.c) v *= k;
    return r;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

Weight fundamental_weight(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("fundamental_weight: need 1 <= i < n");
    std::vector<long long> v(size_t(n), 0);
    for (int k = 0; k < i; ++k) v[size_t(k)] = 1;
    return Weight(std::move(v));
}

Weight simple_root(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple_root: need 1 <= i < n");
    std::vector<long long> v(size_t(n), 0);
    v[size_t(i - 1)] = 1;
    v[size_t(i)] = -1;
    return Weight(std::move(v));
}

Weight det_weight(int n) { return Weight(std::vector<long long>(size_t(n), 1)); }

bool dominance_leq(const Weight& lambda, const Weight& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("dominance_leq: length mismatch");
    Weight d = mu - lambda;
    if (d.sum() != 0) return false;
    long long partial = 0;
    for (size_t i = 0; i + 1 < d.c.size(); ++i) {
        partial += d.c[i];
        if (partial < 0) return false;
    }
    return true;
}

RationalCone RationalCone::from_weights(const std::vector<Weight>& ws, int dim) {
    RationalCone c;
    c.dim = dim;
    for (const auto& w : ws) {
        if (w.n() != dim) throw std::invalid_argument("RationalCone: dimension mismatch");
        RatVec v;
        v.reserve(size_t(dim));
        for (long long x : w.c) v.push_back(Rational(x));
        c.generators.push_back(std::move(v));
    }
    return c;
}

static RatVec weight_vec(const Weight& w) {
    RatVec v;
    v.reserve(w.c.size());
    for (long long x : w.c) v.push_back(Rational(x));
    return v;
}

namespace {

// One inequality sum a_i u_i <= b over the combination coefficients.
struct Ineq {
    RatVec a;
    Rational b;
};

// Fourier-Motzkin feasibility of a system of <= inequalities.
bool fm_feasible(std::vector<Ineq> sys, int nvars) {
    for (int v = 0; v < nvars; ++v) {
        std::vector<Ineq> pos, neg, rest;
        for (auto& q : sys) {
            int s = q.a[size_t(v)].sign();
            if (s > 0) pos.push_back(std::move(q));
            else if (s < 0) neg.push_back(std::move(q));
            else rest.push_back(std::move(q));
        }
        for (const auto& p : pos)
            for (const auto& m : neg) {
                // p.a[v] > 0 >= ... combine so variable v cancels
                Rational cp = p.a[size_t(v)], cm = -m.a[size_t(v)];
                Ineq q;
                q.a.resize(size_t(nvars), Rational(0));
                for (int i = 0; i < nvars; ++i) q.a[size_t(i)] = cm * p.a[size_t(i)] + cp * m.a[size_t(i)];
                q.b = cm * p.b + cp * m.b;
                RatVec row = q.a;
                row.push_back(q.b);
                normalize_primitive(row);
                for (int i = 0; i < nvars; ++i) q.a[size_t(i)] = row[size_t(i)];
                q.b = row[size_t(nvars)];
                rest.push_back(std::move(q));
            }
        // dedupe
        std::set<std::vector<std::string>> seen;
        std::vector<Ineq> uniq;
        for (auto& q : rest) {
            std::vector<std::string> key;
            for (const auto& x : q.a) key.push_back(x.str());
            key.push_back(q.b.str());
            if (seen.insert(key).second) uniq.push_back(std::move(q));
        }
        sys = std::move(uniq);
    }
    for (const auto& q : sys)
        if (q.b.sign() < 0) return false;
    return true;
}

}  // namespace

bool cone_member(const RationalCone& c, const RatVec& v) {
    if (int(v.size()) != c.dim) throw std::invalid_argument("cone_member: dimension mismatch");
    const int m = int(c.generators.size());
    if (m == 0) return is_zero_vec(v);
    // Feasibility of: u >= 0, sum u_i g_i = v.
    std::vector<Ineq> sys;
    for (int i = 0; i < m; ++i) {
        Ineq q;
        q.a.assign(size_t(m), Rational(0));
        q.a[size_t(i)] = Rational(-1);
        q.b = Rational(0);
        sys.push_back(std::move(q));
    }
    for (int d = 0; d < c.dim; ++d) {
        Ineq le, ge;
        le.a.resize(size_t(m));
        ge.a.resize(size_t(m));
        for (int i = 0; i < m; ++i) {
            le.a[size_t(i)] = c.generators[size_t(i)][size_t(d)];
            ge.a[size_t(i)] = -c.generators[size_t(i)][size_t(d)];
        }
        le.b = v[size_t(d)];
        ge.b = -v[size_t(d)];
        sys.push_back(std::move(le));
        sys.push_back(std::move(ge));
    }
    return fm_feasible(std::move(sys), m);
}

bool cone_member(const RationalCone& c, const Weight& w) { return cone_member(c, weight_vec(w)); }

static Rational dot(const RatVec& a, const RatVec& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

bool in_dual(const RationalCone& c, const RatVec& v) {
    if (int(v.size()) != c.dim) throw std::invalid_argument("in_dual: dimension mismatch");
    for (const auto& g : c.generators)
        if (dot(g, v).sign() < 0) return false;
    return true;
}

bool in_dual(const RationalCone& c, const Weight& w) { return in_dual(c, weight_vec(w)); }

RationalCone dual_cone(const RationalCone& c) {
    const int d = c.dim;
    // Start from all of Q^d as a cone (plus/minus the coordinate axes) and
    // cut with one halfspace per generator.
    std::vector<RatVec> rays;
    for (int i = 0; i < d; ++i) {
        RatVec e(size_t(d), Rational(0));
        e[size_t(i)] = Rational(1);
        rays.push_back(e);
        e[size_t(i)] = Rational(-1);
        rays.push_back(e);
    }
    for (const auto& g : c.generators) {
        std::vector<RatVec> keep, plus, minus;
        for (const auto& r : rays) {
            int s = dot(g, r).sign();
            if (s >= 0) keep.push_back(r);
            if (s > 0) plus.push_back(r);
            if (s < 0) minus.push_back(r);
        }
        std::set<std::vector<std::string>> seen;
        auto push_unique = [&](RatVec v) {
            normalize_primitive(v);
            if (is_zero_vec(v)) return;
            std::vector<std::string> key;
            for (const auto& x : v) key.push_back(x.str());
            if (seen.insert(key).second) keep.push_back(std::move(v));
        };
        std::vector<RatVec> base = std::move(keep);
        keep.clear();
        for (auto& v : base) push_unique(std::move(v));
        for (const auto& p : plus)
            for (const auto& m : minus) {
                Rational gp = dot(g, p), gm = dot(g, m);
                RatVec comb(static_cast<size_t>(d));
                for (int i = 0; i < d; ++i) comb[size_t(i)] = gp * m[size_t(i)] - gm * p[size_t(i)];
                push_unique(std::move(comb));
            }
        rays = std::move(keep);
    }
    RationalCone out;
    out.dim = d;
    out.generators = std::move(rays);
    return out;
}

bool is_strictly_convex(const RationalCone& c) {
    for (const auto& g : c.generators) {
        if (is_zero_vec(g)) continue;
        RatVec neg(g.size());
        for (size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
        if (cone_member(c, neg)) return false;
    }
    return true;
}

RationalCone matrix_monoid_cone(int n) {
    std::vector<Weight> gens;
    for (int i = 1; i < n; ++i) gens.push_back(simple_root(n, i));
    std::vector<long long> en(size_t(n), 0);
    en[size_t(n - 1)] = 1;
    gens.push_back(Weight(std::move(en)));
    return RationalCone::from_weights(gens, n);
}

static void enumerate_box(int n, Box box, const std::function<void(Weight&)>& fn) {
    std::vector<long long> cur(size_t(n), box.lo);
    while (true) {
        Weight w(cur);
        fn(w);
        int k = n - 1;
        while (k >= 0) {
            if (++cur[size_t(k)] <= box.hi) break;
            cur[size_t(k)] = box.lo;
            --k;
        }
        if (k < 0) break;
    }
}

std::vector<Weight> polynomial_dominant_weights(const RationalCone& monoid_cone, int n, Box box) {
    if (box.lo > box.hi) throw std::invalid_argument("polynomial_dominant_weights: empty box");
    std::vector<Weight> out;
    enumerate_box(n, box, [&](Weight& w) {
        if (w.is_dominant() && in_dual(monoid_cone, w)) out.push_back(w);
    });
    std::sort(out.begin(), out.end());
    return out;
}

ViolationReport saturation_check(const std::vector<Weight>& S, int n, Box box, int max_multiple) {
    std::set<std::vector<long long>> inS;
    for (const auto& w : S) inS.insert(w.c);
    ViolationReport rep;
    enumerate_box(n, box, [&](Weight& lam) {
        if (!lam.is_dominant()) return;
        if (inS.count(lam.c)) return;
        for (int k = 2; k <= max_multiple; ++k) {
            Weight kl = lam * k;
            bool inside = true;
            for (long long v : kl.c)
                if (v < box.lo || v > box.hi) inside = false;
            if (!inside) continue;
            if (inS.count(kl.c)) {
                rep.ok = false;
                rep.violations.emplace_back(kl, lam);
            }
        }
    });
    return rep;
}

ViolationReport ideal_check(const std::vector<Weight>& S, int n, Box box) {
    std::set<std::vector<long long>> inS;
    for (const auto& w : S) inS.insert(w.c);
    ViolationReport rep;
    for (const auto& mu : S) {
        enumerate_box(n, box, [&](Weight& lam) {
            if (!lam.is_dominant()) return;
            if (!dominance_leq(lam, mu)) return;
            if (!inS.count(lam.c)) {
                rep.ok = false;
                rep.violations.emplace_back(mu, lam);
            }
        });
    }
    return rep;
}

bool OmegaCoefficientFamily::is_free(const Weight& mu) const {
    for (const auto& [w, free] : entries)
        if (w == mu) return free;
    throw std::invalid_argument("OmegaCoefficientFamily: weight not in truncation");
}

OmegaCoefficientFamily omega_coefficient_family(const Weight& lambda,
                                                const std::vector<Weight>& poly_weights,
                                                const RationalCone& monoid_cone) {
    bool lambda_listed = false;
    for (const auto& w : poly_weights)
        if (w == lambda) lambda_listed = true;
    if (!lambda_listed)
        throw std::invalid_argument("omega_coefficient_family: lambda must be a listed polynomial weight");
    OmegaCoefficientFamily fam;
    fam.lambda = lambda;
    for (const auto& mu : poly_weights) {
        Weight d = mu - lambda;
        bool free = d.is_dominant() && in_dual(monoid_cone, d);
        fam.entries.emplace_back(mu, free);
        // properness needs every positive power of lambda in the truncation
        // to stay free (the zeroth power is always forced to vanish)
        bool is_lambda_power = false;
        for (long long s = 1; s <= 64; ++s)
            if (mu == lambda * s) is_lambda_power = true;
        if (is_lambda_power && !free) fam.proper_in_truncation = false;
    }
    return fam;
}

MonoidConeResult monoid_cone_from_character(int n, const Weight& lambda) {
    MonoidConeResult res;
    if (lambda.n() != n) throw std::invalid_argument("monoid_cone_from_character: length mismatch");
    for (size_t i = 0; i + 1 < lambda.c.size(); ++i)
        if (lambda.c[i] != lambda.c[i + 1]) {
            res.message = "lambda is not a central character weight";
            return res;
        }

    // rho: the semisimple part of sum of fundamental weights, computed two
    // ways and compared exactly.
    auto ss_part = [&](const RatVec& v) {
        Rational avg(0);
        for (const auto& x : v) avg += x;
        avg /= Rational(n);
        RatVec out(v);
        for (auto& x : out) x -= avg;
        return out;
    };
    RatVec rho_from_fw(size_t(n), Rational(0));
    for (int i = 1; i < n; ++i) {
        RatVec w = ss_part(weight_vec(fundamental_weight(n, i)));
        for (int k = 0; k < n; ++k) rho_from_fw[size_t(k)] += w[size_t(k)];
    }
    RatVec rho_from_roots(size_t(n), Rational(0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            rho_from_roots[size_t(i - 1)] += Rational(1, 2);
            rho_from_roots[size_t(j - 1)] -= Rational(1, 2);
        }
    res.identity_ok = (rho_from_fw == rho_from_roots);
    // ... and the displayed equation (0, lambda) = (-w, lambda) + (rho, 0).
    RatVec lam = weight_vec(lambda);
    RatVec lhs = lam;  // central vector: semisimple part zero
    RatVec rhs(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) rhs[size_t(k)] = (lam[size_t(k)] - rho_from_fw[size_t(k)]) + rho_from_fw[size_t(k)];
    res.identity_ok = res.identity_ok && (lhs == rhs) && is_zero_vec(ss_part(lam));

    RationalCone cone;
    cone.dim = n;
    RatVec gen0(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) gen0[size_t(k)] = lam[size_t(k)] - rho_from_fw[size_t(k)];
    cone.generators.push_back(gen0);
    for (int i = 1; i < n; ++i) cone.generators.push_back(weight_vec(simple_root(n, i)));
    res.cone = cone;

    // Enlarge by the simple roots (self-dual coordinates: roots = coroots
    // for GL_n under the standard pairing) and certify strict convexity.
    res.enlarged = cone;
    res.strictly_convex = is_strictly_convex(res.enlarged);
    if (!res.strictly_convex) res.message = "enlarged cone is not strictly convex";
    return res;
}

}  // namespace oforge
