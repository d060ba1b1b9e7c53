#include "oforge/reps.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "oforge/rng.hpp"
#include "oforge/textio.hpp"

namespace oforge {

Rational Character::operator()(const RatMat& point) const {
    if (int(point.size()) != n) throw std::invalid_argument("Character: wrong matrix size");
    Rational d = rat_det(point);
    if (power >= 0) return pow(d, power);
    if (d.is_zero())
        throw std::invalid_argument("Character: negative power at a singular point");
    return pow(d, power);
}

static void check_shape(const PolynomialComodule& V) {
    if (int(V.labels.size()) != V.dim || int(V.C.size()) != V.dim)
        throw std::invalid_argument("comodule: shape mismatch");
    for (const auto& row : V.C)
        if (int(row.size()) != V.dim) throw std::invalid_argument("comodule: ragged matrix");
}

static RatMat eval_matrix(const PolynomialComodule& V, const std::vector<Rational>& point) {
    RatMat m(size_t(V.dim), RatVec(size_t(V.dim)));
    for (int i = 0; i < V.dim; ++i)
        for (int j = 0; j < V.dim; ++j) m[size_t(i)][size_t(j)] = evaluate(V.C[size_t(i)][size_t(j)], point);
    return m;
}

// Estimated cost of the symbolic multiplicativity check, in term operations.
static double full_check_cost(const PolynomialComodule& V) {
    double max_terms = 0;
    for (const auto& row : V.C)
        for (const auto& p : row) max_terms = std::max(max_terms, double(p.term_count()));
    return double(V.dim) * double(V.dim) * double(V.dim) * max_terms * max_terms;
}

ComoduleCheck verify_comodule(const PolynomialComodule& V, VerifyMode mode, int samples,
                              unsigned long long seed) {
    check_shape(V);
    ComoduleCheck res;
    const int n = V.n, dim = V.dim;

    // counit: C(Id) = Id
    std::vector<Rational> id_point(size_t(n) * size_t(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) id_point[size_t(i * n + j)] = Rational(i == j ? 1 : 0);
    res.counital = (eval_matrix(V, id_point) == identity_mat(dim));

    // C(0) idempotent
    std::vector<Rational> zero_point(size_t(n) * size_t(n), Rational(0));
    RatMat c0 = eval_matrix(V, zero_point);
    res.zero_idempotent = (mat_mul(c0, c0) == c0);

    if (mode == VerifyMode::Auto)
        mode = full_check_cost(V) <= 5e7 ? VerifyMode::Full : VerifyMode::Sampled;

    if (mode == VerifyMode::Full) {
        res.mode = "full";
        AmbientPtr yz = make_ambient({VariableSet::matrix(n, "y"), VariableSet::matrix(n, "z")});
        std::vector<Polynomial> imy, imz;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                imy.push_back(Polynomial::variable(yz, yz->matrix_var(0, i, j)));
                imz.push_back(Polynomial::variable(yz, yz->matrix_var(1, i, j)));
            }
        std::vector<std::vector<Polynomial>> CY(static_cast<size_t>(dim)), CZ(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                CY[size_t(i)].push_back(substitute(V.C[size_t(i)][size_t(j)], imy));
                CZ[size_t(i)].push_back(substitute(V.C[size_t(i)][size_t(j)], imz));
            }
        res.multiplicative = true;
        for (int i = 0; i < dim && res.multiplicative; ++i)
            for (int j = 0; j < dim && res.multiplicative; ++j) {
                Polynomial lhs = comultiply(V.C[size_t(i)][size_t(j)]);
                Polynomial rhs(lhs.ambient());
                for (int k = 0; k < dim; ++k)
                    rhs += transport(CY[size_t(i)][size_t(k)], lhs.ambient()) *
                           transport(CZ[size_t(k)][size_t(j)], lhs.ambient());
                if (lhs != rhs) res.multiplicative = false;
            }
    } else {
        res.mode = "sampled";
        Rng rng(seed);
        res.multiplicative = true;
        for (int t = 0; t < samples && res.multiplicative; ++t) {
            std::vector<Rational> a(size_t(n) * size_t(n)), b(size_t(n) * size_t(n)),
                ab(size_t(n) * size_t(n), Rational(0));
            for (auto& x : a) x = Rational(rng.int_in(-3, 3));
            for (auto& x : b) x = Rational(rng.int_in(-3, 3));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        ab[size_t(i * n + j)] += a[size_t(i * n + k)] * b[size_t(k * n + j)];
            if (eval_matrix(V, ab) != mat_mul(eval_matrix(V, a), eval_matrix(V, b)))
                res.multiplicative = false;
        }
    }
    return res;
}

PolynomialComodule make_comodule(int n, std::vector<std::string> labels,
                                 std::vector<std::vector<Polynomial>> entries, std::string name,
                                 int twist, VerifyMode mode) {
    PolynomialComodule V;
    V.n = n;
    V.dim = int(labels.size());
    V.labels = std::move(labels);
    V.C = std::move(entries);
    V.twist = twist;
    V.name = std::move(name);
    if (V.dim == 0 || V.C.empty()) throw std::invalid_argument("make_comodule: empty module");
    V.xamb = V.C[0][0].ambient();
    const auto& sets = V.xamb->sets();
    if (sets.size() != 1 || sets[0].kind != VarKind::Matrix || sets[0].n != n)
        throw std::invalid_argument("make_comodule: entries must live in k[M_n]");
    ComoduleCheck chk = verify_comodule(V, mode);
    if (!chk.ok())
        throw std::runtime_error("make_comodule: '" + V.name + "' fails comodule laws (" +
                                 (chk.multiplicative ? "" : "multiplicativity ") +
                                 (chk.counital ? "" : "counit ") +
                                 (chk.zero_idempotent ? "" : "zero-idempotency") + ")");
    return V;
}

PolynomialComodule trivial_module(int n) {
    AmbientPtr amb = matrix_ambient(n);
    return make_comodule(n, {"1"}, {{Polynomial::constant(amb, Rational(1))}}, "trivial");
}

PolynomialComodule character_module(int n, int detpow) {
    if (detpow < 0) throw std::invalid_argument("character_module: power must be >= 0");
    AmbientPtr amb = matrix_ambient(n);
    Polynomial d = pow(determinant(amb, 0), detpow);
    return make_comodule(n, {"1"}, {{d}}, "k_det^" + std::to_string(detpow));
}

PolynomialComodule binary_forms_module(int d) {
    if (d < 1) throw std::invalid_argument("binary_forms_module: d must be >= 1");
    AmbientPtr amb = matrix_ambient(2);
    // Work in [x | u,v]: expand (u x11 + v x21)^(d-i) (u x12 + v x22)^i and
    // read off the coefficient column of each basis form u^(d-i) v^i.
    AmbientPtr big = make_ambient({VariableSet::matrix(2, "x"), VariableSet::aux("uv", {"u", "v"})});
    Polynomial uu = Polynomial::variable(big, "u") * Polynomial::variable(big, "x11") +
                    Polynomial::variable(big, "v") * Polynomial::variable(big, "x21");
    Polynomial vv = Polynomial::variable(big, "u") * Polynomial::variable(big, "x12") +
                    Polynomial::variable(big, "v") * Polynomial::variable(big, "x22");
    const int ui = big->index_of("u"), vi = big->index_of("v");

    std::vector<std::vector<Polynomial>> C(size_t(d + 1),
                                           std::vector<Polynomial>(size_t(d + 1), Polynomial(amb)));
    std::vector<std::string> labels;
    for (int i = 0; i <= d; ++i) {
        std::string lab;
        if (d - i > 0) lab += "u" + (d - i > 1 ? "^" + std::to_string(d - i) : "");
        if (i > 0) lab += (lab.empty() ? "" : "*") + ("v" + (i > 1 ? "^" + std::to_string(i) : ""));
        labels.push_back(lab);
    }
    for (int col = 0; col <= d; ++col) {
        Polynomial g = pow(uu, d - col) * pow(vv, col);
        for (const auto& [m, c] : g.terms()) {
            int du = m[ui], dv = m[vi];
            if (du + dv != d) throw std::runtime_error("binary_forms_module: degree bookkeeping");
            std::vector<int> e(size_t(amb->arity()), 0);
            for (int k = 0; k < amb->arity(); ++k) e[size_t(k)] = m[big->index_of(amb->name(k))];
            C[size_t(dv)][size_t(col)].add_term(Monomial(std::move(e)), c);
        }
    }
    return make_comodule(2, labels, std::move(C), "forms" + std::to_string(d));
}

PolynomialComodule dual_action_module(const PolynomialComodule& V) {
    check_shape(V);
    const int n = V.n;
    std::vector<Polynomial> transpose_images;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            transpose_images.push_back(Polynomial::variable(V.xamb, V.xamb->matrix_var(0, j, i)));
    std::vector<std::vector<Polynomial>> C(size_t(V.dim),
                                           std::vector<Polynomial>(size_t(V.dim), Polynomial(V.xamb)));
    for (int i = 0; i < V.dim; ++i)
        for (int j = 0; j < V.dim; ++j)
            C[size_t(i)][size_t(j)] = substitute(V.C[size_t(j)][size_t(i)], transpose_images);
    std::vector<std::string> labels;
    if (V.dim <= 26)
        for (int i = 0; i < V.dim; ++i) labels.push_back(std::string(1, char('a' + i)));
    else
        for (int i = 0; i < V.dim; ++i) labels.push_back("phi" + std::to_string(i));
    return make_comodule(n, labels, std::move(C), "dual(" + V.name + ")", -V.twist);
}

std::vector<std::vector<int>> sym_power_basis(int dim, int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(size_t(dim), 0);
    // lex-descending enumeration of compositions of e
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == dim - 1) {
            cur[size_t(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[size_t(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    if (dim == 0) return out;
    rec(0, e);
    return out;
}

static std::string monomial_label(const std::vector<std::string>& labels, const std::vector<int>& e) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += labels[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

PolynomialComodule symmetric_power(const PolynomialComodule& V, int e, int dim_cap) {
    check_shape(V);
    if (e < 1) throw std::invalid_argument("symmetric_power: e must be >= 1");
    auto basis = sym_power_basis(V.dim, e);
    if (int(basis.size()) > dim_cap)
        throw std::runtime_error("symmetric_power: dimension " + std::to_string(basis.size()) +
                                 " exceeds cap " + std::to_string(dim_cap));
    const int N = int(basis.size());

    AmbientPtr big = make_ambient({V.xamb->sets()[0], VariableSet::aux("sym", V.labels)});
    const int woff = V.xamb->arity();

    // linear images L_j = sum_i C_ij w_i
    std::vector<Polynomial> L;
    for (int j = 0; j < V.dim; ++j) {
        Polynomial s(big);
        for (int i = 0; i < V.dim; ++i)
            s += transport(V.C[size_t(i)][size_t(j)], big) *
                 Polynomial::variable(big, woff + i);
        L.push_back(std::move(s));
    }

    std::map<std::vector<int>, int> index;
    for (int b = 0; b < N; ++b) index[basis[size_t(b)]] = b;

    std::vector<std::vector<Polynomial>> C(size_t(N),
                                           std::vector<Polynomial>(size_t(N), Polynomial(V.xamb)));
    for (int col = 0; col < N; ++col) {
        Polynomial prod = Polynomial::constant(big, Rational(1));
        for (int j = 0; j < V.dim; ++j)
            for (int k = 0; k < basis[size_t(col)][size_t(j)]; ++k) prod = prod * L[size_t(j)];
        for (const auto& [m, c] : prod.terms()) {
            std::vector<int> wexp(static_cast<size_t>(V.dim));
            std::vector<int> xexp(static_cast<size_t>(woff));
            for (int i = 0; i < V.dim; ++i) wexp[size_t(i)] = m[woff + i];
            for (int i = 0; i < woff; ++i) xexp[size_t(i)] = m[i];
            auto it = index.find(wexp);
            if (it == index.end()) throw std::runtime_error("symmetric_power: basis bookkeeping");
            C[size_t(it->second)][size_t(col)].add_term(Monomial(std::move(xexp)), c);
        }
    }

    std::vector<std::string> labels;
    for (const auto& b : basis) labels.push_back(monomial_label(V.labels, b));
    return make_comodule(V.n, labels, std::move(C),
                         "S^" + std::to_string(e) + "(" + V.name + ")", e * V.twist);
}

PolynomialComodule tensor_product(const PolynomialComodule& A, const PolynomialComodule& B) {
    if (A.n != B.n) throw std::invalid_argument("tensor_product: monoid size mismatch");
    const int dim = A.dim * B.dim;
    std::vector<std::string> labels;
    std::vector<std::vector<Polynomial>> C(static_cast<size_t>(dim),
                                           std::vector<Polynomial>(size_t(dim), Polynomial(A.xamb)));
    for (int i1 = 0; i1 < A.dim; ++i1)
        for (int i2 = 0; i2 < B.dim; ++i2)
            labels.push_back(A.labels[size_t(i1)] + "@" + B.labels[size_t(i2)]);
    for (int i1 = 0; i1 < A.dim; ++i1)
        for (int i2 = 0; i2 < B.dim; ++i2)
            for (int j1 = 0; j1 < A.dim; ++j1)
                for (int j2 = 0; j2 < B.dim; ++j2)
                    C[size_t(i1 * B.dim + i2)][size_t(j1 * B.dim + j2)] =
                        A.C[size_t(i1)][size_t(j1)] * transport(B.C[size_t(i2)][size_t(j2)], A.xamb);
    return make_comodule(A.n, labels, std::move(C), A.name + "(x)" + B.name, A.twist + B.twist);
}

RationalRep as_rational(const PolynomialComodule& V) {
    RationalRep R;
    R.n = V.n;
    R.xamb = V.xamb;
    R.dim = V.dim;
    R.labels = V.labels;
    R.num = V.C;
    R.den_pow = 0;
    R.name = V.name;
    return R;
}

RationalRep twist_rational(const RationalRep& R, int k) {
    RationalRep out = R;
    out.name = "det^" + std::to_string(k) + "*" + R.name;
    if (k >= 0) {
        Polynomial dk = pow(determinant(R.xamb, 0), k);
        for (auto& row : out.num)
            for (auto& p : row) p = p * dk;
    } else {
        out.den_pow += -k;
    }
    return out;
}

RationalRep tensor_rational(const RationalRep& A, const RationalRep& B) {
    if (A.n != B.n) throw std::invalid_argument("tensor_rational: monoid size mismatch");
    RationalRep R;
    R.n = A.n;
    R.xamb = A.xamb;
    R.dim = A.dim * B.dim;
    R.den_pow = A.den_pow + B.den_pow;
    R.name = A.name + "(x)" + B.name;
    for (int i1 = 0; i1 < A.dim; ++i1)
        for (int i2 = 0; i2 < B.dim; ++i2)
            R.labels.push_back(A.labels[size_t(i1)] + "@" + B.labels[size_t(i2)]);
    R.num.assign(size_t(R.dim), std::vector<Polynomial>(size_t(R.dim), Polynomial(A.xamb)));
    for (int i1 = 0; i1 < A.dim; ++i1)
        for (int i2 = 0; i2 < B.dim; ++i2)
            for (int j1 = 0; j1 < A.dim; ++j1)
                for (int j2 = 0; j2 < B.dim; ++j2)
                    R.num[size_t(i1 * B.dim + i2)][size_t(j1 * B.dim + j2)] =
                        A.num[size_t(i1)][size_t(j1)] * transport(B.num[size_t(i2)][size_t(j2)], A.xamb);
    return R;
}

// Determinant of a polynomial matrix by permutation expansion.
static Polynomial poly_matrix_det(const std::vector<std::vector<Polynomial>>& M,
                                  const std::vector<int>& rows, const std::vector<int>& cols,
                                  const AmbientPtr& amb) {
    const int k = int(rows.size());
    std::vector<int> perm(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) perm[size_t(i)] = i;
    Polynomial out(amb);
    do {
        int inv = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (perm[size_t(a)] > perm[size_t(b)]) ++inv;
        Polynomial prod = Polynomial::constant(amb, Rational(inv % 2 == 0 ? 1 : -1));
        for (int a = 0; a < k; ++a)
            prod = prod * M[size_t(rows[size_t(a)])][size_t(cols[size_t(perm[size_t(a)])])];
        out += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

RationalRep contragredient_rational(const PolynomialComodule& V) {
    check_shape(V);
    std::vector<int> all(static_cast<size_t>(V.dim));
    for (int i = 0; i < V.dim; ++i) all[size_t(i)] = i;
    Polynomial D = poly_matrix_det(V.C, all, all, V.xamb);
    Polynomial det = determinant(V.xamb, 0);
    int N = 0;
    while (true) {
        if (D == Polynomial::constant(V.xamb, Rational(1))) break;
        auto q = try_divide(D, det);
        if (!q) throw std::runtime_error("contragredient_rational: det C(x) is not a power of det(x)");
        D = *q;
        ++N;
    }
    RationalRep R;
    R.n = V.n;
    R.xamb = V.xamb;
    R.dim = V.dim;
    R.den_pow = N;
    R.name = "contragredient(" + V.name + ")";
    if (V.dim <= 26)
        for (int i = 0; i < V.dim; ++i) R.labels.push_back(std::string(1, char('a' + i)));
    else
        for (int i = 0; i < V.dim; ++i) R.labels.push_back("phi" + std::to_string(i));
    R.num.assign(size_t(V.dim), std::vector<Polynomial>(size_t(V.dim), Polynomial(V.xamb)));
    for (int i = 0; i < V.dim; ++i)
        for (int j = 0; j < V.dim; ++j) {
            std::vector<int> rows, cols;
            for (int k = 0; k < V.dim; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            Polynomial cof = V.dim == 1 ? Polynomial::constant(V.xamb, Rational(1))
                                        : poly_matrix_det(V.C, rows, cols, V.xamb);
            R.num[size_t(i)][size_t(j)] = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return R;
}

TwistResult twist(const PolynomialComodule& V, int k) {
    TwistResult out;
    Polynomial det = determinant(V.xamb, 0);
    if (k >= 0) {
        Polynomial dk = pow(det, k);
        auto C = V.C;
        for (auto& row : C)
            for (auto& p : row) p = p * dk;
        out.poly = make_comodule(V.n, V.labels, std::move(C),
                                 "det^" + std::to_string(k) + "*" + V.name, V.twist + k);
        return out;
    }
    // negative twist: polynomial only when every entry is divisible
    auto C = V.C;
    bool divisible = true;
    for (auto& row : C)
        for (auto& p : row) {
            for (int t = 0; t < -k && divisible; ++t) {
                if (p.is_zero()) continue;
                auto q = try_divide(p, det);
                if (!q) divisible = false;
                else p = *q;
            }
        }
    if (divisible) {
        out.poly = make_comodule(V.n, V.labels, std::move(C),
                                 "det^" + std::to_string(k) + "*" + V.name, V.twist + k);
    } else {
        out.rational = twist_rational(as_rational(V), k);
        out.rational->name = "det^" + std::to_string(k) + "*" + V.name;
    }
    return out;
}

int minimal_twist_exponent(const RationalRep& R) {
    Polynomial det = determinant(R.xamb, 0);
    auto num = R.num;
    int depth = 0;
    bool divisible = true;
    while (divisible) {
        std::vector<std::vector<Polynomial>> next = num;
        for (auto& row : next)
            for (auto& p : row) {
                if (p.is_zero()) continue;
                auto q = try_divide(p, det);
                if (!q) {
                    divisible = false;
                    break;
                }
                p = *q;
            }
        if (divisible) {
            num = std::move(next);
            ++depth;
        }
        // a fully zero matrix would loop forever; treat as twist 0
        bool all_zero = true;
        for (const auto& row : num)
            for (const auto& p : row)
                if (!p.is_zero()) all_zero = false;
        if (all_zero) break;
    }
    return R.den_pow - depth;
}

RatMat semi_invariant_oracle(const PolynomialComodule& V, int detpow) {
    check_shape(V);
    if (detpow < 0) throw std::invalid_argument("semi_invariant_oracle: power must be >= 0");
    Polynomial dk = pow(determinant(V.xamb, 0), detpow);
    RowReducer red(V.dim);
    for (int j = 0; j < V.dim && !red.full_rank(); ++j) {
        std::map<Monomial, RatVec, MonomialDesc> rows;
        for (int i = 0; i < V.dim; ++i)
            for (const auto& [m, c] : V.C[size_t(j)][size_t(i)].terms()) {
                auto it = rows.find(m);
                if (it == rows.end())
                    it = rows.emplace(m, RatVec(size_t(V.dim), Rational(0))).first;
                it->second[size_t(i)] += c;
            }
        for (const auto& [m, c] : dk.terms()) {
            auto it = rows.find(m);
            if (it == rows.end()) it = rows.emplace(m, RatVec(size_t(V.dim), Rational(0))).first;
            it->second[size_t(j)] -= c;
        }
        for (auto& [m, row] : rows) red.add_row(std::move(row));
    }
    RatMat basis = red.full_rank() ? RatMat{} : red.nullspace();

    // re-verify symbolically: C v = det^k v for every solution
    for (const auto& v : basis) {
        for (int j = 0; j < V.dim; ++j) {
            Polynomial lhs(V.xamb);
            for (int i = 0; i < V.dim; ++i)
                if (!v[size_t(i)].is_zero()) lhs += scale(v[size_t(i)], V.C[size_t(j)][size_t(i)]);
            if (lhs != scale(v[size_t(j)], dk))
                throw std::runtime_error("semi_invariant_oracle: solution fails re-verification");
        }
    }
    return basis;
}

bool is_module_morphism(const PolynomialComodule& V, const PolynomialComodule& W, const RatMat& F) {
    if (int(F.size()) != W.dim) return false;
    for (const auto& row : F)
        if (int(row.size()) != V.dim) return false;
    // C_W(x) F == F C_V(x)
    for (int i = 0; i < W.dim; ++i)
        for (int j = 0; j < V.dim; ++j) {
            Polynomial lhs(V.xamb), rhs(V.xamb);
            for (int k = 0; k < W.dim; ++k)
                if (!F[size_t(k)][size_t(j)].is_zero())
                    lhs += scale(F[size_t(k)][size_t(j)], W.C[size_t(i)][size_t(k)]);
            for (int k = 0; k < V.dim; ++k)
                if (!F[size_t(i)][size_t(k)].is_zero())
                    rhs += scale(F[size_t(i)][size_t(k)], transport(V.C[size_t(k)][size_t(j)], V.xamb));
            if (lhs != rhs) return false;
        }
    return true;
}

std::optional<int> entry_degree(const PolynomialComodule& V) {
    std::optional<int> deg;
    for (const auto& row : V.C)
        for (const auto& p : row) {
            if (p.is_zero()) continue;
            auto h = p.homogeneous_degree();
            if (!h) return std::nullopt;
            if (!deg) deg = h;
            else if (*deg != *h) return std::nullopt;
        }
    return deg;
}

std::string module_descriptor_json(const PolynomialComodule& V) {
    nlohmann::ordered_json j;
    j["dim"] = V.dim;
    j["labels"] = V.labels;
    j["n"] = V.n;
    auto entries = nlohmann::ordered_json::array();
    for (int r = 0; r < V.dim; ++r)
        for (int c = 0; c < V.dim; ++c)
            if (!V.C[size_t(r)][size_t(c)].is_zero())
                entries.push_back({r, c, to_text(V.C[size_t(r)][size_t(c)])});
    j["entries"] = entries;
    j["twist"] = V.twist;
    return j.dump(2);
}

PolynomialComodule module_from_descriptor_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    int dim = j.at("dim").get<int>();
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    AmbientPtr amb = matrix_ambient(n);
    std::vector<std::vector<Polynomial>> C(static_cast<size_t>(dim),
                                           std::vector<Polynomial>(size_t(dim), Polynomial(amb)));
    for (const auto& e : j.at("entries")) {
        int r = e.at(0).get<int>(), c = e.at(1).get<int>();
        C.at(size_t(r)).at(size_t(c)) = parse_polynomial(e.at(2).get<std::string>(), amb);
    }
    return make_comodule(n, std::move(labels), std::move(C), "descriptor",
                         j.value("twist", 0));
}

}  // namespace oforge
