#include "oforge/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace oforge {

void normalize_primitive(RatVec& v) {
    mpz_class den_lcm(1);
    for (const auto& r : v)
        if (!r.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.den().get_mpz_t());
    mpz_class content(0);
    std::vector<mpz_class> nums(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        nums[i] = v[i].num() * (den_lcm / v[i].den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), nums[i].get_mpz_t());
    }
    if (content == 0) {
        for (auto& r : v) r = Rational(0);
        return;
    }
    for (size_t i = 0; i < v.size(); ++i) v[i] = Rational(mpz_class(nums[i] / content));
}

static int leading_index(const RatVec& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return int(i);
    return -1;
}

// r := a*r - b*s, then content-normalized. a and b are taken by value: the
// callers pass entries of r itself.
static void cross_combine(RatVec& r, Rational a, Rational b, const RatVec& s) {
    for (size_t i = 0; i < r.size(); ++i) r[i] = a * r[i] - b * s[i];
    normalize_primitive(r);
}

void RowReducer::reduce_against_pivots(RatVec& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        int j = pivot_col_[k];
        if (!v[size_t(j)].is_zero()) cross_combine(v, rows_[k][size_t(j)], v[size_t(j)], rows_[k]);
    }
}

bool RowReducer::add_row(RatVec row) {
    if (int(row.size()) != cols_) throw std::invalid_argument("RowReducer: wrong row length");
    normalize_primitive(row);
    reduce_against_pivots(row);
    int j = leading_index(row);
    if (j < 0) return false;
    for (size_t k = 0; k < rows_.size(); ++k)
        if (!rows_[k][size_t(j)].is_zero())
            cross_combine(rows_[k], row[size_t(j)], rows_[k][size_t(j)], row);
    rows_.push_back(std::move(row));
    pivot_col_.push_back(j);
    return true;
}

bool RowReducer::in_span(RatVec v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("RowReducer: wrong vector length");
    normalize_primitive(v);
    reduce_against_pivots(v);
    return leading_index(v) < 0;
}

RatMat RowReducer::rref() const {
    std::vector<size_t> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivot_col_[a] < pivot_col_[b]; });
    RatMat out;
    out.reserve(rows_.size());
    for (size_t i : order) {
        RatVec r = rows_[i];
        Rational lead = r[size_t(pivot_col_[i])];
        for (auto& x : r) x /= lead;
        out.push_back(std::move(r));
    }
    return out;
}

RatMat RowReducer::nullspace() const {
    RatMat R = rref();
    std::vector<int> pivots;
    pivots.reserve(R.size());
    for (const auto& r : R) pivots.push_back(leading_index(r));
    std::vector<bool> is_pivot(size_t(cols_), false);
    for (int p : pivots) is_pivot[size_t(p)] = true;
    RatMat basis;
    for (int jf = 0; jf < cols_; ++jf) {
        if (is_pivot[size_t(jf)]) continue;
        RatVec w(size_t(cols_), Rational(0));
        w[size_t(jf)] = Rational(1);
        for (size_t k = 0; k < R.size(); ++k) w[size_t(pivots[k])] = -R[k][size_t(jf)];
        basis.push_back(std::move(w));
    }
    return basis;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
    RatVec out(m.size(), Rational(0));
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
        for (size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
    }
    return out;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    if (a.empty() || b.empty()) return {};
    size_t n = a.size(), k = b.size(), m = b[0].size();
    RatMat out(n, RatVec(m, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j)
                if (!b[t][j].is_zero()) out[i][j] += a[i][t] * b[t][j];
        }
    }
    return out;
}

RatMat identity_mat(int n) {
    RatMat m(size_t(n), RatVec(size_t(n), Rational(0)));
    for (int i = 0; i < n; ++i) m[size_t(i)][size_t(i)] = Rational(1);
    return m;
}

bool is_zero_vec(const RatVec& v) { return leading_index(v) < 0; }

static Rational det_expand(const RatMat& m, std::vector<int>& cols, int row) {
    if (cols.size() == 1) return m[size_t(row)][size_t(cols[0])];
    Rational out(0);
    for (size_t k = 0; k < cols.size(); ++k) {
        if (m[size_t(row)][size_t(cols[k])].is_zero()) continue;
        std::vector<int> rest;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        Rational term = m[size_t(row)][size_t(cols[k])] * det_expand(m, rest, row + 1);
        out += (k % 2 == 0) ? term : -term;
    }
    return out;
}

Rational rat_det(const RatMat& m) {
    const int n = int(m.size());
    for (const auto& r : m)
        if (int(r.size()) != n) throw std::invalid_argument("rat_det: not square");
    if (n == 0) return Rational(1);
    std::vector<int> cols;
    for (int i = 0; i < n; ++i) cols.push_back(i);
    return det_expand(m, cols, 0);
}

int rank_of(const RatMat& rows, int cols) {
    RowReducer red(cols);
    for (const auto& r : rows) red.add_row(r);
    return red.rank();
}

RatMat rref_of(const RatMat& rows, int cols) {
    RowReducer red(cols);
    for (const auto& r : rows) red.add_row(r);
    return red.rref();
}

RatMat nullspace_of(const RatMat& rows, int cols) {
    RowReducer red(cols);
    for (const auto& r : rows) red.add_row(r);
    return red.nullspace();
}

bool spans_equal(const RatMat& a, const RatMat& b, int cols) {
    RowReducer ra(cols), rb(cols);
    for (const auto& r : a) ra.add_row(r);
    for (const auto& r : b) rb.add_row(r);
    if (ra.rank() != rb.rank()) return false;
    for (const auto& r : b)
        if (!ra.in_span(r)) return false;
    return true;
}

}  // namespace oforge
