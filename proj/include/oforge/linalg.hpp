#ifndef OFORGE_LINALG_HPP
#define OFORGE_LINALG_HPP

#include <vector>

#include "oforge/rational.hpp"

namespace oforge {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// Incremental fraction-free Gaussian elimination over the rationals.
/// Rows are cleared to primitive integer vectors and combined without
/// division (cross-multiplication + content extraction), so all intermediate
/// entries stay integral. Stored rows are kept mutually reduced: every row
/// vanishes on the pivot columns of the others.
class RowReducer {
public:
    explicit RowReducer(int cols) : cols_(cols) {}

    /// Reduces `row` against the current pivots; keeps it if independent.
    /// Returns true when the rank increased.
    bool add_row(RatVec row);

    int rank() const { return int(rows_.size()); }
    int cols() const { return cols_; }
    bool full_rank() const { return rank() == cols_; }

    /// True iff v lies in the row span.
    bool in_span(RatVec v) const;

    /// Canonical reduced row echelon basis of the row span (pivots 1,
    /// sorted by pivot column).
    RatMat rref() const;

    /// Canonical basis of {v : Mv = 0} where M has the reducer's row span.
    RatMat nullspace() const;

private:
    void reduce_against_pivots(RatVec& v) const;
    int cols_;
    std::vector<RatVec> rows_;
    std::vector<int> pivot_col_;
};

/// Clears denominators and divides by the integer content; v becomes a
/// primitive integer vector (or all zeros).
void normalize_primitive(RatVec& v);

RatVec mat_vec(const RatMat& m, const RatVec& v);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat identity_mat(int n);
bool is_zero_vec(const RatVec& v);
/// Determinant of a small square rational matrix (fraction-free expansion).
Rational rat_det(const RatMat& m);

/// Rank of the row span.
int rank_of(const RatMat& rows, int cols);
/// RREF basis of the row span.
RatMat rref_of(const RatMat& rows, int cols);
/// Nullspace basis of the matrix with the given rows.
RatMat nullspace_of(const RatMat& rows, int cols);
/// Row spans coincide.
bool spans_equal(const RatMat& a, const RatMat& b, int cols);

}  // namespace oforge

#endif
