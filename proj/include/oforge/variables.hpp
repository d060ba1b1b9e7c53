#ifndef OFORGE_VARIABLES_HPP
#define OFORGE_VARIABLES_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace oforge {

enum class VarKind { Matrix, FormCoeff, Aux };

/// One named block of variables inside an ambient ring: the n² matrix
/// coordinates of a monoid copy, the coefficients of a binary form, or an
/// auxiliary block (triangular parameters, symmetric-power labels, ...).
struct VariableSet {
    VarKind kind = VarKind::Aux;
    std::string tag;                 // "x", "y", ... for matrix kinds
    int n = 0;                       // matrix size for Matrix kind
    std::vector<std::string> names;  // ordered variable identifiers

    /// Matrix coordinates tag11..tagNN (row-major, 1-based). n <= 9 so the
    /// two-digit names stay unambiguous.
    static VariableSet matrix(int n, const std::string& tag = "x");
    /// Form coefficients a, b, c, ... (count <= 26).
    static VariableSet form_coeffs(int count);
    static VariableSet aux(const std::string& tag, std::vector<std::string> names);

    /// Index of the (i,j) matrix coordinate within this set (1-based i, j).
    int matrix_index(int i, int j) const;

    bool operator==(const VariableSet& o) const {
        return kind == o.kind && tag == o.tag && n == o.n && names == o.names;
    }
};

/// An ordered list of disjoint variable sets; the ambient ring of a
/// Polynomial. Immutable; shared by pointer, compared by value.
class Ambient {
public:
    Ambient() = default;
    explicit Ambient(std::vector<VariableSet> sets);

    int arity() const { return int(all_names_.size()); }
    const std::vector<VariableSet>& sets() const { return sets_; }
    const std::string& name(int idx) const { return all_names_.at(size_t(idx)); }
    const std::vector<std::string>& names() const { return all_names_; }

    /// Global index of a variable name, or -1.
    int index_of(const std::string& nm) const;
    /// Offset of set `which` in the global index space.
    int set_offset(int which) const { return offsets_.at(size_t(which)); }
    /// Position of the first set matching (kind, tag), or -1. Empty tag
    /// matches any tag.
    int find_set(VarKind kind, const std::string& tag = "") const;
    /// Global index of matrix coordinate (i,j) of set `which`.
    int matrix_var(int which, int i, int j) const;

    bool operator==(const Ambient& o) const { return sets_ == o.sets_; }

private:
    std::vector<VariableSet> sets_;
    std::vector<int> offsets_;
    std::vector<std::string> all_names_;
    std::unordered_map<std::string, int> index_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

AmbientPtr make_ambient(std::vector<VariableSet> sets);
AmbientPtr matrix_ambient(int n, const std::string& tag = "x");
/// Concatenation of the blocks of `a` and `b` (names must stay disjoint).
AmbientPtr join_ambients(const AmbientPtr& a, const AmbientPtr& b);

inline bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace oforge

#endif
