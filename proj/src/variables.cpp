#include "oforge/variables.hpp"

#include <stdexcept>

namespace oforge {

VariableSet VariableSet::matrix(int n, const std::string& tag) {
    if (n < 1 || n > 9) throw std::invalid_argument("VariableSet::matrix: n must be in 1..9");
    VariableSet s;
    s.kind = VarKind::Matrix;
    s.tag = tag;
    s.n = n;
    s.names.reserve(size_t(n) * size_t(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            s.names.push_back(tag + std::to_string(i) + std::to_string(j));
    return s;
}

VariableSet VariableSet::form_coeffs(int count) {
    if (count < 1 || count > 26)
        throw std::invalid_argument("VariableSet::form_coeffs: count must be in 1..26");
    VariableSet s;
    s.kind = VarKind::FormCoeff;
    s.tag = "form";
    for (int i = 0; i < count; ++i) s.names.push_back(std::string(1, char('a' + i)));
    return s;
}

VariableSet VariableSet::aux(const std::string& tag, std::vector<std::string> names) {
    VariableSet s;
    s.kind = VarKind::Aux;
    s.tag = tag;
    s.names = std::move(names);
    return s;
}

int VariableSet::matrix_index(int i, int j) const {
    if (kind != VarKind::Matrix) throw std::invalid_argument("matrix_index: not a matrix set");
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("matrix_index: out of range");
    return (i - 1) * n + (j - 1);
}

Ambient::Ambient(std::vector<VariableSet> sets) : sets_(std::move(sets)) {
    int off = 0;
    for (const auto& s : sets_) {
        offsets_.push_back(off);
        for (const auto& nm : s.names) {
            if (!index_.emplace(nm, off).second)
                throw std::invalid_argument("Ambient: duplicate variable name '" + nm + "'");
            all_names_.push_back(nm);
            ++off;
        }
    }
}

int Ambient::index_of(const std::string& nm) const {
    auto it = index_.find(nm);
    return it == index_.end() ? -1 : it->second;
}

int Ambient::find_set(VarKind kind, const std::string& tag) const {
    for (size_t i = 0; i < sets_.size(); ++i)
        if (sets_[i].kind == kind && (tag.empty() || sets_[i].tag == tag)) return int(i);
    return -1;
}

int Ambient::matrix_var(int which, int i, int j) const {
    const auto& s = sets_.at(size_t(which));
    return set_offset(which) + s.matrix_index(i, j);
}

AmbientPtr make_ambient(std::vector<VariableSet> sets) {
    return std::make_shared<const Ambient>(std::move(sets));
}

AmbientPtr matrix_ambient(int n, const std::string& tag) {
    return make_ambient({VariableSet::matrix(n, tag)});
}

AmbientPtr join_ambients(const AmbientPtr& a, const AmbientPtr& b) {
    std::vector<VariableSet> sets = a->sets();
    for (const auto& s : b->sets()) sets.push_back(s);
    return make_ambient(std::move(sets));
}

}  // namespace oforge
