#include "oforge/textio.hpp"

#include <cctype>
#include <sstream>

namespace oforge {

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        bool printed_coeff = false;
        if (m.is_unit() || !a.is_one()) {
            os << a.str();
            printed_coeff = true;
        }
        bool first_var = !printed_coeff;
        for (int v = 0; v < m.arity(); ++v) {
            if (m[v] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << p.ambient()->name(v);
            if (m[v] > 1) os << "^" << m[v];
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string read_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits", start);
        return s.substr(start, pos - start);
    }

    // Identifiers are letters followed by digits (x11, a, t2, ...).
    std::string read_identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_'))
            ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected identifier", start);
        return s.substr(start, pos - start);
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const AmbientPtr& amb) {
    Lexer lx{text};
    Polynomial result(amb);
    if (lx.eof()) throw ParseError("empty polynomial", 0);

    bool first_term = true;
    while (!lx.eof()) {
        int sign = 1;
        if (first_term) {
            if (lx.accept('-')) sign = -1;
            else lx.accept('+');
        } else {
            lx.skip_ws();
            if (lx.accept('+')) sign = 1;
            else if (lx.accept('-')) sign = -1;
            else throw ParseError("expected '+' or '-' between terms", lx.pos);
        }
        first_term = false;

        Rational coeff(sign);
        std::vector<int> exps(size_t(amb->arity()), 0);
        bool any_factor = false;
        while (true) {
            lx.skip_ws();
            size_t fpos = lx.pos;
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lx.read_integer();
                std::string lit = num;
                if (lx.accept('/')) lit += "/" + lx.read_integer();
                coeff *= Rational::from_string(lit);
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = lx.read_identifier();
                int idx = amb->index_of(name);
                if (idx < 0) throw ParseError("unknown variable '" + name + "'", fpos);
                int e = 1;
                if (lx.accept('^')) {
                    std::string p = lx.read_integer();
                    e = std::stoi(p);
                    if (e < 0) throw ParseError("negative exponent", fpos);
                }
                exps[size_t(idx)] += e;
                any_factor = true;
            } else {
                throw ParseError("expected coefficient or variable", fpos);
            }
            if (!lx.accept('*')) break;
        }
        if (!any_factor) throw ParseError("empty term", lx.pos);
        result.add_term(Monomial(std::move(exps)), coeff);
    }
    return result;
}

}  // namespace oforge
